// Graph-theoretic analysis of self-relations viewed as directed graphs:
// components, acyclicity and simplicity predicates, the cycle gcd q with
// its vertex classes, and minima/maxima of the stable power.
#pragma once

#include <dowker/relation.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

namespace dowker {

struct ComponentPartition {
    enum class Kind { path, walk };
    Kind kind;
    std::vector<std::vector<std::string>> blocks;

    std::size_t count() const { return blocks.size(); }
};

/// Cycle gcd q of a strongly connected relation together with the q classes
/// of vertices; every edge steps from class c to class (c + 1) mod q.
struct QStructure {
    int q = 0;
    std::vector<std::vector<std::string>> classes;
};

namespace detail {

inline std::vector<std::vector<int>> adjacency(const Relation& r) {
    require_self(r, "digraph analysis");
    std::vector<std::vector<int>> adj(r.source_size());
    for (std::size_t i = 0; i < r.source_size(); ++i)
        for (std::size_t j = r.row(i).find_first(); j != BitRow::npos; j = r.row(i).find_next(j))
            adj[i].push_back(static_cast<int>(j));
    return adj;
}

// Tarjan, iterative to keep deep chains off the call stack.
inline std::vector<int> scc_assignment(const std::vector<std::vector<int>>& adj, int& scc_count) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1), low(n), num(n, -1), stack;
    std::vector<std::pair<int, std::size_t>> call;
    std::vector<bool> on_stack(n, false);
    int timer = 0;
    scc_count = 0;

    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            if (ei == 0) {
                num[v] = low[v] = timer++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (ei < adj[v].size()) {
                const int w = adj[v][ei++];
                if (num[w] == -1)
                    call.emplace_back(w, 0);
                else if (on_stack[w])
                    low[v] = std::min(low[v], num[w]);
            } else {
                if (low[v] == num[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = scc_count;
                    } while (w != v);
                    ++scc_count;
                }
                const int finished = v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().first] = std::min(low[call.back().first], low[finished]);
            }
        }
    }
    return comp;
}

inline std::vector<std::vector<std::string>> blocks_from_assignment(const Relation& r,
                                                                    const std::vector<int>& comp,
                                                                    int count) {
    std::vector<std::vector<std::string>> blocks(count);
    for (std::size_t v = 0; v < comp.size(); ++v)
        blocks[comp[v]].push_back(r.source_labels()[v]);
    // order blocks by their smallest member's vertex index
    std::vector<int> first(count, -1);
    for (int v = static_cast<int>(comp.size()) - 1; v >= 0; --v) first[comp[v]] = v;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return first[a] < first[b]; });
    std::vector<std::vector<std::string>> out;
    out.reserve(count);
    for (auto i : order) out.push_back(std::move(blocks[i]));
    return out;
}

}  // namespace detail

/// Partition by undirected reachability (paths ignore edge direction).
inline ComponentPartition connected_components(const Relation& r) {
    const auto adj = detail::adjacency(r);
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1);
    int count = 0;
    std::vector<std::vector<int>> undirected(n);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) {
            undirected[v].push_back(w);
            undirected[w].push_back(v);
        }
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        std::deque<int> queue{root};
        comp[root] = count;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : undirected[v])
                if (comp[w] == -1) {
                    comp[w] = count;
                    queue.push_back(w);
                }
        }
        ++count;
    }
    return {ComponentPartition::Kind::path, detail::blocks_from_assignment(r, comp, count)};
}

/// Partition by mutual directed reachability.
inline ComponentPartition strongly_connected_components(const Relation& r) {
    const auto adj = detail::adjacency(r);
    int count = 0;
    const auto comp = detail::scc_assignment(adj, count);
    return {ComponentPartition::Kind::walk, detail::blocks_from_assignment(r, comp, count)};
}

inline bool is_strongly_connected(const Relation& r) {
    return strongly_connected_components(r).count() <= 1;
}

/// No directed cycles of length >= 2. Fixed points (self-loops) are allowed,
/// so this is weaker than the usual DAG condition: every SCC must be a
/// singleton, loops or not.
inline bool is_acyclic(const Relation& r) {
    const auto adj = detail::adjacency(r);
    int count = 0;
    const auto comp = detail::scc_assignment(adj, count);
    std::vector<int> size(count, 0);
    for (int c : comp) ++size[c];
    return std::all_of(size.begin(), size.end(), [](int s) { return s == 1; });
}

/// All directed cycles pairwise vertex-disjoint or identical. Via SCCs:
/// every SCC of size >= 2 must be a single cycle (each vertex exactly one
/// in/out neighbor inside it, no self-loops on its vertices).
inline bool is_simple(const Relation& r) {
    const auto adj = detail::adjacency(r);
    int count = 0;
    const auto comp = detail::scc_assignment(adj, count);
    std::vector<int> size(count, 0);
    for (int c : comp) ++size[c];
    const int n = static_cast<int>(adj.size());
    std::vector<int> in_deg(n, 0), out_deg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (comp[v] == comp[w] && size[comp[v]] >= 2) {
                if (v == w) return false;
                ++out_deg[v];
                ++in_deg[w];
            }
    for (int v = 0; v < n; ++v) {
        if (size[comp[v]] < 2) continue;
        if (r.at(v, v)) return false;
        if (in_deg[v] != 1 || out_deg[v] != 1) return false;
    }
    return true;
}

inline bool has_positive_trace(const Relation& r) {
    detail::require_self(r, "has_positive_trace");
    for (std::size_t v = 0; v < r.source_size(); ++v)
        if (r.at(v, v)) return true;
    return false;
}

namespace detail {

inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int root) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace detail

/// gcd of all directed cycle lengths, computed as the gcd over all edges
/// (u, v) of dist(u) + 1 - dist(v) for BFS distances from a fixed root.
/// Requires a strongly connected relation with at least one cycle.
inline int graph_period_q(const Relation& r) {
    if (!is_strongly_connected(r))
        throw hypothesis_error("graph_period_q: relation is not strongly connected");
    const auto adj = detail::adjacency(r);
    if (r.edge_count() == 0)
        throw hypothesis_error("graph_period_q: relation has no cycle");
    const auto dist = detail::bfs_distances(adj, 0);
    int g = 0;
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u]) g = std::gcd(g, dist[u] + 1 - dist[v]);
    return std::abs(g);
}

/// The q classes of a strongly connected relation: vertices grouped by BFS
/// distance from vertex 0 modulo q. Classes are listed by residue, so each
/// edge goes from classes[c] to classes[(c+1) % q].
inline QStructure q_classes(const Relation& r) {
    const int q = graph_period_q(r);
    const auto dist = detail::bfs_distances(detail::adjacency(r), 0);
    QStructure out;
    out.q = q;
    out.classes.assign(q, {});
    for (std::size_t v = 0; v < dist.size(); ++v)
        out.classes[dist[v] % q].push_back(r.source_labels()[v]);
    return out;
}

namespace detail {

inline Relation stable_power(const Relation& r, const char* op) {
    const EventualPeriod ep = eventual_period(r);
    if (ep.period != 1)
        throw hypothesis_error(std::string(op) +
                               ": stable power undefined, eventual period is (" +
                               std::to_string(ep.index) + ", " + std::to_string(ep.period) + ")");
    return power(r, ep.index);
}

}  // namespace detail

/// Vertices with no stable-power successor other than themselves.
inline std::vector<std::string> minima(const Relation& r) {
    const Relation inf = detail::stable_power(r, "minima");
    std::vector<std::string> out;
    for (std::size_t v = 0; v < inf.source_size(); ++v) {
        BitRow row = inf.row(v);
        row.reset(v);
        if (row.none()) out.push_back(inf.source_labels()[v]);
    }
    return out;
}

/// Vertices with no stable-power predecessor other than themselves.
inline std::vector<std::string> maxima(const Relation& r) {
    const Relation inf = detail::stable_power(r, "maxima");
    std::vector<std::string> out;
    for (std::size_t v = 0; v < inf.source_size(); ++v) {
        BitRow col = inf.column(v);
        col.reset(v);
        if (col.none()) out.push_back(inf.source_labels()[v]);
    }
    return out;
}

/// U_x: everything that reaches x under the stable power.
inline std::vector<std::string> up_set(const Relation& r, const std::string& x) {
    const Relation inf = detail::stable_power(r, "up_set");
    const auto xi = inf.source_index(x);
    if (!xi) throw std::invalid_argument("up_set: unknown vertex " + x);
    std::vector<std::string> out;
    const BitRow col = inf.column(*xi);
    for (std::size_t v = col.find_first(); v != BitRow::npos; v = col.find_next(v))
        out.push_back(inf.source_labels()[v]);
    return out;
}

/// D_x: everything x reaches under the stable power.
inline std::vector<std::string> down_set(const Relation& r, const std::string& x) {
    const Relation inf = detail::stable_power(r, "down_set");
    const auto xi = inf.source_index(x);
    if (!xi) throw std::invalid_argument("down_set: unknown vertex " + x);
    std::vector<std::string> out;
    const BitRow& row = inf.row(*xi);
    for (std::size_t v = row.find_first(); v != BitRow::npos; v = row.find_next(v))
        out.push_back(inf.source_labels()[v]);
    return out;
}

}  // namespace dowker
