// File formats and serialization.
//
// Relations are read from three formats:
//   * text matrix: rows of whitespace-separated 0/1, with optional label
//     headers "#x: a b c" (sources) and "#y: d e f" (targets);
//   * edge list: one "source target" pair per line, vertex set pinned by an
//     optional "#vertices: ..." header and otherwise the sorted union of
//     endpoints (always a self-relation);
//   * JSON: {"source_labels": [...], "target_labels": [...], "rows": [[0,1,...], ...]}.
// read_relation sniffs the format: JSON if the first byte is '{', a matrix
// if every data token is 0/1, an edge list otherwise.
#pragma once

#include <dowker/morphism.hpp>
#include <dowker/persistence.hpp>
#include <dowker/relation.hpp>
#include <dowker/simplicial.hpp>

#include <json.hpp>

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace dowker {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

struct TextLines {
    std::vector<std::pair<int, std::string>> data;  // (line number, content)
    std::vector<std::string> x_labels, y_labels, vertex_labels;
};

inline TextLines scan_text(std::istream& in) {
    TextLines out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (starts_with(line, "#x:")) {
            out.x_labels = split_tokens(line.substr(3));
        } else if (starts_with(line, "#y:")) {
            out.y_labels = split_tokens(line.substr(3));
        } else if (starts_with(line, "#vertices:")) {
            out.vertex_labels = split_tokens(line.substr(10));
        } else if (starts_with(line, "#")) {
            continue;  // plain comment
        } else if (!split_tokens(line).empty()) {
            out.data.emplace_back(lineno, line);
        }
    }
    return out;
}

}  // namespace detail

inline Relation parse_matrix_text(std::istream& in) {
    const auto scan = detail::scan_text(in);
    std::vector<std::vector<int>> rows;
    for (const auto& [lineno, line] : scan.data) {
        std::vector<int> row;
        for (const auto& tok : detail::split_tokens(line)) {
            if (tok != "0" && tok != "1")
                throw parse_error("line " + std::to_string(lineno) + ": expected 0 or 1, got '" +
                                  tok + "'");
            row.push_back(tok == "1");
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error("line " + std::to_string(lineno) + ": ragged row (expected " +
                              std::to_string(rows.front().size()) + " entries, got " +
                              std::to_string(row.size()) + ")");
        rows.push_back(std::move(row));
    }
    try {
        return Relation::from_matrix(rows, scan.x_labels, scan.y_labels);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline Relation parse_edge_list(std::istream& in) {
    const auto scan = detail::scan_text(in);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [lineno, line] : scan.data) {
        const auto toks = detail::split_tokens(line);
        if (toks.size() != 2)
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected 'source target', got '" + line + "'");
        pairs.emplace_back(toks[0], toks[1]);
    }
    std::vector<std::string> labels = scan.vertex_labels;
    if (labels.empty()) {
        std::set<std::string> vs;
        for (const auto& [a, b] : pairs) {
            vs.insert(a);
            vs.insert(b);
        }
        labels.assign(vs.begin(), vs.end());
    }
    try {
        return Relation::from_pairs(pairs, labels, labels);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline Relation parse_relation_json(const nlohmann::json& j) {
    try {
        std::vector<std::string> src = j.value("source_labels", std::vector<std::string>{});
        std::vector<std::string> tgt = j.value("target_labels", std::vector<std::string>{});
        std::vector<std::vector<int>> rows = j.at("rows").get<std::vector<std::vector<int>>>();
        return Relation::from_matrix(rows, src, tgt);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("relation JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

/// Reads a relation from a stream, sniffing the format.
inline Relation parse_relation(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw parse_error("malformed JSON");
        return parse_relation_json(j);
    }
    std::istringstream scan_in(text);
    const auto scan = detail::scan_text(scan_in);
    bool all_binary = !scan.data.empty();
    for (const auto& [lineno, line] : scan.data)
        for (const auto& tok : detail::split_tokens(line))
            if (tok != "0" && tok != "1") all_binary = false;
    std::istringstream again(text);
    return all_binary ? parse_matrix_text(again) : parse_edge_list(again);
}

inline Relation read_relation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return parse_relation(in);
}

inline nlohmann::json relation_to_json(const Relation& r) {
    nlohmann::json j;
    j["source_labels"] = r.source_labels();
    j["target_labels"] = r.target_labels();
    std::vector<std::vector<int>> rows(r.source_size(), std::vector<int>(r.target_size(), 0));
    for (std::size_t i = 0; i < r.source_size(); ++i)
        for (std::size_t k = 0; k < r.target_size(); ++k) rows[i][k] = r.at(i, k) ? 1 : 0;
    j["rows"] = rows;
    return j;
}

inline nlohmann::json complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["universe"] = k.universe();
    auto maximal = nlohmann::json::array();
    for (const auto& s : k.maximal()) maximal.push_back(s.vertices());
    j["maximal"] = maximal;
    return j;
}

inline SimplicialComplex parse_complex_json(const nlohmann::json& j) {
    try {
        std::vector<std::string> universe = j.at("universe").get<std::vector<std::string>>();
        std::vector<Simplex> maximal;
        for (const auto& arr : j.at("maximal"))
            maximal.push_back(Simplex(arr.get<std::vector<std::string>>()));
        return SimplicialComplex::from_maximal(maximal, universe);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("complex JSON: ") + e.what());
    }
}

inline nlohmann::json barcode_to_json(const Barcode& code) {
    nlohmann::json j;
    auto bars = nlohmann::json::array();
    for (const auto& bar : code.bars) {
        nlohmann::json b;
        b["dim"] = bar.dim;
        b["birth"] = bar.birth;
        b["death"] = bar.death ? nlohmann::json(*bar.death) : nlohmann::json(nullptr);
        bars.push_back(b);
    }
    j["bars"] = bars;
    return j;
}

/// One line per bar; infinite bars end with the --∞ suffix.
inline std::string barcode_to_text(const Barcode& code) {
    std::ostringstream os;
    for (const auto& bar : code.bars) {
        os << bar.dim << ": [" << bar.birth << ", ";
        if (bar.death)
            os << *bar.death << ")";
        else
            os << "--∞)";
        os << "\n";
    }
    return os.str();
}

/// CSV grid with header m,n,b0,b1,...; one row per cell in (m, n) order.
inline std::string grid_to_csv(const BifiltrationGrid& grid) {
    std::ostringstream os;
    os << "m,n";
    for (int d = 0; d <= grid.dim_cap; ++d) os << ",b" << d;
    os << "\n";
    for (const auto& [cell, betti] : grid.cells) {
        os << cell.first << "," << cell.second;
        for (const int b : betti) os << "," << b;
        os << "\n";
    }
    return os.str();
}

inline VertexMap parse_vertex_map_json(const nlohmann::json& j) {
    try {
        VertexMap out;
        for (const auto& [key, value] : j.at("map").items()) out[key] = value.get<std::string>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("vertex map JSON: ") + e.what());
    }
}

inline MultiMap parse_multimap_json(const nlohmann::json& j) {
    try {
        MultiMap out;
        for (const auto& [key, value] : j.at("map").items()) {
            auto& img = out[key];
            for (const auto& v : value) img.insert(v.get<std::string>());
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("multimap JSON: ") + e.what());
    }
}

inline ShiftWitness parse_shift_witness_json(const nlohmann::json& j) {
    try {
        ShiftWitness w;
        w.S = parse_relation_json(j.at("S"));
        w.T = parse_relation_json(j.at("T"));
        w.lag = j.value("lag", 1);
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("shift witness JSON: ") + e.what());
    }
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON in " + path);
    return j;
}

}  // namespace dowker
