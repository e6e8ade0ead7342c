// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the number of
// failed criteria. All randomness is seeded, so reruns are identical.
#include <dowker/complexes.hpp>
#include <dowker/digraph.hpp>
#include <dowker/io.hpp>
#include <dowker/morphism.hpp>
#include <dowker/persistence.hpp>
#include <dowker/relation.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dowker;
using namespace fixtures;

namespace {

struct Check {
    int number;
    std::string title;
    double budget_seconds;
    std::function<bool(std::ostream&)> body;
};

// filtrations produced while running criteria 4-8, re-examined by criterion 10
std::vector<FilteredComplex> g_filtrations;

Simplex sx(std::vector<std::string> verts) { return Simplex(std::move(verts)); }

int bars_alive(const Barcode& code, int dim, int level) {
    int alive = 0;
    for (const auto& bar : code.bars)
        if (bar.dim == dim && bar.birth <= level && (!bar.death || *bar.death > level)) ++alive;
    return alive;
}

bool expect(std::ostream& log, bool condition, const std::string& what) {
    if (!condition) log << "    failed: " << what << "\n";
    return condition;
}

// --- criterion 1: the 4x5 fixture, bit exact -------------------------------

bool criterion_known_4x5(std::ostream& log) {
    bool ok = true;
    const Relation a = fix_a();
    ok &= expect(log,
                 dowker_K(a).maximal() ==
                     std::set<Simplex>{sx({"x1", "x3", "x4"}), sx({"x2"})},
                 "K maximal simplices");
    ok &= expect(log,
                 dowker_L(a).maximal() == std::set<Simplex>{sx({"y1", "y5"}), sx({"y3", "y4"}),
                                                            sx({"y1", "y2"})},
                 "L maximal simplices");
    const auto report = duality_check(a, 3);
    ok &= expect(log, report.k_side == BettiVector{2, 0, 0, 0}, "K Betti (2,0,0,0)");
    ok &= expect(log, report.l_side == BettiVector{2, 0, 0, 0}, "L Betti (2,0,0,0)");
    return ok;
}

// --- criterion 2: nilpotent fixture L-side chain and K-side failure --------

bool criterion_nilpotent(std::ostream& log) {
    bool ok = true;
    const Relation n = fix_n();
    const auto faces1 = dowker_L(power(n, 1)).all_faces(3);
    const auto faces2 = dowker_L(power(n, 2)).all_faces(3);
    const auto faces3 = dowker_L(power(n, 3)).all_faces(3);
    ok &= expect(log,
                 faces1 == std::set<Simplex>{sx({"x2", "x3"}), sx({"x2"}), sx({"x3"})},
                 "L faces at power 1");
    ok &= expect(log, faces2 == std::set<Simplex>{sx({"x3"})}, "L faces at power 2");
    ok &= expect(log, faces3.empty(), "L faces at power 3");
    bool threw = false;
    try {
        power_filtration(n, Side::K);
    } catch (const hypothesis_error& e) {
        threw = true;
        const std::string msg = e.what();
        ok &= expect(log, msg.find("Dom R = X") != std::string::npos, "error cites totality");
        ok &= expect(log, msg.find("x3") != std::string::npos, "error cites the missing vertex");
    }
    ok &= expect(log, threw, "K-side filtration rejects the non-total relation");
    return ok;
}

// --- criterion 3: Betti duality on random relations ------------------------

bool criterion_duality(std::ostream& log) {
    std::mt19937 rng(20260801);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int t = 0; t < 500; ++t) {
        const Relation r = generators::random_relation(rng, size(rng), size(rng), density(rng));
        const auto report = duality_check(r, 3);
        if (!report.equal) {
            std::ostringstream os;
            os << "duality broken for " << r;
            return expect(log, false, os.str());
        }
    }
    return true;
}

// --- criterion 4: monotone nested levels, stabilization at the index -------

bool criterion_monotone_stabilization(std::ostream& log) {
    std::mt19937 rng(20260802);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_real_distribution<double> density(0.15, 0.75);
    for (int t = 0; t < 200; ++t) {
        const Relation r = generators::random_total_self_relation(rng, size(rng), density(rng));
        const EventualPeriod ep = eventual_period(r);
        const auto f = power_filtration(r, Side::K);
        for (int i = 1; i < ep.index; ++i)
            if (!is_subcomplex(f.level(i), f.level(i + 1)))
                return expect(log, false, "monotonicity failed");
        if (!(dowker_K(power(r, ep.index)) == dowker_K(power(r, ep.index + ep.period))))
            return expect(log, false, "stabilization failed");
        g_filtrations.push_back(f);
    }
    return true;
}

// --- criterion 5: acyclic relations, components = stable beta0 -------------

bool criterion_acyclic_h0(std::ostream& log) {
    std::mt19937 rng(20260803);
    std::uniform_int_distribution<int> size(1, 7);
    std::uniform_real_distribution<double> density(0.15, 0.7);
    for (int t = 0; t < 200; ++t) {
        const Relation r = generators::random_total_acyclic(rng, size(rng), density(rng));
        const auto betti = betti_numbers(dowker_K(r_infinity(r)), 3);
        if (betti[0] != static_cast<int>(connected_components(r).count()))
            return expect(log, false, "component count differs from stable beta0");
        g_filtrations.push_back(power_filtration(r, Side::K));
    }
    return true;
}

// --- criterion 6: strongly connected relations, q everywhere ---------------

bool criterion_strongly_connected(std::ostream& log) {
    std::mt19937 rng(20260804);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_real_distribution<double> chords(0.0, 0.4);
    for (int t = 0; t < 100; ++t) {
        const Relation r = generators::random_strongly_connected(rng, size(rng), chords(rng));
        const int q = graph_period_q(r);
        const QStructure qs = q_classes(r);
        const EventualPeriod ep = eventual_period(r);
        const auto bk = betti_numbers(dowker_K(power(r, ep.index)), 3);
        const auto bl = betti_numbers(dowker_L(power(r, ep.index)), 3);
        if (static_cast<int>(qs.classes.size()) != q || bk[0] != q || bl[0] != q)
            return expect(log, false, "q, class count and stable beta0 disagree");
        if (ep.index > 1 && ep.index % q != 0)
            return expect(log, false, "q does not divide the eventual-period index");
        g_filtrations.push_back(power_filtration(r, Side::K));
        g_filtrations.push_back(power_filtration(r, Side::L));
    }
    return true;
}

// --- criterion 7: positive trace forces contractible stabilization ---------

bool criterion_positive_trace(std::ostream& log) {
    std::mt19937 rng(20260805);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_real_distribution<double> chords(0.0, 0.4);
    for (int t = 0; t < 50; ++t) {
        const Relation r =
            generators::random_strongly_connected(rng, size(rng), chords(rng), true);
        const EventualPeriod ep = eventual_period(r);
        if (betti_numbers(dowker_K(power(r, ep.index)), 3) != BettiVector{1, 0, 0, 0})
            return expect(log, false, "stable complex is not contractible at the homology level");
        g_filtrations.push_back(power_filtration(r, Side::K));
    }
    return true;
}

// --- criterion 8: conjugate relations have matching Betti at all powers ----

bool criterion_conjugacy(std::ostream& log) {
    std::mt19937 rng(20260806);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    for (int t = 0; t < 100; ++t) {
        const Relation r1 = generators::random_total_self_relation(rng, size(rng), density(rng));
        const VertexMap phi = generators::random_permutation(rng, r1.source_labels());
        const Relation r2 = generators::conjugate_by(phi, r1);
        if (!is_conjugacy(phi, r1, r2)) return expect(log, false, "conjugacy verification failed");
        const EventualPeriod ep = eventual_period(r1);
        for (int i = 1; i <= ep.index; ++i) {
            const Relation p1 = power(r1, i);
            const Relation p2 = power(r2, i);
            const auto k1 = betti_numbers(dowker_K(p1), 3);
            const auto l1 = betti_numbers(dowker_L(p1), 3);
            const auto k2 = betti_numbers(dowker_K(p2), 3);
            const auto l2 = betti_numbers(dowker_L(p2), 3);
            if (k1 != k2 || l1 != l2 || k1 != l1)
                return expect(log, false, "Betti vectors of conjugate relations differ");
        }
        g_filtrations.push_back(power_filtration(r1, Side::K));
        g_filtrations.push_back(power_filtration(r2, Side::K));
    }
    return true;
}

// --- criterion 9: shift equivalence, fixed and searched witnesses ----------

std::vector<Relation> total_surjective_relations(int n) {
    std::vector<Relation> out;
    const std::size_t cells = static_cast<std::size_t>(n) * n;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mask & (std::size_t{1} << (i * n + j))) rows[i][j] = 1;
        const Relation r = Relation::self_from_matrix(rows);
        if (is_total(r) && is_surjective(r)) out.push_back(r);
    }
    return out;
}

bool betti_agree_at_stabilization(const Relation& r1, const Relation& r2) {
    const Relation s1 = power(r1, eventual_period(r1).index);
    const Relation s2 = power(r2, eventual_period(r2).index);
    return betti_numbers(dowker_K(s1), 3) == betti_numbers(dowker_K(s2), 3) &&
           betti_numbers(dowker_L(s1), 3) == betti_numbers(dowker_L(s2), 3);
}

bool criterion_shift_equivalence(std::ostream& log) {
    const Relation j3 = fix_j3();
    if (!verify_shift_equivalence(j3, j3, {j3, j3, 1}))
        return expect(log, false, "all-ones witness rejected");

    // every witness found by exhaustive search over 2-vertex total surjective
    // pairs must verify and force equal Betti at the stabilization powers
    int found_total = 0;
    const auto pool2 = total_surjective_relations(2);
    for (const auto& r1 : pool2)
        for (const auto& r2 : pool2) {
            const auto witnesses = oracles::search_shift_witnesses(r1, r2, 2, 3);
            for (const auto& w : witnesses) {
                ++found_total;
                if (!verify_shift_equivalence(r1, r2, w))
                    return expect(log, false, "searched witness fails verification");
                if (!betti_agree_at_stabilization(r1, r2))
                    return expect(log, false, "shift-equivalent pair with differing Betti");
            }
        }

    // selected 3-vertex pairs
    const Relation c3 = fix_c3();
    const Relation c3_relabel = Relation::self_from_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    const std::vector<std::pair<Relation, Relation>> pairs{
        {j3, j3}, {c3, c3}, {c3, c3_relabel}, {fix_i3(), fix_i3()}};
    for (const auto& [r1, r2] : pairs) {
        const auto witnesses = oracles::search_shift_witnesses(r1, r2, 2, 2);
        if (witnesses.empty()) return expect(log, false, "expected witnesses not found");
        for (const auto& w : witnesses) {
            ++found_total;
            if (!verify_shift_equivalence(r1, r2, w))
                return expect(log, false, "searched witness fails verification");
            if (!betti_agree_at_stabilization(r1, r2))
                return expect(log, false, "shift-equivalent pair with differing Betti");
        }
    }

    // and the exhaustive search is also the negative oracle
    if (!oracles::search_shift_witnesses(c3, fix_i3(), 3, 1).empty())
        return expect(log, false, "found a witness relating the 3-cycle to the identity");
    return expect(log, found_total > 0, "no witnesses were exercised");
}

// --- criterion 10: barcode soundness over all collected filtrations --------

bool criterion_barcode_soundness(std::ostream& log) {
    if (g_filtrations.empty()) return expect(log, false, "no filtrations were collected");
    std::size_t checked = 0;
    for (const auto& f : g_filtrations) {
        const Barcode code = barcode(f);
        for (int level = f.start_level; level <= f.stabilization_index; ++level) {
            const auto betti = betti_numbers(f.level(level), 3);
            for (int k = 0; k <= 3; ++k)
                if (bars_alive(code, k, level) != betti[k])
                    return expect(log, false, "alive-bar count differs from level Betti");
        }
        ++checked;
    }
    // reproducibility: recomputing a sample of barcodes gives identical bytes
    for (std::size_t i = 0; i < g_filtrations.size(); i += 37) {
        const auto& f = g_filtrations[i];
        if (barcode_to_json(barcode(f)).dump() != barcode_to_json(barcode(f)).dump())
            return expect(log, false, "barcode bytes differ between runs");
    }
    log << "    (" << checked << " filtrations checked)\n";
    return true;
}

// --- criterion 11: bi-filtration monotonicity and walk witnesses -----------

bool criterion_bifiltration(std::ostream& log) {
    std::mt19937 rng(20260807);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_real_distribution<double> chords(0.0, 0.5);
    for (int t = 0; t < 50; ++t) {
        const Relation r = generators::random_strongly_connected(rng, size(rng), chords(rng));
        const int j = eventual_period(r).index;
        for (int m = 1; m <= j; ++m)
            for (int n = 1; n <= j; ++n) {
                const auto cell = bifiltration_cell(r, m, n);
                if (m < j && !is_subcomplex(cell, bifiltration_cell(r, m + 1, n)))
                    return expect(log, false, "cells shrink along the first axis");
                if (n < j && !is_subcomplex(cell, bifiltration_cell(r, m, n + 1)))
                    return expect(log, false, "cells shrink along the second axis");
                for (const auto& f : cell.all_faces(cell.dimension()))
                    if (!walk_witness(r, m, n, f))
                        return expect(log, false, "cell simplex without a walk witness");
            }
    }
    return true;
}

// --- criterion 12: homology against the dense rank oracle ------------------

bool criterion_homology_oracle(std::ostream& log) {
    std::mt19937 rng(20260808);
    int done = 0;
    while (done < 200) {
        const auto k = generators::random_complex(rng, 6, 4, 4);
        if (oracles::face_set_bruteforce(k).size() > 12) continue;
        ++done;
        if (betti_numbers(k, 3) != oracles::betti_bruteforce(k, 3))
            return expect(log, false, "Betti numbers differ from the dense oracle");
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Check> checks{
        {1, "4x5 fixture: exact K/L maximal simplices and Betti vectors", 0.001,
         criterion_known_4x5},
        {2, "nilpotent fixture: L-side face sets at powers 1-3, K-side totality error", 0.001,
         criterion_nilpotent},
        {3, "Betti duality of K and L on 500 random relations", 10.0, criterion_duality},
        {4, "monotone nested levels and stabilization on 200 random total relations", 10.0,
         criterion_monotone_stabilization},
        {5, "acyclic relations: graph components equal stable beta0 (200 cases)", 10.0,
         criterion_acyclic_h0},
        {6, "strongly connected: q = classes = stable beta0 on both sides (100 cases)", 10.0,
         criterion_strongly_connected},
        {7, "positive trace: contractible stabilization (50 cases)", 5.0,
         criterion_positive_trace},
        {8, "conjugate pairs: matching Betti at every power (100 cases)", 10.0,
         criterion_conjugacy},
        {9, "shift equivalence: fixed and exhaustively searched witnesses", 30.0,
         criterion_shift_equivalence},
        // bounded by the combined budgets of criteria 4-8, whose filtrations it re-checks
        {10, "barcode soundness and reproducibility on all collected filtrations", 45.0,
         criterion_barcode_soundness},
        {11, "bi-filtration: monotone cells and walk witnesses (50 cases)", 20.0,
         criterion_bifiltration},
        {12, "Betti numbers match the dense rank oracle (200 complexes)", 5.0,
         criterion_homology_oracle},
    };

    int failures = 0;
    for (const auto& check : checks) {
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = check.body(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > check.budget_seconds) {
            ok = false;
            log << "    over budget: " << elapsed << "s > " << check.budget_seconds << "s\n";
        }
        std::printf("[%2d] %s (%.3fs) %s\n", check.number, ok ? "PASS" : "FAIL", elapsed,
                    check.title.c_str());
        std::fputs(log.str().c_str(), stdout);
        if (!ok) ++failures;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(checks.size()) - failures,
                checks.size());
    return failures;
}
