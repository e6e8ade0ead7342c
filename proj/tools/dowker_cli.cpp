// Command-line front end: parse relation files, run the analyses, emit
// JSON/text/CSV. Exit codes: 0 success (and true verdicts), 1 hypothesis
// failure or false verdict, 2 parse/format error.
#include <CLI11.hpp>

#include <dowker/complexes.hpp>
#include <dowker/digraph.hpp>
#include <dowker/io.hpp>
#include <dowker/morphism.hpp>
#include <dowker/persistence.hpp>
#include <dowker/relation.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace dowker;

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 1;
constexpr int kExitParse = 2;

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? " " : "") + items[i];
    return out;
}

Side parse_side(const std::string& side) {
    if (side == "K" || side == "k") return Side::K;
    if (side == "L" || side == "l") return Side::L;
    throw parse_error("unknown side '" + side + "', expected K or L");
}

int cmd_analyze(const std::string& input, const std::string& format) {
    const Relation r = read_relation(input);
    if (format == "json") {
        nlohmann::json j;
        j["rows"] = r.source_size();
        j["cols"] = r.target_size();
        j["self_relation"] = r.is_self();
        j["domain"] = domain(r);
        j["image"] = image(r);
        j["total"] = is_total(r);
        j["surjective"] = is_surjective(r);
        if (r.is_self() && r.source_size() > 0) {
            const EventualPeriod ep = eventual_period(r);
            j["eventual_period"] = {ep.index, ep.period};
            j["connected_components"] = connected_components(r).count();
            j["strongly_connected_components"] = strongly_connected_components(r).count();
            j["acyclic"] = is_acyclic(r);
            j["simple"] = is_simple(r);
            j["strongly_connected"] = is_strongly_connected(r);
            j["positive_trace"] = has_positive_trace(r);
            if (is_strongly_connected(r) && r.edge_count() > 0) {
                const QStructure qs = q_classes(r);
                j["q"] = qs.q;
                j["q_classes"] = qs.classes;
            }
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    }

    std::cout << "relation: " << r.source_size() << "x" << r.target_size() << "\n";
    std::cout << "self-relation: " << (r.is_self() ? "yes" : "no") << "\n";
    std::cout << "domain: " << join(domain(r)) << " (total: " << (is_total(r) ? "yes" : "no")
              << ")\n";
    std::cout << "image: " << join(image(r))
              << " (surjective: " << (is_surjective(r) ? "yes" : "no") << ")\n";
    if (r.is_self() && r.source_size() > 0) {
        const EventualPeriod ep = eventual_period(r);
        std::cout << "eventual period: (" << ep.index << ", " << ep.period << ")\n";
        std::cout << "connected components: " << connected_components(r).count() << "\n";
        std::cout << "strongly connected components: "
                  << strongly_connected_components(r).count() << "\n";
        std::cout << "acyclic: " << (is_acyclic(r) ? "yes" : "no") << "\n";
        std::cout << "simple: " << (is_simple(r) ? "yes" : "no") << "\n";
        std::cout << "strongly connected: " << (is_strongly_connected(r) ? "yes" : "no") << "\n";
        if (is_strongly_connected(r) && r.edge_count() > 0) {
            const QStructure qs = q_classes(r);
            std::cout << "q: " << qs.q << "\n";
            std::cout << "q classes:";
            for (const auto& cls : qs.classes) std::cout << " {" << join(cls) << "}";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_complex(const std::string& input, const std::string& side, int power_n, int dim_cap,
                const std::string& format) {
    Relation r = read_relation(input);
    if (power_n != 1) {
        if (!r.is_self())
            throw hypothesis_error("powers are only defined for self-relations");
        r = power(r, power_n);
    }
    const SimplicialComplex k = parse_side(side) == Side::K ? dowker_K(r) : dowker_L(r);
    const BettiVector betti = betti_numbers(k, dim_cap);
    if (format == "text") {
        std::cout << "maximal:";
        for (const auto& s : k.maximal()) {
            std::cout << " [" << join(s.vertices()) << "]";
        }
        std::cout << "\nbetti:";
        for (const int b : betti) std::cout << " " << b;
        std::cout << "\n";
        return kExitOk;
    }
    nlohmann::json j = complex_to_json(k);
    j["betti"] = betti;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_barcode(const std::string& input, const std::string& side, bool include_zero, int dim_cap,
                const std::string& format) {
    const Relation r = read_relation(input);
    const FilteredComplex fc = power_filtration(r, parse_side(side), include_zero, dim_cap);
    const Barcode code = barcode(fc);
    if (format == "json")
        std::cout << barcode_to_json(code).dump() << "\n";
    else
        std::cout << barcode_to_text(code);
    return kExitOk;
}

int cmd_bifiltration(const std::string& input, int dim_cap, const std::string& format) {
    const Relation r = read_relation(input);
    const BifiltrationGrid grid = bifiltration_grid(r, dim_cap);
    if (format == "json") {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& [cell, betti] : grid.cells) {
            nlohmann::json c;
            c["m"] = cell.first;
            c["n"] = cell.second;
            c["betti"] = betti;
            cells.push_back(c);
        }
        nlohmann::json j;
        j["stabilization_index"] = grid.stabilization_index;
        j["cells"] = cells;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << grid_to_csv(grid);
    }
    return kExitOk;
}

int report_verdict(const std::optional<std::string>& violation) {
    if (!violation) {
        std::cout << "verdict: true\n";
        return kExitOk;
    }
    std::cout << "verdict: false\n";
    std::cout << "violated: " << *violation << "\n";
    return kExitHypothesis;
}

std::optional<std::string> pair_violation_text(const std::optional<PairViolation>& v) {
    if (!v) return std::nullopt;
    return "(" + v->left + ", " + v->right + ")";
}

int cmd_verify(const std::string& kind, const std::string& input1, const std::string& input2,
               const std::string& witness_path) {
    const Relation r1 = read_relation(input1);
    const Relation r2 = read_relation(input2);
    const nlohmann::json witness = load_json_file(witness_path);

    if (kind == "conjugacy")
        return report_verdict(
            pair_violation_text(conjugacy_violation(parse_vertex_map_json(witness), r1, r2)));
    if (kind == "right")
        return report_verdict(
            pair_violation_text(right_morphism_violation(parse_vertex_map_json(witness), r1, r2)));
    if (kind == "left")
        return report_verdict(
            pair_violation_text(left_morphism_violation(parse_vertex_map_json(witness), r1, r2)));
    if (kind == "multi-right")
        return report_verdict(pair_violation_text(
            multi_right_morphism_violation(parse_multimap_json(witness), r1, r2)));
    if (kind == "multi-left")
        return report_verdict(pair_violation_text(
            multi_left_morphism_violation(parse_multimap_json(witness), r1, r2)));
    if (kind == "shift")
        return report_verdict(
            shift_equivalence_violation(r1, r2, parse_shift_witness_json(witness)));
    throw parse_error("unknown verify kind '" + kind +
                      "', expected conjugacy|right|left|multi-right|multi-left|shift");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dowker complexes, filtrations and barcodes of finite relations"};
    app.require_subcommand(1);

    std::string input, input2, witness, side = "K", format, kind;
    int dim_cap = 3, power_n = 1;
    bool include_zero = false;

    auto* analyze = app.add_subcommand("analyze", "relation and digraph summary");
    analyze->add_option("input", input, "relation file")->required();
    analyze->add_option("--format", format, "text|json");

    auto* complex = app.add_subcommand("complex", "Dowker complex and Betti numbers");
    complex->add_option("input", input, "relation file")->required();
    complex->add_option("--side", side, "K|L (default K)");
    complex->add_option("--power", power_n, "relation power (default 1)");
    complex->add_option("--dim-cap", dim_cap, "homology dimension cap (default 3)");
    complex->add_option("--format", format, "json|text");

    auto* bar = app.add_subcommand("barcode", "persistence barcode of the power filtration");
    bar->add_option("input", input, "relation file")->required();
    bar->add_option("--side", side, "K|L (default K)");
    bar->add_flag("--include-zero", include_zero, "start the filtration at power 0");
    bar->add_option("--dim-cap", dim_cap, "homology dimension cap (default 3)");
    bar->add_option("--format", format, "text|json");

    auto* bifil = app.add_subcommand("bifiltration", "Betti grid of K(R^m) meet L(R^n)");
    bifil->add_option("input", input, "relation file")->required();
    bifil->add_option("--dim-cap", dim_cap, "homology dimension cap (default 3)");
    bifil->add_option("--format", format, "csv|json");

    auto* verify = app.add_subcommand("verify", "check a morphism/conjugacy/shift witness");
    verify
        ->add_option("kind", kind, "conjugacy|right|left|multi-right|multi-left|shift")
        ->required();
    verify->add_option("first", input, "first relation file")->required();
    verify->add_option("second", input2, "second relation file")->required();
    verify->add_option("--witness", witness, "witness JSON file")->required();

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(input, format);
        if (complex->parsed()) return cmd_complex(input, side, power_n, dim_cap, format);
        if (bar->parsed()) return cmd_barcode(input, side, include_zero, dim_cap, format);
        if (bifil->parsed()) return cmd_bifiltration(input, dim_cap, format);
        if (verify->parsed()) return cmd_verify(kind, input, input2, witness);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const dowker::hypothesis_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const dowker::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
