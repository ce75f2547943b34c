// codetops: analyze, classify and verify the non-degenerate hyperplane
// sets of linear codes, and explore the graphs they live in.
//
// Exit codes: 0 success, 1 bad input (parse/rank), 2 degenerate code,
// 3 over a size cap, 64 usage error.
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "codetops/analysis_json.hpp"
#include "codetops/autos.hpp"
#include "codetops/matrix_io.hpp"
#include "codetops/verify.hpp"

namespace {

using namespace codetops;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kDegenerate = 2;
constexpr int kTooLarge = 3;
constexpr int kUsage = 64;

MatrixGF load_full_rank(const std::string& path) {
    MatrixGF m = load_matrix_file(path);
    if (m.rref().rank != m.rows())
        throw RankDeficientError("generator rows are linearly dependent");
    return m;
}

void print_pretty(const TopAnalysis& a) {
    const Field& f = *a.field;
    std::cout << "field: " << f.describe() << "\n"
              << "n: " << a.n << ", k: " << a.k << "\n";
    if (a.degenerate) {
        std::cout << "degenerate: the generator has a zero column\n"
                  << "classification: " << to_string(a.classification)
                  << "\n";
        return;
    }
    std::cout << "column classes: " << a.classes->count() << "\n"
              << "uncovered directions: " << a.wprime.size()
              << " projective (" << a.wprime_full_count()
              << " with scalar multiples)\n"
              << "dim W: " << a.w_span.dim() << "\n"
              << "classification: " << to_string(a.classification) << "\n"
              << "top size [k+1]_q: " << a.top_size() << "\n"
              << "members: " << a.members.size() << "\n";
    if (a.line_count)
        std::cout << "lines through the member: " << *a.line_count << "\n";
    for (size_t i = 0; i < a.members.size(); ++i) {
        std::cout << "member " << i + 1 << " basis:\n";
        const MatrixGF& b = a.members[i].basis();
        for (size_t r = 0; r < b.rows(); ++r) {
            std::cout << " ";
            for (size_t c = 0; c < b.cols(); ++c)
                std::cout << ' ' << f.format(b.at(r, c));
            std::cout << "\n";
        }
    }
    if (a.common) {
        std::cout << "member intersection: dimension " << a.common->dim()
                  << "\n";
    }
    if (a.line_pair)
        std::cout << "contained in exactly one line, over the member "
                     "intersection\n";
}

int cmd_analyze(const std::string& path, std::optional<size_t> k, bool pretty,
                bool timing) {
    auto t0 = std::chrono::steady_clock::now();
    MatrixGF m = load_full_rank(path);
    if (k && *k != m.rows() - 1) {
        std::cerr << "codetops: --k must equal rows-1 = " << m.rows() - 1
                  << " for this matrix\n";
        return kUsage;
    }
    TopAnalysis a = analyze(m);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (pretty)
        print_pretty(a);
    else
        std::cout << analysis_to_json(a, timing ? seconds : -1.0).dump(2)
                  << "\n";
    return a.degenerate ? kDegenerate : kOk;
}

Json map_to_json(const MonomialMap& f) {
    Json scales = Json::array();
    for (uint32_t s : f.scales) scales.push_back(f.field->format(s));
    return Json{{"delta", f.delta},
                {"scales", scales},
                {"frobenius", f.frob}};
}

int cmd_group(const std::string& path, bool semilinear, bool with_maps) {
    MatrixGF m = load_full_rank(path);
    Subspace u = Subspace::from_span(m);
    std::vector<MonomialMap> st = stabilizer(u, semilinear);
    BigInt orbit = orbit_size(u, semilinear);
    BigInt group = group_order(m.cols(), *m.field(), semilinear);
    if (orbit * BigInt(st.size()) != group)
        throw std::logic_error("orbit-stabilizer identity failed");
    Json j{{"field",
            {{"p", m.field()->p()},
             {"m", m.field()->m()},
             {"modulus", m.field()->modulus()}}},
           {"n", m.cols()},
           {"semilinear", semilinear},
           {"order", st.size()},
           {"orbit_size", orbit.str()},
           {"group_order", group.str()}};
    if (with_maps) {
        Json maps = Json::array();
        for (const MonomialMap& f : st) maps.push_back(map_to_json(f));
        j["maps"] = maps;
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    std::vector<CheckResult> results = suite == "paper-examples"
                                           ? paper_example_checks()
                                           : property_checks(seed);
    bool all = true;
    for (const CheckResult& r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
            all = false;
        }
    }
    std::cout << (all ? "ok" : "FAILED") << " (" << results.size()
              << " checks)\n";
    return all ? kOk : kBadInput;
}

std::string vertex_label(const Subspace& s) {
    const Field& f = *s.field();
    std::string out;
    const MatrixGF& b = s.basis();
    for (size_t r = 0; r < b.rows(); ++r) {
        if (r) out += "|";
        for (size_t c = 0; c < b.cols(); ++c) {
            if (c) out += " ";
            out += f.format(b.at(r, c));
        }
    }
    return out;
}

int cmd_graph(size_t n, size_t k, uint64_t q, bool nondegenerate,
              const std::string& format) {
    GrassmannGraph g = build_graph(Field::from_order(q), n, k, nondegenerate);
    if (format == "dot") {
        std::cout << "graph codes {\n";
        for (size_t i = 0; i < g.vertex_count(); ++i)
            std::cout << "  v" << i << " [label=\"" << vertex_label(g.vertex(i))
                      << "\"];\n";
        for (size_t i = 0; i < g.vertex_count(); ++i)
            for (size_t j = i + 1; j < g.vertex_count(); ++j)
                if (g.edge(i, j))
                    std::cout << "  v" << i << " -- v" << j << ";\n";
        std::cout << "}\n";
    } else {
        Json vertices = Json::array();
        Json adjacency = Json::array();
        for (size_t i = 0; i < g.vertex_count(); ++i) {
            Json rows = Json::array();
            const MatrixGF& b = g.vertex(i).basis();
            for (size_t r = 0; r < b.rows(); ++r) {
                std::string row;
                for (size_t c = 0; c < b.cols(); ++c) {
                    if (c) row += " ";
                    row += g.field()->format(b.at(r, c));
                }
                rows.push_back(row);
            }
            vertices.push_back(rows);
            adjacency.push_back(g.neighbors(i));
        }
        Json j{{"n", n},          {"k", k},
               {"q", q},          {"nondegenerate", nondegenerate},
               {"vertices", vertices}, {"adjacency", adjacency}};
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tops of the graph of non-degenerate linear codes"};
    app.require_subcommand(1);

    std::string matrix_path;
    std::optional<size_t> k_opt;
    bool pretty = false, json_flag = false, timing = false;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "classify the hyperplane set of a code");
    analyze_cmd->add_option("--matrix", matrix_path, "matrix file")
        ->required();
    analyze_cmd->add_option("--k", k_opt, "member dimension (= rows-1)");
    CLI::Option* opt_json =
        analyze_cmd->add_flag("--json", json_flag, "JSON output (default)");
    analyze_cmd->add_flag("--pretty", pretty, "human-readable output")
        ->excludes(opt_json);
    analyze_cmd->add_flag("--timing", timing, "include timing_seconds");

    bool semilinear = false;
    CLI::App* stab_cmd =
        app.add_subcommand("stabilizer", "stabilizer of a code's hyperplane "
                                         "set under the monomial group");
    stab_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    stab_cmd->add_flag("--semilinear", semilinear,
                       "include Frobenius twists");

    CLI::App* orbit_cmd =
        app.add_subcommand("orbit", "orbit size under the monomial group");
    orbit_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    orbit_cmd->add_flag("--semilinear", semilinear,
                        "include Frobenius twists");

    std::string suite;
    uint64_t seed = 42;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the pinned check suites");
    verify_cmd->add_option("--suite", suite, "paper-examples or properties")
        ->required()
        ->check(CLI::IsMember({"paper-examples", "properties"}));
    verify_cmd->add_option("--seed", seed, "seed for the property draws");

    size_t g_n = 0, g_k = 0;
    uint64_t g_q = 0;
    bool nondeg = false;
    std::string format = "dot";
    CLI::App* graph_cmd =
        app.add_subcommand("graph", "materialize a code graph");
    graph_cmd->add_option("--n", g_n, "ambient dimension")->required();
    graph_cmd->add_option("--k", g_k, "vertex dimension")->required();
    graph_cmd->add_option("--q", g_q, "field order")->required();
    graph_cmd->add_flag("--nondegenerate", nondeg,
                        "restrict to non-degenerate vertices");
    graph_cmd->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (analyze_cmd->parsed())
            return cmd_analyze(matrix_path, k_opt, pretty, timing);
        if (stab_cmd->parsed())
            return cmd_group(matrix_path, semilinear, true);
        if (orbit_cmd->parsed())
            return cmd_group(matrix_path, semilinear, false);
        if (verify_cmd->parsed()) return cmd_verify(suite, seed);
        if (graph_cmd->parsed())
            return cmd_graph(g_n, g_k, g_q, nondeg, format);
    } catch (const ParseError& e) {
        std::cerr << "codetops: " << e.what() << "\n";
        return kBadInput;
    } catch (const TooLargeError& e) {
        std::cerr << "codetops: " << e.what() << "\n";
        return kTooLarge;
    } catch (const ZeroColumnError& e) {
        std::cerr << "codetops: degenerate code: " << e.what() << "\n";
        return kDegenerate;
    } catch (const RankDeficientError& e) {
        std::cerr << "codetops: " << e.what() << "\n";
        return kBadInput;
    } catch (const NonPrimeError& e) {
        std::cerr << "codetops: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "codetops: " << e.what() << "\n";
        return kBadInput;
    }
    return kUsage;
}
