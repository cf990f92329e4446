// Command-line frontend for the non-oriented graph complex engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gcx/catalog.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGate = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gcx::ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gcx::GraphSum load_sum(const std::string& path) {
    return gcx::sum_from_raw(gcx::parse_sum_text(read_file(path)));
}

json sum_to_json(const gcx::GraphSum& s) {
    json terms = json::array();
    for (const auto& [g, c] : s.terms())
        terms.push_back({{"coefficient", gcx::to_string(c)},
                         {"graph", gcx::serialize_edge_field(g)}});
    return terms;
}

void print_sum(const gcx::GraphSum& s, bool as_json) {
    if (as_json)
        std::cout << json{{"terms", sum_to_json(s)}}.dump(2) << "\n";
    else
        std::cout << gcx::serialize_sum(s);
}

struct Options {
    bool json = false;
    int threads = 1;
};

int default_threads() {
    if (const char* env = std::getenv("GC_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    return 1;
}

gcx::RankMode parse_rank_mode(const std::string& name) {
    if (name == "exact") return gcx::RankMode::Exact();
    if (name == "modular") return gcx::RankMode::Modular();
    throw CLI::ValidationError("--rank-mode", "expected 'exact' or 'modular'");
}

void print_report_table(const gcx::DimensionReport& r) {
    std::printf("%2s %4s %9s %7s %14s %11s %6s %6s\n", "n", "#E", "#(graphs)", "#(=0)",
                "#(!=0), N_d", "N_ker, N_0", "N_im", "dim H");
    std::printf("%2d %4d %9lld %7lld %14lld %11d %6s %6d\n", r.n, r.e, r.total_graphs,
                r.zero_graphs, r.nonzero, r.n_ker, "", r.dim_h);
    std::printf("%2d %4d %9lld %7lld %14d %11d %6d %6s\n", r.n - 1, r.e - 1, r.delta_total,
                r.delta_zero, r.n_delta, r.n_0, r.n_im, "");
}

json report_to_json(const gcx::DimensionReport& r) {
    return json{{"n", r.n},
                {"e", r.e},
                {"total_graphs", r.total_graphs},
                {"zero_graphs", r.zero_graphs},
                {"nonzero", r.nonzero},
                {"n_ker", r.n_ker},
                {"delta_total", r.delta_total},
                {"delta_zero", r.delta_zero},
                {"n_delta", r.n_delta},
                {"n_0", r.n_0},
                {"n_im", r.n_im},
                {"dim_h", r.dim_h}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the non-oriented graph complex"};
    app.require_subcommand(1);

    Options opt;
    opt.threads = default_threads();
    app.add_flag("--json", opt.json, "structured output");
    app.add_option("--threads", opt.threads, "worker thread cap (default: GC_THREADS or 1)")
        ->check(CLI::PositiveNumber);

    std::string file1, file2;
    auto* diff_cmd = app.add_subcommand("diff", "reduced differential of a graph sum");
    diff_cmd->add_option("file", file1, "graph-sum file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "canonical reduction of a graph sum");
    reduce_cmd->add_option("file", file1, "graph-sum file")->required();

    auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two graph sums");
    bracket_cmd->add_option("file1", file1, "graph-sum file")->required();
    bracket_cmd->add_option("file2", file2, "graph-sum file")->required();

    auto* iszero_cmd = app.add_subcommand("is-zero", "zero-graph classification per term");
    iszero_cmd->add_option("file", file1, "graph-sum file")->required();

    int en_n = 0, en_e = 0, en_mv = 1;
    bool count_only = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "connected graphs up to isomorphism");
    enum_cmd->add_option("-n", en_n, "vertex count")->required();
    enum_cmd->add_option("-e", en_e, "edge count")->required();
    enum_cmd->add_option("--min-valency", en_mv, "valency floor (default 1)");
    enum_cmd->add_flag("--count-only", count_only, "counts without the basis dump");

    int co_n = 0, co_mv = 1;
    std::string co_mode = "modular";
    bool allow_big = false;
    auto* coh_cmd = app.add_subcommand("cohomology", "dimension table row at (n, 2n-2)");
    coh_cmd->add_option("-n", co_n, "vertex count (4..9)")->required();
    coh_cmd->add_option("--min-valency", co_mv, "valency floor: 1 or 3");
    coh_cmd->add_option("--rank-mode", co_mode, "exact|modular (default modular)");
    coh_cmd->add_flag("--allow-big", allow_big, "opt into the hours-scale (9, min-valency 1) run");

    std::string verify_what;
    auto* verify_cmd = app.add_subcommand("verify", "check d(sum) = 0");
    verify_cmd->add_option("what", verify_what, "gamma3|gamma5|gamma7|FILE")->required();

    int so_n = 0, so_e = 0;
    std::vector<std::string> fixes;
    auto* solve_cmd = app.add_subcommand("solve", "constrained kernel solve of the differential");
    solve_cmd->add_option("-n", so_n, "vertex count")->required();
    solve_cmd->add_option("-e", so_e, "edge count")->required();
    solve_cmd->add_option("--fix", fixes, "\"EDGES=COEFF\" constraint (repeatable)")->required();

    try {
        app.parse(argc, argv);

        if (*diff_cmd) {
            print_sum(gcx::differential(load_sum(file1), opt.threads), opt.json);
        } else if (*reduce_cmd) {
            print_sum(load_sum(file1), opt.json);
        } else if (*bracket_cmd) {
            print_sum(gcx::bracket_sum(load_sum(file1), load_sum(file2), opt.threads), opt.json);
        } else if (*iszero_cmd) {
            json results = json::array();
            for (const auto& [c, g] : gcx::parse_sum_text(read_file(file1))) {
                bool z = gcx::canonicalize(g).zero;
                if (opt.json)
                    results.push_back({{"graph", gcx::serialize_edge_field(g)}, {"zero", z}});
                else
                    std::cout << (z ? "zero" : "nonzero") << "\n";
            }
            if (opt.json) std::cout << json{{"results", results}}.dump(2) << "\n";
        } else if (*enum_cmd) {
            gcx::BasisSpec spec{en_n, en_e, en_mv};
            if (count_only && !opt.json) {
                auto [total, zero] = gcx::enumerate_counts_only(spec, opt.threads);
                std::cout << "total=" << total << " zero=" << zero
                          << " nonzero=" << total - zero << "\n";
            } else {
                gcx::BasisReport rep = gcx::enumerate_basis(spec, opt.threads);
                if (opt.json) {
                    json doc{{"n", en_n},           {"e", en_e},
                             {"min_valency", en_mv}, {"total", rep.total},
                             {"zero", rep.zero},     {"nonzero", rep.total - rep.zero}};
                    if (!count_only) {
                        json basis = json::array();
                        for (const gcx::Graph& g : rep.nonzero_basis)
                            basis.push_back(gcx::serialize_edge_field(g));
                        doc["basis"] = basis;
                    }
                    std::cout << doc.dump(2) << "\n";
                } else {
                    for (const gcx::Graph& g : rep.nonzero_basis)
                        std::cout << gcx::serialize_term(1, g) << "\n";
                }
            }
        } else if (*coh_cmd) {
            if (co_n >= 8) std::cerr << "building bases and differential matrices...\n";
            gcx::DimensionReport rep = gcx::cohomology_report(co_n, co_mv, parse_rank_mode(co_mode),
                                                              allow_big, opt.threads);
            if (opt.json)
                std::cout << report_to_json(rep).dump(2) << "\n";
            else
                print_report_table(rep);
        } else if (*verify_cmd) {
            gcx::GraphSum s;
            if (verify_what == "gamma3")
                s = gcx::gamma3();
            else if (verify_what == "gamma5")
                s = gcx::gamma5();
            else if (verify_what == "gamma7")
                s = gcx::gamma7();
            else
                s = load_sum(verify_what);
            gcx::CocycleVerdict verdict = gcx::verify_cocycle(s, opt.threads);
            if (opt.json) {
                std::cout << json{{"input_terms", s.size()},
                                  {"residual_terms", verdict.residual.size()},
                                  {"is_cocycle", verdict.is_cocycle}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "input terms: " << s.size() << "\n"
                          << "residual terms: " << verdict.residual.size() << "\n"
                          << "cocycle: " << (verdict.is_cocycle ? "yes" : "no") << "\n";
            }
            return verdict.is_cocycle ? 0 : kExitVerifyFailed;
        } else if (*solve_cmd) {
            if (so_n >= 8) std::cerr << "building basis and differential matrix...\n";
            gcx::BasisReport basis = gcx::enumerate_basis({so_n, so_e, 1}, opt.threads);
            gcx::AssembledDifferential ad =
                gcx::differential_matrix(basis.nonzero_basis, opt.threads);
            std::map<gcx::Graph, int, gcx::GraphLess> col_of;
            for (std::size_t j = 0; j < basis.nonzero_basis.size(); ++j)
                col_of.emplace(basis.nonzero_basis[j], static_cast<int>(j));

            std::map<int, gcx::Rational> fixed;
            for (const std::string& fx : fixes) {
                auto eq = fx.rfind('=');
                if (eq == std::string::npos)
                    throw gcx::ParseError("--fix expects \"EDGES=COEFF\", got '" + fx + "'");
                auto [one, g] = gcx::parse_term("1 ; " + fx.substr(0, eq));
                gcx::Rational value = gcx::parse_rational(fx.substr(eq + 1));
                gcx::CanonicalResult cr = gcx::canonicalize(g);
                if (cr.zero) throw gcx::ParseError("fixed graph is a zero graph: '" + fx + "'");
                auto it = col_of.find(cr.graph);
                if (it == col_of.end())
                    throw gcx::ParseError("fixed graph is not in the (n, e) basis: '" + fx + "'");
                fixed[it->second] = value * cr.sign;
            }

            gcx::KernelSolution sol = gcx::solve_kernel(ad.matrix, fixed);
            std::vector<gcx::Term> terms;
            for (std::size_t j = 0; j < basis.nonzero_basis.size(); ++j)
                if (sol.particular[j] != 0)
                    terms.push_back({sol.particular[j], basis.nonzero_basis[j]});
            gcx::GraphSum solution = gcx::reduce(terms);
            if (opt.json) {
                std::cout << json{{"nullity", sol.nullity},
                                  {"free_parameters", sol.free_parameter_count},
                                  {"terms", sum_to_json(solution)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "# nullity=" << sol.nullity
                          << "\n# free_parameters=" << sol.free_parameter_count << "\n"
                          << gcx::serialize_sum(solution);
            }
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const gcx::ResourceGateError& e) {
        std::cerr << "resource gate: " << e.what() << "\n";
        return kExitGate;
    } catch (const gcx::NoSolutionError& e) {
        std::cerr << "no solution: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const gcx::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
