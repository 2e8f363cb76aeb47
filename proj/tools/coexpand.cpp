// coexpand: exact expansion constants of integer matrices and simplicial
// (co)boundaries, total-unimodularity and integrality checks, finite covers,
// and the closed-form isoperimetric/waist constants.
//
// Exit codes: 0 ok/pass, 1 verification failure, 2 input/format/domain,
// 3 infeasible, 4 size guard.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <coexpand/bundled.hpp>
#include <coexpand/complex.hpp>
#include <coexpand/cover.hpp>
#include <coexpand/errors.hpp>
#include <coexpand/expansion.hpp>
#include <coexpand/io.hpp>
#include <coexpand/tu.hpp>
#include <coexpand/verify.hpp>

using namespace coexpand;

namespace {

std::size_t size_guard_from_env(std::size_t fallback) {
    const char* v = std::getenv("COEXPAND_SIZE_GUARD");
    if (!v) return fallback;
    try {
        return static_cast<std::size_t>(std::stoull(v));
    } catch (...) {
        throw FormatError("COEXPAND_SIZE_GUARD must be a nonnegative integer");
    }
}

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// matrix input, either directly or as a (co)boundary of a complex file
IntMatrix resolve_operand(const std::string& path, std::optional<int> boundary_k,
                          std::optional<int> coboundary_k) {
    if (boundary_k && coboundary_k)
        throw FormatError("choose either --boundary or --coboundary");
    if (boundary_k || coboundary_k) {
        SimplicialComplex X = load_complex(path);
        return boundary_k ? boundary_matrix(X, *boundary_k)
                          : coboundary_matrix(X, *coboundary_k);
    }
    return load_matrix(path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact l1 expansion constants, total unimodularity and covers"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // --- homology ---
    auto* cmd_hom = app.add_subcommand("homology", "Betti numbers and torsion of a complex");
    cmd_hom->fallthrough();
    std::string hom_file;
    std::optional<int> hom_k;
    cmd_hom->add_option("complex", hom_file, "complex JSON file")->required();
    cmd_hom->add_option("--k", hom_k, "single degree (default: all)");

    // --- tu ---
    auto* cmd_tu = app.add_subcommand("tu", "total unimodularity by exhaustive minors");
    cmd_tu->fallthrough();
    std::string tu_file;
    std::size_t tu_guard = 8;
    bool tu_row_criterion = false;
    std::optional<int> tu_boundary, tu_coboundary;
    cmd_tu->add_option("matrix", tu_file, "matrix file (text or JSON), or complex JSON")
        ->required();
    cmd_tu->add_option("--guard", tu_guard, "max minor size for exhaustive mode");
    cmd_tu->add_flag("--row-criterion", tu_row_criterion, "only run the row test");
    cmd_tu->add_option("--boundary", tu_boundary, "use boundary_k of a complex file");
    cmd_tu->add_option("--coboundary", tu_coboundary, "use d^k of a complex file");

    // --- xi ---
    auto* cmd_xi = app.add_subcommand("xi", "expansion constants");
    cmd_xi->fallthrough();
    std::string xi_file, xi_ring = "real", xi_at;
    bool xi_global = false;
    std::optional<long long> xi_probe;
    std::optional<int> xi_boundary, xi_coboundary;
    cmd_xi->add_option("matrix", xi_file, "matrix file (text or JSON), or complex JSON")
        ->required();
    cmd_xi->add_option("--ring", xi_ring, "real | int")->check(CLI::IsMember({"real", "int"}));
    cmd_xi->add_option("--at", xi_at, "integer vector, e.g. [1,-2,0]");
    cmd_xi->add_flag("--global", xi_global, "global constant over the image (real ring)");
    cmd_xi->add_option("--probe", xi_probe, "sup-norm radius for the integer lower bound");
    cmd_xi->add_option("--boundary", xi_boundary, "use boundary_k of a complex file");
    cmd_xi->add_option("--coboundary", xi_coboundary, "use d^k of a complex file");

    // --- cover ---
    auto* cmd_cover = app.add_subcommand("cover", "finite covers from voltage files");
    cmd_cover->fallthrough();
    std::string cover_base;
    std::vector<std::string> cover_voltages;
    bool cover_sweep = false;
    cmd_cover->add_option("complex", cover_base, "base complex JSON")->required();
    cmd_cover->add_option("voltages", cover_voltages, "voltage JSON file(s)")->required();
    cmd_cover->add_flag("--sweep", cover_sweep,
                        "emit the (degree, xi) table instead of the cover");

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "theorem verification suites");
    cmd_verify->fallthrough();
    std::string suite;
    std::vector<std::string> verify_inputs;
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 0;
    cmd_verify
        ->add_option("suite", suite,
                     "er-le-ez | tu-criterion | hoffman-kruskal | tue1 | tue2 | dtu | "
                     "integrality | duality | cover")
        ->required();
    cmd_verify->add_option("inputs", verify_inputs, "complex JSON file(s) where applicable");
    cmd_verify->add_option("--seed", seed, "seed for the randomized batteries");
    cmd_verify->add_option("--trials", trials, "number of random instances (suite default)");

    // --- waist ---
    auto* cmd_waist = app.add_subcommand("waist", "isoperimetric and waist constants");
    cmd_waist->fallthrough();
    std::string w_xi, w_D = "1", w_E = "1";
    unsigned w_m = 2;
    cmd_waist->add_option("--xi", w_xi, "expansion constant (rational)")->required();
    cmd_waist->add_option("--D", w_D, "bilipschitz constant, >= 1");
    cmd_waist->add_option("--E", w_E, "deformation constant, > 0");
    cmd_waist->add_option("--m", w_m, "manifold dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_hom) {
            SimplicialComplex X = load_complex(hom_file);
            if (hom_k) {
                emit(to_json(homology(X, *hom_k)), pretty);
            } else {
                json arr = json::array();
                for (int k = 0; k <= X.dim(); ++k) arr.push_back(to_json(homology(X, k)));
                emit(arr, pretty);
            }
            return 0;
        }

        if (*cmd_tu) {
            IntMatrix M = resolve_operand(tu_file, tu_boundary, tu_coboundary);
            if (tu_row_criterion) {
                emit(json{{"row_criterion", row_criterion(M)}}, pretty);
                return 0;
            }
            auto rep = is_totally_unimodular(M, size_guard_from_env(tu_guard));
            emit(to_json(rep), pretty);
            return 0;
        }

        if (*cmd_xi) {
            IntMatrix A = resolve_operand(xi_file, xi_boundary, xi_coboundary);
            std::size_t guard = size_guard_from_env(default_size_guard());
            int modes = (xi_at.empty() ? 0 : 1) + (xi_global ? 1 : 0) + (xi_probe ? 1 : 0);
            if (modes != 1)
                throw FormatError("choose exactly one of --at, --global, --probe");
            if (xi_global) {
                if (xi_ring != "real")
                    throw FormatError("the global constant is computed over the real ring; "
                                      "use --probe for an integer lower bound");
                emit(to_json(xi_real_global(A, guard)), pretty);
            } else if (xi_probe) {
                emit(json{{"ring", "integer"},
                          {"radius", *xi_probe},
                          {"lower_bound", to_string(xi_int_probe(A, Integer(*xi_probe), guard))}},
                     pretty);
            } else {
                IntVec v = int_vector_from_json(json::parse(xi_at));
                if (v.size() != A.rows()) throw FormatError("--at vector has wrong length");
                auto res = (xi_ring == "real") ? l1_min_real({A, v}) : l1_min_int({A, v});
                json j = to_json(res);
                j["norm_v"] = l1_norm(v).str();
                j["value"] = to_string(res.value / Rational(l1_norm(v)));
                j["min_norm"] = to_string(res.value);
                emit(j, pretty);
            }
            return 0;
        }

        if (*cmd_cover) {
            SimplicialComplex X = load_complex(cover_base);
            std::vector<VoltageAssignment> vas;
            for (const auto& p : cover_voltages) vas.push_back(load_voltage(p, X));
            if (cover_sweep || vas.size() > 1) {
                auto rows = cover_expansion_sweep(X, vas,
                                                  size_guard_from_env(default_size_guard()));
                json arr = json::array();
                for (const auto& r : rows) {
                    json row{{"degree", r.degree}, {"xi_top", to_string(r.xi_top)}};
                    if (r.xi_codim1) row["xi_codim1"] = to_string(*r.xi_codim1);
                    arr.push_back(row);
                }
                emit(json{{"base_dim", X.dim()}, {"rows", arr}}, pretty);
            } else {
                auto cover = build_cover(X, vas[0]);
                json j = to_json(cover);
                j["degree"] = vas[0].degree;
                j["connected"] = cover.is_connected();
                j["chi"] = cover.euler_characteristic();
                j["vertices"] = cover.num_simplices(0);
                j["edges"] = cover.num_simplices(1);
                emit(j, pretty);
            }
            return 0;
        }

        if (*cmd_verify) {
            VerificationReport rep;
            auto need_complex = [&](const char* def_name,
                                    SimplicialComplex def) -> SimplicialComplex {
                if (verify_inputs.empty()) return def;
                (void)def_name;
                return load_complex(verify_inputs[0]);
            };
            if (suite == "er-le-ez") {
                rep = suites::er_le_ez(seed, trials ? trials : 200);
            } else if (suite == "tu-criterion") {
                rep = suites::tu_criterion(seed, trials ? trials : 100);
            } else if (suite == "hoffman-kruskal") {
                rep = suites::hoffman_kruskal(seed, trials ? trials : 50);
            } else if (suite == "tue1") {
                rep = suites::tue1(seed, trials ? trials : 50);
            } else if (suite == "tue2") {
                rep = suites::tue2(need_complex("delta3", bundled::delta3_boundary()), seed,
                                   trials ? trials : 50);
            } else if (suite == "dtu") {
                if (verify_inputs.empty()) {
                    rep = suites::dtu();
                } else {
                    std::vector<std::pair<std::string, SimplicialComplex>> cs;
                    for (const auto& p : verify_inputs) cs.emplace_back(p, load_complex(p));
                    rep = suites::dtu(cs);
                }
            } else if (suite == "integrality") {
                rep = suites::integrality(
                    need_complex("delta3", bundled::delta3_boundary()), seed,
                    trials ? trials : 50);
            } else if (suite == "duality") {
                rep = suites::duality(need_complex("delta3", bundled::delta3_boundary()),
                                      size_guard_from_env(default_size_guard()));
            } else if (suite == "cover") {
                rep = suites::cover_suite();
            } else {
                throw FormatError("unknown suite '" + suite + "'");
            }
            emit(rep.to_json(), pretty);
            return rep.passed() ? 0 : 1;
        }

        if (*cmd_waist) {
            Rational xi = parse_rational(w_xi);
            Rational D = parse_rational(w_D);
            Rational E = parse_rational(w_E);
            Rational C = combine_constants(xi, D, E, w_m);
            emit(json{{"xi", to_string(xi)},
                      {"D", to_string(D)},
                      {"E", to_string(E)},
                      {"m", w_m},
                      {"C", to_string(C)},
                      {"waist_constant", to_string(waist_constant(C))}},
                 pretty);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
