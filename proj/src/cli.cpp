// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#include "conric/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace conric::cli {

using nlohmann::json;

int verdict_exit_code(riccati::Verdict v) {
    switch (v) {
        case riccati::Verdict::Certificate: return kExitCertificate;
        case riccati::Verdict::EquivalenceNegative: return kExitEquivalenceNegative;
        case riccati::Verdict::HypothesisFailure: return kExitHypothesisFailure;
        case riccati::Verdict::NonConverged: return kExitNonConverged;
        case riccati::Verdict::InconclusiveAtMargin: return kExitInconclusiveAtMargin;
    }
    return kExitError;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json out = json::array();  // row-major flat array
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

Matrix matrix_from_json(const json& j, Index n, const std::string& name) {
    if (!j.is_array() || static_cast<Index>(j.size()) != n * n)
        throw SchemaError("block " + name + " must be a flat row-major array of length n*n");
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j2 = 0; j2 < n; ++j2) {
            const auto& cell = j[static_cast<std::size_t>(i * n + j2)];
            if (!cell.is_number()) throw SchemaError("block " + name + " has a non-numeric entry");
            const double v = cell.get<double>();
            if (!std::isfinite(v)) throw SchemaError("block " + name + " has a non-finite entry");
            m(i, j2) = v;
        }
    return m;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Vector vector_from_json(const json& j, Index n, const std::string& name) {
    if (!j.is_array() || static_cast<Index>(j.size()) != n)
        throw SchemaError(name + " must be an array of length n");
    Vector v(n);
    for (Index i = 0; i < n; ++i) {
        const double x = j[static_cast<std::size_t>(i)].get<double>();
        if (!std::isfinite(x)) throw SchemaError(name + " has a non-finite entry");
        v(i) = x;
    }
    return v;
}

json eigenvalues_to_json(const std::vector<std::complex<double>>& evs) {
    json out = json::array();
    for (const auto& z : evs) out.push_back(json::array({z.real(), z.imag()}));
    return out;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path.string());
}

void require_schema_version(const json& j, const std::string& what) {
    if (!j.contains("schema_version") || !j["schema_version"].is_string())
        throw SchemaError(what + " is missing schema_version");
    const auto version = j["schema_version"].get<std::string>();
    if (version != kSchemaVersion)
        throw SchemaError(what + " has schema_version \"" + version + "\"; this build reads \"" +
                          kSchemaVersion + "\"");
}

double env_default_tol() {
    if (const char* env = std::getenv("CONRIC_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0 && std::isfinite(v)) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring unparseable CONRIC_TOL=\"" << env << "\"\n";
    }
    return riccati::SolveOptions{}.tol;
}

}  // namespace

json cone_to_json(const cones::ConeSpec& cone) {
    if (cone.is_orthant()) return json{{"type", "orthant"}, {"dim", cone.dim()}};
    json gens = json::array();  // one inner array per generator (column of G)
    for (Index k = 0; k < cone.dim(); ++k) gens.push_back(vector_to_json(cone.generators().col(k)));
    return json{{"type", "simplicial"}, {"generators", gens}};
}

cones::ConeSpec cone_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw SchemaError("cone spec must carry a type");
    const auto type = j["type"].get<std::string>();
    if (type == "orthant") {
        if (!j.contains("dim") || !j["dim"].is_number_integer())
            throw SchemaError("orthant cone needs an integer dim");
        return cones::ConeSpec::orthant(j["dim"].get<Index>());
    }
    if (type == "simplicial") {
        if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
            throw SchemaError("simplicial cone needs a generators array");
        const auto& gens = j["generators"];
        const Index n = static_cast<Index>(gens.size());
        Matrix g(n, n);
        for (Index k = 0; k < n; ++k)
            g.col(k) = vector_from_json(gens[static_cast<std::size_t>(k)], n, "generator");
        try {
            return cones::ConeSpec::simplicial(g);
        } catch (const ConstructionError& e) {
            throw SchemaError(std::string("invalid simplicial cone: ") + e.what());
        }
    }
    throw SchemaError("unknown cone type \"" + type + "\"");
}

json problem_to_json(const cones::ConeSpec& cone, const BlockSystem& sys, const json& recipe) {
    json j{{"schema_version", kSchemaVersion},
           {"n", sys.n()},
           {"cone", cone_to_json(cone)},
           {"A", matrix_to_json(sys.A)},
           {"B", matrix_to_json(sys.B)},
           {"C", matrix_to_json(sys.C)},
           {"D", matrix_to_json(sys.D)}};
    if (!recipe.is_null()) j["recipe"] = recipe;
    return j;
}

ProblemFile load_problem(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    require_schema_version(j, "problem file " + path.string());
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw SchemaError("problem file needs an integer n");
    const Index n = j["n"].get<Index>();
    if (n < 1) throw SchemaError("problem dimension must be positive");
    for (const char* block : {"A", "B", "C", "D"})
        if (!j.contains(block)) throw SchemaError(std::string("problem file missing block ") + block);
    if (!j.contains("cone")) throw SchemaError("problem file missing cone spec");

    cones::ConeSpec cone = cone_from_json(j["cone"]);
    if (cone.dim() != n) throw SchemaError("cone dimension does not match n");
    BlockSystem sys(matrix_from_json(j["A"], n, "A"), matrix_from_json(j["B"], n, "B"),
                    matrix_from_json(j["C"], n, "C"), matrix_from_json(j["D"], n, "D"));
    return ProblemFile{j["schema_version"].get<std::string>(), std::move(cone), std::move(sys),
                       j.value("recipe", json(nullptr))};
}

void save_problem(const std::filesystem::path& path, const cones::ConeSpec& cone,
                  const BlockSystem& sys, const json& recipe) {
    write_json_file(path, problem_to_json(cone, sys, recipe));
}

json report_from_outcome(const riccati::Outcome& outcome, const riccati::SolveOptions& opts,
                         Index n, bool full_trace, double elapsed_ms) {
    json j{{"schema_version", kSchemaVersion},
           {"verdict", riccati::to_string(outcome.verdict)},
           {"n", n},
           {"detail", outcome.detail},
           {"options",
            {{"tol", opts.tol}, {"max_iter", opts.max_iter}, {"margin", opts.margin}}},
           {"timings", {{"total_ms", elapsed_ms}}}};
    j["eigenvalues"]["L"] = eigenvalues_to_json(outcome.l_stab.eigenvalues);
    j["spectral_abscissa_L"] = outcome.l_stab.spectral_abscissa;

    const auto trace_json = [&](const riccati::TraceSummary& trace) {
        const auto& cert = trace.certificate;
        json t{{"monotone_up_to", cert.monotone_up_to},
               {"bound_holds_up_to", cert.bound_holds_up_to},
               {"converged", cert.converged},
               {"cauchy_tail", cert.cauchy_tail},
               {"steps", trace.gaps.size()}};
        if (full_trace) {
            t["gaps"] = trace.gaps;
            t["monotone_steps"] = trace.monotone_steps;
            t["bound_steps"] = trace.bound_steps;
        }
        return t;
    };

    if (outcome.certificate) {
        const auto& cert = *outcome.certificate;
        j["solution"] = {{"X", matrix_to_json(cert.solution.X_star)},
                         {"residual", cert.solution.residual},
                         {"iterations", cert.solution.iterations}};
        j["eigenvalues"]["closed_loop_A"] = eigenvalues_to_json(cert.loop_a_stab.eigenvalues);
        j["eigenvalues"]["closed_loop_D"] = eigenvalues_to_json(cert.loop_d_stab.eigenvalues);
        j["witness"] = {{"v1", vector_to_json(cert.witness.v1)},
                        {"v2", vector_to_json(cert.witness.v2)},
                        {"u1", vector_to_json(cert.witness.u1)},
                        {"u2", vector_to_json(cert.witness.u2)},
                        {"source_w", vector_to_json(cert.witness.source_w)},
                        {"residual", cert.witness.residual}};
        j["cone_verdicts"] = {{"x_nonneg", cert.x_nonneg.in_cone()},
                              {"loop_a_cross_positive", cert.loop_a_cross.cross_positive},
                              {"loop_d_cross_positive", cert.loop_d_cross.cross_positive},
                              {"x_v1_leq_v2", cert.x_v1_leq_v2},
                              {"necessity_block_nonneg", cert.necessity_check}};
        j["trace"] = trace_json(cert.trace);
    } else if (outcome.partial_trace) {
        j["trace"] = trace_json(*outcome.partial_trace);
        j["iterations"] = outcome.iterations;
        j["residual"] = outcome.final_residual;
    }
    return j;
}

int cmd_solve(const std::filesystem::path& problem_path,
              std::optional<std::filesystem::path> out_path, riccati::SolveOptions opts,
              bool full_trace) {
    const ProblemFile problem = load_problem(problem_path);
    const auto start = std::chrono::steady_clock::now();
    const riccati::Outcome outcome = riccati::solve(problem.cone, problem.sys, opts);
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    const json report = report_from_outcome(outcome, opts, problem.sys.n(), full_trace, elapsed_ms);
    if (out_path)
        write_json_file(*out_path, report);
    else
        std::cout << report.dump(2) << '\n';

    std::cerr << "verdict: " << riccati::to_string(outcome.verdict);
    if (outcome.certificate)
        std::cerr << " (residual " << outcome.certificate->solution.residual << ", "
                  << outcome.certificate->solution.iterations << " iterations)";
    else if (!outcome.detail.empty())
        std::cerr << " (" << outcome.detail << ")";
    std::cerr << '\n';
    return verdict_exit_code(outcome.verdict);
}

int cmd_check(const std::filesystem::path& report_path,
              const std::filesystem::path& problem_path) {
    const ProblemFile problem = load_problem(problem_path);
    const json report = read_json_file(report_path);
    require_schema_version(report, "report file " + report_path.string());
    if (!report.contains("verdict") || !report["verdict"].is_string())
        throw SchemaError("report file missing verdict");
    const auto verdict = report["verdict"].get<std::string>();
    const Index n = problem.sys.n();

    bool all_ok = true;
    const auto check = [&](const std::string& name, bool ok, const std::string& why = "") {
        std::cout << (ok ? "  ok   " : "  FAIL ") << name;
        if (!ok && !why.empty()) std::cout << " (" << why << ")";
        std::cout << '\n';
        all_ok = all_ok && ok;
    };

    if (verdict == "certificate") {
        if (!report.contains("solution"))
            throw SchemaError("certificate report carries no solution");
        const Matrix x = matrix_from_json(report.at("solution").at("X"), n, "X");
        const double tol = report.at("options").at("tol").get<double>();
        const double margin = report.at("options").at("margin").get<double>();

        const double stored_res = report.at("solution").at("residual").get<double>();
        const double recomputed = riccati::residual(problem.sys, x);
        check("residual field matches recomputation",
              std::abs(stored_res - recomputed) <=
                  1e-14 * std::max(1.0, riccati::residual_scale(problem.sys, x)));

        std::string why;
        check("sufficiency (residual, cone, closed loops)",
              riccati::verify_sufficiency(problem.cone, problem.sys, x, tol, margin, &why), why);
        try {
            const auto nec = riccati::verify_necessity(problem.cone, problem.sys, x, margin);
            check("necessity (block inverse nonnegative)", nec.block_inverse_nonneg);
            check("necessity (L stable)", nec.L_stable_implied);
        } catch (const Error& e) {
            check("necessity", false, e.what());
        }
    } else if (verdict == "equivalence-negative") {
        const auto blocks = cones::block_cross_positive(problem.cone, problem.sys);
        check("L cross-positive on K x K", blocks.verdict);
        const auto l_stab = spectral::eigenvalues(problem.sys.assembled());
        check("L unstable", l_stab.spectral_abscissa > 0.0);
    } else if (verdict == "hypothesis-failure") {
        const auto blocks = cones::block_cross_positive(problem.cone, problem.sys);
        check("L not cross-positive on K x K", !blocks.verdict);
    } else if (verdict == "non-converged" || verdict == "inconclusive-at-margin") {
        std::cout << "  note: verdict \"" << verdict << "\" makes no claim to verify\n";
    } else {
        throw SchemaError("unknown verdict \"" + verdict + "\"");
    }

    std::cout << (all_ok ? "check passed" : "check FAILED") << '\n';
    return all_ok ? 0 : 1;
}

int cmd_gen(const instances::InstanceRecipe& recipe,
            std::optional<std::filesystem::path> out_path) {
    json recipe_json{{"seed", recipe.seed},
                     {"n", recipe.kind == instances::Kind::Scalar ? 1 : recipe.n},
                     {"kind", instances::to_string(recipe.kind)},
                     {"shift", recipe.shift},
                     {"cond_cap", recipe.cond_cap}};
    json problem;
    if (recipe.kind == instances::Kind::ConjugatedCone) {
        const auto inst = instances::gen_conjugated(recipe);
        problem = problem_to_json(inst.cone, inst.sys, recipe_json);
    } else {
        const BlockSystem sys = instances::gen_orthant_mmatrix(recipe);
        problem = problem_to_json(cones::ConeSpec::orthant(sys.n()), sys, recipe_json);
    }
    if (out_path)
        write_json_file(*out_path, problem);
    else
        std::cout << problem.dump(2) << '\n';
    return 0;
}

int run(std::vector<std::string> args) {
    CLI::App app{"stabilizing cone-preserving solutions of X B X + D X + X A + C = 0"};
    app.require_subcommand(1);

    // solve
    std::string solve_problem;
    std::string solve_out;
    riccati::SolveOptions opts;
    opts.tol = env_default_tol();
    bool trace = false;
    auto* solve_cmd = app.add_subcommand("solve", "solve a problem file and emit a report");
    solve_cmd->add_option("problem", solve_problem, "problem JSON file")->required();
    solve_cmd->add_option("--tol", opts.tol, "relative residual tolerance");
    solve_cmd->add_option("--max-iter", opts.max_iter, "iteration cap");
    solve_cmd->add_option("--margin", opts.margin, "stability margin for eigenvalue verdicts");
    solve_cmd->add_flag("--trace", trace, "record the full iterate trace in the report");
    solve_cmd->add_option("--out", solve_out, "report output path (stdout when absent)");

    // check
    std::string check_report, check_problem;
    auto* check_cmd = app.add_subcommand("check", "re-verify a report against its problem");
    check_cmd->add_option("report", check_report, "report JSON file")->required();
    check_cmd->add_option("problem", check_problem, "problem JSON file")->required();

    // gen
    instances::InstanceRecipe recipe;
    std::string gen_kind = "orthant-mmatrix";
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded problem instance");
    gen_cmd->add_option("--kind", gen_kind, "orthant-mmatrix | conjugated-cone | scalar");
    gen_cmd->add_option("--n", recipe.n, "block dimension")->required();
    gen_cmd->add_option("--seed", recipe.seed, "64-bit seed")->required();
    gen_cmd->add_option("--shift", recipe.shift, "diagonal dominance margin");
    gen_cmd->add_option("--cond-cap", recipe.cond_cap, "condition cap for the cone generator");
    gen_cmd->add_option("--out", gen_out, "problem output path (stdout when absent)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (solve_cmd->parsed()) {
            opts.record_trace = trace;
            return cmd_solve(solve_problem,
                             solve_out.empty() ? std::nullopt
                                               : std::optional<std::filesystem::path>(solve_out),
                             opts, trace);
        }
        if (check_cmd->parsed()) return cmd_check(check_report, check_problem);
        if (gen_cmd->parsed()) {
            if (gen_kind == "orthant-mmatrix") {
                recipe.kind = instances::Kind::OrthantMMatrix;
            } else if (gen_kind == "conjugated-cone") {
                recipe.kind = instances::Kind::ConjugatedCone;
            } else if (gen_kind == "scalar") {
                recipe.kind = instances::Kind::Scalar;
                if (recipe.n != 1) {
                    std::cerr << "note: --kind scalar forces n = 1\n";
                    recipe.n = 1;
                }
            } else {
                std::cerr << "error: unknown kind \"" << gen_kind << "\"\n";
                return kExitError;
            }
            return cmd_gen(recipe, gen_out.empty()
                                       ? std::nullopt
                                       : std::optional<std::filesystem::path>(gen_out));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace conric::cli
