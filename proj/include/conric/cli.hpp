// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conric/cones.hpp"
#include "conric/instances.hpp"
#include "conric/riccati.hpp"

namespace conric::cli {

inline constexpr const char* kSchemaVersion = "1";

// Exit codes: the verdict taxonomy, so shell pipelines can branch on it.
inline constexpr int kExitCertificate = 0;
inline constexpr int kExitError = 1;  // I/O, schema, internal
inline constexpr int kExitEquivalenceNegative = 2;
inline constexpr int kExitHypothesisFailure = 3;
inline constexpr int kExitNonConverged = 4;
inline constexpr int kExitInconclusiveAtMargin = 5;

int verdict_exit_code(riccati::Verdict v);

struct ProblemFile {
    std::string schema_version;
    cones::ConeSpec cone;
    BlockSystem sys;
    nlohmann::json recipe;  // null when absent; provenance only
};

nlohmann::json cone_to_json(const cones::ConeSpec& cone);
cones::ConeSpec cone_from_json(const nlohmann::json& j);

ProblemFile load_problem(const std::filesystem::path& path);
nlohmann::json problem_to_json(const cones::ConeSpec& cone, const BlockSystem& sys,
                               const nlohmann::json& recipe = nullptr);
void save_problem(const std::filesystem::path& path, const cones::ConeSpec& cone,
                  const BlockSystem& sys, const nlohmann::json& recipe = nullptr);

/// Report JSON for a solve outcome. `full_trace` controls whether the
/// per-step arrays (gaps, monotonicity/bound verdicts) are included.
nlohmann::json report_from_outcome(const riccati::Outcome& outcome,
                                   const riccati::SolveOptions& opts, Index n,
                                   bool full_trace, double elapsed_ms);

/// `conric solve <problem> [--tol --max-iter --margin --trace --out]`.
int cmd_solve(const std::filesystem::path& problem_path,
              std::optional<std::filesystem::path> out_path,
              riccati::SolveOptions opts, bool full_trace);

/// `conric check <report> <problem>`: recomputes both verification directions
/// from the files alone; exit 0 iff every recorded claim holds.
int cmd_check(const std::filesystem::path& report_path,
              const std::filesystem::path& problem_path);

/// `conric gen --kind --n --seed [--shift --cond-cap] [--out]`.
int cmd_gen(const instances::InstanceRecipe& recipe,
            std::optional<std::filesystem::path> out_path);

/// Full CLI entry point; args exclude the program name. Returns the process
/// exit code.
int run(std::vector<std::string> args);

}  // namespace conric::cli
