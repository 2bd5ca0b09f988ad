#pragma once

// Structured run reports for the CLI commands.
//
// Every report is a JSON object with "schema": "arrtop.report/v1" and a
// "command" field; text output is a rendering of the same data. Reports
// contain no timing or environment data unless the CLI adds it, so identical
// inputs produce byte-identical reports.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrtop/arrangement.hpp"
#include "arrtop/curve_engine.hpp"
#include "arrtop/pencil.hpp"

namespace arrtop {

inline constexpr const char* kReportSchema = "arrtop.report/v1";

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitCertification = 3,
  kExitMismatch = 4,
  kExitIrrational = 5,
};

enum class BettiMethod { kOrlikSolomon, kSlicing, kBoth };

struct Outcome {
  nlohmann::ordered_json report;
  int exit_code = kExitOk;
};

/// Test hooks for fault injection; empty in normal runs.
struct Hooks {
  std::function<void(std::vector<std::int64_t>&)> perturb_slicing_betti;
  std::function<void(IntersectionPoset&)> corrupt_poset;
};

Outcome run_betti(const Arrangement& a, BettiMethod method, const PencilOptions& options = {},
                  const Hooks& hooks = {});

Outcome run_polar(const Arrangement& a, const PencilOptions& options = {});

/// Engine on a plane arrangement; check_arrangement gates the exit code.
/// A missing direction selects the first direction certified both
/// combinatorially and by the engine.
Outcome run_engine(const Arrangement& a, const std::optional<Direction2>& direction,
                   const PencilOptions& options = {});

/// Engine on a curve expression. A missing direction selects the first
/// engine-certified direction.
Outcome run_engine_curve(const std::string& expression, const std::optional<Direction2>& direction,
                         const PencilOptions& options = {});

/// The invariant suite on one arrangement.
Outcome run_verify(const Arrangement& a, const PencilOptions& options = {}, const Hooks& hooks = {});

/// Human-readable rendering of a report produced by one of the run_* calls.
std::string render_text(const nlohmann::ordered_json& report);

nlohmann::ordered_json to_json(const std::vector<Rat>& v);

}  // namespace arrtop
