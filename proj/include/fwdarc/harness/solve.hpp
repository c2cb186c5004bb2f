#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fwdarc/harness/instance_io.hpp"
#include "fwdarc/smd.hpp"

namespace fwdarc::harness {

enum class Problem { Mfahoc, Mfahop };

Problem parse_problem(std::string_view name);
std::string problem_name(Problem p);

struct SolveReport {
  std::string input_digest;
  std::string detected_class;
  std::string problem;
  int sigma = 0;
  VertexSeq walk;  // empty when no structure exists
  std::vector<bool> forward_mask;
  double timing_ms = 0.0;
  std::string branch;
};

nlohmann::json to_json(const SolveReport& r);
// Throws InputError when fields are missing or mistyped.
SolveReport report_from_json(const nlohmann::json& j);

// Exit codes of the CLI.
enum class Status { Solved = 0, NoStructure = 2, InputFailure = 3, InternalFailure = 4 };

struct SolveOptions {
  SmdOptions smd;
  // Cross-check sigma with the exhaustive oracle when n <= bound (0: off).
  int oracle_bound = 0;
};

struct SolveOutcome {
  Status status = Status::Solved;
  SolveReport report;
  std::string message;
};

std::string digest(const Digraph& d);

SolveOutcome solve(const Instance& inst, Problem problem, const SolveOptions& options = {});

struct Verdict {
  bool pass = false;
  std::string message;
};

// Recomputes the forward mask and sigma from the digraph alone.
Verdict verify(const Digraph& d, const SolveReport& report);

}  // namespace fwdarc::harness
