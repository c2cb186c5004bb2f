#include "fwdarc/harness/solve.hpp"

#include <chrono>
#include <cstdio>

#include "fwdarc/harness/classify.hpp"
#include "fwdarc/lsd.hpp"
#include "fwdarc/oracle.hpp"

namespace fwdarc::harness {

using nlohmann::json;

Problem parse_problem(std::string_view name) {
  if (name == "mfahoc") return Problem::Mfahoc;
  if (name == "mfahop") return Problem::Mfahop;
  throw InputError("unknown problem '" + std::string(name) + "' (expected mfahoc or mfahop)");
}

std::string problem_name(Problem p) { return p == Problem::Mfahoc ? "mfahoc" : "mfahop"; }

json to_json(const SolveReport& r) {
  json j;
  j["input_digest"] = r.input_digest;
  j["detected_class"] = r.detected_class;
  j["problem"] = r.problem;
  j["sigma"] = r.sigma;
  j["walk"] = r.walk;
  j["forward_mask"] = r.forward_mask;
  j["timing_ms"] = r.timing_ms;
  j["branch"] = r.branch;
  return j;
}

SolveReport report_from_json(const json& j) {
  try {
    SolveReport r;
    r.input_digest = j.at("input_digest").get<std::string>();
    r.detected_class = j.at("detected_class").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    r.sigma = j.at("sigma").get<int>();
    r.walk = j.at("walk").get<VertexSeq>();
    r.forward_mask = j.at("forward_mask").get<std::vector<bool>>();
    r.timing_ms = j.at("timing_ms").get<double>();
    r.branch = j.at("branch").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string digest(const Digraph& d) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](long long x) {
    for (char c : std::to_string(x) + ' ') {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
  };
  feed(d.order());
  for (const Arc& a : d.arcs()) {
    feed(a.tail);
    feed(a.head);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

struct Answer {
  std::optional<WalkSolution> solution;
  std::string branch;
};

Answer solve_smd(const Digraph& d, const PartiteStructure& parts, Problem problem, const SmdOptions& opt) {
  if (problem == Problem::Mfahop) {
    auto s = mfahop_smd(d, parts, opt);
    if (!s) return {std::nullopt, "smd-no-path"};
    return {s, s->branch};
  }
  auto s = mfahoc_smd(d, parts, opt);
  if (!s) return {std::nullopt, "smd-no-cycle"};
  return {s, s->branch};
}

Answer solve_lsd(const Digraph& d, const ClassReport& cls, Problem problem) {
  if (!cls.connected) return {std::nullopt, "lsd-disconnected"};
  if (problem == Problem::Mfahop) {
    const HamiltonPath p = ham_path_lsd(d);
    WalkSolution s;
    s.walk = validate_walk(d, p.seq, WalkKind::Path);
    s.sigma = s.walk.sigma_plus;
    s.branch = "lsd-path";
    return {s, s.branch};
  }
  auto s = mfahoc_lsd(d);
  if (!s) return {std::nullopt, "lsd-cut-vertex"};
  return {WalkSolution(*s), s->branch};
}

SolveOutcome fail(SolveOutcome out, Status status, std::string message) {
  out.status = status;
  out.message = std::move(message);
  return out;
}

}  // namespace

SolveOutcome solve(const Instance& inst, Problem problem, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Digraph& d = inst.graph;
  SolveOutcome out;
  out.report.input_digest = digest(d);
  out.report.problem = problem_name(problem);
  try {
    const ClassReport cls = classify(d);
    out.report.detected_class = cls.name();
    if (inst.parts && !cls.smd()) {
      return fail(out, Status::InputFailure, "part annotation given but the digraph is not an SMD");
    }
    if (!cls.smd() && !cls.lsd) {
      return fail(out, Status::InputFailure, "digraph is neither an SMD nor an LSD");
    }
    if (d.order() == 0) return fail(out, Status::InputFailure, "empty digraph");
    if (problem == Problem::Mfahoc && d.order() < 3) {
      return fail(out, Status::InputFailure, "Hamilton oriented cycles need at least 3 vertices");
    }

    std::optional<Answer> smd, lsd;
    if (cls.smd()) {
      const PartiteStructure parts = inst.parts ? PartiteStructure::from_parts(d, *inst.parts) : *cls.parts;
      smd = solve_smd(d, parts, problem, options.smd);
    }
    if (cls.lsd) lsd = solve_lsd(d, cls, problem);

    const Answer& primary = smd ? *smd : *lsd;
    out.report.branch = primary.branch;
    if (smd && lsd) {
      out.report.branch = smd->branch + "+" + lsd->branch;
      const bool agree = smd->solution.has_value() == lsd->solution.has_value() &&
                         (!smd->solution || smd->solution->sigma == lsd->solution->sigma);
      if (!agree) return fail(out, Status::InternalFailure, "SMD and LSD solvers disagree");
    }
    if (primary.solution) {
      out.report.sigma = primary.solution->sigma;
      out.report.walk = primary.solution->walk.seq;
      out.report.forward_mask = primary.solution->walk.forward;
    }
    out.status = primary.solution ? Status::Solved : Status::NoStructure;

    if (options.oracle_bound > 0 && d.order() <= options.oracle_bound) {
      const OracleResult o = problem == Problem::Mfahoc ? oracle_mfahoc(d, options.oracle_bound)
                                                        : oracle_mfahop(d, options.oracle_bound);
      const std::optional<int> got =
          primary.solution ? std::optional<int>(out.report.sigma) : std::nullopt;
      if (o.value != got) return fail(out, Status::InternalFailure, "oracle disagrees with solver");
    }
    out.report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const Verdict v = verify(d, out.report);
    if (!v.pass) return fail(out, Status::InternalFailure, "certificate failed verification: " + v.message);
    out.message = primary.solution ? "sigma " + std::to_string(out.report.sigma) + " via " + out.report.branch
                                   : "no Hamilton oriented " +
                                         std::string(problem == Problem::Mfahoc ? "cycle" : "path") + " (" +
                                         out.report.branch + ")";
    return out;
  } catch (const TimeLimitExceeded& e) {
    return fail(out, Status::InternalFailure, std::string("time limit exceeded: ") + e.what());
  } catch (const WalkError& e) {
    return fail(out, Status::InternalFailure, std::string("solver emitted an invalid walk: ") + e.what());
  } catch (const InputError& e) {
    return fail(out, Status::InputFailure, e.what());
  } catch (const AlgorithmStall& e) {
    return fail(out, Status::InternalFailure, std::string("construction stalled: ") + e.what());
  }
}

namespace {

// Independent reasons a Hamilton oriented structure cannot exist.
bool nonexistence_certified(const Digraph& d, Problem problem) {
  if (!underlying_connected(d)) return true;
  if (problem == Problem::Mfahoc && (d.order() < 3 || !underlying_is_2connected(d))) return true;
  if (auto parts = recognize_smd(d)) {
    const auto sizes = parts->sizes();
    if (problem == Problem::Mfahoc ? !hc_majority(sizes) : !hp_majority(sizes)) return true;
  }
  if (d.order() <= kDefaultOracleBound && d.order() >= 3) {
    const OracleResult o = problem == Problem::Mfahoc ? oracle_mfahoc(d) : oracle_mfahop(d);
    return !o.value.has_value();
  }
  return false;
}

}  // namespace

Verdict verify(const Digraph& d, const SolveReport& report) {
  if (report.input_digest != digest(d)) return {false, "digest does not match the instance"};
  Problem problem;
  try {
    problem = parse_problem(report.problem);
  } catch (const InputError& e) {
    return {false, e.what()};
  }
  if (report.walk.empty()) {
    if (report.sigma != 0 || !report.forward_mask.empty()) return {false, "empty walk must report sigma 0"};
    if (!nonexistence_certified(d, problem)) return {false, "no reason found why no structure exists"};
    return {true, "nonexistence confirmed"};
  }
  try {
    const OrientedHamWalk w =
        validate_walk(d, report.walk, problem == Problem::Mfahoc ? WalkKind::Cycle : WalkKind::Path);
    if (w.forward != report.forward_mask) return {false, "forward mask does not match the walk"};
    if (w.sigma_plus != report.sigma) {
      return {false, "sigma " + std::to_string(report.sigma) + " but walk has " + std::to_string(w.sigma_plus) +
                         " forward arcs"};
    }
  } catch (const InputError& e) {
    return {false, e.what()};
  }
  return {true, "certificate valid, sigma " + std::to_string(report.sigma)};
}

}  // namespace fwdarc::harness
