#include "fwdarc/harness/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fwdarc/harness/classify.hpp"
#include "fwdarc/harness/generate.hpp"
#include "fwdarc/harness/solve.hpp"
#include "fwdarc/oracle.hpp"

namespace fwdarc::harness {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kInputExit = static_cast<int>(Status::InputFailure);
constexpr int kInternalExit = static_cast<int>(Status::InternalFailure);

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

Instance load(const std::string& path, const std::string& format, std::istream& in, std::ostream& err) {
  Instance inst = parse_instance(read_source(path, in), parse_format_name(format));
  for (const std::string& w : inst.warnings) err << path << ": warning: " << w << '\n';
  return inst;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 0) throw InputError("bad size '" + item + "' in '" + text + "'");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  return sizes;
}

struct SolveArgs {
  std::string input;
  std::string batch;
  std::string problem = "mfahoc";
  std::string format = "auto";
  int oracle_bound = 0;
  double time_limit = 0.0;
};

SolveOptions make_options(const SolveArgs& a) {
  SolveOptions opt;
  opt.oracle_bound = a.oracle_bound;
  if (a.time_limit > 0) {
    opt.smd.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(a.time_limit));
  }
  return opt;
}

int cmd_solve(const SolveArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const Problem problem = parse_problem(a.problem);
  const Instance inst = load(a.input, a.format, in, err);
  const SolveOutcome r = solve(inst, problem, make_options(a));
  out << to_json(r.report).dump() << '\n';
  err << a.input << ": " << r.message << '\n';
  return static_cast<int>(r.status);
}

int cmd_batch(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Problem problem = parse_problem(a.problem);
  const InstanceFormat format = parse_format_name(a.format);
  if (!fs::is_directory(a.batch)) throw InputError("'" + a.batch + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(a.batch)) {
    const auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".dg" || ext == ".txt" || ext == ".json")) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  struct Row {
    int exit = 0;
    std::string line;
    std::string summary;
  };
  std::vector<Row> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      Row& row = rows[i];
      json j;
      j["file"] = files[i].filename().string();
      try {
        std::ifstream f(files[i], std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        const Instance inst = parse_instance(buf.str(), format);
        const SolveOutcome r = solve(inst, problem, make_options(a));
        row.exit = static_cast<int>(r.status);
        j["report"] = to_json(r.report);
        row.summary = r.message;
      } catch (const InputError& e) {
        row.exit = kInputExit;
        row.summary = e.what();
      } catch (const std::exception& e) {
        row.exit = kInternalExit;
        row.summary = e.what();
      }
      j["exit"] = row.exit;
      j["message"] = row.summary;
      row.line = j.dump();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                          static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int worst = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    out << rows[i].line << '\n';
    err << files[i].filename().string() << ": " << rows[i].summary << '\n';
    worst = std::max(worst, rows[i].exit);
  }
  return worst;
}

int cmd_verify(const std::string& instance, const std::string& report, const std::string& format,
               std::istream& in, std::ostream& out, std::ostream& err) {
  if (instance == "-" && report == "-") throw InputError("instance and report cannot both be stdin");
  const Instance inst = load(instance, format, in, err);
  json j;
  try {
    j = json::parse(read_source(report, in));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  const Verdict v = verify(inst.graph, report_from_json(j));
  out << json{{"pass", v.pass}, {"message", v.message}}.dump() << '\n';
  err << (v.pass ? "PASS: " : "FAIL: ") << v.message << '\n';
  return v.pass ? 0 : kInternalExit;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Forward-arc maximisation on Hamilton oriented cycles and paths"};
  app.name("fwdarc");
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve MFAHOC or MFAHOP on an instance");
  solve_cmd->add_option("input", sa.input, "instance file, '-' for stdin");
  solve_cmd->add_option("--batch", sa.batch, "solve every .dg/.txt/.json file in a directory");
  solve_cmd->add_option("--problem", sa.problem, "mfahoc or mfahop")->capture_default_str();
  solve_cmd->add_option("--format", sa.format, "auto, text or json")->capture_default_str();
  solve_cmd->add_option("--oracle-bound", sa.oracle_bound, "cross-check with brute force when n <= bound");
  solve_cmd->add_option("--time-limit", sa.time_limit, "seconds; exceeding it exits with code 4");

  std::string v_instance, v_report, v_format = "auto";
  auto* verify_cmd = app.add_subcommand("verify", "Check a solve report against its instance");
  verify_cmd->add_option("instance", v_instance, "instance file")->required();
  verify_cmd->add_option("report", v_report, "report JSON, '-' for stdin")->required();
  verify_cmd->add_option("--format", v_format, "instance format");

  std::string g_kind, g_sizes, g_format = "text";
  double g_digon = -1, g_bias = 0.5, g_skip = 0.3;
  std::uint64_t g_seed = 0;
  bool g_round = false;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random SMD or LSD");
  gen_cmd->add_option("kind", g_kind, "smd or lsd")->required()->check(CLI::IsMember({"smd", "lsd"}));
  gen_cmd->add_option("--sizes", g_sizes, "comma-separated part or component sizes")->required();
  gen_cmd->add_option("--seed", g_seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--digon-prob", g_digon, "probability of a digon (default 0 for smd, 0.2 for lsd)");
  gen_cmd->add_option("--bias", g_bias, "smd: orientation bias")->capture_default_str();
  gen_cmd->add_option("--skip-prob", g_skip, "lsd: chance of extending domination reach")->capture_default_str();
  gen_cmd->add_flag("--round", g_round, "lsd: cyclic arrangement, strong result");
  gen_cmd->add_option("--format", g_format, "text or json")->capture_default_str();

  std::string c_input, c_format = "auto";
  auto* classify_cmd = app.add_subcommand("classify", "Report class membership and structural flags");
  classify_cmd->add_option("input", c_input, "instance file")->required();
  classify_cmd->add_option("--format", c_format, "instance format");

  std::string o_input, o_problem = "mfahoc", o_format = "auto";
  int o_bound = kDefaultOracleBound;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum for small instances");
  oracle_cmd->add_option("input", o_input, "instance file")->required();
  oracle_cmd->add_option("--problem", o_problem, "mfahoc or mfahop")->capture_default_str();
  oracle_cmd->add_option("--oracle-bound", o_bound, "refuse instances larger than this")->capture_default_str();
  oracle_cmd->add_option("--format", o_format, "instance format");

  std::vector<const char*> argv{"fwdarc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputExit;
  }

  try {
    if (*solve_cmd) {
      if (sa.batch.empty() == sa.input.empty()) throw InputError("give exactly one of an input file or --batch");
      return sa.batch.empty() ? cmd_solve(sa, in, out, err) : cmd_batch(sa, out, err);
    }
    if (*verify_cmd) return cmd_verify(v_instance, v_report, v_format, in, out, err);
    if (*gen_cmd) {
      const auto sizes = parse_sizes(g_sizes);
      Instance inst;
      if (g_kind == "smd") {
        inst = generate_smd({sizes, g_digon < 0 ? 0.0 : g_digon, g_bias}, g_seed);
      } else {
        inst = generate_lsd({sizes, g_digon < 0 ? 0.2 : g_digon, g_skip, g_round}, g_seed);
      }
      const InstanceFormat f = parse_format_name(g_format);
      out << serialize_instance(inst, f == InstanceFormat::Json ? f : InstanceFormat::Text);
      return 0;
    }
    if (*classify_cmd) {
      const Instance inst = load(c_input, c_format, in, err);
      const ClassReport r = classify(inst.graph);
      out << to_json(r).dump() << '\n';
      err << c_input << ": " << r.name() << '\n';
      return 0;
    }
    if (*oracle_cmd) {
      const Problem p = parse_problem(o_problem);
      const Instance inst = load(o_input, o_format, in, err);
      const OracleResult r = p == Problem::Mfahoc ? oracle_mfahoc(inst.graph, o_bound) : oracle_mfahop(inst.graph, o_bound);
      json j;
      j["value"] = r.value ? json(*r.value) : json();
      j["witness"] = r.witness;
      j["enumerated"] = r.enumerated;
      out << j.dump() << '\n';
      return r.value ? 0 : static_cast<int>(Status::NoStructure);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputExit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalExit;
  }
  return kInputExit;
}

}  // namespace fwdarc::harness
