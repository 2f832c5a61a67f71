#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cone_runge/approx.hpp"
#include "cone_runge/errors.hpp"
#include "cone_runge/json_io.hpp"
#include "cone_runge/runge.hpp"
#include "cone_runge/selftest.hpp"

namespace cone_runge::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::optional<int> resolution;
  std::string degrees;
  std::string emit_pgm;
  long samples = 0;
  std::string corrupt_table;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kSchema, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("CONE_RUNGE_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Error(ErrorCode::kSchema, "CONE_RUNGE_SEED is not an unsigned integer");
    return v;
  }
  return 0;
}

const json& member_or_throw(const json& doc, const char* key) {
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  if (!doc.contains(key)) throw SchemaError(std::string("/") + key, "missing field");
  return doc[key];
}

DomainSpec load_domain(const json& doc, const std::string& at, const RunConfig& cfg) {
  DomainSpec spec = domain_spec_from_json(doc, at);
  if (cfg.resolution) spec.resolution = *cfg.resolution;
  return spec;
}

// "a:b", "a:b:step" or "d1,d2,...".
std::vector<int> parse_degrees(const std::string& text) {
  if (text.empty()) return default_degrees();
  const auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || v < 0) throw Error(ErrorCode::kSchema, "bad --degrees value '" + text + "'");
    return v;
  };
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorCode::kSchema, "bad --degrees range '" + text + "'");
    const int lo = to_int(parts[0]), hi = to_int(parts[1]);
    const int step = parts.size() == 3 ? to_int(parts[2]) : 1;
    if (step < 1 || lo > hi) throw Error(ErrorCode::kSchema, "bad --degrees range '" + text + "'");
    for (int d = lo; d <= hi; d += step) out.push_back(d);
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(to_int(p));
  }
  if (out.empty()) throw Error(ErrorCode::kSchema, "--degrees is empty");
  return out;
}

std::size_t blade_arg(const std::string& s) {
  for (std::size_t k = 0; k < kCl3Dim; ++k) {
    if (s == kBladeNames[k] || s == std::to_string(k)) return k;
  }
  throw Error(ErrorCode::kSchema, "unknown basis blade '" + s + "'");
}

void emit_pgm(const RunConfig& cfg, const std::string& name, const DomainGrid& grid) {
  if (cfg.emit_pgm.empty()) return;
  fs::create_directories(cfg.emit_pgm);
  const fs::path path = fs::path(cfg.emit_pgm) / (name + ".pgm");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::kSchema, "cannot write " + path.string());
  write_pgm(grid, os);
}

void print(std::ostream& out, const RunConfig& cfg, const json& doc, std::string (*text)(const json&)) {
  if (cfg.format == "text") {
    out << text(doc);
  } else {
    out << doc.dump(2) << "\n";
  }
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  ProductTable table = kProductTable;
  if (!cfg.corrupt_table.empty()) {
    const auto comma = cfg.corrupt_table.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::kSchema, "--corrupt-table expects a,b");
    table = table.with_flipped_sign(blade_arg(cfg.corrupt_table.substr(0, comma)),
                                    blade_arg(cfg.corrupt_table.substr(comma + 1)));
  }
  const long samples = cfg.samples > 0 ? cfg.samples : 1000;
  const SelftestReport report = algebra_selftest(table, samples, resolve_seed(cfg));
  print(out, cfg, to_json(report), render_selftest_text);
  return report.ok() ? kOk : kSelftestFailed;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const DomainSpec spec = load_domain(read_json_file(cfg.inputs.at(0)), "", cfg);
  const DomainGrid grid = rasterize(spec);
  emit_pgm(cfg, "domain", grid);
  print(out, cfg, analysis_json(grid), render_analysis_text);
  return kOk;
}

int cmd_pair(const RunConfig& cfg, std::ostream& out) {
  const DomainSpec d = load_domain(read_json_file(cfg.inputs.at(0)), "", cfg);
  const DomainSpec d1 = load_domain(read_json_file(cfg.inputs.at(1)), "", cfg);
  if (!(d.window == d1.window) || d.resolution != d1.resolution) {
    throw Error(ErrorCode::kGridMismatch, "D and D1 must share window and resolution");
  }
  const DomainGrid dg = rasterize(d), d1g = rasterize(d1);
  emit_pgm(cfg, "D", dg);
  emit_pgm(cfg, "D1", d1g);
  print(out, cfg, to_json(analyze_pair(dg, d1g)), render_pair_text);
  return kOk;
}

int cmd_approx(const RunConfig& cfg, std::ostream& out) {
  const json pair = read_json_file(cfg.inputs.at(0));
  const DomainSpec d = load_domain(member_or_throw(pair, "D"), "/D", cfg);
  const DomainSpec d1 = load_domain(member_or_throw(pair, "D1"), "/D1", cfg);
  const DomainSpec k = domain_spec_from_json(member_or_throw(pair, "compact"), "/compact");
  const SliceFunction f = slice_function_from_json(read_json_file(cfg.inputs.at(1)));
  ExperimentOptions opts;
  opts.sampler.seed = resolve_seed(cfg);
  if (cfg.samples > 0) opts.sampler.max_plane_samples = static_cast<int>(cfg.samples);
  const ExperimentRecord rec = runge_experiment(d, d1, k, f, parse_degrees(cfg.degrees), opts);
  if (!cfg.emit_pgm.empty()) {
    emit_pgm(cfg, "D", rasterize(d));
    emit_pgm(cfg, "D1", rasterize(d1));
    emit_pgm(cfg, "compact", rasterize(k));
  }
  print(out, cfg, to_json(rec), render_experiment_text);
  return kOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Runge pairs and slice-function approximation on the quadratic cone of R_3", "cone_runge"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for all sampling (default: $CONE_RUNGE_SEED or 0)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* selftest = app.add_subcommand("selftest", "Run the algebra identity suite");
  common(selftest);
  selftest->add_option("--samples", cfg.samples, "Random pairs per sampled identity");
  selftest->add_option("--corrupt-table", cfg.corrupt_table)->group("");

  CLI::App* analyze = app.add_subcommand("analyze", "Topology and cone Betti numbers of one domain");
  common(analyze);
  analyze->add_option("domain", cfg.inputs, "Domain spec (JSON)")->required()->expected(1);
  analyze->add_option("--resolution", cfg.resolution, "Override the spec resolution");
  analyze->add_option("--emit-pgm", cfg.emit_pgm, "Directory for PGM previews");

  CLI::App* pair = app.add_subcommand("pair", "Runge-pair report for D in D1");
  common(pair);
  pair->add_option("specs", cfg.inputs, "D.json D1.json")->required()->expected(2);
  pair->add_option("--resolution", cfg.resolution, "Override the spec resolution");
  pair->add_option("--emit-pgm", cfg.emit_pgm, "Directory for PGM previews");

  CLI::App* approx = app.add_subcommand("approx", "Approximation error curve for f on a compact set");
  common(approx);
  approx->add_option("inputs", cfg.inputs, "pair.json f.json")->required()->expected(2);
  approx->add_option("--resolution", cfg.resolution, "Override the resolution of D and D1");
  approx->add_option("--degrees", cfg.degrees, "Degrees as lo:hi[:step] or a comma list (default 0:40)");
  approx->add_option("--samples", cfg.samples, "Cap on plane samples");
  approx->add_option("--emit-pgm", cfg.emit_pgm, "Directory for PGM previews");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (cfg.resolution && *cfg.resolution < 1) {
    err << "error: --resolution must be positive\n";
    return kInputError;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(cfg, out);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (pair->parsed()) return cmd_pair(cfg, out);
    return cmd_approx(cfg, out);
  } catch (const SchemaError& e) {
    err << "schema error at \"" << e.pointer() << "\": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kNotNested:
        return kNotNested;
      case ErrorCode::kParityViolation:
        return kParityViolation;
      default:
        return kInputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cone_runge::cli
