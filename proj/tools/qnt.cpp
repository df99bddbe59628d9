// qnt: command-line front end for the Cantor-distribution quantizer library.
// Subcommands build the candidate codebooks, evaluate distortions with
// rigorous enclosures, solve the critical ratios, sweep the candidate
// families against the DP oracle, and check the published reference values.
//
// Output is JSON by default (CSV for sweep); CSV and plain text render
// numbers with 15 significant digits. Exit codes: 0 success, 1 verification
// failure, 2 usage or domain error.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantorq/critical.hpp"
#include "cantorq/cvt.hpp"
#include "cantorq/distortion.hpp"
#include "cantorq/errors.hpp"
#include "cantorq/oracle.hpp"
#include "cantorq/sets.hpp"
#include "cantorq/verify.hpp"

namespace {

using nlohmann::json;
using namespace cantorq;

constexpr double kDefaultR = 0.4350411707;

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw Error("cannot open output file " + output_path);
  f << text;
}

Family parse_family(const std::string& name) {
  if (name == "beta") return Family::beta;
  if (name == "gamma") return Family::gamma;
  if (name == "delta") return Family::delta;
  throw Error("unknown set family '" + name + "' (expected beta, gamma or delta)");
}

DeltaVariant parse_variant(const std::string& name) {
  if (name == "left") return DeltaVariant::left;
  if (name == "right") return DeltaVariant::right;
  throw Error("unknown variant '" + name + "' (expected left or right)");
}

std::optional<IndexSet> parse_index(const std::string& csv) {
  if (csv.empty()) return std::nullopt;
  IndexSet I;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) I.words.push_back(Word::parse(item));
  std::sort(I.words.begin(), I.words.end());
  I.level = I.words.empty() ? 0 : I.words.front().size();
  return I;
}

LabeledQuantizer build_labeled(Ratio r, int n, Family family, DeltaVariant variant,
                               const std::optional<IndexSet>& index) {
  const LevelIndex li = level_index(n);
  const std::int64_t pow_ell = std::int64_t{1} << li.ell;
  const int beta_count = static_cast<int>(n - pow_ell);
  const int mixed_count = li.regime != Regime::upper_half
                              ? static_cast<int>(n - pow_ell)
                              : static_cast<int>(n - 3 * (pow_ell / 2));
  switch (family) {
    case Family::beta: {
      const IndexSet I = index ? *index : canonical_index_set(li.ell, beta_count);
      return build_beta_labeled(r, n, I);
    }
    case Family::gamma: {
      if (n <= 3) return build_gamma_labeled(r, n, IndexSet{});
      const IndexSet I = index ? *index : canonical_index_set(li.ell - 1, mixed_count);
      return build_gamma_labeled(r, n, I);
    }
    case Family::delta: {
      if (n <= 3) return build_delta_labeled(r, n, IndexSet{}, variant);
      const IndexSet I = index ? *index : canonical_index_set(li.ell - 1, mixed_count);
      return build_delta_labeled(r, n, I, variant);
    }
  }
  throw Error("unknown family");
}

struct CommonOpts {
  double r = kDefaultR;
  int n = 3;
  std::string set = "beta";
  std::string variant = "left";
  std::string index;
  std::string format = "json";
  std::string output;
};

int cmd_build(const CommonOpts& o) {
  const Ratio r(o.r);
  const LabeledQuantizer lq =
      build_labeled(r, o.n, parse_family(o.set), parse_variant(o.variant), parse_index(o.index));
  if (o.format == "csv") {
    std::string text = "point,words\n";
    for (const auto& p : lq.points) {
      text += fmt15(p.point) + ",";
      for (std::size_t i = 0; i < p.words.size(); ++i)
        text += (i ? " " : "") + p.words[i].str();
      text += "\n";
    }
    emit(text, o.output);
  } else {
    json doc;
    doc["command"] = "build";
    doc["set"] = o.set;
    doc["r"] = o.r;
    doc["n"] = o.n;
    if (o.set == "delta") doc["variant"] = o.variant;
    json points = json::array(), words = json::array();
    for (const auto& p : lq.points) {
      points.push_back(p.point);
      json ws = json::array();
      for (const auto& w : p.words) ws.push_back(w.str());
      words.push_back(ws);
    }
    doc["points"] = points;
    doc["words"] = words;
    emit(doc.dump(2) + "\n", o.output);
  }
  return 0;
}

int cmd_distortion(const CommonOpts& o, double tol, int depth_cap) {
  const Ratio r(o.r);
  const Quantizer q = build_labeled(r, o.n, parse_family(o.set), parse_variant(o.variant),
                                    parse_index(o.index))
                          .quantizer();
  const DistortionResult res = distortion(r, q, tol, depth_cap);
  if (o.format == "csv") {
    std::string text = "value,lower,upper,resolved_depth,unresolved_mass\n";
    text += fmt15(res.value) + "," + fmt15(res.lower) + "," + fmt15(res.upper) + "," +
            std::to_string(res.resolved_depth) + "," + fmt15(res.unresolved_mass) + "\n";
    emit(text, o.output);
  } else {
    json doc;
    doc["command"] = "distortion";
    doc["set"] = o.set;
    doc["r"] = o.r;
    doc["n"] = o.n;
    doc["tol"] = tol;
    doc["value"] = res.value;
    doc["lower"] = res.lower;
    doc["upper"] = res.upper;
    doc["resolved_depth"] = res.resolved_depth;
    doc["unresolved_mass"] = res.unresolved_mass;
    emit(doc.dump(2) + "\n", o.output);
  }
  return 0;
}

int cmd_critical(double tol, const std::string& format, const std::string& output) {
  try {
    const RootResult r0 = solve_r0(tol);
    const auto [glo, ghi] = solve_gamma_cvt_endpoints(tol);
    const double crossing = solve_delta_crossing(std::max(tol, 1e-11));
    if (format == "csv") {
      std::string text = "name,value\n";
      text += "critical_ratio," + fmt15(r0.root) + "\n";
      text += "gamma_cvt_low," + fmt15(glo) + "\n";
      text += "gamma_cvt_high," + fmt15(ghi) + "\n";
      text += "delta_crossing," + fmt15(crossing) + "\n";
      text += "beta_cvt_bound," + fmt15(beta_cvt_upper_bound()) + "\n";
      emit(text, output);
    } else {
      json doc;
      doc["command"] = "critical";
      doc["critical_ratio"] = {{"value", r0.root},
                               {"residual", r0.residual},
                               {"bracket", {r0.bracket_lo, r0.bracket_hi}},
                               {"iterations", r0.iterations}};
      doc["gamma_cvt_low"] = glo;
      doc["gamma_cvt_high"] = ghi;
      doc["delta_crossing"] = crossing;
      doc["beta_cvt_bound"] = beta_cvt_upper_bound();
      emit(doc.dump(2) + "\n", output);
    }
    return 0;
  } catch (const BracketNotFound& e) {
    std::cerr << "solver failed: " << e.what() << "\n";
    return 1;
  } catch (const MultipleRoots& e) {
    std::cerr << "solver failed: " << e.what() << "\n";
    return 1;
  }
}

int sweep_threads(int rows) {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("QNT_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) cap = std::min(cap, requested);
  }
  return std::min(cap, rows);
}

int cmd_sweep(double r_lo, double r_hi, int steps, int n, int depth,
              const std::string& format, const std::string& output) {
  if (!(0.0 < r_lo && r_lo < r_hi && r_hi < 0.5))
    throw Error("sweep range must satisfy 0 < r-lo < r-hi < 0.5");
  if (steps < 2) throw Error("sweep needs at least 2 steps");

  std::vector<CompareRow> rows(static_cast<std::size_t>(steps));
  std::atomic<int> cursor{0};
  const auto worker = [&] {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= steps) return;
      const double x = r_lo + (r_hi - r_lo) * static_cast<double>(i) / (steps - 1);
      rows[static_cast<std::size_t>(i)] = compare(Ratio(x), n, depth);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = sweep_threads(steps);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back({{"r", row.r},
                     {"v_beta", row.v_beta},
                     {"v_gamma", row.v_gamma},
                     {"v_delta", row.v_delta},
                     {"oracle", row.oracle},
                     {"winner", family_name(row.argmin)},
                     {"exploratory", row.exploratory}});
    }
    emit(json{{"command", "sweep"}, {"n", n}, {"depth", depth}, {"rows", arr}}.dump(2) + "\n",
         output);
  } else {
    std::string text = "r,v_beta,v_gamma,v_delta,oracle,winner\n";
    for (const auto& row : rows) {
      text += fmt15(row.r) + "," + fmt15(row.v_beta) + "," + fmt15(row.v_gamma) + "," +
              fmt15(row.v_delta) + "," + fmt15(row.oracle) + "," + family_name(row.argmin) + "\n";
    }
    emit(text, output);
  }
  return 0;
}

int cmd_verify(const std::string& format, const std::string& output) {
  const std::vector<Anchor> anchors = run_reference_checks();
  int failures = 0;
  if (format == "json") {
    json arr = json::array();
    for (const auto& a : anchors) {
      if (!a.pass) ++failures;
      arr.push_back({{"name", a.name},
                     {"computed", a.computed},
                     {"expected", a.expected},
                     {"tol", a.tol},
                     {"pass", a.pass}});
    }
    emit(json{{"command", "verify"}, {"failures", failures}, {"anchors", arr}}.dump(2) + "\n",
         output);
  } else {
    std::string text;
    for (const auto& a : anchors) {
      if (!a.pass) ++failures;
      text += std::string(a.pass ? "PASS" : "FAIL") + " " + a.name +
              ": computed=" + fmt15(a.computed) + " expected=" + fmt15(a.expected) +
              " tol=" + fmt15(a.tol) + "\n";
    }
    text += std::to_string(anchors.size()) + " checks, " + std::to_string(failures) +
            " failures\n";
    emit(text, output);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantizers for the uniform two-map Cantor distributions"};
  app.require_subcommand(1);

  CommonOpts o;
  double tol = 1e-12;
  int depth_cap = 60;
  double r_lo = 0.42, r_hi = 0.44;
  int steps = 21, sweep_depth = 14;

  const auto add_common = [&](CLI::App* cmd, bool with_set) {
    cmd->add_option("--r", o.r, "contraction ratio in (0, 0.5)")->capture_default_str();
    if (with_set) {
      cmd->add_option("--n", o.n, "codebook size (>= 2)")->capture_default_str();
      cmd->add_option("--set", o.set, "candidate family: beta, gamma or delta")
          ->capture_default_str();
      cmd->add_option("--variant", o.variant, "delta variant: left or right")
          ->capture_default_str();
      cmd->add_option("--index", o.index, "explicit index words, comma separated (e.g. 11,12)");
    }
    cmd->add_option("--format", o.format, "output format: json or csv")->capture_default_str();
    cmd->add_option("--output", o.output, "write to file instead of stdout");
  };

  CLI::App* build = app.add_subcommand("build", "construct a candidate codebook");
  add_common(build, true);

  CLI::App* dist = app.add_subcommand("distortion", "distortion of a candidate codebook");
  add_common(dist, true);
  dist->add_option("--tol", tol, "enclosure width target")->capture_default_str();
  dist->add_option("--depth", depth_cap, "recursion depth cap")->capture_default_str();

  CLI::App* crit = app.add_subcommand("critical", "solve the critical ratios");
  add_common(crit, false);
  crit->add_option("--tol", tol, "bisection tolerance")->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "compare candidates against the oracle over r");
  sweep->add_option("--r-lo", r_lo, "sweep start")->capture_default_str();
  sweep->add_option("--r-hi", r_hi, "sweep end")->capture_default_str();
  sweep->add_option("--steps", steps, "grid points")->capture_default_str();
  sweep->add_option("--n", o.n, "codebook size")->capture_default_str();
  sweep->add_option("--depth", sweep_depth, "oracle discretization depth")->capture_default_str();
  std::string sweep_format = "csv", sweep_output;
  sweep->add_option("--format", sweep_format, "output format: csv or json")
      ->capture_default_str();
  sweep->add_option("--output", sweep_output, "write to file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "check published reference values");
  std::string verify_format = "text", verify_output;
  verify->add_option("--format", verify_format, "output format: text or json")
      ->capture_default_str();
  verify->add_option("--output", verify_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (dist->parsed()) return cmd_distortion(o, tol, depth_cap);
    if (crit->parsed()) return cmd_critical(tol, o.format, o.output);
    if (sweep->parsed())
      return cmd_sweep(r_lo, r_hi, steps, o.n, sweep_depth, sweep_format, sweep_output);
    if (verify->parsed()) return cmd_verify(verify_format, verify_output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
