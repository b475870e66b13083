#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "folia/analysis.hpp"
#include "folia/csv.hpp"
#include "folia/error.hpp"
#include "folia/growth.hpp"
#include "folia/hgeom.hpp"
#include "folia/intersect.hpp"
#include "folia/kernels.hpp"
#include "folia/leafgen.hpp"
#include "folia/svg.hpp"

namespace {

namespace fs = std::filesystem;
using folia::Vec2;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::string construction = "h2";
  double delta = kNaN;
  double epsilon = 0.1;
  double k_width = 10.0;
  int n_max = -1;
  int samples = 4096;
  std::string oracle;
  std::string out = "out";
  std::string emit = "csv,svg";
  bool allow_saturated_tail = false;
  std::string config;
  std::string leaf_path;
  std::string check_name;
  std::string target;
  int check_samples = 1000;
};

std::string trimmed(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

double config_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw folia::ValidationError("config value for " + key +
                                 " is not a number: " + value);
  return v;
}

int config_int(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw folia::ValidationError("config value for " + key +
                                 " is not an integer: " + value);
  return static_cast<int>(v);
}

bool config_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true") return true;
  if (value == "0" || value == "false") return false;
  throw folia::ValidationError("config value for " + key +
                               " is not a boolean: " + value);
}

// Applies key=value lines from --config; values given on the command line
// keep precedence, but every line is validated regardless.
void apply_config(Options& opt, const CLI::App& cmd) {
  if (opt.config.empty()) return;
  std::ifstream in(opt.config);
  if (!in)
    throw folia::ValidationError("cannot open config file " + opt.config);
  auto given = [&cmd](const std::string& flag) {
    return cmd.count(flag) > 0;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw folia::ValidationError("config line " + std::to_string(lineno) +
                                   " is not key=value: " + line);
    std::string key = trimmed(line.substr(0, eq));
    std::string value = trimmed(line.substr(eq + 1));
    if (key == "construction" || key == "geometry") {
      if (value != "h2" && value != "e2")
        throw folia::ValidationError("config construction must be h2 or e2");
      if (!given("--construction")) opt.construction = value;
    } else if (key == "delta" || key == "delta_rad") {
      double v = config_double(key, value);
      if (!given("--delta")) opt.delta = v;
    } else if (key == "epsilon") {
      double v = config_double(key, value);
      if (!given("--epsilon")) opt.epsilon = v;
    } else if (key == "k-width" || key == "k_width") {
      double v = config_double(key, value);
      if (!given("--k-width")) opt.k_width = v;
    } else if (key == "n-max" || key == "n_max") {
      int v = config_int(key, value);
      if (!given("--n-max")) opt.n_max = v;
    } else if (key == "samples" || key == "samples_per_segment") {
      int v = config_int(key, value);
      if (!given("--samples")) opt.samples = v;
    } else if (key == "oracle") {
      if (!given("--oracle")) opt.oracle = value;
    } else if (key == "out") {
      if (!given("--out")) opt.out = value;
    } else if (key == "allow-saturated-tail" ||
               key == "allow_saturated_tail") {
      bool v = config_bool(key, value);
      if (!given("--allow-saturated-tail")) opt.allow_saturated_tail = v;
    } else {
      throw folia::ValidationError("unknown config key: " + key);
    }
  }
}

folia::leafgen::ConstructionParams resolve_params(Options& opt) {
  bool e2 = opt.construction == "e2";
  if (std::isnan(opt.delta)) opt.delta = e2 ? 0.05 : 0.1;
  if (opt.n_max < 0) opt.n_max = e2 ? 3 : 4;
  if (opt.oracle.empty()) opt.oracle = e2 ? "gentle" : "tower";
  folia::leafgen::ConstructionParams params;
  params.delta = opt.delta;
  params.epsilon = opt.epsilon;
  params.k_width = opt.k_width;
  params.n_max = opt.n_max;
  params.samples_per_segment = opt.samples;
  params.allow_saturated_tail = opt.allow_saturated_tail;
  return params;
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  os.write(bytes.data(), static_cast<std::streamoff>(bytes.size()));
  if (!os) throw folia::ValidationError("cannot write " + path.string());
}

std::vector<std::string> split_emit(const std::string& emit) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(emit);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    if (cur != "csv" && cur != "svg" && cur != "leaf")
      throw folia::ValidationError("unknown emit flag: " + cur);
    parts.push_back(cur);
  }
  return parts;
}

bool wants(const std::vector<std::string>& emits, const std::string& what) {
  return std::find(emits.begin(), emits.end(), what) != emits.end();
}

int cmd_build(Options& opt, const CLI::App& cmd) {
  apply_config(opt, cmd);
  folia::leafgen::ConstructionParams params = resolve_params(opt);
  folia::growth::GrowthOracle oracle =
      folia::growth::GrowthOracle::parse(opt.oracle);
  std::cout << "construction: " << opt.construction << "\n";
  std::cout << "oracle: " << oracle.id() << "\n";
  std::cout << "kernel: " << folia::kernels::active().name << "\n";

  fs::create_directories(opt.out);
  fs::path leaf_path = fs::path(opt.out) / "leaf.txt";

  if (opt.construction == "e2") {
    folia::leafgen::E2Leaf leaf = folia::leafgen::build_e2_leaf(params, oracle);
    int saturated = 0;
    for (const auto& a : leaf.anchors) saturated += a.saturated ? 1 : 0;
    std::cout << "anchors: " << leaf.anchors.size()
              << " (saturated: " << saturated << ")\n";
    std::cout << "segments: parabola + " << leaf.spikes.size() << " spikes\n";
    folia::analysis::CurvatureScan scan =
        folia::analysis::scan_e2(leaf, params.samples_per_segment);
    std::cout << "kappa: min=" << folia::csv::format_double(scan.min_kappa)
              << " max=" << folia::csv::format_double(scan.max_kappa)
              << " worst=" << scan.worst_piece << " (target 0 +- "
              << folia::csv::format_double(params.epsilon) << ")\n";
    folia::analysis::require_pinched(scan, 0.0, params.epsilon);
    folia::leafgen::save_leaf_file(leaf_path.string(), leaf);
  } else {
    folia::leafgen::H2Leaf leaf = folia::leafgen::build_h2_leaf(params, oracle);
    int saturated = 0;
    for (const auto& a : leaf.anchors) saturated += a.saturated ? 1 : 0;
    std::cout << "anchors: " << leaf.anchors.size()
              << " (saturated: " << saturated << ")\n";
    std::cout << "segments: core + " << leaf.spikes.size() << " spikes\n";
    folia::analysis::CurvatureScan scan =
        folia::analysis::scan_h2(leaf, params.samples_per_segment);
    std::cout << "kappa: min=" << folia::csv::format_double(scan.min_kappa)
              << " max=" << folia::csv::format_double(scan.max_kappa)
              << " worst=" << scan.worst_piece << " (target 1 +- "
              << folia::csv::format_double(params.epsilon) << ")\n";
    folia::analysis::require_pinched(scan, 1.0, params.epsilon);
    folia::leafgen::save_leaf_file(leaf_path.string(), leaf);
  }
  std::cout << "leaf: " << leaf_path.string() << "\n";
  return 0;
}

int cmd_distortion(Options& opt) {
  std::vector<std::string> emits = split_emit(opt.emit);
  folia::leafgen::LoadedLeaf loaded =
      folia::leafgen::load_leaf_file(opt.leaf_path);
  folia::analysis::DistortionProfile profile =
      loaded.h2 ? folia::analysis::profile_h2(*loaded.h2)
                : folia::analysis::profile_e2(*loaded.e2);
  if (profile.samples.empty())
    throw folia::ValidationError("empty sampling plan: leaf has no anchors");

  int saturated = 0;
  for (const auto& s : profile.samples) saturated += s.saturated ? 1 : 0;
  std::cout << "geometry: " << profile.geometry << "\n";
  std::cout << "oracle: " << profile.oracle_id << "\n";
  std::cout << "rows: " << profile.samples.size()
            << " (saturated: " << saturated << ")\n";

  fs::create_directories(opt.out);
  if (wants(emits, "csv")) {
    fs::path csv_path = fs::path(opt.out) / "distortion.csv";
    write_file(csv_path, folia::analysis::profile_to_csv(profile));
    std::cout << "csv: " << csv_path.string() << "\n";
  }
  if (wants(emits, "svg")) {
    folia::svg::Polyline line;
    double top = 0.0;
    for (const auto& s : profile.samples)
      if (!s.saturated) {
        line.points.push_back({s.d_ambient, s.d_leaf.log_value});
        top = std::max(top, s.d_leaf.log_value);
      }
    std::vector<folia::svg::Marker> markers;
    for (const auto& s : profile.samples)
      if (s.saturated) markers.push_back({{s.d_ambient, top}, 4.0});
    fs::path svg_path = fs::path(opt.out) / "distortion.svg";
    write_file(svg_path, folia::svg::render({line}, markers, 0.0));
    std::cout << "svg: " << svg_path.string() << "\n";
  }
  if (wants(emits, "leaf")) {
    fs::path copy_path = fs::path(opt.out) / "leaf.txt";
    if (loaded.h2)
      folia::leafgen::save_leaf_file(copy_path.string(), *loaded.h2);
    else
      folia::leafgen::save_leaf_file(copy_path.string(), *loaded.e2);
    std::cout << "leaf: " << copy_path.string() << "\n";
  }
  return 0;
}

// The h2 leaf rendered as a polar parametric curve over the core and any
// spike angles whose radius stays within plain double range; evaluation is
// kept strictly inside the domain so difference probes cannot escape it.
folia::ParamCurve h2_leaf_curve(const folia::leafgen::H2Leaf& leaf) {
  double lo = leaf.theta_min();
  constexpr double kPi = 3.141592653589793238462643383279502884;
  for (double t = lo; t < 0.5 * kPi; t *= 1.01) {
    if (folia::leafgen::eval_leaf(leaf, t) < 300.0) {
      lo = t;
      break;
    }
  }
  double hi = kPi - lo;
  double margin = 1e-4 * (hi - lo);
  folia::ParamCurve curve;
  curve.t0 = lo + margin;
  curve.t1 = hi - margin;
  curve.name = "h2 leaf";
  const folia::leafgen::H2Leaf copy = leaf;
  curve.pos = [copy](double th) {
    double r = std::exp(copy.rho(th));
    return Vec2{r * std::cos(th), r * std::sin(th)};
  };
  return curve;
}

folia::ParamCurve e2_leaf_curve(const folia::leafgen::E2Leaf& leaf) {
  double k = leaf.k_width();
  folia::ParamCurve curve;
  curve.t0 = -k;
  curve.t1 = k;
  curve.name = "e2 leaf";
  const folia::leafgen::E2Leaf copy = leaf;
  curve.pos = [copy](double x) { return Vec2{x, copy.height(x)}; };
  return curve;
}

int report_verdict(const std::string& verdict, const std::string& note,
                   int fail_code) {
  if (note.empty())
    std::cout << "verdict: " << verdict << "\n";
  else
    std::cout << "verdict: " << verdict << " (" << note << ")\n";
  if (verdict == "fail") return fail_code;
  return 0;
}

int cmd_check(Options& opt) {
  std::optional<folia::leafgen::LoadedLeaf> leaf;
  std::optional<folia::ParamCurve> curve;
  if (fs::exists(opt.target))
    leaf = folia::leafgen::load_leaf_file(opt.target);
  else
    curve = folia::named_test_curve(opt.target);

  const std::string& name = opt.check_name;
  if (name == "curvature") {
    if (leaf) {
      bool e2 = leaf->e2.has_value();
      folia::analysis::CurvatureScan scan =
          e2 ? folia::analysis::scan_e2(*leaf->e2,
                                        leaf->e2->params.samples_per_segment)
             : folia::analysis::scan_h2(*leaf->h2,
                                        leaf->h2->params.samples_per_segment);
      double target = e2 ? 0.0 : 1.0;
      double eps = e2 ? leaf->e2->params.epsilon : leaf->h2->params.epsilon;
      std::cout << "kappa: min=" << folia::csv::format_double(scan.min_kappa)
                << " max=" << folia::csv::format_double(scan.max_kappa)
                << " worst=" << scan.worst_piece << "\n";
      folia::analysis::require_pinched(scan, target, eps);
      return report_verdict("pass", "kappa within the pinch band", 0);
    }
    double mn = 0.0, mx = 0.0;
    int ns = std::max(2, opt.check_samples);
    for (int i = 0; i < ns; ++i) {
      double u = static_cast<double>(i) / static_cast<double>(ns - 1);
      double t = curve->t0 + (curve->t1 - curve->t0) * u;
      double k = folia::hgeom::hyp_curvature(*curve, t);
      if (i == 0) mn = mx = k;
      mn = std::min(mn, k);
      mx = std::max(mx, k);
    }
    std::cout << "kappa: min=" << folia::csv::format_double(mn)
              << " max=" << folia::csv::format_double(mx) << "\n";
    return report_verdict("pass", "curvature sampled", 0);
  }

  if (name == "monotone") {
    if (leaf && leaf->e2)
      return report_verdict("inapplicable",
                            "Euclidean target has no boundary circle", 0);
    folia::ParamCurve target_curve =
        leaf ? h2_leaf_curve(*leaf->h2) : *curve;
    folia::analysis::MonotonicityReport report =
        folia::analysis::basepoint_monotonicity(target_curve,
                                                opt.check_samples);
    std::cout << "winding: " << folia::csv::format_double(report.winding)
              << "\n";
    if (report.monotone)
      return report_verdict("pass", "basepoint angles move monotonically", 0);
    return report_verdict("fail", "basepoint angle reverses", 4);
  }

  if (name == "intersect") {
    folia::ParamCurve target_curve =
        leaf ? (leaf->h2 ? h2_leaf_curve(*leaf->h2)
                         : e2_leaf_curve(*leaf->e2))
             : *curve;
    std::vector<folia::intersect::Crossing> found =
        folia::intersect::self_intersections(target_curve,
                                             std::max(opt.check_samples, 256));
    if (found.empty()) {
      std::cout << "none found\n";
      return report_verdict("pass", "no self-intersection", 0);
    }
    for (const auto& c : found)
      std::cout << "crossing: s=" << folia::csv::format_double(c.s)
                << " s2=" << folia::csv::format_double(c.s2) << " point=("
                << folia::csv::format_double(c.point.x) << ", "
                << folia::csv::format_double(c.point.y)
                << ") residual=" << folia::csv::format_double(c.residual)
                << "\n";
    return report_verdict("pass",
                          std::to_string(found.size()) + " crossing(s) found",
                          0);
  }

  if (name == "expbound") {
    if (leaf && leaf->e2)
      return report_verdict("inapplicable",
                            "Euclidean target, hyperbolic bound not claimed",
                            0);
    if (leaf) {
      folia::analysis::CurvatureScan scan = folia::analysis::scan_h2(
          *leaf->h2, leaf->h2->params.samples_per_segment);
      if (std::max(std::abs(scan.min_kappa), std::abs(scan.max_kappa)) >
          1.0 + 1e-6)
        return report_verdict("inapplicable", "kappa exceeds 1", 0);
      curve = h2_leaf_curve(*leaf->h2);
    }
    folia::analysis::BoundReport report = folia::analysis::exponential_bound_check(
        *curve, std::min(opt.check_samples, 200));
    switch (report.verdict) {
      case folia::analysis::BoundVerdict::holds:
        return report_verdict("pass", report.note, 0);
      case folia::analysis::BoundVerdict::inapplicable:
        return report_verdict("inapplicable", report.note, 0);
      case folia::analysis::BoundVerdict::violated:
        std::cout << "excess: "
                  << folia::csv::format_double(report.max_excess) << " at s="
                  << folia::csv::format_double(report.at_s)
                  << " s2=" << folia::csv::format_double(report.at_s2) << "\n";
        return report_verdict("fail", "bound exceeded", 4);
    }
    return 4;
  }

  throw folia::ValidationError(
      "unknown check name: " + name +
      " (expected curvature, monotone, intersect or expbound)");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"pinched-curvature product foliations: build, measure, check"};
  app.require_subcommand(1);

  CLI::App* build = app.add_subcommand("build", "construct a leaf and save it");
  build->add_option("--config", opt.config,
                    "key=value file mirroring the build flags");
  build->add_option("--construction,--geometry", opt.construction,
                    "h2 or e2")
      ->check(CLI::IsMember({"h2", "e2"}));
  build->add_option("--delta,--delta_rad", opt.delta,
                    "junction angle (h2, radians) or parabola coefficient (e2)");
  build->add_option("--epsilon", opt.epsilon, "curvature pinch half-width");
  build->add_option("--k-width,--k_width", opt.k_width,
                    "parabola half-width (e2)");
  build->add_option("--n-max,--n_max", opt.n_max, "deepest spike index");
  build->add_option("--samples,--samples_per_segment", opt.samples,
                    "scan samples per segment");
  build->add_option("--oracle", opt.oracle,
                    "tower | ackermann:m | table:path | gentle");
  build->add_option("--out", opt.out, "output directory");
  build->add_flag("--allow-saturated-tail,--allow_saturated_tail",
                  opt.allow_saturated_tail,
                  "keep anchors whose radius saturates");

  CLI::App* distortion =
      app.add_subcommand("distortion", "profile a saved leaf");
  distortion->add_option("leaf", opt.leaf_path, "leaf file")->required();
  distortion->add_option("--out", opt.out, "output directory");
  distortion->add_option("--emit", opt.emit, "comma list of csv,svg,leaf");

  CLI::App* check = app.add_subcommand("check", "run a named check");
  check->add_option("name", opt.check_name,
                    "curvature | monotone | intersect | expbound")
      ->required();
  check->add_option("target", opt.target, "leaf file or named test curve")
      ->required();
  check->add_option("--samples", opt.check_samples, "sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(opt, *build);
    if (distortion->parsed()) return cmd_distortion(opt);
    return cmd_check(opt);
  } catch (const folia::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const folia::ConstructionError& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return 3;
  } catch (const folia::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
