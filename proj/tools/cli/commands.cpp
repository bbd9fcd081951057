#include "cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "baker/baker.hpp"
#include "cli/io.hpp"
#include "cli/verify.hpp"

#ifndef BAKER_VERSION
#define BAKER_VERSION "0.0.0"
#endif

namespace baker::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1;

/// Everything a run was invoked with; echoed into every JSON report.
struct RunConfig {
  std::string command;
  double beta1 = 0.5;
  double beta2 = 0.5;
  std::size_t n = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::size_t bins = 16;
  std::string window = "4:10";
  std::size_t grid = 1001;
  double refine_tol = 1e-12;
  std::optional<double> p;
  unsigned threads = 0;
  std::size_t resolution = 512;
  std::size_t truncation = kDefaultTruncation;
  std::string input;
  std::string suite;
  std::string beta1_range;
  std::string beta2_range;
  std::size_t steps1 = 0;
  std::size_t steps2 = 0;
  std::string metrics = "regime,theoretical_dim,sup_bound,product,sum";

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["beta1"] = beta1;
    j["beta2"] = beta2;
    j["n"] = n;
    j["seed"] = seed;
    j["out"] = out;
    j["bins"] = bins;
    j["window"] = window;
    j["grid"] = grid;
    j["refine_tol"] = refine_tol;
    j["p"] = p ? Json(*p) : Json(nullptr);
    j["threads"] = thread_limit();
    j["resolution"] = resolution;
    j["truncation"] = truncation;
    j["in"] = input;
    j["suite"] = suite;
    j["beta1_range"] = beta1_range;
    j["beta2_range"] = beta2_range;
    j["steps1"] = steps1;
    j["steps2"] = steps2;
    j["metrics"] = metrics;
    return j;
  }
};

Json report_header(const RunConfig& config) {
  Json j;
  j["tool"] = "baker";
  j["version"] = BAKER_VERSION;
  j["seed"] = config.seed;
  j["config"] = config.to_json();
  return j;
}

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError(std::string(what) + " must look like a:b");
  auto parse = [&](std::string_view part) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw DomainError(std::string(what) + " has a malformed number: '" + text + "'");
    }
    return value;
  };
  const std::string_view view(text);
  return {parse(view.substr(0, colon)), parse(view.substr(colon + 1))};
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto [lo, hi] = parse_pair(text, "--window");
  if (lo != std::floor(lo) || hi != std::floor(hi)) throw DomainError("--window bounds must be integers");
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

/// Destination for a data product: a file when a path is given, else `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw IoError("cannot open '" + path + "' for writing");
    stream_ = &file_;
    to_file_ = true;
  }

  std::ostream& stream() { return *stream_; }
  bool to_file() const { return to_file_; }

  void close() {
    if (!file_.is_open()) return;
    file_.close();
    if (!file_) throw IoError("failed writing output file");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  bool to_file_ = false;
};

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

SymbolWeights sampling_weights(const RunConfig& config, const Params& params) {
  if (config.p) return {*config.p, 1.0 - *config.p};
  return natural_weights(params);
}

int cmd_moran(const RunConfig& config, std::ostream& out) {
  const Params params(config.beta1, config.beta2);
  const MoranResult result = moran_exponent(params);
  Json j = report_header(config);
  j["d"] = result.d;
  j["residual"] = result.residual;
  j["theoretical_dim"] = result.d + 1.0;
  emit_json(out, j);
  return kSuccess;
}

int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Params params(config.beta1, config.beta2);
  const BoundProfile profile = sup_bernoulli_bound(params, config.grid, config.refine_tol);

  Sink sink(config.out, out);
  auto& csv = sink.stream();
  csv << "p,entropy,xi,bound_v,bound_h,bound_combined\n";
  for (std::size_t i = 0; i < profile.p.size(); ++i) {
    csv << format_double(profile.p[i]) << ',' << format_double(profile.entropy[i]) << ','
        << format_double(profile.xi[i]) << ',' << format_double(profile.vertical[i]) << ','
        << format_double(profile.horizontal[i]) << ',' << format_double(profile.combined[i]) << '\n';
  }
  sink.close();

  Json j = report_header(config);
  j["regime"] = to_string(regime(params));
  j["sup_p"] = profile.sup_p;
  j["sup_value"] = profile.sup_value;
  j["product_ge_quarter"] = !params.subcritical_product();
  if (params.contracting()) {
    j["note"] = "Contracting regime: the entropy bounds are derived for beta1 + beta2 >= 1";
  }
  emit_json(sink.to_file() ? out : err, j);
  return kSuccess;
}

int cmd_attractor(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Params params(config.beta1, config.beta2);
  const SymbolWeights weights = sampling_weights(config, params);
  const PointSet points = attractor_sample(params, config.n, config.seed, weights, config.truncation);

  Sink sink(config.out, out);
  write_points_csv(sink.stream(), points);
  sink.close();

  Json j = report_header(config);
  j["regime"] = to_string(regime(params));
  j["weights"] = {weights.plus, weights.minus};
  j["count"] = points.size();
  emit_json(sink.to_file() ? out : err, j);
  return kSuccess;
}

int cmd_render(const RunConfig& config, std::ostream& out) {
  if (config.out.empty() || config.out == "-") throw DomainError("render needs --out <file.png>");
  const Params params(config.beta1, config.beta2);
  const SymbolWeights weights = sampling_weights(config, params);
  const PointSet points = attractor_sample(params, config.n, config.seed, weights, config.truncation);
  const Gray8 image = render_occupancy(points, config.resolution);
  write_png(config.out, image);

  std::size_t occupied_columns = 0;
  for (std::size_t col = 0; col < image.width; ++col) {
    for (std::size_t row = 0; row < image.height; ++row) {
      if (image.at(row, col) != 0) {
        ++occupied_columns;
        break;
      }
    }
  }
  constexpr std::size_t kBlocks = 16;
  std::vector<bool> block_hit(kBlocks * kBlocks, false);
  for (std::size_t row = 0; row < image.height; ++row) {
    for (std::size_t col = 0; col < image.width; ++col) {
      if (image.at(row, col) == 0) continue;
      block_hit[(row * kBlocks / image.height) * kBlocks + col * kBlocks / image.width] = true;
    }
  }
  const auto blocks = static_cast<double>(std::count(block_hit.begin(), block_hit.end(), true));

  Json j = report_header(config);
  j["regime"] = to_string(regime(params));
  j["width"] = image.width;
  j["height"] = image.height;
  j["column_occupancy"] = static_cast<double>(occupied_columns) / static_cast<double>(image.width);
  j["superblock_occupancy"] = blocks / static_cast<double>(kBlocks * kBlocks);
  emit_json(out, j);
  return kSuccess;
}

int cmd_boxdim(const RunConfig& config, std::ostream& out) {
  const auto [k_min, k_max] = parse_window(config.window);
  std::optional<PointSet> points;
  if (!config.input.empty()) {
    std::ifstream in(config.input);
    if (!in) throw IoError("cannot open '" + config.input + "' for reading");
    points = read_points_csv(in);
  } else {
    const Params params(config.beta1, config.beta2);
    points = attractor_sample(params, config.n, config.seed, sampling_weights(config, params),
                              config.truncation);
  }
  const DimensionFit fit = fit_box_dimension(*points, k_min, k_max);

  Json j = report_header(config);
  j["points"] = points->size();
  j["dim"] = points->dim();
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["r2"] = fit.r_squared;
  j["reliable"] = fit.reliable();
  j["window"] = {fit.k_min, fit.k_max};
  j["counts"] = fit.raw;
  const DensityReport density = density_report(*points, config.bins);
  j["density"] = {{"bins", density.bins},
                  {"l2_statistic", density.l2_statistic},
                  {"max_cell_mass", density.max_cell_mass}};
  if (config.input.empty()) {
    j["theoretical_dim"] = theoretical_attractor_dim(Params(config.beta1, config.beta2));
  }
  emit_json(out, j);
  return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto report = run_suite(config.suite, config.seed);
  if (!report) {
    err << "unknown suite '" << config.suite << "'; expected one of:";
    for (const auto& name : suite_names()) err << ' ' << name;
    err << '\n';
    return kUsageError;
  }
  Json j = report_header(config);
  j["report"] = report->to_json();
  emit_json(out, j);
  return report->passed() ? kSuccess : kVerificationFailed;
}

std::vector<double> linspace(const std::string& range, std::size_t steps, const char* what) {
  const auto [lo, hi] = parse_pair(range, what);
  if (steps == 0 || !(lo <= hi)) throw DomainError(std::string(what) + " is empty");
  if (steps == 1) return {lo};
  std::vector<double> values(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    values[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return values;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const auto beta1s = linspace(config.beta1_range, config.steps1, "--beta1-range");
  const auto beta2s = linspace(config.beta2_range, config.steps2, "--beta2-range");

  static const std::vector<std::string> known{"regime", "theoretical_dim", "sup_bound", "product", "sum"};
  std::vector<std::string> metrics;
  std::istringstream list(config.metrics);
  for (std::string name; std::getline(list, name, ',');) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw DomainError("unknown sweep metric '" + name + "'");
    }
    metrics.push_back(name);
  }
  // Columns keep their canonical order whatever order they were requested in.
  std::vector<std::string> columns;
  for (const auto& name : known) {
    if (std::find(metrics.begin(), metrics.end(), name) != metrics.end()) columns.push_back(name);
  }

  Sink sink(config.out, out);
  auto& csv = sink.stream();
  csv << "beta1,beta2";
  for (const auto& c : columns) csv << ',' << c;
  csv << '\n';
  for (double b1 : beta1s) {
    for (double b2 : beta2s) {
      const Params params(b1, b2);
      csv << format_double(b1) << ',' << format_double(b2);
      for (const auto& c : columns) {
        csv << ',';
        if (c == "regime") csv << to_string(regime(params));
        if (c == "theoretical_dim") csv << format_double(theoretical_attractor_dim(params));
        if (c == "sup_bound") {
          csv << format_double(sup_bernoulli_bound(params, config.grid, config.refine_tol).sup_value);
        }
        if (c == "product") csv << format_double(params.product());
        if (c == "sum") csv << format_double(params.sum());
      }
      csv << '\n';
    }
  }
  sink.close();
  return kSuccess;
}

void add_beta_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--beta1", config.beta1, "contraction rate on y >= 0, in (0,1)")->required();
  cmd.add_option("--beta2", config.beta2, "contraction rate on y < 0, in (0,1)")->required();
}

void add_sampling_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--n", config.n, "number of points");
  cmd.add_option("--seed", config.seed, "64-bit seed");
  cmd.add_option("--p", config.p, "probability of +1 in future symbols (default: natural weights)")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--truncation", config.truncation, "symbols kept per half-word");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Generalized Baker transformation dimension toolkit", "baker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BAKER_VERSION);
  app.add_option("--threads", config.threads, "worker cap (default: BAKER_THREADS or all cores)");

  auto* moran = app.add_subcommand("moran", "solve beta1^d + beta2^d = 1");
  add_beta_options(*moran, config);

  auto* bounds = app.add_subcommand("bounds", "entropy dimension bounds over the Bernoulli family");
  add_beta_options(*bounds, config);
  bounds->add_option("--grid", config.grid, "p grid size (>= 101)");
  bounds->add_option("--tol", config.refine_tol, "golden-section tolerance in p");
  bounds->add_option("--out", config.out, "CSV output path (default stdout)");

  auto* attractor = app.add_subcommand("attractor", "sample attractor points as CSV");
  add_beta_options(*attractor, config);
  add_sampling_options(*attractor, config);
  attractor->add_option("--out", config.out, "CSV output path (default stdout)");

  auto* render = app.add_subcommand("render", "render attractor occupancy as a grayscale PNG");
  add_beta_options(*render, config);
  add_sampling_options(*render, config);
  render->add_option("--resolution", config.resolution, "pixels per side");
  render->add_option("--out", config.out, "PNG output path")->required();

  auto* boxdim = app.add_subcommand("boxdim", "box-counting dimension of a CSV or generated sample");
  boxdim->add_option("--in", config.input, "CSV with header x or x,y");
  boxdim->add_option("--beta1", config.beta1, "contraction rate for inline generation");
  boxdim->add_option("--beta2", config.beta2, "contraction rate for inline generation");
  add_sampling_options(*boxdim, config);
  boxdim->add_option("--window", config.window, "dyadic exponents kmin:kmax");
  boxdim->add_option("--bins", config.bins, "histogram bins per axis for the density diagnostic");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", config.suite, "conjugacy|lipschitz|birkhoff|smb|moran|bifurcation|boxdim")
      ->required();
  verify->add_option("--seed", config.seed, "64-bit seed");

  auto* sweep = app.add_subcommand("sweep", "Cartesian sweep over (beta1, beta2)");
  sweep->add_option("--beta1-range", config.beta1_range, "a:b")->required();
  sweep->add_option("--beta2-range", config.beta2_range, "a:b")->required();
  sweep->add_option("--steps1", config.steps1, "grid points in beta1")->required();
  sweep->add_option("--steps2", config.steps2, "grid points in beta2")->required();
  sweep->add_option("--grid", config.grid, "p grid size for sup_bound");
  sweep->add_option("--metrics", config.metrics, "comma-separated subset of columns");
  sweep->add_option("--out", config.out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion& e) {
    out << BAKER_VERSION << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  set_thread_limit(config.threads);
  const CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();

  try {
    if (chosen == moran) return cmd_moran(config, out);
    if (chosen == bounds) return cmd_bounds(config, out, err);
    if (chosen == attractor) return cmd_attractor(config, out, err);
    if (chosen == render) return cmd_render(config, out);
    if (chosen == boxdim) return cmd_boxdim(config, out);
    if (chosen == verify) return cmd_verify(config, out, err);
    if (chosen == sweep) return cmd_sweep(config, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const RegimeError& e) {
    err << "regime error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace baker::cli
