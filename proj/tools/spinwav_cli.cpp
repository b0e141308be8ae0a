// spinwav: directional spin wavelet transforms on the sphere.
//
// Subcommands: roundtrip, tiling, analyze, synth, denoise, bench.
// Exit codes: 0 success, 2 validation error, 3 I/O or parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "spinwav/denoise.hpp"
#include "spinwav/mapfile.hpp"
#include "spinwav/signal.hpp"
#include "spinwav/wavelet_transform.hpp"

using nlohmann::json;
using namespace spinwav;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double max_abs_diff(const HarmonicCoeffs& a, const HarmonicCoeffs& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  }
  return worst;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

struct TransformOptions {
  int band_limit = 32;
  int spin = 0;
  int n_directions = 1;
  double alpha = 2.0;
  int j_min = 0;
  int trials = 10;
  std::uint64_t seed = 0;
  bool multires = false;
};

void add_param_flags(CLI::App* cmd, TransformOptions& opt, bool with_trials) {
  cmd->add_option("-L,--bandlimit", opt.band_limit, "harmonic band limit");
  cmd->add_option("-s,--spin", opt.spin, "spin number");
  cmd->add_option("-N,--nband", opt.n_directions, "azimuthal band limit");
  cmd->add_option("--alpha", opt.alpha, "dilation parameter");
  cmd->add_option("--jmin", opt.j_min, "minimum wavelet scale");
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_flag("--multires", opt.multires, "multiresolution transform");
  if (with_trials) cmd->add_option("--trials", opt.trials, "number of trials");
}

WaveletParams to_params(const TransformOptions& opt) {
  return {opt.band_limit, opt.alpha, opt.j_min, opt.n_directions, opt.spin};
}

struct TrialResult {
  double error = 0.0;
  double seconds = 0.0;
};

TrialResult run_roundtrip_trial(const WaveletFamily& family, bool multires,
                                std::mt19937_64& rng) {
  const WaveletParams& p = family.params();
  const HarmonicCoeffs f = random_coeffs(p.band_limit, p.spin, rng);
  const double t0 = now_seconds();
  const WaveletCoefficients w =
      multires ? analyze_multires(f, family) : analyze(f, family);
  const HarmonicCoeffs back = synthesize(w, family);
  const double t1 = now_seconds();
  return {max_abs_diff(f, back), t1 - t0};
}

json roundtrip_json(const TransformOptions& opt, const std::vector<TrialResult>& results) {
  json trials = json::array();
  double mean = 0.0;
  for (const TrialResult& r : results) {
    trials.push_back(r.error);
    mean += r.error;
  }
  mean /= results.empty() ? 1.0 : results.size();
  return json{{"bandlimit", opt.band_limit},
              {"spin", opt.spin},
              {"nband", opt.n_directions},
              {"alpha", opt.alpha},
              {"jmin", opt.j_min},
              {"seed", opt.seed},
              {"multires", opt.multires},
              {"trials", results.size()},
              {"max_abs_error", trials},
              {"mean_max_abs_error", mean}};
}

int cmd_roundtrip(const TransformOptions& opt, const std::string& report_path) {
  const WaveletFamily family = build_family(to_params(opt));
  std::mt19937_64 rng(opt.seed);
  std::vector<TrialResult> results;
  double time_total = 0.0;
  for (int t = 0; t < opt.trials; ++t) {
    results.push_back(run_roundtrip_trial(family, opt.multires, rng));
    time_total += results.back().seconds;
  }
  const json report = roundtrip_json(opt, results);
  std::cout << report.dump(2) << "\n";
  std::cerr << "mean wall-clock per round-trip: "
            << time_total / std::max(opt.trials, 1) << " s\n";
  if (!report_path.empty()) write_text(report_path, report.dump(2) + "\n");
  return 0;
}

int cmd_tiling(const TransformOptions& opt, const std::string& out_path) {
  WaveletParams params = to_params(opt);
  params.n_directions = 1;
  params.spin = 0;
  const KernelTable table = build_kernel_table(params);

  std::string csv = "ell,scaling_sq";
  for (int j = table.j_min; j <= table.j_max; ++j) {
    csv += ",kappa_sq_j" + std::to_string(j);
  }
  csv += ",sum\n";
  for (int l = 0; l < params.band_limit; ++l) {
    const double s2 = table.scaling[l] * table.scaling[l];
    double sum = s2;
    char buf[32];
    std::string row = std::to_string(l);
    std::snprintf(buf, sizeof(buf), ",%.17g", s2);
    row += buf;
    for (int j = table.j_min; j <= table.j_max; ++j) {
      const double k = table.kappa[j - table.j_min][l];
      std::snprintf(buf, sizeof(buf), ",%.17g", k * k);
      row += buf;
      sum += k * k;
    }
    std::snprintf(buf, sizeof(buf), ",%.17g", sum);
    row += buf;
    csv += row + "\n";
  }
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_text(out_path, csv);
  }
  return 0;
}

MapMeta family_meta(const WaveletParams& p, bool multires, int scale = -1) {
  MapMeta meta{{"alpha", p.alpha},
               {"jmin", static_cast<double>(p.j_min)},
               {"nband", static_cast<double>(p.n_directions)},
               {"spin", static_cast<double>(p.spin)},
               {"bandlimit", static_cast<double>(p.band_limit)},
               {"multires", multires ? 1.0 : 0.0}};
  if (scale >= 0) meta["scale"] = static_cast<double>(scale);
  return meta;
}

std::string wav_path(const std::string& prefix, int j) {
  return prefix + "_wav" + std::to_string(j) + ".spw";
}
std::string scal_path(const std::string& prefix) { return prefix + "_scal.spw"; }

int cmd_analyze(const TransformOptions& opt, const std::string& in_path,
                const std::string& out_prefix) {
  const HarmonicCoeffs f = read_harmonic_file(in_path);
  WaveletParams params = to_params(opt);
  params.band_limit = f.band_limit();
  params.spin = f.spin();
  const WaveletFamily family = build_family(params);
  const WaveletCoefficients w =
      opt.multires ? analyze_multires(f, family) : analyze(f, family);

  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    write_map_file(wav_path(out_prefix, j), w.scale(j),
                   family_meta(params, opt.multires, j));
  }
  write_map_file(scal_path(out_prefix), w.scaling, family_meta(params, opt.multires));
  std::cout << "wrote " << family.scale_count() << " wavelet scales and scaling map to "
            << out_prefix << "_*.spw\n";
  return 0;
}

int cmd_synth(const std::string& in_prefix, const std::string& out_path) {
  MapMeta meta;
  SphereMap scaling = read_sphere_file(scal_path(in_prefix), &meta);
  for (const char* key : {"alpha", "jmin", "nband", "spin", "bandlimit", "multires"}) {
    if (!meta.contains(key)) {
      throw std::invalid_argument(scal_path(in_prefix) +
                                  ": header lacks transform parameter '" +
                                  key + "'");
    }
  }
  WaveletParams params{static_cast<int>(meta["bandlimit"]), meta["alpha"],
                       static_cast<int>(meta["jmin"]),
                       static_cast<int>(meta["nband"]),
                       static_cast<int>(meta["spin"])};
  const bool multires = meta["multires"] != 0.0;
  const WaveletFamily family = build_family(params);

  std::vector<RotationMap> scales;
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    scales.push_back(read_rotation_file(wav_path(in_prefix, j)));
  }
  const WaveletCoefficients w{params, multires, std::move(scales), std::move(scaling)};
  const HarmonicCoeffs f = synthesize(w, family);
  write_map_file(out_path, f, family_meta(params, multires));
  std::cout << "wrote synthesised harmonic coefficients to " << out_path << "\n";
  return 0;
}

int cmd_denoise(const TransformOptions& opt, double sigma,
                const std::string& in_path, const std::string& out_path,
                const std::string& report_path, const std::string& truth_path) {
  const HarmonicCoeffs y = read_harmonic_file(in_path);
  WaveletParams params = to_params(opt);
  params.band_limit = y.band_limit();
  params.spin = y.spin();
  const WaveletFamily family = build_family(params);

  DenoiseStats stats;
  const HarmonicCoeffs denoised = denoise(y, family, {sigma}, opt.multires, &stats);
  write_map_file(out_path, denoised, family_meta(params, opt.multires));

  const ThresholdPlan plan = noise_sigma_per_scale(family, sigma);
  json report{{"sigma", sigma},
              {"bandlimit", params.band_limit},
              {"spin", params.spin},
              {"nband", params.n_directions},
              {"alpha", params.alpha},
              {"jmin", params.j_min},
              {"multires", opt.multires}};
  report["scales"] = json::array();
  for (std::size_t k = 0; k < plan.threshold.size(); ++k) {
    report["scales"].push_back(json{{"scale", plan.j_min + static_cast<int>(k)},
                                    {"sigma", plan.sigma_scale[k]},
                                    {"threshold", plan.threshold[k]},
                                    {"kept", stats.kept[k]},
                                    {"total", stats.total[k]}});
  }
  if (!truth_path.empty()) {
    const HarmonicCoeffs x = read_harmonic_file(truth_path);
    report["snr_in_db"] = snr_db(x, y);
    report["snr_out_db"] = snr_db(x, denoised);
  }
  std::cout << report.dump(2) << "\n";
  if (!report_path.empty()) write_text(report_path, report.dump(2) + "\n");
  return 0;
}

int cmd_bench(const TransformOptions& opt, std::vector<int> band_limits,
              const std::string& report_path) {
  if (band_limits.empty()) band_limits = {opt.band_limit};
  json rows = json::array();
  for (int L : band_limits) {
    TransformOptions run = opt;
    run.band_limit = L;
    const WaveletFamily family = build_family(to_params(run));
    std::mt19937_64 rng(opt.seed);
    double time_sum = 0.0;
    double err_max = 0.0;
    for (int t = 0; t < opt.trials; ++t) {
      const TrialResult r = run_roundtrip_trial(family, opt.multires, rng);
      time_sum += r.seconds;
      err_max = std::max(err_max, r.error);
    }
    const double mean_time = time_sum / std::max(opt.trials, 1);
    rows.push_back(json{{"bandlimit", L},
                        {"spin", opt.spin},
                        {"nband", opt.n_directions},
                        {"alpha", opt.alpha},
                        {"jmin", opt.j_min},
                        {"multires", opt.multires},
                        {"trials", opt.trials},
                        {"max_abs_error", err_max},
                        {"mean_seconds", mean_time}});
    std::cerr << "L=" << L << ": mean " << mean_time << " s, max error " << err_max
              << "\n";
  }
  const json report{{"seed", opt.seed}, {"runs", rows}};
  std::cout << report.dump(2) << "\n";
  if (!report_path.empty()) write_text(report_path, report.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directional spin scale-discretised wavelet transforms on the sphere"};
  app.require_subcommand(1);

  TransformOptions opt;
  std::string in_path, out_path, report_path, truth_path;
  double sigma = 0.0;
  std::vector<int> bench_limits;

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "analyse and synthesise random signals; report accuracy");
  add_param_flags(roundtrip, opt, true);
  roundtrip->add_option("--report", report_path, "write JSON report to this path");

  CLI::App* tiling = app.add_subcommand(
      "tiling", "export per-multipole squared kernel values as CSV");
  add_param_flags(tiling, opt, false);
  tiling->add_option("--out", out_path, "CSV output path (default stdout)");

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "forward wavelet transform of a harmonic file");
  add_param_flags(analyze_cmd, opt, false);
  analyze_cmd->add_option("--in", in_path, "input harmonic coefficient file")
      ->required();
  analyze_cmd->add_option("--out", out_path, "output file prefix")->required();

  CLI::App* synth_cmd =
      app.add_subcommand("synth", "inverse wavelet transform from analyze outputs");
  synth_cmd->add_option("--in", in_path, "input file prefix (from analyze)")
      ->required();
  synth_cmd->add_option("--out", out_path, "output harmonic coefficient file")
      ->required();

  CLI::App* denoise_cmd =
      app.add_subcommand("denoise", "hard-threshold wavelet denoising");
  add_param_flags(denoise_cmd, opt, false);
  denoise_cmd->add_option("--sigma", sigma, "per-coefficient noise level")
      ->required();
  denoise_cmd->add_option("--in", in_path, "noisy harmonic coefficient file")
      ->required();
  denoise_cmd->add_option("--out", out_path, "denoised output file")->required();
  denoise_cmd->add_option("--report", report_path, "write JSON report to this path");
  denoise_cmd->add_option("--truth", truth_path,
                          "reference signal for SNR reporting (optional)");

  CLI::App* bench = app.add_subcommand(
      "bench", "round-trip timing and accuracy across band limits");
  add_param_flags(bench, opt, true);
  bench->add_option("--bench-bandlimits", bench_limits,
                    "band limits to benchmark (repeatable)");
  bench->add_option("--report", report_path, "write JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roundtrip->parsed()) return cmd_roundtrip(opt, report_path);
    if (tiling->parsed()) return cmd_tiling(opt, out_path);
    if (analyze_cmd->parsed()) return cmd_analyze(opt, in_path, out_path);
    if (synth_cmd->parsed()) return cmd_synth(in_path, out_path);
    if (denoise_cmd->parsed())
      return cmd_denoise(opt, sigma, in_path, out_path, report_path, truth_path);
    if (bench->parsed()) return cmd_bench(opt, bench_limits, report_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
