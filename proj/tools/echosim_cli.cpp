#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "echosim/scenario.hpp"
#include "echosim/trace_io.hpp"
#include "echosim/verify.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;
constexpr int kExitIo = 5;

echosim::ScenarioConfig load_config(const std::string& path, std::size_t decimate,
                                    std::uint64_t seed, bool seed_set) {
  echosim::ScenarioConfig cfg =
      path.empty() ? echosim::ScenarioConfig{} : echosim::load_config_file(path);
  if (seed_set) cfg.seed = seed;
  if (decimate > 1) {
    cfg.dt *= static_cast<double>(decimate);
    cfg.n_samples = std::max<std::size_t>(1, (cfg.n_samples + decimate - 1) / decimate);
  }
  return cfg;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 std::size_t decimate, std::uint64_t seed, bool seed_set) {
  const echosim::ScenarioConfig cfg = load_config(config_path, decimate, seed, seed_set);
  const echosim::SignalTrace trace = echosim::simulate_received(cfg);
  const std::string path = out_path.empty() ? cfg.output_path : out_path;
  echosim::write_trace_csv(path, trace);
  std::cout << "transform = " << echosim::to_string(cfg.transform) << "\n"
            << "waveform = " << cfg.waveform << "\n"
            << "n_samples = " << trace.size() << "\n"
            << "dt = " << echosim::format_double(trace.dt) << "\n"
            << "output = " << path << "\n";
  return 0;
}

int cmd_matched_filter(const std::string& received_path, const std::string& reference_path,
                       const std::string& out_path) {
  const echosim::SignalTrace received = echosim::read_trace_csv(received_path);
  const echosim::SignalTrace reference = echosim::read_trace_csv(reference_path);
  const echosim::SignalTrace corr = echosim::matched_filter(received, reference);
  const echosim::PeakMetrics pm = echosim::peak_metrics(corr);
  if (!out_path.empty()) {
    std::vector<double> lags(corr.size()), mags(corr.size());
    for (std::size_t i = 0; i < corr.size(); ++i) {
      lags[i] = corr.time_at(i);
      mags[i] = std::abs(corr.samples[i]);
    }
    echosim::write_xy_csv(out_path, "lag_s", lags, "magnitude", mags);
  }
  std::cout << "peak_time = " << echosim::format_double(pm.peak_time) << "\n"
            << "peak_magnitude = " << echosim::format_double(pm.peak_magnitude) << "\n"
            << "width_3db = " << echosim::format_double(pm.width_3db) << "\n"
            << "pslr = " << echosim::format_double(pm.pslr_db) << "\n";
  return 0;
}

int cmd_verify(const std::string& config_path, std::size_t decimate, std::uint64_t seed,
               bool seed_set) {
  const echosim::ScenarioConfig cfg = load_config(config_path, decimate, seed, seed_set);
  const echosim::VerifyReport report = echosim::run_verify(cfg);
  echosim::print_verify_report(std::cout, report);
  return report.all_pass() ? 0 : kExitVerify;
}

const char* figure_waveform(int figure_id) {
  switch (figure_id) {
    case 1: return "sine";
    case 2: return "chirp";
    case 3: return "hyperbolic";
    case 4: return "barker";
    case 5: return "gaussian";
  }
  throw echosim::ConfigError("figure id must be 1..5");
}

// One series per transformation: spectrum magnitude for figure 1,
// matched-filter magnitude against the reference-received template for
// figures 2-5. Output is windowed around the feature of interest and
// strided down to a plottable number of rows.
int cmd_figure(int figure_id, const std::string& config_path, const std::string& out_path,
               std::size_t decimate, std::uint64_t seed, bool seed_set) {
  echosim::ScenarioConfig cfg = load_config(config_path, decimate, seed, seed_set);
  cfg.waveform = figure_waveform(figure_id);

  const std::vector<echosim::TransformKind> kinds{
      echosim::TransformKind::Reference, echosim::TransformKind::Hsu,
      echosim::TransformKind::Lorentz, echosim::TransformKind::Galilean,
      echosim::TransformKind::Classical};
  std::vector<std::string> names;
  std::vector<std::vector<double>> series;
  std::vector<double> axis;

  if (figure_id == 1) {
    double df = 0.0;
    std::size_t nbins = 0;
    std::vector<std::vector<double>> full;
    for (const auto kind : kinds) {
      const echosim::SignalTrace trace = echosim::simulate_received(cfg, kind);
      const echosim::SpectrumTable table = echosim::spectrum(trace);
      df = table.df;
      nbins = table.magnitude.size();
      full.push_back(table.magnitude);
      names.push_back(echosim::to_string(kind));
    }
    // window: +-150 kHz around the reference series' peak covers every
    // shift and width here, and stays valid when decimation aliases the
    // carrier
    const auto& ref_mag = full.front();
    const std::size_t k_peak = static_cast<std::size_t>(
        std::max_element(ref_mag.begin(), ref_mag.end()) - ref_mag.begin());
    const double f_center = df * static_cast<double>(k_peak);
    const double half_band = 1.5e5;
    const std::size_t k_lo = static_cast<std::size_t>(
        std::max(0.0, std::floor((f_center - half_band) / df)));
    const std::size_t k_hi =
        std::min(nbins - 1, static_cast<std::size_t>(std::ceil((f_center + half_band) / df)));
    const std::size_t stride = std::max<std::size_t>(1, (k_hi - k_lo) / 4096);
    for (std::size_t k = k_lo; k <= k_hi; k += stride) axis.push_back(df * static_cast<double>(k));
    for (auto& mag : full) {
      std::vector<double> win;
      for (std::size_t k = k_lo; k <= k_hi; k += stride) win.push_back(mag[k]);
      series.push_back(std::move(win));
    }
    echosim::write_multiseries_csv(out_path, "freq_hz", axis, names, series);
  } else {
    const echosim::SignalTrace reference =
        echosim::simulate_received(cfg, echosim::TransformKind::Reference);
    std::vector<echosim::SignalTrace> corrs;
    for (const auto kind : kinds) {
      const echosim::SignalTrace trace = echosim::simulate_received(cfg, kind);
      corrs.push_back(echosim::matched_filter(trace, reference));
      names.push_back(echosim::to_string(kind));
    }
    // window: +-1.2 pulse widths around the reference autocorrelation peak
    const echosim::PeakMetrics ref_pm = echosim::peak_metrics(corrs.front());
    const double half_window = 1.2 * cfg.pw;
    const auto& lag0 = corrs.front();
    const auto index_near = [&](double t) {
      const double k = (t - lag0.t_start) / lag0.dt;
      return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(lag0.size() - 1)));
    };
    const std::size_t k_lo = index_near(ref_pm.peak_time - half_window);
    const std::size_t k_hi = index_near(ref_pm.peak_time + half_window);
    const std::size_t stride = std::max<std::size_t>(1, (k_hi - k_lo) / 4096);
    for (std::size_t k = k_lo; k <= k_hi; k += stride) {
      axis.push_back(lag0.time_at(k));
    }
    for (const auto& corr : corrs) {
      std::vector<double> win;
      for (std::size_t k = k_lo; k <= k_hi; k += stride) {
        win.push_back(std::abs(corr.samples[k]));
      }
      series.push_back(std::move(win));
    }
    echosim::write_multiseries_csv(out_path, "lag_s", axis, names, series);
  }
  std::cout << "figure = " << figure_id << "\n"
            << "series = " << names.size() << "\n"
            << "rows = " << axis.size() << "\n"
            << "output = " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"received-waveform distortion simulator for a uniformly accelerating target"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::size_t decimate = 1;
  std::uint64_t seed = 0;

  auto* sim = app.add_subcommand("simulate", "write the received trace as CSV");
  sim->add_option("--config", config_path, "scenario config file");
  sim->add_option("--out", out_path, "output CSV path (overrides output_path)");
  sim->add_option("--decimate", decimate, "coarsen dt and shrink n_samples by N");
  auto* sim_seed = sim->add_option("--seed", seed, "gaussian code seed");

  std::string received_path, reference_path, corr_out;
  auto* mf = app.add_subcommand("matched-filter",
                                "correlate a received trace against a reference trace");
  mf->add_option("received", received_path, "received CSV")->required();
  mf->add_option("reference", reference_path, "reference CSV")->required();
  mf->add_option("--out", corr_out, "write lag_s,magnitude CSV here");

  auto* ver = app.add_subcommand("verify",
                                 "compare the closed forms against the composition pipeline");
  ver->add_option("--config", config_path, "scenario config file");
  ver->add_option("--decimate", decimate, "unused; accepted for config symmetry");
  auto* ver_seed = ver->add_option("--seed", seed, "gaussian code seed");

  int figure_id = 1;
  auto* fig = app.add_subcommand("figure", "multi-series CSV for one comparison figure");
  fig->add_option("id", figure_id, "figure id 1..5")->required();
  fig->add_option("--config", config_path, "scenario config file");
  fig->add_option("--out", out_path, "output CSV path")->required();
  fig->add_option("--decimate", decimate, "coarsen dt and shrink n_samples by N");
  auto* fig_seed = fig->add_option("--seed", seed, "gaussian code seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      return cmd_simulate(config_path, out_path, decimate, seed, sim_seed->count() > 0);
    }
    if (mf->parsed()) {
      return cmd_matched_filter(received_path, reference_path, corr_out);
    }
    if (ver->parsed()) {
      return cmd_verify(config_path, decimate, seed, ver_seed->count() > 0);
    }
    if (fig->parsed()) {
      return cmd_figure(figure_id, config_path, out_path, decimate, seed,
                        fig_seed->count() > 0);
    }
  } catch (const echosim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const echosim::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const echosim::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const echosim::DegenerateError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const echosim::NoInterceptError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const echosim::BranchError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
