#pragma once

// Experiment runner behind the CLI: reproduces the four figure families as
// CSV bundles (plus a JSON run manifest) and drives custom parameter sweeps.
// All outputs are deterministic for a fixed config and seed; computations
// may parallelize across M values without changing any emitted byte.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <thread>

#include "wzbounds/rd.hpp"
#include "wzbounds/wz.hpp"

namespace wzb {

struct ExperimentConfig {
  std::string experiment;  // fig2 | fig3 | large_gaussian | large_circular | custom
  int k = 4;
  double mu = 0.7;
  int l = 3;
  double sigma = 0.5;
  std::vector<int> m_list;
  Vec alpha_grid = default_alpha_grid();
  std::vector<std::string> methods;  // custom only
  std::string channel_type;          // custom only: symmetric | circular | gaussian | matrix
  Mat channel_rows;                  // custom, channel_type == matrix
  Vec source_pmf;                    // custom; empty -> uniform
  std::uint64_t seed = 20240901ULL;
  int threads = 1;
  SearchBudget budget;
  int wz_z_size = 0;  // 0 -> K+1
  int wz_restarts = 32;
  int wz_grid_count = 17;

  nlohmann::json to_json() const {
    nlohmann::json j{{"experiment", experiment}, {"K", k},
                     {"M_list", m_list},         {"alpha_grid", alpha_grid},
                     {"seed", seed},             {"threads", threads},
                     {"budget", {{"max_partitions", budget.max_partitions}}},
                     {"wz", {{"z_size", wz_z_size}, {"restarts", wz_restarts}, {"d_grid_count", wz_grid_count}}}};
    if (experiment == "fig2") j["mu"] = mu;
    if (experiment == "fig3") j["l"] = l;
    if (experiment == "large_gaussian") j["sigma"] = sigma;
    if (experiment == "large_circular") j["l"] = l;
    if (experiment == "custom") {
      j["methods"] = methods;
      j["channel"] = {{"type", channel_type}};
      if (channel_type == "symmetric") j["channel"]["mu"] = mu;
      if (channel_type == "circular") j["channel"]["l"] = l;
      if (channel_type == "gaussian") j["channel"]["sigma"] = sigma;
      if (channel_type == "matrix") j["channel"]["rows"] = channel_rows;
      if (!source_pmf.empty()) j["source_pmf"] = source_pmf;
    }
    return j;
  }
};

inline std::vector<int> powers_of_two_up_to(int k) {
  std::vector<int> out;
  for (int m = 1; m <= k; m *= 2) out.push_back(m);
  return out;
}

// Parses a config JSON, filling experiment-specific defaults. Unknown
// experiments and malformed fields throw std::invalid_argument.
inline ExperimentConfig parse_config(const nlohmann::json& j, const std::string& experiment) {
  ExperimentConfig cfg;
  cfg.experiment = experiment.empty() ? j.value("experiment", "") : experiment;
  if (cfg.experiment != "fig2" && cfg.experiment != "fig3" && cfg.experiment != "large_gaussian" &&
      cfg.experiment != "large_circular" && cfg.experiment != "custom")
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);

  if (cfg.experiment == "fig2") {
    cfg.k = j.value("K", 4);
    cfg.mu = j.value("mu", 0.7);
  } else if (cfg.experiment == "fig3") {
    cfg.k = j.value("K", 4);
    cfg.l = j.value("l", 3);
  } else if (cfg.experiment == "large_gaussian") {
    cfg.k = j.value("K", 64);
    cfg.sigma = j.value("sigma", 0.5);
  } else if (cfg.experiment == "large_circular") {
    cfg.k = j.value("K", 64);
    cfg.l = j.value("l", cfg.k / 4);
  } else {
    cfg.k = j.value("K", 4);
    if (!j.contains("channel") || !j.at("channel").contains("type"))
      throw std::invalid_argument("custom experiment requires channel.type");
    const auto& ch = j.at("channel");
    cfg.channel_type = ch.at("type").get<std::string>();
    if (cfg.channel_type == "symmetric")
      cfg.mu = ch.at("mu").get<double>();
    else if (cfg.channel_type == "circular")
      cfg.l = ch.at("l").get<int>();
    else if (cfg.channel_type == "gaussian")
      cfg.sigma = ch.at("sigma").get<double>();
    else if (cfg.channel_type == "matrix")
      cfg.channel_rows = ch.at("rows").get<Mat>();
    else
      throw std::invalid_argument("unknown channel type: " + cfg.channel_type);
    if (j.contains("source_pmf")) cfg.source_pmf = j.at("source_pmf").get<Vec>();
    cfg.methods = j.value("methods", std::vector<std::string>{"holder"});
  }

  if (j.contains("M_list"))
    cfg.m_list = j.at("M_list").get<std::vector<int>>();
  else if (cfg.experiment == "large_gaussian" || cfg.experiment == "large_circular")
    cfg.m_list = powers_of_two_up_to(cfg.k);
  else {
    for (int m = 1; m <= cfg.k; ++m) cfg.m_list.push_back(m);
  }
  if (cfg.m_list.empty()) throw std::invalid_argument("M_list must be nonempty");
  for (int m : cfg.m_list)
    if (m < 1 || m > cfg.k) throw std::invalid_argument("M_list entries must lie in [1, K]");

  if (j.contains("alpha_grid")) {
    const auto& ag = j.at("alpha_grid");
    if (ag.is_array())
      cfg.alpha_grid = ag.get<Vec>();
    else
      cfg.alpha_grid = linspace(ag.at("lo").get<double>(), ag.at("hi").get<double>(),
                                ag.at("count").get<int>());
    for (double a : cfg.alpha_grid)
      if (!(a > 1.0 && a < 2.0))
        throw std::invalid_argument("alpha grid entries must lie in (1,2)");
  }

  cfg.seed = j.value("seed", cfg.seed);
  cfg.threads = j.value("threads", 1);
  if (j.contains("budget")) cfg.budget.max_partitions = j.at("budget").value("max_partitions", cfg.budget.max_partitions);
  if (j.contains("wz")) {
    cfg.wz_z_size = j.at("wz").value("z_size", 0);
    cfg.wz_restarts = j.at("wz").value("restarts", 32);
    cfg.wz_grid_count = j.at("wz").value("d_grid_count", 17);
  }
  return cfg;
}

namespace detail {

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const int nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mutex;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline void write_file(const std::filesystem::path& dir, const std::string& name,
                       const std::string& content) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  out << content;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// fig2: symmetric channel, exact optimum vs every bound family
// ---------------------------------------------------------------------------
struct Fig2Result {
  std::vector<int> m_list;
  BoundCurve generalized;  // symmetric closed form, alpha-optimized
  BoundCurve classical;    // classical data-processing bound
  BoundCurve holder;       // Holder bound, alpha-optimized
  BoundCurve wz_trivial;   // inverse of the computed WZ curve at log2 M
  std::vector<CodePerformance> exact_optimum;
  WzCurve wz_curve;
};

inline Fig2Result compute_fig2(const ExperimentConfig& cfg) {
  const Source src = uniform_source(cfg.k);
  const Channel ch = symmetric_channel(cfg.k, cfg.mu);
  const DistortionMeasure ham = hamming_distortion(cfg.k);
  const std::size_t n = cfg.m_list.size();

  Fig2Result res;
  res.m_list = cfg.m_list;
  std::vector<DistortionBound> gen(n), hol(n);
  Vec cls(n);
  std::vector<std::optional<CodePerformance>> exact(n);

  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    const int m = cfg.m_list[i];
    gen[i] = distortion_lower_bound(src, ch, m, CapacityMethod::SymmetricClosedForm,
                                    cfg.alpha_grid, cfg.budget);
    hol[i] = distortion_lower_bound(src, ch, m, CapacityMethod::Holder, cfg.alpha_grid, cfg.budget);
    cls[i] = classical_dpt_distortion_bound(src, ch, m, cfg.budget);
    exact[i] = brute_force_optimal_code(src, ch, ham, m, cfg.budget);
  });

  const double dmax = zero_rate_distortion(src, ch, ham);
  const int zs = cfg.wz_z_size > 0 ? cfg.wz_z_size : cfg.k + 1;
  res.wz_curve = wz_rd_curve(src, ch, ham, zs, linspace(0.0, dmax, cfg.wz_grid_count),
                             cfg.wz_restarts, cfg.seed);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < n; ++i) {
    const double rate = std::log2(static_cast<double>(cfg.m_list[i]));
    res.generalized.points.push_back({rate, gen[i].bound, "symmetric_closed_form", gen[i].alpha});
    res.holder.points.push_back({rate, hol[i].bound, "holder", hol[i].alpha});
    res.classical.points.push_back({rate, cls[i], "classical_dpt", nan});
    res.wz_trivial.points.push_back(
        {rate, std::max(0.0, invert_wz_curve(res.wz_curve, rate)), "wz_trivial", nan});
    res.exact_optimum.push_back(*exact[i]);
  }
  return res;
}

inline std::vector<std::string> write_fig2(const Fig2Result& res, const std::filesystem::path& dir) {
  detail::write_file(dir, "generalized_dpt.csv", to_csv(res.generalized));
  detail::write_file(dir, "classical_dpt.csv", to_csv(res.classical));
  detail::write_file(dir, "holder.csv", to_csv(res.holder));
  detail::write_file(dir, "wz_trivial.csv", to_csv(res.wz_trivial));
  detail::write_file(dir, "wz_curve.csv", to_csv(res.wz_curve));
  std::string codes = code_csv_header();
  for (const auto& c : res.exact_optimum)
    codes += to_csv_row(c.rate_bits, c.distortion, c.encoder, "exact_optimum");
  detail::write_file(dir, "exact_optimum.csv", codes);
  return {"generalized_dpt.csv", "classical_dpt.csv", "holder.csv",
          "wz_trivial.csv",      "wz_curve.csv",      "exact_optimum.csv"};
}

// ---------------------------------------------------------------------------
// fig3: circular channel; the closed form and the Holder bound coincide
// ---------------------------------------------------------------------------
struct Fig3Result {
  std::vector<int> m_list;
  BoundCurve generalized;  // circular closed form, alpha-optimized
  BoundCurve holder;
  BoundCurve classical;
  BoundCurve wz_trivial;
  std::vector<CodePerformance> modular;  // exact distortion of the modular encoder
  WzCurve wz_curve;
};

inline Fig3Result compute_fig3(const ExperimentConfig& cfg) {
  const Source src = uniform_source(cfg.k);
  const Channel ch = circular_channel(cfg.k, cfg.l);
  const DistortionMeasure ham = hamming_distortion(cfg.k);
  const std::size_t n = cfg.m_list.size();

  Fig3Result res;
  res.m_list = cfg.m_list;
  std::vector<DistortionBound> gen(n), hol(n);
  Vec cls(n);
  std::vector<std::optional<CodePerformance>> mod(n);

  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    const int m = cfg.m_list[i];
    gen[i] = distortion_lower_bound(src, ch, m, CapacityMethod::CircularClosedForm,
                                    cfg.alpha_grid, cfg.budget);
    hol[i] = distortion_lower_bound(src, ch, m, CapacityMethod::Holder, cfg.alpha_grid, cfg.budget);
    cls[i] = classical_dpt_distortion_bound(src, ch, m, cfg.budget);
    const DeterministicEncoder enc = modular_encoder(cfg.k, m);
    Decoder dec = bayes_decoder(src, ch, enc, ham);
    const double d = code_distortion(src, ch, enc, dec, ham);
    mod[i] = CodePerformance{d, enc, std::move(dec), std::log2(static_cast<double>(m))};
  });

  const double dmax = zero_rate_distortion(src, ch, ham);
  const int zs = cfg.wz_z_size > 0 ? cfg.wz_z_size : cfg.k + 1;
  res.wz_curve = wz_rd_curve(src, ch, ham, zs, linspace(0.0, dmax, cfg.wz_grid_count),
                             cfg.wz_restarts, cfg.seed);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < n; ++i) {
    const double rate = std::log2(static_cast<double>(cfg.m_list[i]));
    res.generalized.points.push_back({rate, gen[i].bound, "circular_closed_form", gen[i].alpha});
    res.holder.points.push_back({rate, hol[i].bound, "holder", hol[i].alpha});
    res.classical.points.push_back({rate, cls[i], "classical_dpt", nan});
    res.wz_trivial.points.push_back(
        {rate, std::max(0.0, invert_wz_curve(res.wz_curve, rate)), "wz_trivial", nan});
    res.modular.push_back(*mod[i]);
  }
  return res;
}

inline std::vector<std::string> write_fig3(const Fig3Result& res, const std::filesystem::path& dir) {
  detail::write_file(dir, "generalized_dpt.csv", to_csv(res.generalized));
  detail::write_file(dir, "holder.csv", to_csv(res.holder));
  detail::write_file(dir, "classical_dpt.csv", to_csv(res.classical));
  detail::write_file(dir, "wz_trivial.csv", to_csv(res.wz_trivial));
  detail::write_file(dir, "wz_curve.csv", to_csv(res.wz_curve));
  std::string codes = code_csv_header();
  for (const auto& c : res.modular)
    codes += to_csv_row(c.rate_bits, c.distortion, c.encoder, "modular_code");
  detail::write_file(dir, "modular_code.csv", codes);
  return {"generalized_dpt.csv", "holder.csv",   "classical_dpt.csv",
          "wz_trivial.csv",      "wz_curve.csv", "modular_code.csv"};
}

// ---------------------------------------------------------------------------
// large alphabets: Holder bound vs modular code, with the time-sharing line
// ---------------------------------------------------------------------------
struct LargeAlphabetResult {
  std::vector<int> m_list;
  BoundCurve holder;
  BoundCurve dbar;
  std::vector<CodePerformance> modular;
  PiecewiseLinear envelope{{{0.0, 0.0}}};
  DBarLine line{0.0, 0.0, true};
};

inline LargeAlphabetResult compute_large_alphabet(const ExperimentConfig& cfg) {
  const Source src = uniform_source(cfg.k);
  const Channel ch = cfg.experiment == "large_gaussian" ? gaussian_like_channel(cfg.k, cfg.sigma)
                                                        : circular_channel(cfg.k, cfg.l);
  const DistortionMeasure ham = hamming_distortion(cfg.k);
  const std::size_t n = cfg.m_list.size();

  LargeAlphabetResult res;
  res.m_list = cfg.m_list;
  res.line = d_bar_line(src, ch, ham);

  std::vector<DistortionBound> hol(n);
  std::vector<std::optional<CodePerformance>> mod(n);
  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    const int m = cfg.m_list[i];
    hol[i] = distortion_lower_bound(src, ch, m, CapacityMethod::Holder, cfg.alpha_grid, cfg.budget);
    const DeterministicEncoder enc = modular_encoder(cfg.k, m);
    Decoder dec = bayes_decoder(src, ch, enc, ham);
    const double d = code_distortion(src, ch, enc, dec, ham);
    mod[i] = CodePerformance{d, enc, std::move(dec), std::log2(static_cast<double>(m))};
  });

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double rate = std::log2(static_cast<double>(cfg.m_list[i]));
    res.holder.points.push_back({rate, hol[i].bound, "holder", hol[i].alpha});
    res.dbar.points.push_back({rate, res.line(rate), "dbar", nan});
    res.modular.push_back(*mod[i]);
    pts.emplace_back(rate, hol[i].bound);
  }
  res.envelope = convex_envelope(pts);
  return res;
}

inline std::vector<std::string> write_large_alphabet(const LargeAlphabetResult& res,
                                                     const std::filesystem::path& dir) {
  detail::write_file(dir, "holder_bound.csv", to_csv(res.holder));
  detail::write_file(dir, "dbar_line.csv", to_csv(res.dbar));
  std::string codes = code_csv_header();
  for (const auto& c : res.modular)
    codes += to_csv_row(c.rate_bits, c.distortion, c.encoder, "modular_code");
  detail::write_file(dir, "modular_code.csv", codes);
  BoundCurve env;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& [r, d] : res.envelope.knots()) env.points.push_back({r, d, "envelope", nan});
  detail::write_file(dir, "envelope.csv", to_csv(env));
  return {"holder_bound.csv", "dbar_line.csv", "modular_code.csv", "envelope.csv"};
}

// ---------------------------------------------------------------------------
// custom sweeps: any constructor channel, any subset of methods
// ---------------------------------------------------------------------------
struct CustomResult {
  std::vector<int> m_list;
  std::vector<std::pair<std::string, BoundCurve>> bounds;  // per requested bound method
  std::vector<std::pair<std::string, std::vector<CodePerformance>>> codes;
  std::optional<WzCurve> wz_curve;
  std::optional<PiecewiseLinear> envelope;  // over the best generalized bound
};

inline CustomResult compute_custom(const ExperimentConfig& cfg) {
  Source src = cfg.source_pmf.empty() ? uniform_source(cfg.k) : Source(cfg.source_pmf);
  if (src.size() != cfg.k) throw std::invalid_argument("source_pmf length must equal K");
  Channel ch = [&] {
    if (cfg.channel_type == "symmetric") return symmetric_channel(cfg.k, cfg.mu);
    if (cfg.channel_type == "circular") return circular_channel(cfg.k, cfg.l);
    if (cfg.channel_type == "gaussian") return gaussian_like_channel(cfg.k, cfg.sigma);
    return Channel(cfg.channel_rows);
  }();
  if (ch.size() != cfg.k) throw std::invalid_argument("channel size must equal K");
  const DistortionMeasure ham = hamming_distortion(cfg.k);

  static const std::map<std::string, CapacityMethod> kBoundMethods = {
      {"brute_force", CapacityMethod::BruteForce},
      {"holder", CapacityMethod::Holder},
      {"symmetric_closed_form", CapacityMethod::SymmetricClosedForm},
      {"circular_closed_form", CapacityMethod::CircularClosedForm}};

  CustomResult res;
  res.m_list = cfg.m_list;
  const std::size_t n = cfg.m_list.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::optional<WzCurve> wz;
  for (const auto& method : cfg.methods) {
    if (auto it = kBoundMethods.find(method); it != kBoundMethods.end()) {
      std::vector<DistortionBound> vals(n);
      detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
        vals[i] = distortion_lower_bound(src, ch, cfg.m_list[i], it->second, cfg.alpha_grid,
                                         cfg.budget);
      });
      BoundCurve curve;
      for (std::size_t i = 0; i < n; ++i)
        curve.points.push_back({std::log2(static_cast<double>(cfg.m_list[i])), vals[i].bound,
                                method, vals[i].alpha});
      res.bounds.emplace_back(method, std::move(curve));
    } else if (method == "classical_dpt") {
      Vec vals(n);
      detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
        vals[i] = classical_dpt_distortion_bound(src, ch, cfg.m_list[i], cfg.budget);
      });
      BoundCurve curve;
      for (std::size_t i = 0; i < n; ++i)
        curve.points.push_back(
            {std::log2(static_cast<double>(cfg.m_list[i])), vals[i], method, nan});
      res.bounds.emplace_back(method, std::move(curve));
    } else if (method == "wz_trivial") {
      if (!wz) {
        const double dmax = zero_rate_distortion(src, ch, ham);
        const int zs = cfg.wz_z_size > 0 ? cfg.wz_z_size : cfg.k + 1;
        wz = wz_rd_curve(src, ch, ham, zs, linspace(0.0, dmax, cfg.wz_grid_count),
                         cfg.wz_restarts, cfg.seed);
      }
      BoundCurve curve;
      for (std::size_t i = 0; i < n; ++i) {
        const double rate = std::log2(static_cast<double>(cfg.m_list[i]));
        curve.points.push_back({rate, std::max(0.0, invert_wz_curve(*wz, rate)), method, nan});
      }
      res.bounds.emplace_back(method, std::move(curve));
    } else if (method == "exact_code" || method == "modular_code") {
      std::vector<std::optional<CodePerformance>> perf(n);
      detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
        const int m = cfg.m_list[i];
        if (method == "exact_code") {
          perf[i] = brute_force_optimal_code(src, ch, ham, m, cfg.budget);
        } else {
          const DeterministicEncoder enc = modular_encoder(cfg.k, m);
          Decoder dec = bayes_decoder(src, ch, enc, ham);
          const double d = code_distortion(src, ch, enc, dec, ham);
          perf[i] = CodePerformance{d, enc, std::move(dec), std::log2(static_cast<double>(m))};
        }
      });
      std::vector<CodePerformance> list;
      for (auto& p : perf) list.push_back(*p);
      res.codes.emplace_back(method, std::move(list));
    } else {
      throw std::invalid_argument("unknown method: " + method);
    }
  }
  res.wz_curve = std::move(wz);

  // envelope of the best lower bound per rate, over the bound methods present
  if (!res.bounds.empty()) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < n; ++i) {
      double best = 0.0;
      for (const auto& [name, curve] : res.bounds) best = std::max(best, curve.points[i].distortion_lower);
      pts.emplace_back(std::log2(static_cast<double>(cfg.m_list[i])), best);
    }
    res.envelope = convex_envelope(pts);
  }
  return res;
}

inline std::vector<std::string> write_custom(const CustomResult& res,
                                             const std::filesystem::path& dir) {
  std::vector<std::string> files;
  for (const auto& [name, curve] : res.bounds) {
    detail::write_file(dir, name + ".csv", to_csv(curve));
    files.push_back(name + ".csv");
  }
  for (const auto& [name, list] : res.codes) {
    std::string csv = code_csv_header();
    for (const auto& c : list) csv += to_csv_row(c.rate_bits, c.distortion, c.encoder, name);
    detail::write_file(dir, name + ".csv", csv);
    files.push_back(name + ".csv");
  }
  if (res.wz_curve) {
    detail::write_file(dir, "wz_curve.csv", to_csv(*res.wz_curve));
    files.push_back("wz_curve.csv");
  }
  if (res.envelope) {
    BoundCurve env;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& [r, d] : res.envelope->knots()) env.points.push_back({r, d, "envelope", nan});
    detail::write_file(dir, "envelope.csv", to_csv(env));
    files.push_back("envelope.csv");
  }
  return files;
}

// ---------------------------------------------------------------------------
// entry point shared by the CLI and the tests
// ---------------------------------------------------------------------------
inline void write_manifest(const ExperimentConfig& cfg, const std::vector<std::string>& files,
                           double wall_time_s, const std::filesystem::path& dir) {
  nlohmann::json j{{"experiment", cfg.experiment},
                   {"config", cfg.to_json()},
                   {"outputs", files},
                   {"wall_time_s", wall_time_s},
                   {"version", "0.1.0"}};
  detail::write_file(dir, "manifest.json", j.dump(2) + "\n");
}

inline void run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> files;
  if (cfg.experiment == "fig2")
    files = write_fig2(compute_fig2(cfg), out_dir);
  else if (cfg.experiment == "fig3")
    files = write_fig3(compute_fig3(cfg), out_dir);
  else if (cfg.experiment == "large_gaussian" || cfg.experiment == "large_circular")
    files = write_large_alphabet(compute_large_alphabet(cfg), out_dir);
  else if (cfg.experiment == "custom")
    files = write_custom(compute_custom(cfg), out_dir);
  else
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cfg, files, secs, out_dir);
}

}  // namespace wzb
