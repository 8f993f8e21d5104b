#pragma once

// Small-alphabet Wyner-Ziv rate-distortion curve via alternating
// minimization of I(X;Z) - I(Y;Z) over stochastic encoders p(z|x) paired
// with exact Bayes re-optimization of the decoder g(z,y), driven by a
// Lagrange multiplier on the distortion. Outputs are achievability
// approximations (upper bounds on the true curve): the per-multiplier
// problem is non-convex, so each point keeps the best of several seeded
// restarts.

#include <random>

#include "wzbounds/codes.hpp"

namespace wzb {

// Lowest distortion achievable at rate 0: the Bayes estimate from the side
// information alone, sum_y min_xhat sum_x p(x,y) rho(x,xhat).
inline double zero_rate_distortion(const Source& source, const Channel& channel,
                                   const DistortionMeasure& rho) {
  const int k = source.size();
  if (channel.size() != k || rho.size() != k)
    throw std::invalid_argument("zero_rate_distortion: dimension mismatch");
  double total = 0.0;
  for (int y = 0; y < k; ++y) {
    double best = std::numeric_limits<double>::infinity();
    for (int xh = 0; xh < k; ++xh) {
      double cost = 0.0;
      for (int x = 0; x < k; ++x) cost += source.p(x) * channel.p(y, x) * rho(x, xh);
      best = std::min(best, cost);
    }
    total += best;
  }
  return total;
}

// Time-sharing line through the two known endpoints of the inverse WZ curve,
// (0, D_max) and (H(X|Y), 0). Degenerate (identically zero, flagged) when
// H(X|Y) = 0.
struct DBarLine {
  double d_max;
  double h_x_given_y;
  bool degenerate;

  double operator()(double rate) const {
    if (degenerate || rate >= h_x_given_y) return 0.0;
    return d_max * (1.0 - rate / h_x_given_y);
  }
};

inline DBarLine d_bar_line(const Source& source, const Channel& channel,
                           const DistortionMeasure& rho) {
  const double h = conditional_entropy_x_given_y(joint_distribution(source, channel));
  const double dmax = zero_rate_distortion(source, channel, rho);
  if (h <= 0.0) return {dmax, 0.0, true};
  return {dmax, h, false};
}

struct WzPoint {
  double distortion;
  double rate_bits;
  bool converged;
};

struct WzCurve {
  std::vector<WzPoint> points;  // sorted by distortion, rate nonincreasing
  int restarts_used = 0;
};

namespace detail {

struct WzRun {
  double rate_bits;
  double distortion;
  bool converged;
};

// One alternating-minimization run at a fixed multiplier. In nats internally;
// the returned rate is in bits.
inline WzRun wz_ba_run(const Source& source, const Channel& channel,
                       const DistortionMeasure& rho, int z_size, double lambda,
                       std::uint64_t seed, int max_iters) {
  const int k = source.size();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expd(1.0);

  Mat w(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(z_size)));
  for (auto& row : w) {
    double s = 0.0;
    for (double& v : row) {
      v = expd(rng) + 1e-9;
      s += v;
    }
    for (double& v : row) v /= s;
  }

  const Mat joint = joint_distribution(source, channel);
  Vec py(static_cast<std::size_t>(k), 0.0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) py[static_cast<std::size_t>(y)] += joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];

  std::vector<std::vector<int>> g(static_cast<std::size_t>(z_size),
                                  std::vector<int>(static_cast<std::size_t>(k), 0));
  double last_obj = std::numeric_limits<double>::infinity();
  bool converged = false;
  double rate_bits = 0.0, dist = 0.0;

  for (int it = 0; it < max_iters; ++it) {
    // q(z|y) = sum_x p(x|y) w(x,z)
    Mat qzy(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(z_size), 0.0));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        const double pxy = joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        if (pxy == 0.0) continue;
        for (int z = 0; z < z_size; ++z)
          qzy[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] +=
              pxy / py[static_cast<std::size_t>(y)] * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
      }

    // exact decoder: g(z,y) = argmin_xh sum_x p(x,y) w(x,z) rho(x,xh)
    for (int z = 0; z < z_size; ++z)
      for (int y = 0; y < k; ++y) {
        double best = std::numeric_limits<double>::infinity();
        int best_xh = 0;
        for (int xh = 0; xh < k; ++xh) {
          double cost = 0.0;
          for (int x = 0; x < k; ++x)
            cost += joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *
                    w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] * rho(x, xh);
          if (cost < best) {
            best = cost;
            best_xh = xh;
          }
        }
        g[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)] = best_xh;
      }

    // per-cell expected distortion c(x,z) = sum_y p(y|x) rho(x, g(z,y))
    Mat c(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(z_size), 0.0));
    for (int x = 0; x < k; ++x)
      for (int z = 0; z < z_size; ++z) {
        double cc = 0.0;
        for (int y = 0; y < k; ++y)
          cc += channel.p(y, x) * rho(x, g[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)]);
        c[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] = cc;
      }

    // multiplicative update: w(x,z) proportional to
    //   exp( sum_y p(y|x) ln q(z|y) - lambda c(x,z) )
    for (int x = 0; x < k; ++x) {
      Vec a(static_cast<std::size_t>(z_size));
      double amax = -std::numeric_limits<double>::infinity();
      for (int z = 0; z < z_size; ++z) {
        double e = 0.0;
        for (int y = 0; y < k; ++y)
          e += channel.p(y, x) *
               std::log(std::max(qzy[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)], 1e-300));
        e -= lambda * c[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
        a[static_cast<std::size_t>(z)] = e;
        amax = std::max(amax, e);
      }
      double s = 0.0;
      for (int z = 0; z < z_size; ++z) {
        a[static_cast<std::size_t>(z)] = std::exp(a[static_cast<std::size_t>(z)] - amax);
        s += a[static_cast<std::size_t>(z)];
      }
      for (int z = 0; z < z_size; ++z)
        w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] = a[static_cast<std::size_t>(z)] / s;
    }

    // objective I(X;Z) - I(Y;Z) + lambda E[rho]
    Vec pz(static_cast<std::size_t>(z_size), 0.0);
    for (int x = 0; x < k; ++x)
      for (int z = 0; z < z_size; ++z)
        pz[static_cast<std::size_t>(z)] += source.p(x) * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
    double ixz = 0.0;
    for (int x = 0; x < k; ++x)
      for (int z = 0; z < z_size; ++z) {
        const double v = source.p(x) * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
        if (v > 0.0 && pz[static_cast<std::size_t>(z)] > 0.0)
          ixz += v * std::log(w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] /
                              pz[static_cast<std::size_t>(z)]);
      }
    double iyz = 0.0;
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < z_size; ++z) {
        double pyz = 0.0;
        for (int x = 0; x < k; ++x)
          pyz += joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *
                 w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
        if (pyz > 0.0 && pz[static_cast<std::size_t>(z)] > 0.0)
          iyz += pyz * std::log(pyz / (py[static_cast<std::size_t>(y)] * pz[static_cast<std::size_t>(z)]));
      }
    dist = 0.0;
    for (int x = 0; x < k; ++x)
      for (int z = 0; z < z_size; ++z)
        dist += source.p(x) * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] *
                c[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
    rate_bits = std::max(0.0, (ixz - iyz) / std::log(2.0));
    const double obj = rate_bits + lambda * dist;
    if (std::abs(last_obj - obj) <= 1e-9 * (1.0 + std::abs(obj))) {
      converged = true;
      break;
    }
    last_obj = obj;
  }
  return {rate_bits, dist, converged};
}

// best-of-restarts by Lagrangian value
inline WzRun wz_ba_best(const Source& source, const Channel& channel,
                        const DistortionMeasure& rho, int z_size, double lambda, int restarts,
                        std::uint64_t base_seed, int max_iters) {
  WzRun best{0.0, 0.0, false};
  double best_val = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    const WzRun run = wz_ba_run(source, channel, rho, z_size, lambda,
                                derive_seed(base_seed, static_cast<std::uint64_t>(r)), max_iters);
    const double val = run.rate_bits + lambda * run.distortion;
    if (val < best_val) {
      best_val = val;
      best = run;
    }
  }
  return best;
}

}  // namespace detail

// Traces the WZ rate-distortion curve on a grid of target distortions. For
// each target the multiplier is bisected until the achieved distortion
// brackets the target; the reported distortion is the achieved one, not the
// target. A final lower-envelope pass enforces that the rate is nonincreasing
// in distortion.
inline WzCurve wz_rd_curve(const Source& source, const Channel& channel,
                           const DistortionMeasure& rho, int z_size, const Vec& d_grid,
                           int restarts, std::uint64_t base_seed = 20240901ULL,
                           int max_iters = 10000) {
  const int k = source.size();
  if (k > 6)
    throw std::invalid_argument("wz_rd_curve: alphabet too large for WZ RD (K <= 6)");
  if (z_size < 1 || z_size > k + 1)
    throw std::invalid_argument("wz_rd_curve: need 1 <= z_size <= K+1");
  if (restarts < 1) throw std::invalid_argument("wz_rd_curve: restarts must be >= 1");
  if (d_grid.empty()) throw std::invalid_argument("wz_rd_curve: empty distortion grid");

  WzCurve curve;
  curve.restarts_used = restarts;
  for (std::size_t gi = 0; gi < d_grid.size(); ++gi) {
    const double target = d_grid[gi];
    const std::uint64_t point_seed = derive_seed(base_seed, 1000 + gi);
    auto eval = [&](double lambda) {
      return detail::wz_ba_best(source, channel, rho, z_size, lambda, restarts, point_seed,
                                max_iters);
    };
    detail::WzRun at_zero = eval(0.0);
    detail::WzRun best = at_zero;
    if (at_zero.distortion > target + 1e-9) {
      double lo = 0.0, hi = 4.0;
      detail::WzRun hi_run = eval(hi);
      int guard = 0;
      while (hi_run.distortion > target + 1e-9 && guard++ < 24) {
        hi *= 2.0;
        hi_run = eval(hi);
      }
      best = hi_run;
      for (int it = 0; it < 24; ++it) {
        const double mid = 0.5 * (lo + hi);
        const detail::WzRun run = eval(mid);
        if (run.distortion > target + 1e-9) {
          lo = mid;
        } else {
          hi = mid;
          best = run;
        }
        if (std::abs(run.distortion - target) <= 1e-9) break;
      }
    }
    curve.points.push_back({best.distortion, best.rate_bits, best.converged});
  }

  std::sort(curve.points.begin(), curve.points.end(),
            [](const WzPoint& a, const WzPoint& b) { return a.distortion < b.distortion; });
  // lower envelope: rate at distortion D is the cheapest rate at any D' <= D
  double run_min = std::numeric_limits<double>::infinity();
  for (auto& p : curve.points) {
    run_min = std::min(run_min, p.rate_bits);
    p.rate_bits = run_min;
  }
  return curve;
}

// Distortion lower bound implied by the curve at a given rate: the smallest
// distortion whose (convexified) rate does not exceed `rate`. Uses the lower
// convex hull of the curve points, which is still an upper bound on the true
// convex WZ rate-distortion function.
inline double invert_wz_curve(const WzCurve& curve, double rate) {
  if (curve.points.empty()) throw std::invalid_argument("invert_wz_curve: empty curve");
  std::vector<std::pair<double, double>> pts;  // (distortion, rate)
  for (const auto& p : curve.points) {
    if (!pts.empty() && pts.back().first == p.distortion)
      pts.back().second = std::min(pts.back().second, p.rate_bits);
    else
      pts.emplace_back(p.distortion, p.rate_bits);
  }
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      if ((b.second - a.second) * (p.first - a.first) >=
          (p.second - a.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  if (rate >= hull.front().second) return hull.front().first;
  if (rate <= hull.back().second) return hull.back().first;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    // rate decreases along the hull; find the segment bracketing `rate`
    if (rate >= hull[i].second) {
      const double r0 = hull[i - 1].second, r1 = hull[i].second;
      const double d0 = hull[i - 1].first, d1 = hull[i].first;
      if (r0 == r1) return d0;
      return d0 + (d1 - d0) * (rate - r0) / (r1 - r0);
    }
  }
  return hull.back().first;
}

// WzCurve rows in the shared bound-curve CSV schema with method wz_ba.
inline std::string to_csv(const WzCurve& curve) {
  std::ostringstream os;
  os << "rate_bits,distortion_lower,method,alpha\n";
  char buf[64];
  for (const auto& p : curve.points) {
    std::snprintf(buf, sizeof buf, "%.17g", p.rate_bits);
    os << buf << ",";
    std::snprintf(buf, sizeof buf, "%.17g", p.distortion);
    os << buf << ",wz_ba,\n";
  }
  return os.str();
}

}  // namespace wzb
