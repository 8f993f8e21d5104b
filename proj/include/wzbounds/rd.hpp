#pragma once

// Generalized rate-distortion functions R^Q(D) for uniform sources: the
// Hamming closed form, the decoupled KKT solver for symmetric distortion
// measures, a projected-gradient numeric oracle for general sources,
// inversion D^Q, alpha-optimized distortion lower bounds, and the
// time-sharing convex envelope.

#include <functional>

#include "wzbounds/capacity.hpp"

namespace wzb {

struct RdPoint {
  double distortion;
  double rq;
};

struct BoundPoint {
  double rate_bits;
  double distortion_lower;
  std::string method;
  double alpha;  // NaN when not applicable
};

struct BoundCurve {
  std::vector<BoundPoint> points;

  void validate() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!(points[i].distortion_lower >= 0.0))
        throw std::invalid_argument("BoundCurve: distortions must be >= 0");
      if (i > 0 && !(points[i].rate_bits > points[i - 1].rate_bits))
        throw std::invalid_argument("BoundCurve: rates must be strictly increasing");
    }
  }
};

// R^Q(D) of a uniform source under Hamming distortion:
//   (1-D) Q(1/(K(1-D))) + D Q((K-1)/(K D)),  0 <= D <= (K-1)/K.
inline double rq_hamming(int k, double d, const QFunction& q) {
  if (k < 2) throw std::invalid_argument("rq_hamming: K must be >= 2");
  const double dmax = static_cast<double>(k - 1) / k;
  if (!(d >= 0.0) || d > dmax + 1e-15)
    throw std::domain_error("rq_hamming: D must lie in [0, (K-1)/K]");
  d = std::min(d, dmax);
  return q.weighted(1.0 - d, 1.0 / k) + q.weighted(d, static_cast<double>(k - 1) / k);
}

// Same function via the explicit power-law display
//   K^(alpha-1) [ (1-D)^alpha + D^alpha / (K-1)^(alpha-1) ].
inline double rq_power_hamming(int k, double d, double alpha) {
  if (k < 2) throw std::invalid_argument("rq_power_hamming: K must be >= 2");
  if (!(alpha > 1.0)) throw std::invalid_argument("rq_power_hamming: alpha must be > 1");
  const double dmax = static_cast<double>(k - 1) / k;
  if (!(d >= 0.0) || d > dmax + 1e-15)
    throw std::domain_error("rq_power_hamming: D must lie in [0, (K-1)/K]");
  d = std::min(d, dmax);
  return std::pow(static_cast<double>(k), alpha - 1.0) *
         (std::pow(1.0 - d, alpha) + std::pow(d, alpha) / std::pow(static_cast<double>(k - 1), alpha - 1.0));
}

namespace detail {

// phi(p) = Q(u) - u Q'(u) at u = 1/(K p); nondecreasing in p since its
// derivative in u is -u Q''(u) <= 0.
inline double kkt_phi(double p, int k, const QFunction& q) {
  const double u = 1.0 / (k * p);
  return q(u) - u * q.derivative(u);
}

// Solve phi(p) = target for p in (0, cap], clamping to 0 when the target
// lies below the p -> 0 limit (the mu_k >= 0 slack absorbs it).
inline double kkt_solve_p(double target, int k, const QFunction& q, double cap = 2.0) {
  if (kkt_phi(cap, k, q) < target) return cap;
  if (kkt_phi(1e-300, k, q) >= target) return 0.0;
  double lo = 0.0, hi = cap;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kkt_phi(mid, k, q) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

struct KktSolution {
  double value;   // R^Q(D)
  Vec pmf;        // optimizing {p_k}, aligned with rho_row
  double lambda1;
  double lambda2;
  double achieved_distortion;
};

// Solves the decoupled stationarity system for a uniform source and a
// symmetric distortion measure with row values rho_row (which must contain a
// zero):
//   Q(1/(K p_k)) - (1/(K p_k)) Q'(1/(K p_k)) + l1 + l2 rho_k - mu_k = 0,
//   sum p_k = 1, sum p_k rho_k = D, mu_k >= 0, mu_k p_k = 0.
// Each p_k is found by scalar bisection, l1 by inner bisection on sum p_k = 1
// and l2 by outer bisection on the distortion constraint. Repeated rho values
// are grouped; equal values share one unknown.
inline KktSolution rq_symmetric_kkt(int k, const Vec& rho_row, double d, const QFunction& q) {
  if (static_cast<int>(rho_row.size()) != k)
    throw std::invalid_argument("rq_symmetric_kkt: rho_row must have length K");
  if (std::find(rho_row.begin(), rho_row.end(), 0.0) == rho_row.end())
    throw std::invalid_argument("rq_symmetric_kkt: rho_row must contain a zero");

  // group duplicates
  Vec vals;
  std::vector<int> counts;
  {
    Vec sorted = rho_row;
    std::sort(sorted.begin(), sorted.end());
    for (double v : sorted) {
      if (!vals.empty() && v == vals.back())
        ++counts.back();
      else {
        vals.push_back(v);
        counts.push_back(1);
      }
    }
  }
  const double mean_rho = std::accumulate(rho_row.begin(), rho_row.end(), 0.0) / k;
  if (!(d >= -1e-12) || d > mean_rho + 1e-12)
    throw std::domain_error("rq_symmetric_kkt: D must lie in [0, sum(rho)/K]");

  auto p_of = [&](double l1, double l2) {
    Vec p(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
      p[i] = detail::kkt_solve_p(-l1 - l2 * vals[i], k, q);
    return p;
  };
  auto sum_p = [&](double l1, double l2) {
    const Vec p = p_of(l1, l2);
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += counts[i] * p[i];
    return s;
  };
  // sum p_k is decreasing in l1
  auto solve_l1 = [&](double l2) {
    double lo = -1.0, hi = 1.0;
    int guard = 0;
    while (sum_p(lo, l2) < 1.0 && guard++ < 80) lo *= 2.0;
    guard = 0;
    while (sum_p(hi, l2) > 1.0 && guard++ < 80) hi *= 2.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sum_p(mid, l2) > 1.0)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  auto dist_of = [&](double l2) {
    const double l1 = solve_l1(l2);
    const Vec p = p_of(l1, l2);
    double dd = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) dd += counts[i] * p[i] * vals[i];
    return std::tuple<double, double, Vec>(dd, l1, p);
  };

  // distortion is nonincreasing in the multiplier l2 >= 0
  double l2_lo = 0.0, l2_hi = 1.0;
  auto [d0, l1_0, p0] = dist_of(0.0);
  double l1 = l1_0, l2 = 0.0;
  Vec pg = p0;
  if (d0 > d + 1e-15) {
    int guard = 0;
    while (std::get<0>(dist_of(l2_hi)) > d && guard++ < 80) l2_hi *= 2.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (l2_lo + l2_hi);
      if (std::get<0>(dist_of(mid)) > d)
        l2_lo = mid;
      else
        l2_hi = mid;
    }
    l2 = 0.5 * (l2_lo + l2_hi);
    auto [dd, l1_f, p_f] = dist_of(l2);
    l1 = l1_f;
    pg = p_f;
    if (std::abs(dd - d) > 1e-6 * std::max(1.0, mean_rho))
      throw ConvergenceError("rq_symmetric_kkt: distortion constraint residual too large",
                             std::abs(dd - d));
  }

  // renormalize the grouped pmf exactly and expand
  double s = 0.0;
  for (std::size_t i = 0; i < pg.size(); ++i) s += counts[i] * pg[i];
  double value = 0.0, achieved = 0.0;
  Vec pmf(rho_row.size());
  for (std::size_t j = 0; j < rho_row.size(); ++j) {
    const std::size_t i = static_cast<std::size_t>(
        std::lower_bound(vals.begin(), vals.end(), rho_row[j]) - vals.begin());
    pmf[j] = pg[i] / s;
  }
  for (std::size_t j = 0; j < pmf.size(); ++j) {
    value += q.weighted(pmf[j], 1.0 / k);
    achieved += pmf[j] * rho_row[j];
  }
  return {value, pmf, l1, l2, achieved};
}

namespace detail {

// Euclidean projection onto the probability simplex
inline void project_simplex(Vec& v) {
  Vec u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, tau = 0.0;
  int rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    const double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho = static_cast<int>(i + 1);
      tau = t;
    }
  }
  (void)rho;
  for (double& x : v) x = std::max(0.0, x - tau);
}

struct OracleObjective {
  const Source& source;
  const DistortionMeasure& rho;
  const QFunction& q;
  double lambda;

  int k() const { return source.size(); }

  double iq(const Mat& w) const {
    const int n = k();
    Vec m(static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x)
      for (int xh = 0; xh < n; ++xh)
        m[static_cast<std::size_t>(xh)] += source.p(x) * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)];
    double total = 0.0;
    for (int x = 0; x < n; ++x) {
      if (source.p(x) == 0.0) continue;
      for (int xh = 0; xh < n; ++xh)
        total += source.p(x) * q.weighted(w[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)],
                                          m[static_cast<std::size_t>(xh)]);
    }
    return total;
  }

  double distortion(const Mat& w) const {
    const int n = k();
    double dd = 0.0;
    for (int x = 0; x < n; ++x)
      for (int xh = 0; xh < n; ++xh)
        dd += source.p(x) * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)] * rho(x, xh);
    return dd;
  }

  double value(const Mat& w) const { return iq(w) + lambda * distortion(w); }

  Mat gradient(const Mat& w) const {
    const int n = k();
    Vec m(static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x)
      for (int xh = 0; xh < n; ++xh)
        m[static_cast<std::size_t>(xh)] += source.p(x) * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)];
    // colsum[xh] = sum_x p(x) Q'(m(xh)/w(x,xh))
    Vec colsum(static_cast<std::size_t>(n), 0.0);
    for (int xh = 0; xh < n; ++xh) {
      for (int x = 0; x < n; ++x) {
        const double px = source.p(x);
        if (px == 0.0) continue;
        const double wxh = std::max(w[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)], 1e-300);
        const double r = std::max(m[static_cast<std::size_t>(xh)], 1e-300) / wxh;
        colsum[static_cast<std::size_t>(xh)] += px * q.derivative(r);
      }
    }
    Mat g(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0.0));
    for (int x = 0; x < n; ++x) {
      const double px = source.p(x);
      for (int xh = 0; xh < n; ++xh) {
        if (px == 0.0) {
          g[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)] = 0.0;
          continue;
        }
        const double wxh = std::max(w[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)], 1e-300);
        const double mm = m[static_cast<std::size_t>(xh)];
        double gi;
        if (mm <= 1e-300) {
          // empty column: one-sided derivative of moving mass into it
          gi = px * q(px);
        } else {
          const double r = mm / wxh;
          gi = px * (q(r) + q.derivative(r) * (px - r) + colsum[static_cast<std::size_t>(xh)]);
        }
        g[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)] = gi + lambda * px * rho(x, xh);
      }
    }
    return g;
  }
};

// projected gradient descent on the product of row simplices
inline double oracle_minimize(OracleObjective& obj, Mat& w, int max_iters = 100000) {
  const int n = obj.k();
  double f = obj.value(w);
  double step = 1.0;
  int stall = 0;
  for (int it = 0; it < max_iters; ++it) {
    const Mat g = obj.gradient(w);
    bool accepted = false;
    for (int bt = 0; bt < 60 && !accepted; ++bt) {
      Mat wn = w;
      for (int x = 0; x < n; ++x) {
        for (int xh = 0; xh < n; ++xh)
          wn[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)] -=
              step * g[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)];
        project_simplex(wn[static_cast<std::size_t>(x)]);
      }
      double lin = 0.0, quad = 0.0;
      for (int x = 0; x < n; ++x)
        for (int xh = 0; xh < n; ++xh) {
          const double dxy = wn[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)] -
                             w[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)];
          lin += g[static_cast<std::size_t>(x)][static_cast<std::size_t>(xh)] * dxy;
          quad += dxy * dxy;
        }
      const double fn = obj.value(wn);
      if (fn <= f + lin + quad / (2.0 * step) + 1e-15) {
        if (quad < 1e-26 || std::abs(f - fn) <= 1e-13 * (1.0 + std::abs(f)))
          ++stall;
        else
          stall = 0;
        w = std::move(wn);
        f = fn;
        accepted = true;
        step = std::min(step * 1.3, 1e6);
      } else {
        step *= 0.5;
      }
    }
    if (!accepted || stall >= 12) break;
  }
  return f;
}

}  // namespace detail

// Numeric oracle for R^Q(D) with a general source: minimizes
// sum_{xhat} Psi(p_xhat) over row-stochastic conditionals subject to the
// distortion constraint. The linear constraint is handled by an outer
// multiplier bisection around a projected-gradient inner solve; the reported
// value is the best Lagrangian dual estimate max_lambda [g(lambda) - lambda D].
// Tolerance on the objective is about 1e-7.
inline double rq_numeric_oracle(const Source& source, const DistortionMeasure& rho, double d,
                                const QFunction& q) {
  const int k = source.size();
  if (rho.size() != k) throw std::invalid_argument("rq_numeric_oracle: dimension mismatch");

  double min_ach = 0.0;
  for (int x = 0; x < k; ++x) {
    double best = rho(x, 0);
    for (int xh = 1; xh < k; ++xh) best = std::min(best, rho(x, xh));
    min_ach += source.p(x) * best;
  }
  if (d < min_ach - 1e-12)
    throw std::domain_error("rq_numeric_oracle: D below the minimum achievable distortion");

  // unconstrained optimum Q(1) applies once D admits the best constant guess
  double best_const = std::numeric_limits<double>::infinity();
  for (int xh = 0; xh < k; ++xh) {
    double dd = 0.0;
    for (int x = 0; x < k; ++x) dd += source.p(x) * rho(x, xh);
    best_const = std::min(best_const, dd);
  }
  if (d >= best_const) return q(1.0);

  Mat w(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 1.0 / k));
  auto dual_at = [&](double lambda) {
    detail::OracleObjective obj{source, rho, q, lambda};
    const double f = detail::oracle_minimize(obj, w);
    return std::pair<double, double>(f, obj.distortion(w));
  };

  // maximize the concave dual h(lambda) = g(lambda) - lambda D; the bisection
  // steers by the sign of the supergradient d(lambda) - D
  double lo = 0.0, hi = 1.0;
  double best_dual = -std::numeric_limits<double>::infinity();
  auto consider = [&](double lambda, double f) {
    best_dual = std::max(best_dual, f - lambda * d);
  };
  {
    auto [f, dd] = dual_at(hi);
    int guard = 0;
    while (dd > d && guard++ < 60) {
      consider(hi, f);
      hi *= 2.0;
      std::tie(f, dd) = dual_at(hi);
    }
    consider(hi, f);
    if (dd > d)
      throw ConvergenceError("rq_numeric_oracle: multiplier bracket expansion failed", dd - d);
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    auto [f, dd] = dual_at(mid);
    consider(mid, f);
    if (dd > d)
      lo = mid;
    else
      hi = mid;
  }
  return best_dual;
}

// Inverse of rq_hamming in D, clamped to [0, (K-1)/K], bisected to 1e-10 in D.
inline double invert_rq(int k, const QFunction& q, double target_c) {
  const double dmax = static_cast<double>(k - 1) / k;
  if (target_c >= rq_hamming(k, 0.0, q)) return 0.0;
  if (target_c <= rq_hamming(k, dmax, q)) return dmax;
  double lo = 0.0, hi = dmax;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (rq_hamming(k, mid, q) > target_c)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct DistortionBound {
  double bound;
  double alpha;
};

namespace detail {

inline double detect_symmetric_mu(const Channel& ch) {
  const int k = ch.size();
  const double mu = ch.p(0, 0);
  const double eps = k > 1 ? ch.p(1, 0) : 0.0;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      const double expect = (x == y) ? mu : eps;
      if (std::abs(ch.p(y, x) - expect) > 1e-12)
        throw std::invalid_argument("channel is not a symmetric DMC");
    }
  return mu;
}

inline int detect_circular_l(const Channel& ch) {
  const int k = ch.size();
  int l = 0;
  for (int y = 0; y < k; ++y)
    if (ch.p(y, 0) > 0.0) ++l;
  for (int x = 0; x < k; ++x)
    for (int j = 0; j < k; ++j) {
      const double expect = (j < l) ? 1.0 / l : 0.0;
      if (std::abs(ch.p((x + j) % k, x) - expect) > 1e-12)
        throw std::invalid_argument("channel is not a circular DMC");
    }
  return l;
}

}  // namespace detail

// Capacity value C^Q for the requested method at a given alpha.
inline double capacity_value(const Source& source, const Channel& channel, int m,
                             CapacityMethod method, double alpha,
                             const SearchBudget& budget = {}) {
  switch (method) {
    case CapacityMethod::BruteForce:
      return brute_force_cq(source, channel, m, QFunction::power(alpha), budget).value;
    case CapacityMethod::Holder:
      return holder_bound(source, channel, m, alpha).value;
    case CapacityMethod::SymmetricClosedForm:
      return symmetric_cq_closed_form(source.size(), detail::detect_symmetric_mu(channel), m, alpha).value;
    case CapacityMethod::CircularClosedForm:
      return circular_cq(source.size(), detail::detect_circular_l(channel), m, alpha).value;
    case CapacityMethod::ClassicalDPT:
      throw std::invalid_argument("capacity_value: classical DPT has no alpha parameter");
  }
  throw std::invalid_argument("capacity_value: unknown method");
}

inline Vec default_alpha_grid() { return linspace(1.02, 1.98, 25); }

// Best distortion lower bound over the alpha grid: for each alpha compute
// C^Q, invert through the Hamming R^Q, take the max, then refine the best
// alpha by golden-section on its bracketing interval (1e-4 in alpha).
// Requires a uniform source (the closed-form R^Q used for inversion).
inline DistortionBound distortion_lower_bound(const Source& source, const Channel& channel, int m,
                                              CapacityMethod method, const Vec& alpha_grid,
                                              const SearchBudget& budget = {}) {
  const int k = source.size();
  for (int x = 0; x < k; ++x)
    if (std::abs(source.p(x) - 1.0 / k) > kProbTol)
      throw std::invalid_argument("distortion_lower_bound: source must be uniform");
  if (alpha_grid.empty())
    throw std::invalid_argument("distortion_lower_bound: alpha grid must be nonempty");

  auto bound_at = [&](double alpha) {
    const double c = capacity_value(source, channel, m, method, alpha, budget);
    if (std::isinf(c)) return 0.0;
    return std::max(0.0, invert_rq(k, QFunction::power(alpha), c));
  };

  std::size_t best_i = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    const double b = bound_at(alpha_grid[i]);
    if (b > best) {
      best = b;
      best_i = i;
    }
  }
  double lo = best_i > 0 ? alpha_grid[best_i - 1] : alpha_grid[best_i];
  double hi = best_i + 1 < alpha_grid.size() ? alpha_grid[best_i + 1] : alpha_grid[best_i];
  double best_alpha = alpha_grid[best_i];
  if (hi - lo > 1e-4) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = hi - gr * (hi - lo), c2 = lo + gr * (hi - lo);
    double f1 = bound_at(c1), f2 = bound_at(c2);
    while (hi - lo > 1e-4) {
      if (f1 < f2) {
        lo = c1;
        c1 = c2;
        f1 = f2;
        c2 = lo + gr * (hi - lo);
        f2 = bound_at(c2);
      } else {
        hi = c2;
        c2 = c1;
        f2 = f1;
        c1 = hi - gr * (hi - lo);
        f1 = bound_at(c1);
      }
    }
    const double mid = 0.5 * (lo + hi);
    const double fm = bound_at(mid);
    if (fm > best) {
      best = fm;
      best_alpha = mid;
    }
  }
  return {best, best_alpha};
}

// Classical bound: invert the Shannon RD function of the uniform source under
// Hamming distortion at I(X;Y) + sup H(Z|Y).
inline double classical_dpt_distortion_bound(const Source& source, const Channel& channel, int m,
                                             const SearchBudget& budget = {}) {
  const int k = source.size();
  for (int x = 0; x < k; ++x)
    if (std::abs(source.p(x) - 1.0 / k) > kProbTol)
      throw std::invalid_argument("classical_dpt_distortion_bound: source must be uniform");
  const double c = classical_dpt_capacity(source, channel, m, budget);
  return std::max(0.0, invert_rq(k, QFunction::neg_log(), c));
}

// Piecewise-linear function through hull knots; constant beyond both ends.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<std::pair<double, double>> knots)
      : knots_(std::move(knots)) {
    if (knots_.empty()) throw std::invalid_argument("PiecewiseLinear: no knots");
  }

  double operator()(double x) const {
    if (x <= knots_.front().first) return knots_.front().second;
    if (x >= knots_.back().first) return knots_.back().second;
    for (std::size_t i = 1; i < knots_.size(); ++i) {
      if (x <= knots_[i].first) {
        const auto& [x0, y0] = knots_[i - 1];
        const auto& [x1, y1] = knots_[i];
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
      }
    }
    return knots_.back().second;
  }

  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

 private:
  std::vector<std::pair<double, double>> knots_;
};

// Lower convex envelope of (rate, bound) points, the time-sharing bound
// D*(R). Evaluation interpolates linearly and extrapolates as a constant
// beyond the last rate.
inline PiecewiseLinear convex_envelope(std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw std::invalid_argument("convex_envelope: no points");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].first == points[i - 1].first)
      throw std::invalid_argument("convex_envelope: rates must be distinct");
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : points) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // drop b if it lies above segment a-p
      if ((b.second - a.second) * (p.first - a.first) >=
          (p.second - a.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return PiecewiseLinear(std::move(hull));
}

// CSV schema shared by all bound curves: rate_bits,distortion_lower,method,alpha
inline std::string to_csv(const BoundCurve& curve) {
  std::ostringstream os;
  os << "rate_bits,distortion_lower,method,alpha\n";
  char buf[64];
  for (const auto& p : curve.points) {
    std::snprintf(buf, sizeof buf, "%.17g", p.rate_bits);
    os << buf << ",";
    std::snprintf(buf, sizeof buf, "%.17g", p.distortion_lower);
    os << buf << "," << p.method << ",";
    if (!std::isnan(p.alpha)) {
      std::snprintf(buf, sizeof buf, "%.17g", p.alpha);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace wzb
