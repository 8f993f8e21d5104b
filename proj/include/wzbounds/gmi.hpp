#pragma once

// Generalized mutual information I^Q. The canonical definition of
// I^Q(X;Y,Z) is the direct triple sum over p(x) p(y|x) p(z|x); the per-output
// building blocks g_y are derived views that agree with it numerically.
//
// Summation order is fixed (x-major, then y, then z) so results are
// bit-reproducible across runs.

#include "wzbounds/model.hpp"

namespace wzb {

struct GmiValue {
  double value;
  QFunction q;
};

// Q(t); t < 0 is a domain error. The zero-weight convention lives in
// QFunction::weighted (w * Q(r/w) with 0 * Q(r/0) = 0).
inline double q_eval(const QFunction& q, double t) { return q(t); }

inline double q_weighted(const QFunction& q, double w, double r) {
  return q.weighted(w, r);
}

// I^Q(X;Y) = sum_{x,y} p(x,y) Q(p(y) / p(y|x)) over a joint matrix.
inline GmiValue generalized_mi(const Mat& joint, const QFunction& q) {
  detail::check_joint(joint);
  const Vec px = detail::row_marginal(joint);
  const Vec py = detail::col_marginal(joint);
  const std::size_t k = joint.size();
  double total = 0.0;
  for (std::size_t x = 0; x < k; ++x) {
    if (px[x] == 0.0) continue;
    for (std::size_t y = 0; y < k; ++y) {
      // p(x,y) Q(p(y)/p(y|x)) = p(x) * [p(y|x) Q(p(y)/p(y|x))]
      total += px[x] * q.weighted(joint[x][y] / px[x], py[y]);
    }
  }
  return {total, q};
}

// I^Q(X;Y,Z) for a deterministic encoder:
//   sum_{x,y} p(x,y) Q( (sum_{x' in A_f(x)} p(x',y)) / p(y|x) )
inline GmiValue iq_xyz_deterministic(const Source& source, const Channel& channel,
                                     const DeterministicEncoder& enc, const QFunction& q) {
  const int k = source.size();
  if (enc.alphabet_size() != k || channel.size() != k)
    throw std::invalid_argument("iq_xyz_deterministic: dimension mismatch");
  const int m = enc.num_cells();

  // cell_joint[z][y] = sum_{x in A_z} p(x,y)
  Mat cell_joint(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(k), 0.0));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      cell_joint[static_cast<std::size_t>(enc.label(x))][static_cast<std::size_t>(y)] +=
          source.p(x) * channel.p(y, x);

  double total = 0.0;
  for (int x = 0; x < k; ++x) {
    if (source.p(x) == 0.0) continue;
    const int z = enc.label(x);
    for (int y = 0; y < k; ++y)
      total += source.p(x) *
               q.weighted(channel.p(y, x), cell_joint[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)]);
  }
  return {total, q};
}

// I^Q(X;Y,Z) for a stochastic encoder:
//   sum_{x,y,z} p(x) p(y|x) p(z|x) Q( (p_z . p_y) / (p(y|x) p(z|x)) )
// where p_z is encoder column z and p_y the joint column for y.
inline GmiValue iq_xyz_stochastic(const Source& source, const Channel& channel,
                                  const StochasticEncoder& enc, const QFunction& q) {
  const int k = source.size();
  if (enc.alphabet_size() != k || channel.size() != k)
    throw std::invalid_argument("iq_xyz_stochastic: dimension mismatch");
  const int m = enc.num_symbols();

  // dot[z][y] = sum_x p(x) p(y|x) p(z|x)
  Mat dot(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(k), 0.0));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < m; ++z)
        dot[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)] +=
            source.p(x) * channel.p(y, x) * enc.p(z, x);

  double total = 0.0;
  for (int x = 0; x < k; ++x) {
    if (source.p(x) == 0.0) continue;
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < m; ++z)
        total += source.p(x) * q.weighted(channel.p(y, x) * enc.p(z, x),
                                          dot[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)]);
  }
  return {total, q};
}

// G_y(p_z) = sum_x p(x) p(y|x) p(z|x) Q( (p_z . p_y) / (p(y|x) p(z|x)) ) for
// one output symbol y and one encoder column p_z (entries in [0,1]).
// Convex in p_z for any convex Q.
inline double g_y(const Source& source, const Channel& channel, int y, const Vec& p_z,
                  const QFunction& q) {
  const int k = source.size();
  if (channel.size() != k || static_cast<int>(p_z.size()) != k)
    throw std::invalid_argument("g_y: dimension mismatch");
  if (y < 0 || y >= k) throw std::invalid_argument("g_y: y out of range");
  for (double v : p_z)
    if (!(v >= 0.0) || v > 1.0 + kProbTol)
      throw std::invalid_argument("g_y: p_z entries must be in [0,1]");

  double dot = 0.0;
  for (int x = 0; x < k; ++x) dot += source.p(x) * channel.p(y, x) * p_z[static_cast<std::size_t>(x)];
  double total = 0.0;
  for (int x = 0; x < k; ++x) {
    if (source.p(x) == 0.0) continue;
    total += source.p(x) * q.weighted(channel.p(y, x) * p_z[static_cast<std::size_t>(x)], dot);
  }
  return total;
}

// Renyi mutual information of order alpha in bits:
//   (1/(alpha-1)) log2 I^Q  with Q(t) = t^(1-alpha).
inline double renyi_from_iq(const GmiValue& iq, double alpha) {
  if (iq.q.kind() != QFunction::Kind::Power || iq.q.alpha() != alpha)
    throw std::invalid_argument("renyi_from_iq: GmiValue was not computed with Power(alpha)");
  if (!(iq.value > 0.0))
    throw std::domain_error("renyi_from_iq: I^Q must be positive");
  return std::log2(iq.value) / (alpha - 1.0);
}

}  // namespace wzb
