#pragma once

// The generalized "capacity" C^Q = sup I^Q(X;Y,Z) over scalar encoders at
// rate log2 M: exact brute force over partitions, the Holder upper bound,
// closed forms for the symmetric and circular channels, and the classical
// quantity I(X;Y) + sup H(Z|Y).

#include <optional>

#include "wzbounds/gmi.hpp"
#include "wzbounds/partitions.hpp"

namespace wzb {

enum class CapacityMethod { BruteForce, Holder, SymmetricClosedForm, CircularClosedForm, ClassicalDPT };

inline std::string to_string(CapacityMethod m) {
  switch (m) {
    case CapacityMethod::BruteForce: return "brute_force";
    case CapacityMethod::Holder: return "holder";
    case CapacityMethod::SymmetricClosedForm: return "symmetric_closed_form";
    case CapacityMethod::CircularClosedForm: return "circular_closed_form";
    case CapacityMethod::ClassicalDPT: return "classical_dpt";
  }
  return "?";
}

struct CapacityResult {
  double value;
  CapacityMethod method;
  std::optional<DeterministicEncoder> witness;  // present iff the value is exact
  bool is_upper_bound;
};

struct SearchBudget {
  std::uint64_t max_partitions = 1'000'000;
};

// Exact maximum of I^Q(X;Y,Z) over all partitions of {1..K} into exactly M
// nonempty blocks. Ties resolve to the first maximum in restricted-growth
// lexicographic order.
inline CapacityResult brute_force_cq(const Source& source, const Channel& channel, int m,
                                     const QFunction& q, const SearchBudget& budget = {}) {
  const int k = source.size();
  if (m < 1 || m > k) throw std::invalid_argument("brute_force_cq: need 1 <= M <= K");
  check_partition_budget(k, m, budget.max_partitions, "brute_force_cq");

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> best_labels;
  for_each_partition(k, m, [&](const std::vector<int>& labels) {
    const double v = iq_xyz_deterministic(source, channel, DeterministicEncoder(labels, m), q).value;
    if (v > best) {
      best = v;
      best_labels = labels;
    }
    return true;
  });
  return {best, CapacityMethod::BruteForce, DeterministicEncoder(best_labels, m), false};
}

// Lemma-style Holder bound, valid for any source and channel:
//   C^Q <= M^(alpha-1) sum_y ( sum_x p(x) p(y|x)^(1/(2-alpha)) )^(2-alpha)
inline CapacityResult holder_bound(const Source& source, const Channel& channel, int m,
                                   double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::domain_error("holder_bound: alpha must lie in (1,2)");
  if (m < 1) throw std::invalid_argument("holder_bound: M must be >= 1");
  const int k = source.size();
  if (channel.size() != k) throw std::invalid_argument("holder_bound: dimension mismatch");
  const double r = 1.0 / (2.0 - alpha);
  double sum = 0.0;
  for (int y = 0; y < k; ++y) {
    double inner = 0.0;
    for (int x = 0; x < k; ++x) inner += source.p(x) * std::pow(channel.p(y, x), r);
    sum += std::pow(inner, 2.0 - alpha);
  }
  return {std::pow(static_cast<double>(m), alpha - 1.0) * sum, CapacityMethod::Holder,
          std::nullopt, true};
}

// (1/(alpha-1)) log2 holder_bound evaluated at alpha = 1 + 1e-4; converges to
// log2 M + I(X;Y) as alpha -> 1.
inline double holder_alpha_limit(const Source& source, const Channel& channel, int m) {
  const double alpha = 1.0 + 1e-4;
  const double c = holder_bound(source, channel, m, alpha).value;
  return std::log2(c) / (alpha - 1.0);
}

namespace detail {

// q_alpha(x) from the symmetric-channel capacity: per-cell contribution as a
// function of the cell size x, scaled so that C^Q = K^(alpha-2) eps sum_z q_alpha(M_z).
inline double q_alpha_symmetric(double x, int k, double mu, double eps, double alpha) {
  const double c_alpha = std::pow(mu / eps, alpha);
  return x * (x + c_alpha - 1.0) / std::pow(x + mu / eps - 1.0, alpha - 1.0) +
         (k - x) * std::pow(x, 2.0 - alpha);
}

// second differences of q_alpha on the integers [1, hi]
inline bool q_alpha_concave_on_integers(int k, double mu, double eps, double alpha, int hi) {
  for (int x = 2; x < hi; ++x) {
    const double d2 = q_alpha_symmetric(x - 1, k, mu, eps, alpha) -
                      2.0 * q_alpha_symmetric(x, k, mu, eps, alpha) +
                      q_alpha_symmetric(x + 1, k, mu, eps, alpha);
    if (d2 > 1e-12) return false;
  }
  return true;
}

// enumerate partitions of total into exactly parts parts, each in [1, total-parts+1],
// nonincreasing order; used as the exact fallback when q_alpha is not concave
inline void for_each_composition(int total, int parts, std::vector<int>& cur,
                                 const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 1) {
    if (total >= 1 && (cur.empty() || total <= cur.back())) {
      cur.push_back(total);
      visit(cur);
      cur.pop_back();
    }
    return;
  }
  const int hi = cur.empty() ? total - parts + 1 : std::min(cur.back(), total - parts + 1);
  for (int first = hi; first >= 1; --first) {
    if (total - first < parts - 1) continue;
    cur.push_back(first);
    for_each_composition(total - first, parts - 1, cur, visit);
    cur.pop_back();
  }
}

// contiguous encoder with prescribed cell sizes
inline DeterministicEncoder encoder_with_cell_sizes(const std::vector<int>& sizes) {
  std::vector<int> labels;
  for (std::size_t z = 0; z < sizes.size(); ++z)
    for (int i = 0; i < sizes[z]; ++i) labels.push_back(static_cast<int>(z));
  return DeterministicEncoder(labels, static_cast<int>(sizes.size()));
}

}  // namespace detail

// Closed-form C^Q for the symmetric channel with a uniform source and
// Q(t) = t^(1-alpha). Exact (with an equal-cell witness) when M divides K and
// q_alpha is concave on [1, K-M+1]; otherwise the equal-cell substitution is
// an upper bound. If concavity fails, falls back to exact integer
// maximization over cell-size profiles.
inline CapacityResult symmetric_cq_closed_form(int k, double mu, int m, double alpha) {
  if (k < 2 || m < 1 || m > k)
    throw std::invalid_argument("symmetric_cq_closed_form: need K >= 2, 1 <= M <= K");
  if (!(mu > 1.0 / k) || mu > 1.0)
    throw std::invalid_argument("symmetric_cq_closed_form: need 1/K < mu <= 1");
  if (!(alpha > 1.0)) throw std::invalid_argument("symmetric_cq_closed_form: alpha must be > 1");
  const double eps = (1.0 - mu) / (k - 1);

  if (eps == 0.0) {
    // noiseless limit: every M-cell encoder attains K^(alpha-1)
    std::vector<int> labels(static_cast<std::size_t>(k));
    for (int x0 = 0; x0 < k; ++x0) labels[static_cast<std::size_t>(x0)] = (x0 + 1) % m;
    return {std::pow(static_cast<double>(k), alpha - 1.0), CapacityMethod::SymmetricClosedForm,
            DeterministicEncoder(labels, m), false};
  }

  const double scale = std::pow(static_cast<double>(k), alpha - 2.0) * eps;
  const bool concave = detail::q_alpha_concave_on_integers(k, mu, eps, alpha, k - m + 1);

  if (concave) {
    const double value = scale * m * detail::q_alpha_symmetric(static_cast<double>(k) / m, k, mu, eps, alpha);
    if (k % m == 0) {
      std::vector<int> sizes(static_cast<std::size_t>(m), k / m);
      return {value, CapacityMethod::SymmetricClosedForm, detail::encoder_with_cell_sizes(sizes), false};
    }
    return {value, CapacityMethod::SymmetricClosedForm, std::nullopt, true};
  }

  // exact integer maximization over cell-size profiles (value depends only on
  // the multiset of cell sizes for this channel)
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> best_sizes;
  std::vector<int> cur;
  detail::for_each_composition(k, m, cur, [&](const std::vector<int>& sizes) {
    double v = 0.0;
    for (int s : sizes) v += detail::q_alpha_symmetric(s, k, mu, eps, alpha);
    v *= scale;
    if (v > best) {
      best = v;
      best_sizes = sizes;
    }
  });
  return {best, CapacityMethod::SymmetricClosedForm, detail::encoder_with_cell_sizes(best_sizes), false};
}

// Closed-form C^Q for the circular channel with a uniform source:
//   C^Q <= K^(alpha-1) (M/l)^(alpha-1),  1 < alpha < 2.
// The bound is attained by the modular encoder exactly when that encoder
// splits every cyclic window of l inputs evenly across the M cells (which
// requires M | l, and fails when M does not also divide K). For alpha >= 2
// the supremum is infinite and the result carries value = +inf.
inline CapacityResult circular_cq(int k, int l, int m, double alpha) {
  if (k < 2 || l <= 0 || l >= k)
    throw std::invalid_argument("circular_cq: need 0 < l < K");
  if (m < 1 || m > k) throw std::invalid_argument("circular_cq: need 1 <= M <= K");
  if (!(alpha > 1.0)) throw std::invalid_argument("circular_cq: alpha must be > 1");
  if (alpha >= 2.0)
    return {std::numeric_limits<double>::infinity(), CapacityMethod::CircularClosedForm,
            std::nullopt, false};

  const double value = std::pow(static_cast<double>(k), alpha - 1.0) *
                       std::pow(static_cast<double>(m) / l, alpha - 1.0);
  bool exact = (l % m == 0);
  if (exact) {
    // verify the modular encoder gives every (y, z) window count l/M
    const DeterministicEncoder enc = modular_encoder(k, m);
    for (int y = 0; y < k && exact; ++y) {
      std::vector<int> count(static_cast<std::size_t>(m), 0);
      for (int j = 0; j < l; ++j) {
        const int x = ((y - j) % k + k) % k;  // inputs whose window covers y
        ++count[static_cast<std::size_t>(enc.label(x))];
      }
      for (int z = 0; z < m; ++z)
        if (count[static_cast<std::size_t>(z)] != l / m) exact = false;
    }
    if (exact)
      return {value, CapacityMethod::CircularClosedForm, enc, false};
  }
  return {value, CapacityMethod::CircularClosedForm, std::nullopt, true};
}

// Exact max of H(Z|Y) over partitions into exactly M nonempty blocks.
inline std::pair<double, DeterministicEncoder> sup_h_z_given_y(const Source& source,
                                                               const Channel& channel, int m,
                                                               const SearchBudget& budget = {}) {
  const int k = source.size();
  if (m < 1 || m > k) throw std::invalid_argument("sup_h_z_given_y: need 1 <= M <= K");
  check_partition_budget(k, m, budget.max_partitions, "sup_h_z_given_y");

  const Mat joint = joint_distribution(source, channel);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> best_labels;
  for_each_partition(k, m, [&](const std::vector<int>& labels) {
    // H(Z|Y) = H(Z,Y) - H(Y)
    double h = 0.0;
    Mat zy(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(k), 0.0));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        zy[static_cast<std::size_t>(labels[static_cast<std::size_t>(x)])][static_cast<std::size_t>(y)] +=
            joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    for (int y = 0; y < k; ++y) {
      double py = 0.0;
      for (int z = 0; z < m; ++z) py += zy[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)];
      for (int z = 0; z < m; ++z) {
        const double v = zy[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)];
        if (v > 0.0) h -= v * std::log2(v / py);
      }
    }
    if (h > best) {
      best = h;
      best_labels = labels;
    }
    return true;
  });
  return {best, DeterministicEncoder(best_labels, m)};
}

// I(X;Y) + sup H(Z|Y): the capacity of the composite channel seen by the
// classical data-processing bound.
inline double classical_dpt_capacity(const Source& source, const Channel& channel, int m,
                                     const SearchBudget& budget = {}) {
  const double mi = mutual_information(joint_distribution(source, channel));
  return mi + sup_h_z_given_y(source, channel, m, budget).first;
}

}  // namespace wzb
