#pragma once

// Core domain types for scalar source coding with decoder side information:
// finite-alphabet sources, discrete memoryless channels, scalar encoders and
// decoders, distortion measures, and the convex functionals Q that generalize
// the logarithm in mutual-information expressions.
//
// Alphabets are {1..K} in all external formats and documentation; storage is
// 0-based throughout.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "wzbounds/common.hpp"

namespace wzb {

namespace detail {

inline void check_row_stochastic(const Vec& row, const std::string& who) {
  double sum = 0.0;
  for (double v : row) {
    if (!(v >= 0.0))
      throw std::invalid_argument(who + ": negative or NaN entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbTol)
    throw std::invalid_argument(who + ": row sums to " + std::to_string(sum) +
                                ", expected 1 within 1e-12");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Source: pmf over {1..K}
// ---------------------------------------------------------------------------
class Source {
 public:
  explicit Source(Vec pmf) : pmf_(std::move(pmf)) {
    if (pmf_.size() < 2)
      throw std::invalid_argument("Source: alphabet size must be >= 2");
    detail::check_row_stochastic(pmf_, "Source pmf");
  }

  int size() const { return static_cast<int>(pmf_.size()); }
  const Vec& pmf() const { return pmf_; }
  double p(int x) const { return pmf_[static_cast<std::size_t>(x)]; }

 private:
  Vec pmf_;
};

inline Source uniform_source(int k) {
  if (k < 2) throw std::invalid_argument("uniform_source: K must be >= 2");
  return Source(Vec(static_cast<std::size_t>(k), 1.0 / k));
}

// ---------------------------------------------------------------------------
// Channel: square row-stochastic matrix {p(y|x)}; Y shares the alphabet of X
// ---------------------------------------------------------------------------
class Channel {
 public:
  explicit Channel(Mat rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2)
      throw std::invalid_argument("Channel: alphabet size must be >= 2");
    for (const auto& r : rows_) {
      if (r.size() != rows_.size())
        throw std::invalid_argument("Channel: matrix must be square (|Y| = |X|)");
      detail::check_row_stochastic(r, "Channel row");
    }
  }

  int size() const { return static_cast<int>(rows_.size()); }
  const Mat& matrix() const { return rows_; }
  double p(int y, int x) const { return rows_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  const Vec& row(int x) const { return rows_[static_cast<std::size_t>(x)]; }

 private:
  Mat rows_;
};

// Diagonal mu, off-diagonal eps = (1-mu)/(K-1); requires mu > eps.
inline Channel symmetric_channel(int k, double mu) {
  if (k < 2) throw std::invalid_argument("symmetric_channel: K must be >= 2");
  if (!(mu > 1.0 / k) || mu > 1.0)
    throw std::invalid_argument("symmetric_channel: need 1/K < mu <= 1");
  const double eps = (1.0 - mu) / (k - 1);
  Mat rows(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), eps));
  for (int x = 0; x < k; ++x) rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = mu;
  return Channel(std::move(rows));
}

// Row x spreads 1/l over the l cyclically consecutive outputs starting at x.
inline Channel circular_channel(int k, int l) {
  if (k < 2) throw std::invalid_argument("circular_channel: K must be >= 2");
  if (l <= 0 || l >= k)
    throw std::invalid_argument("circular_channel: need 0 < l < K");
  Mat rows(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 0.0));
  for (int x = 0; x < k; ++x)
    for (int j = 0; j < l; ++j)
      rows[static_cast<std::size_t>(x)][static_cast<std::size_t>((x + j) % k)] = 1.0 / l;
  return Channel(std::move(rows));
}

// p(y|x) = c_x exp(-(x-y)^2 / (2 sigma^2)) on integer coordinates, no
// wraparound; rows near the alphabet edges are deliberately asymmetric.
inline Channel gaussian_like_channel(int k, double sigma) {
  if (k < 2) throw std::invalid_argument("gaussian_like_channel: K must be >= 2");
  if (!(sigma > 0.0))
    throw std::invalid_argument("gaussian_like_channel: sigma must be > 0");
  Mat rows(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k)));
  for (int x = 0; x < k; ++x) {
    double sum = 0.0;
    for (int y = 0; y < k; ++y) {
      const double d = static_cast<double>(x - y);
      rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          std::exp(-d * d / (2.0 * sigma * sigma));
      sum += rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
    for (int y = 0; y < k; ++y) rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] /= sum;
  }
  return Channel(std::move(rows));
}

// ---------------------------------------------------------------------------
// Encoders and decoder
// ---------------------------------------------------------------------------

// Surjective map f: {1..K} -> {1..M}, stored 0-based. The induced partition
// cells A_z are all nonempty.
class DeterministicEncoder {
 public:
  DeterministicEncoder(std::vector<int> map, int m) : map_(std::move(map)), m_(m) {
    if (m_ < 1) throw std::invalid_argument("DeterministicEncoder: M must be >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(m_), false);
    for (int z : map_) {
      if (z < 0 || z >= m_)
        throw std::invalid_argument("DeterministicEncoder: label out of range");
      seen[static_cast<std::size_t>(z)] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      throw std::invalid_argument("DeterministicEncoder: every label in {1..M} must occur");
  }

  int alphabet_size() const { return static_cast<int>(map_.size()); }
  int num_cells() const { return m_; }
  int label(int x) const { return map_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& map() const { return map_; }

  std::vector<std::vector<int>> cells() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(m_));
    for (int x = 0; x < alphabet_size(); ++x) out[static_cast<std::size_t>(map_[static_cast<std::size_t>(x)])].push_back(x);
    return out;
  }

  std::vector<int> cell_sizes() const {
    std::vector<int> out(static_cast<std::size_t>(m_), 0);
    for (int z : map_) ++out[static_cast<std::size_t>(z)];
    return out;
  }

 private:
  std::vector<int> map_;
  int m_;
};

// K x M row-stochastic matrix p(z|x); columns are the vectors p_z, which sum
// componentwise to the all-ones vector.
class StochasticEncoder {
 public:
  explicit StochasticEncoder(Mat rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].empty())
      throw std::invalid_argument("StochasticEncoder: empty matrix");
    for (const auto& r : rows_) {
      if (r.size() != rows_[0].size())
        throw std::invalid_argument("StochasticEncoder: ragged matrix");
      detail::check_row_stochastic(r, "StochasticEncoder row");
    }
  }

  int alphabet_size() const { return static_cast<int>(rows_.size()); }
  int num_symbols() const { return static_cast<int>(rows_[0].size()); }
  double p(int z, int x) const { return rows_[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)]; }
  const Mat& matrix() const { return rows_; }

  // column z as a length-K vector [p(z|x), x in X]
  Vec column(int z) const {
    Vec out(static_cast<std::size_t>(alphabet_size()));
    for (int x = 0; x < alphabet_size(); ++x) out[static_cast<std::size_t>(x)] = p(z, x);
    return out;
  }

 private:
  Mat rows_;
};

// f(x) = 1 + (x mod M) on the 1-based alphabet; natural when channel noise
// decays with distance, since adjacent symbols land in different cells.
inline DeterministicEncoder modular_encoder(int k, int m) {
  if (m < 1 || m > k) throw std::invalid_argument("modular_encoder: need 1 <= M <= K");
  std::vector<int> labels(static_cast<std::size_t>(k));
  for (int x0 = 0; x0 < k; ++x0) labels[static_cast<std::size_t>(x0)] = (x0 + 1) % m;
  return DeterministicEncoder(labels, m);
}

inline StochasticEncoder to_stochastic(const DeterministicEncoder& f) {
  Mat rows(static_cast<std::size_t>(f.alphabet_size()),
           Vec(static_cast<std::size_t>(f.num_cells()), 0.0));
  for (int x = 0; x < f.alphabet_size(); ++x)
    rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(f.label(x))] = 1.0;
  return StochasticEncoder(std::move(rows));
}

// M x K table g(z, y) of reconstruction symbols, stored 0-based.
class Decoder {
 public:
  Decoder(std::vector<std::vector<int>> table, int k) : table_(std::move(table)), k_(k) {
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != k_)
        throw std::invalid_argument("Decoder: table row size must equal K");
      for (int v : row)
        if (v < 0 || v >= k_)
          throw std::invalid_argument("Decoder: reconstruction symbol out of range");
    }
  }

  int num_symbols() const { return static_cast<int>(table_.size()); }
  int alphabet_size() const { return k_; }
  int operator()(int z, int y) const { return table_[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  int k_;
};

// ---------------------------------------------------------------------------
// Distortion measures
// ---------------------------------------------------------------------------
class DistortionMeasure {
 public:
  explicit DistortionMeasure(Mat rho) : rho_(std::move(rho)) {
    const std::size_t k = rho_.size();
    if (k < 2) throw std::invalid_argument("DistortionMeasure: K must be >= 2");
    for (const auto& r : rho_) {
      if (r.size() != k) throw std::invalid_argument("DistortionMeasure: matrix must be square");
      for (double v : r)
        if (!(v >= 0.0)) throw std::invalid_argument("DistortionMeasure: entries must be >= 0");
    }
    symmetric_ = compute_symmetric();
    hamming_ = compute_hamming();
  }

  int size() const { return static_cast<int>(rho_.size()); }
  const Mat& matrix() const { return rho_; }
  double operator()(int x, int xhat) const { return rho_[static_cast<std::size_t>(x)][static_cast<std::size_t>(xhat)]; }
  bool is_symmetric() const { return symmetric_; }
  bool is_hamming() const { return hamming_; }

  double max_value() const {
    double m = 0.0;
    for (const auto& r : rho_) m = std::max(m, *std::max_element(r.begin(), r.end()));
    return m;
  }

 private:
  bool compute_symmetric() const {
    auto sorted = [](Vec v) { std::sort(v.begin(), v.end()); return v; };
    const Vec row0 = sorted(rho_[0]);
    for (const auto& r : rho_)
      if (sorted(r) != row0) return false;
    Vec col0(rho_.size());
    for (std::size_t x = 0; x < rho_.size(); ++x) col0[x] = rho_[x][0];
    const Vec col0s = sorted(col0);
    for (std::size_t c = 1; c < rho_.size(); ++c) {
      Vec col(rho_.size());
      for (std::size_t x = 0; x < rho_.size(); ++x) col[x] = rho_[x][c];
      if (sorted(col) != col0s) return false;
    }
    return true;
  }

  bool compute_hamming() const {
    for (std::size_t x = 0; x < rho_.size(); ++x)
      for (std::size_t y = 0; y < rho_.size(); ++y)
        if (rho_[x][y] != (x == y ? 0.0 : 1.0)) return false;
    return true;
  }

  Mat rho_;
  bool symmetric_ = false;
  bool hamming_ = false;
};

inline DistortionMeasure hamming_distortion(int k) {
  if (k < 2) throw std::invalid_argument("hamming_distortion: K must be >= 2");
  Mat rho(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 1.0));
  for (int i = 0; i < k; ++i) rho[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
  return DistortionMeasure(std::move(rho));
}

// ---------------------------------------------------------------------------
// QFunction: convex non-increasing Q on (0, inf) with t Q(1/t) -> 0
// ---------------------------------------------------------------------------
class QFunction {
 public:
  enum class Kind { NegLog, Power, InversePower };

  static QFunction neg_log() { return QFunction(Kind::NegLog, 0.0); }

  // Q(t) = t^(1-alpha), alpha > 1. Values of alpha outside (1,2) are legal to
  // evaluate but flagged: they do not yield useful capacity bounds.
  static QFunction power(double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("QFunction::power: alpha must be > 1");
    return QFunction(Kind::Power, alpha);
  }

  // Q(t) = t^(-s), s > 0
  static QFunction inverse_power(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("QFunction::inverse_power: s must be > 0");
    return QFunction(Kind::InversePower, s);
  }

  Kind kind() const { return kind_; }
  double alpha() const { return param_; }
  double s() const { return param_; }

  bool outside_bound_range() const {
    return kind_ == Kind::Power && !(param_ < 2.0);
  }

  // Q(t) for t >= 0; t = 0 returns +inf (the extended value).
  double operator()(double t) const {
    if (t < 0.0) throw std::domain_error("QFunction: argument must be >= 0");
    switch (kind_) {
      case Kind::NegLog:
        return t == 0.0 ? std::numeric_limits<double>::infinity() : -std::log2(t);
      case Kind::Power:
        return t == 0.0 ? std::numeric_limits<double>::infinity() : std::pow(t, 1.0 - param_);
      case Kind::InversePower:
        return t == 0.0 ? std::numeric_limits<double>::infinity() : std::pow(t, -param_);
    }
    return 0.0;  // unreachable
  }

  double derivative(double t) const {
    if (!(t > 0.0)) throw std::domain_error("QFunction: derivative needs t > 0");
    switch (kind_) {
      case Kind::NegLog:
        return -1.0 / (t * std::log(2.0));
      case Kind::Power:
        return (1.0 - param_) * std::pow(t, -param_);
      case Kind::InversePower:
        return -param_ * std::pow(t, -param_ - 1.0);
    }
    return 0.0;  // unreachable
  }

  // w * Q(r / w) with the convention 0 * Q(r/0) = 0.
  double weighted(double w, double r) const {
    if (w == 0.0) return 0.0;
    return w * (*this)(r / w);
  }

  std::string name() const {
    std::ostringstream os;
    switch (kind_) {
      case Kind::NegLog: os << "neglog"; break;
      case Kind::Power: os << "power(" << param_ << ")"; break;
      case Kind::InversePower: os << "invpower(" << param_ << ")"; break;
    }
    return os.str();
  }

 private:
  QFunction(Kind kind, double param) : kind_(kind), param_(param) { grid_check(); }

  // Numeric guard on the defining properties: non-increasing, midpoint
  // convex, and t Q(1/t) -> 0.
  void grid_check() const {
    const Vec grid = {1e-6, 1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 1e3, 1e6};
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      if ((*this)(grid[i]) < (*this)(grid[i + 1]) - 1e-9)
        throw std::logic_error("QFunction: not non-increasing on grid");
      const double mid = 0.5 * (grid[i] + grid[i + 1]);
      if ((*this)(mid) > 0.5 * ((*this)(grid[i]) + (*this)(grid[i + 1])) + 1e-9)
        throw std::logic_error("QFunction: midpoint convexity failed on grid");
    }
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {1e-2, 1e-4, 1e-6, 1e-8}) {
      const double v = std::abs(weighted(t, 1.0));
      if (v > prev + 1e-9) throw std::logic_error("QFunction: t*Q(1/t) does not vanish");
      prev = v;
    }
  }

  Kind kind_;
  double param_;
};

// ---------------------------------------------------------------------------
// Probability utilities
// ---------------------------------------------------------------------------

// K x K joint p(x,y) = p(x) p(y|x)
inline Mat joint_distribution(const Source& source, const Channel& channel) {
  if (source.size() != channel.size())
    throw std::invalid_argument("joint_distribution: dimension mismatch");
  const int k = source.size();
  Mat joint(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k)));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = source.p(x) * channel.p(y, x);
  return joint;
}

namespace detail {

inline void check_joint(const Mat& joint) {
  double sum = 0.0;
  for (const auto& row : joint) {
    if (row.size() != joint.size())
      throw std::invalid_argument("joint matrix must be square");
    for (double v : row) {
      if (!(v >= 0.0)) throw std::invalid_argument("joint matrix entries must be >= 0");
      sum += v;
    }
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("joint matrix must sum to 1");
}

inline Vec row_marginal(const Mat& joint) {
  Vec px(joint.size(), 0.0);
  for (std::size_t x = 0; x < joint.size(); ++x)
    px[x] = std::accumulate(joint[x].begin(), joint[x].end(), 0.0);
  return px;
}

inline Vec col_marginal(const Mat& joint) {
  Vec py(joint.size(), 0.0);
  for (std::size_t x = 0; x < joint.size(); ++x)
    for (std::size_t y = 0; y < joint.size(); ++y) py[y] += joint[x][y];
  return py;
}

}  // namespace detail

// I(X;Y) in bits from a joint matrix
inline double mutual_information(const Mat& joint) {
  detail::check_joint(joint);
  const Vec px = detail::row_marginal(joint);
  const Vec py = detail::col_marginal(joint);
  double mi = 0.0;
  for (std::size_t x = 0; x < joint.size(); ++x)
    for (std::size_t y = 0; y < joint.size(); ++y) {
      const double pxy = joint[x][y];
      if (pxy > 0.0) mi += pxy * std::log2(pxy / (px[x] * py[y]));
    }
  return mi;
}

// H(X|Y) in bits from a joint matrix
inline double conditional_entropy_x_given_y(const Mat& joint) {
  detail::check_joint(joint);
  const Vec py = detail::col_marginal(joint);
  double h = 0.0;
  for (std::size_t x = 0; x < joint.size(); ++x)
    for (std::size_t y = 0; y < joint.size(); ++y) {
      const double pxy = joint[x][y];
      if (pxy > 0.0) h -= pxy * std::log2(pxy / py[y]);
    }
  return h;
}

// ---------------------------------------------------------------------------
// JSON I/O. Schemas (1-based index convention in the documentation):
//   Source:  {"K": int, "pmf": [..K..]}
//   Channel / DistortionMeasure: {"K": int, "rows": [[..K..] x K]}
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const Source& s) {
  return {{"K", s.size()}, {"pmf", s.pmf()}};
}

inline nlohmann::json to_json(const Channel& c) {
  return {{"K", c.size()}, {"rows", c.matrix()}};
}

inline nlohmann::json to_json(const DistortionMeasure& d) {
  return {{"K", d.size()}, {"rows", d.matrix()}};
}

inline Source source_from_json(const nlohmann::json& j) {
  const auto pmf = j.at("pmf").get<Vec>();
  if (j.contains("K") && j.at("K").get<int>() != static_cast<int>(pmf.size()))
    throw std::invalid_argument("source_from_json: K does not match pmf length");
  return Source(pmf);
}

inline Channel channel_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Mat>();
  if (j.contains("K") && j.at("K").get<int>() != static_cast<int>(rows.size()))
    throw std::invalid_argument("channel_from_json: K does not match row count");
  return Channel(rows);
}

inline DistortionMeasure distortion_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Mat>();
  if (j.contains("K") && j.at("K").get<int>() != static_cast<int>(rows.size()))
    throw std::invalid_argument("distortion_from_json: K does not match row count");
  return DistortionMeasure(rows);
}

template <class T>
void save_json(const T& value, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_json: cannot open " + path);
  out << to_json(value).dump(2) << "\n";
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_json: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace wzb
