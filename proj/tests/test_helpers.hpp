#pragma once

// Shared RNG-backed generators and independent brute-force oracles for the
// test suites. Oracles here must not reuse the library's computation paths
// for the quantity they check.

#include <random>

#include "wzbounds/wzbounds.hpp"

namespace wzbtest {

using wzb::Mat;
using wzb::Vec;

inline Vec random_pmf(int k, std::mt19937_64& rng) {
  std::exponential_distribution<double> expd(1.0);
  Vec p(static_cast<std::size_t>(k));
  double s = 0.0;
  for (double& v : p) {
    v = expd(rng) + 1e-6;
    s += v;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    p[i] /= s;
    acc += p[i];
  }
  p.back() = 1.0 - acc;  // exact unit sum
  return p;
}

inline wzb::Source random_source(int k, std::mt19937_64& rng) {
  return wzb::Source(random_pmf(k, rng));
}

inline wzb::Channel random_channel(int k, std::mt19937_64& rng) {
  Mat rows;
  for (int x = 0; x < k; ++x) rows.push_back(random_pmf(k, rng));
  return wzb::Channel(rows);
}

inline Mat random_joint(int k, std::mt19937_64& rng) {
  std::exponential_distribution<double> expd(1.0);
  Mat j(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k)));
  double s = 0.0;
  for (auto& row : j)
    for (double& v : row) {
      v = expd(rng) + 1e-9;
      s += v;
    }
  for (auto& row : j)
    for (double& v : row) v /= s;
  return j;
}

// random surjective partition map of {1..K} onto {1..M}
inline wzb::DeterministicEncoder random_partition(int k, int m, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(k));
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_int_distribution<int> lab(0, m - 1);
  for (int i = 0; i < k; ++i)
    labels[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = i < m ? i : lab(rng);
  return wzb::DeterministicEncoder(labels, m);
}

inline wzb::Decoder random_decoder(int k, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> sym(0, k - 1);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(k)));
  for (auto& row : table)
    for (int& v : row) v = sym(rng);
  return wzb::Decoder(table, k);
}

inline wzb::StochasticEncoder random_stochastic_encoder(int k, int m, std::mt19937_64& rng) {
  Mat rows;
  for (int x = 0; x < k; ++x) rows.push_back(random_pmf(m, rng));
  return wzb::StochasticEncoder(rows);
}

// random symmetric distortion measure: a circulant built from a shared row
// multiset, which makes rows and columns permutations of one another
inline wzb::DistortionMeasure random_symmetric_distortion(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.1, 3.0);
  Vec base(static_cast<std::size_t>(k), 0.0);
  for (int i = 1; i < k; ++i) base[static_cast<std::size_t>(i)] = unif(rng);
  Mat rho(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k)));
  for (int x = 0; x < k; ++x)
    for (int j = 0; j < k; ++j)
      rho[static_cast<std::size_t>(x)][static_cast<std::size_t>((x + j) % k)] =
          base[static_cast<std::size_t>(j)];
  return wzb::DistortionMeasure(rho);
}

// Independent classical mutual information oracle (nats-free, direct sums).
inline double mi_oracle_bits(const Mat& joint) {
  const int k = static_cast<int>(joint.size());
  Vec px(static_cast<std::size_t>(k), 0.0), py(static_cast<std::size_t>(k), 0.0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      px[static_cast<std::size_t>(x)] += joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      py[static_cast<std::size_t>(y)] += joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
  double mi = 0.0;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      const double v = joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (v > 0.0)
        mi += v * std::log2(v / (px[static_cast<std::size_t>(x)] * py[static_cast<std::size_t>(y)]));
    }
  return mi;
}

}  // namespace wzbtest
