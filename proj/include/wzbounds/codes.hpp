#pragma once

// Concrete scalar codes with side information: exact expected distortion of
// an (encoder, decoder) pair, the Bayes-optimal decoder, exhaustive optimal
// code search, and the symmetric-channel exact optimum eps (K - M).

#include "wzbounds/partitions.hpp"

namespace wzb {

struct CodePerformance {
  double distortion;
  DeterministicEncoder encoder;
  Decoder decoder;
  double rate_bits;
};

// Exact expected distortion sum_{x,y} p(x) p(y|x) rho(x, g(f(x), y)).
inline double code_distortion(const Source& source, const Channel& channel,
                              const DeterministicEncoder& enc, const Decoder& dec,
                              const DistortionMeasure& rho) {
  const int k = source.size();
  if (channel.size() != k || enc.alphabet_size() != k || rho.size() != k ||
      dec.alphabet_size() != k || dec.num_symbols() < enc.num_cells())
    throw std::invalid_argument("code_distortion: dimension mismatch");
  double total = 0.0;
  for (int x = 0; x < k; ++x) {
    const int z = enc.label(x);
    for (int y = 0; y < k; ++y)
      total += source.p(x) * channel.p(y, x) * rho(x, dec(z, y));
  }
  return total;
}

// g(z,y) = argmin_{xhat} sum_{x in A_z} p(x) p(y|x) rho(x, xhat); ties break
// to the smallest reconstruction index. For a uniform source under Hamming
// distortion this is maximum-likelihood decoding within the cell.
inline Decoder bayes_decoder(const Source& source, const Channel& channel,
                             const DeterministicEncoder& enc, const DistortionMeasure& rho) {
  const int k = source.size();
  if (channel.size() != k || enc.alphabet_size() != k || rho.size() != k)
    throw std::invalid_argument("bayes_decoder: dimension mismatch");
  const int m = enc.num_cells();
  const auto cells = enc.cells();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int z = 0; z < m; ++z) {
    for (int y = 0; y < k; ++y) {
      double best = std::numeric_limits<double>::infinity();
      int best_xh = 0;
      for (int xh = 0; xh < k; ++xh) {
        double cost = 0.0;
        for (int x : cells[static_cast<std::size_t>(z)])
          cost += source.p(x) * channel.p(y, x) * rho(x, xh);
        if (cost < best) {
          best = cost;
          best_xh = xh;
        }
      }
      table[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)] = best_xh;
    }
  }
  return Decoder(std::move(table), k);
}

// Minimal distortion of a rate-log2(M) scalar code over the symmetric
// channel with Hamming distortion: eps (K - M).
inline double symmetric_optimal_distortion(int k, double mu, int m) {
  if (k < 2) throw std::invalid_argument("symmetric_optimal_distortion: K must be >= 2");
  if (!(mu > 1.0 / k) || mu > 1.0)
    throw std::invalid_argument("symmetric_optimal_distortion: need 1/K < mu <= 1");
  if (m < 1 || m > k)
    throw std::invalid_argument("symmetric_optimal_distortion: need 1 <= M <= K");
  const double eps = (1.0 - mu) / (k - 1);
  return eps * (k - m);
}

// Exhaustive search over M-cell partitions, each equipped with its Bayes
// decoder; ties resolve to the first minimum in restricted-growth order.
inline CodePerformance brute_force_optimal_code(const Source& source, const Channel& channel,
                                                const DistortionMeasure& rho, int m,
                                                const SearchBudget& budget = {}) {
  const int k = source.size();
  if (m < 1 || m > k) throw std::invalid_argument("brute_force_optimal_code: need 1 <= M <= K");
  check_partition_budget(k, m, budget.max_partitions, "brute_force_optimal_code");

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_labels;
  for_each_partition(k, m, [&](const std::vector<int>& labels) {
    const DeterministicEncoder enc(labels, m);
    const double d = code_distortion(source, channel, enc, bayes_decoder(source, channel, enc, rho), rho);
    if (d < best) {
      best = d;
      best_labels = labels;
    }
    return true;
  });
  DeterministicEncoder enc(best_labels, m);
  Decoder dec = bayes_decoder(source, channel, enc, rho);
  return {best, enc, std::move(dec), std::log2(static_cast<double>(m))};
}

// Straight line d(R) = eps (K-1) (1 - R / log2 K) obtained by time-sharing
// the rate-0 and rate-log2(K) optimal codes over the symmetric channel.
inline double time_sharing_distortion(int k, double mu, double rate) {
  if (k < 2) throw std::invalid_argument("time_sharing_distortion: K must be >= 2");
  if (!(mu > 1.0 / k) || mu > 1.0)
    throw std::invalid_argument("time_sharing_distortion: need 1/K < mu <= 1");
  const double rmax = std::log2(static_cast<double>(k));
  if (!(rate >= 0.0) || rate > rmax + 1e-12)
    throw std::domain_error("time_sharing_distortion: rate must lie in [0, log2 K]");
  const double eps = (1.0 - mu) / (k - 1);
  return eps * (k - 1) * (1.0 - std::min(rate, rmax) / rmax);
}

// CSV schema for achievable-code rows: rate_bits,distortion,encoder_map,method
// (encoder_map uses 1-based labels joined by '|').
inline std::string code_csv_header() { return "rate_bits,distortion,encoder_map,method\n"; }

inline std::string to_csv_row(double rate_bits, double distortion,
                              const DeterministicEncoder& enc, const std::string& method) {
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", rate_bits);
  os << buf << ",";
  std::snprintf(buf, sizeof buf, "%.17g", distortion);
  os << buf << ",";
  for (int x = 0; x < enc.alphabet_size(); ++x) {
    if (x) os << "|";
    os << enc.label(x) + 1;
  }
  os << "," << method << "\n";
  return os.str();
}

}  // namespace wzb
