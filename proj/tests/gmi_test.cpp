#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace wzb;
using Catch::Approx;

namespace {

// joint of (X, Xhat) induced by xhat = g(f(x), y)
Mat code_output_joint(const Source& src, const Channel& ch, const DeterministicEncoder& enc,
                      const Decoder& dec) {
  const int k = src.size();
  Mat joint(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 0.0));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(dec(enc.label(x), y))] +=
          src.p(x) * ch.p(y, x);
  return joint;
}

}  // namespace

TEST_CASE("q_eval basics") {
  CHECK(q_eval(QFunction::neg_log(), 1.0) == 0.0);
  CHECK(q_eval(QFunction::power(1.5), 4.0) == Approx(0.5));
  for (const QFunction& q :
       {QFunction::neg_log(), QFunction::power(1.5), QFunction::inverse_power(0.7)})
    CHECK(q_weighted(q, 0.0, 7.0) == 0.0);
  CHECK_THROWS_AS(q_eval(QFunction::power(1.5), -0.1), std::domain_error);
}

TEST_CASE("generalized_mi recovers classical information with neg log") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const Mat joint = wzbtest::random_joint(k, rng);
    const double gmi = generalized_mi(joint, QFunction::neg_log()).value;
    CHECK(gmi == Approx(wzbtest::mi_oracle_bits(joint)).margin(1e-10));
  }
}

TEST_CASE("generalized_mi closed cases") {
  // product joint: p(y) = p(y|x) everywhere, so any power Q gives Q(1) = 1
  const Mat prod{{0.06, 0.14}, {0.24, 0.56}};
  CHECK(generalized_mi(prod, QFunction::power(1.3)).value == Approx(1.0).margin(1e-12));

  // uniform K=2 with the identity channel and Q(t) = t^(-1/2): sqrt(2)
  const Mat ident{{0.5, 0.0}, {0.0, 0.5}};
  CHECK(generalized_mi(ident, QFunction::power(1.5)).value ==
        Approx(std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("iq_xyz_deterministic edge encoders") {
  const Source src = uniform_source(4);
  const Channel ch = symmetric_channel(4, 0.7);
  const Mat joint = joint_distribution(src, ch);
  const QFunction neg = QFunction::neg_log();

  // identity encoder: I(X;Y) + H(X|Y) = H(X)
  const DeterministicEncoder ident({0, 1, 2, 3}, 4);
  CHECK(iq_xyz_deterministic(src, ch, ident, neg).value ==
        Approx(entropy_bits(src.pmf())).margin(1e-10));

  // single cell: I(X;Y)
  const DeterministicEncoder single({0, 0, 0, 0}, 1);
  CHECK(iq_xyz_deterministic(src, ch, single, neg).value ==
        Approx(mutual_information(joint)).margin(1e-10));

  // two-cell split agrees with the symmetric closed form at M = 2
  const DeterministicEncoder half({0, 0, 1, 1}, 2);
  CHECK(iq_xyz_deterministic(src, ch, half, QFunction::power(1.5)).value ==
        Approx(symmetric_cq_closed_form(4, 0.7, 2, 1.5).value).margin(1e-10));
}

TEST_CASE("iq deterministic equals I(X;Y) + H(Z|Y) under neg log") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % k);
    const Source src = wzbtest::random_source(k, rng);
    const Channel ch = wzbtest::random_channel(k, rng);
    const DeterministicEncoder enc = wzbtest::random_partition(k, m, rng);
    const Mat joint = joint_distribution(src, ch);

    // H(Z|Y) computed directly from the induced (Z,Y) joint
    Mat zy(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(k), 0.0));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        zy[static_cast<std::size_t>(enc.label(x))][static_cast<std::size_t>(y)] +=
            joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    double hzy = 0.0;
    for (int y = 0; y < k; ++y) {
      double py = 0.0;
      for (int z = 0; z < m; ++z) py += zy[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)];
      for (int z = 0; z < m; ++z) {
        const double v = zy[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)];
        if (v > 0.0) hzy -= v * std::log2(v / py);
      }
    }
    CHECK(iq_xyz_deterministic(src, ch, enc, QFunction::neg_log()).value ==
          Approx(mutual_information(joint) + hzy).margin(1e-10));
  }
}

TEST_CASE("iq_xyz_stochastic consistency") {
  std::mt19937_64 rng(31);
  const QFunction q = QFunction::power(1.4);

  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % k);
    const Source src = wzbtest::random_source(k, rng);
    const Channel ch = wzbtest::random_channel(k, rng);

    // 0/1-valued stochastic encoder coincides with the deterministic form
    const DeterministicEncoder det = wzbtest::random_partition(k, m, rng);
    CHECK(iq_xyz_stochastic(src, ch, to_stochastic(det), q).value ==
          Approx(iq_xyz_deterministic(src, ch, det, q).value).margin(1e-13));

    // identical rows make Z independent of X: neg log gives I(X;Y)
    Mat rows(static_cast<std::size_t>(k), wzbtest::random_pmf(m, rng));
    CHECK(iq_xyz_stochastic(src, ch, StochasticEncoder(rows), QFunction::neg_log()).value ==
          Approx(mutual_information(joint_distribution(src, ch))).margin(1e-10));
  }
}

TEST_CASE("randomizing the encoder cannot beat the best deterministic one") {
  std::mt19937_64 rng(41);
  for (const QFunction& q : {QFunction::power(1.3), QFunction::neg_log()}) {
    for (int trial = 0; trial < 250; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 4);  // K <= 5
      const int m = 1 + static_cast<int>(rng() % std::min(k, 3));
      const Source src = wzbtest::random_source(k, rng);
      const Channel ch = wzbtest::random_channel(k, rng);

      // deterministic maximum over all encoders with at most m cells
      double det_max = -std::numeric_limits<double>::infinity();
      for (int cells = 1; cells <= m; ++cells)
        det_max = std::max(det_max, brute_force_cq(src, ch, cells, q).value);

      const StochasticEncoder enc = wzbtest::random_stochastic_encoder(k, m, rng);
      CHECK(iq_xyz_stochastic(src, ch, enc, q).value <= det_max + 1e-10);
    }
  }
}

TEST_CASE("data processing: coding cannot increase I^Q") {
  std::mt19937_64 rng(53);
  const std::vector<QFunction> qs = {QFunction::neg_log(), QFunction::power(1.2),
                                     QFunction::power(1.8)};
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);  // K <= 5
    const int m = 1 + static_cast<int>(rng() % k);
    const Source src = wzbtest::random_source(k, rng);
    const Channel ch = wzbtest::random_channel(k, rng);
    const DeterministicEncoder enc = wzbtest::random_partition(k, m, rng);
    const Decoder dec = wzbtest::random_decoder(k, m, rng);
    const Mat out_joint = code_output_joint(src, ch, enc, dec);
    for (const QFunction& q : qs)
      CHECK(generalized_mi(out_joint, q).value <=
            iq_xyz_deterministic(src, ch, enc, q).value + 1e-10);
  }
}

TEST_CASE("g_y building blocks") {
  const Source src = uniform_source(4);
  const Channel ch = symmetric_channel(4, 0.7);
  const QFunction neg = QFunction::neg_log();

  // all-ones column summed over y reproduces the single-cell I^Q
  const Vec ones(4, 1.0);
  double total = 0.0;
  for (int y = 0; y < 4; ++y) total += g_y(src, ch, y, ones, neg);
  CHECK(total == Approx(mutual_information(joint_distribution(src, ch))).margin(1e-10));

  // zero column contributes nothing
  CHECK(g_y(src, ch, 0, Vec(4, 0.0), neg) == 0.0);
}

TEST_CASE("g_y sums reproduce iq_xyz_stochastic") {
  std::mt19937_64 rng(61);
  const QFunction q = QFunction::power(1.6);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % k);
    const Source src = wzbtest::random_source(k, rng);
    const Channel ch = wzbtest::random_channel(k, rng);
    const StochasticEncoder enc = wzbtest::random_stochastic_encoder(k, m, rng);
    double total = 0.0;
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < m; ++z) total += g_y(src, ch, y, enc.column(z), q);
    CHECK(total == Approx(iq_xyz_stochastic(src, ch, enc, q).value).margin(1e-10));
  }
}

TEST_CASE("g_y midpoint convexity") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::vector<QFunction> qs = {QFunction::neg_log(), QFunction::power(1.5),
                                     QFunction::inverse_power(1.0)};
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const Source src = wzbtest::random_source(k, rng);
    const Channel ch = wzbtest::random_channel(k, rng);
    const int y = static_cast<int>(rng() % static_cast<unsigned>(k));
    Vec a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      a[static_cast<std::size_t>(i)] = unif(rng);
      b[static_cast<std::size_t>(i)] = unif(rng);
    }
    const double lam = unif(rng);
    Vec mid(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      mid[static_cast<std::size_t>(i)] =
          lam * a[static_cast<std::size_t>(i)] + (1.0 - lam) * b[static_cast<std::size_t>(i)];
    const QFunction& q = qs[trial % qs.size()];
    CHECK(g_y(src, ch, y, mid, q) <=
          lam * g_y(src, ch, y, a, q) + (1.0 - lam) * g_y(src, ch, y, b, q) + 1e-10);
  }
}

TEST_CASE("renyi_from_iq") {
  CHECK(renyi_from_iq({1.0, QFunction::power(1.5)}, 1.5) == Approx(0.0).margin(1e-15));

  // I^Q = K^(alpha-1) maps to log2 K bits
  CHECK(renyi_from_iq({2.0, QFunction::power(1.5)}, 1.5) == Approx(2.0).margin(1e-12));

  CHECK_THROWS_AS(renyi_from_iq({0.0, QFunction::power(1.5)}, 1.5), std::domain_error);
  CHECK_THROWS_AS(renyi_from_iq({1.0, QFunction::power(1.5)}, 1.3), std::invalid_argument);
  CHECK_THROWS_AS(renyi_from_iq({1.0, QFunction::neg_log()}, 1.5), std::invalid_argument);

  // alpha -> 1 recovers classical mutual information
  std::mt19937_64 rng(83);
  const Mat joint = wzbtest::random_joint(5, rng);
  const double mi = wzbtest::mi_oracle_bits(joint);
  for (int kk = 2; kk <= 5; ++kk) {
    const double alpha = 1.0 + std::pow(10.0, -kk);
    const double renyi = renyi_from_iq(generalized_mi(joint, QFunction::power(alpha)), alpha);
    CHECK(std::abs(renyi - mi) <= 10.0 * (alpha - 1.0));
  }
}
