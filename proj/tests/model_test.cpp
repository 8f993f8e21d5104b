#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace wzb;
using Catch::Approx;

TEST_CASE("uniform_source") {
  CHECK(uniform_source(4).pmf() == Vec{0.25, 0.25, 0.25, 0.25});
  CHECK(uniform_source(2).pmf() == Vec{0.5, 0.5});
  CHECK_THROWS_AS(uniform_source(1), std::invalid_argument);
}

TEST_CASE("symmetric_channel") {
  const Channel ch = symmetric_channel(4, 0.7);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(ch.p(y, x) == Approx(x == y ? 0.7 : 0.1).margin(1e-15));

  const Channel noiseless = symmetric_channel(2, 1.0);
  CHECK(noiseless.p(0, 0) == 1.0);
  CHECK(noiseless.p(1, 0) == 0.0);

  CHECK_THROWS_AS(symmetric_channel(4, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_channel(4, 0.2), std::invalid_argument);
}

TEST_CASE("circular_channel") {
  const Channel ch = circular_channel(4, 3);
  // 1-based row 1 spreads over {1,2,3}
  CHECK(ch.p(0, 0) == Approx(1.0 / 3));
  CHECK(ch.p(1, 0) == Approx(1.0 / 3));
  CHECK(ch.p(2, 0) == Approx(1.0 / 3));
  CHECK(ch.p(3, 0) == 0.0);
  // 1-based row 3 wraps to {3,4,1}
  CHECK(ch.p(2, 2) == Approx(1.0 / 3));
  CHECK(ch.p(3, 2) == Approx(1.0 / 3));
  CHECK(ch.p(0, 2) == Approx(1.0 / 3));
  CHECK(ch.p(1, 2) == 0.0);

  const Channel ident = circular_channel(4, 1);
  for (int x = 0; x < 4; ++x) CHECK(ident.p(x, x) == 1.0);

  CHECK_THROWS_AS(circular_channel(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(circular_channel(4, 0), std::invalid_argument);
}

TEST_CASE("gaussian_like_channel") {
  const Channel ch = gaussian_like_channel(64, 0.5);
  for (int x = 0; x < 64; ++x) {
    double sum = 0.0;
    for (int y = 0; y < 64; ++y) sum += ch.p(y, x);
    CHECK(sum == Approx(1.0).margin(1e-12));
  }

  // sigma -> 0 concentrates each row on its diagonal
  const Channel peaked = gaussian_like_channel(3, 0.05);
  for (int x = 0; x < 3; ++x) CHECK(peaked.p(x, x) > 1.0 - 1e-12);

  // huge sigma flattens the kernel
  const Channel flat = gaussian_like_channel(3, 1e6);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(std::abs(flat.p(y, x) - 1.0 / 3) < 1e-6);

  CHECK_THROWS_AS(gaussian_like_channel(3, 0.0), std::invalid_argument);
}

TEST_CASE("joint_distribution") {
  const Mat ident = joint_distribution(uniform_source(2), circular_channel(2, 1));
  CHECK(ident == Mat{{0.5, 0.0}, {0.0, 0.5}});

  const Mat j = joint_distribution(uniform_source(4), symmetric_channel(4, 0.7));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(j[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
            Approx(x == y ? 0.175 : 0.025).margin(1e-15));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const Source src = wzbtest::random_source(k, rng);
    const Mat joint = joint_distribution(src, wzbtest::random_channel(k, rng));
    double total = 0.0;
    for (int x = 0; x < k; ++x) {
      double row = 0.0;
      for (int y = 0; y < k; ++y) row += joint[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      CHECK(row == Approx(src.p(x)).margin(1e-12));  // marginal round trip
      total += row;
    }
    CHECK(total == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("mutual_information") {
  CHECK(mutual_information(joint_distribution(uniform_source(2), circular_channel(2, 1))) ==
        Approx(1.0).margin(1e-12));

  // product distribution has zero information
  const Mat prod{{0.06, 0.14}, {0.24, 0.56}};
  CHECK(mutual_information(prod) == Approx(0.0).margin(1e-12));

  // symmetric channel: I = log2 K - H(rows)
  const double expect = 2.0 - wzb::entropy_bits({0.7, 0.1, 0.1, 0.1});
  CHECK(mutual_information(joint_distribution(uniform_source(4), symmetric_channel(4, 0.7))) ==
        Approx(expect).margin(1e-12));
}

TEST_CASE("mutual_information bounds on random joints") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const Source src = wzbtest::random_source(k, rng);
    const Channel ch = wzbtest::random_channel(k, rng);
    const Mat joint = joint_distribution(src, ch);
    const double mi = mutual_information(joint);
    CHECK(mi >= -1e-12);
    CHECK(mi <= entropy_bits(detail::row_marginal(joint)) + 1e-12);
    CHECK(mi <= entropy_bits(detail::col_marginal(joint)) + 1e-12);
  }
}

TEST_CASE("conditional_entropy_x_given_y") {
  CHECK(conditional_entropy_x_given_y(joint_distribution(uniform_source(4), circular_channel(4, 3))) ==
        Approx(std::log2(3.0)).margin(1e-12));
  CHECK(conditional_entropy_x_given_y(joint_distribution(uniform_source(4), circular_channel(4, 1))) ==
        Approx(0.0).margin(1e-12));
  // independent X,Y uniform: H(X|Y) = log2 K
  const int k = 4;
  Mat indep(k, Vec(k, 1.0 / (k * k)));
  CHECK(conditional_entropy_x_given_y(indep) == Approx(std::log2(4.0)).margin(1e-12));
}

TEST_CASE("hamming_distortion") {
  const DistortionMeasure d2 = hamming_distortion(2);
  CHECK(d2.matrix() == Mat{{0, 1}, {1, 0}});
  CHECK(d2.is_hamming());
  CHECK(d2.is_symmetric());
  const DistortionMeasure d4 = hamming_distortion(4);
  for (int i = 0; i < 4; ++i) CHECK(d4(i, i) == 0.0);
  CHECK(d4.is_symmetric());
}

TEST_CASE("distortion measure flags") {
  // symmetric but not Hamming
  std::mt19937_64 rng(3);
  const DistortionMeasure c = wzbtest::random_symmetric_distortion(5, rng);
  CHECK(c.is_symmetric());
  CHECK_FALSE(c.is_hamming());

  // rows share a multiset but columns do not
  const DistortionMeasure a(Mat{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}});
  CHECK_FALSE(a.is_symmetric());
}

TEST_CASE("doubly stochastic constructors") {
  for (const Channel& ch : {symmetric_channel(5, 0.6), circular_channel(5, 2)}) {
    for (int y = 0; y < 5; ++y) {
      double col = 0.0;
      for (int x = 0; x < 5; ++x) col += ch.p(y, x);
      CHECK(col == Approx(1.0).margin(1e-12));
    }
  }
}

TEST_CASE("encoder validation") {
  CHECK_THROWS_AS(DeterministicEncoder({0, 0, 0}, 2), std::invalid_argument);  // not surjective
  CHECK_THROWS_AS(DeterministicEncoder({0, 2}, 2), std::invalid_argument);     // out of range
  const DeterministicEncoder enc({0, 1, 0, 1}, 2);
  CHECK(enc.cell_sizes() == std::vector<int>{2, 2});

  CHECK_THROWS_AS(StochasticEncoder(Mat{{0.4, 0.4}, {0.5, 0.5}}), std::invalid_argument);
}

TEST_CASE("modular_encoder") {
  CHECK(modular_encoder(4, 3).map() == std::vector<int>{1, 2, 0, 1});  // 1-based [2,3,1,2]
  CHECK(modular_encoder(4, 1).map() == std::vector<int>{0, 0, 0, 0});
  const auto bij = modular_encoder(4, 4);
  std::vector<int> sorted = bij.map();
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("QFunction properties") {
  const QFunction neg = QFunction::neg_log();
  CHECK(neg(1.0) == 0.0);
  CHECK(neg(0.5) == Approx(1.0));
  const QFunction pw = QFunction::power(1.5);
  CHECK(pw(4.0) == Approx(0.5));
  CHECK_FALSE(pw.outside_bound_range());
  CHECK(QFunction::power(2.5).outside_bound_range());
  const QFunction inv = QFunction::inverse_power(2.0);
  CHECK(inv(2.0) == Approx(0.25));

  for (const QFunction& q : {neg, pw, inv}) {
    CHECK(q.weighted(0.0, 7.0) == 0.0);
    CHECK_THROWS_AS(q(-1.0), std::domain_error);
  }
  CHECK_THROWS_AS(QFunction::power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(QFunction::inverse_power(0.0), std::invalid_argument);
}

TEST_CASE("json round trips") {
  const Source src = uniform_source(3);
  CHECK(source_from_json(to_json(src)).pmf() == src.pmf());
  const Channel ch = symmetric_channel(3, 0.8);
  CHECK(channel_from_json(to_json(ch)).matrix() == ch.matrix());
  const DistortionMeasure rho = hamming_distortion(3);
  CHECK(distortion_from_json(to_json(rho)).matrix() == rho.matrix());

  const auto path = std::filesystem::temp_directory_path() / "wzb_model_test.json";
  save_json(ch, path.string());
  CHECK(channel_from_json(load_json(path.string())).matrix() == ch.matrix());
  std::filesystem::remove(path);
}
