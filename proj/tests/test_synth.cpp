#include <doctest.h>

#include "rdp/error.hpp"
#include "rdp/synth.hpp"

using namespace rdp;

TEST_CASE("two-domain system") {
  CHECK(two_domain_value(0) == 250);
  CHECK(two_domain_value(5) == 1000);
  CHECK(two_domain_value(10) == -1000);
  const auto d = gen_two_domain();
  REQUIRE(d.size() == 2001);
  CHECK(d.points()(0, 0) == 0.0);
  CHECK(d.points()(1000, 0) == 10.0);
  CHECK(d.points()(2000, 0) == 20.0);
  CHECK(d.values()(1000, 0) == -1000.0);
  CHECK(gen_two_domain(1.0).size() == 21);
  CHECK(gen_two_domain(0.3).size() == 67);
  CHECK_THROWS_AS(gen_two_domain(0.0), ConfigError);
  CHECK_THROWS_AS(gen_two_domain(2.0), ConfigError);
}

TEST_CASE("three-domain system") {
  CHECK(three_domain_value(0) == 250);
  CHECK(three_domain_value(15) == -4600);
  CHECK(three_domain_value(20) == -1500);
  CHECK(three_domain_value(10) == -1600);
  const auto d = gen_three_domain();
  REQUIRE(d.size() == 3001);
  CHECK(d.points()(2000, 0) == 20.0);
}

TEST_CASE("clean generators match their formulas everywhere") {
  const auto d = gen_three_domain(0.01);
  for (Eigen::Index i = 0; i < d.points().rows(); ++i) {
    const double x = d.points()(i, 0);
    double expect = 0;
    if (x < 10) expect = 50 * x * x - 100 * x + 250;
    else if (x < 20) expect = -30 * x * x + 150 * x - 100;
    else expect = -50 * x - 500;
    CHECK(std::abs(d.values()(i, 0) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("quadratic 2D system") {
  CHECK(quad_2d_value(0, 0) == 0);
  CHECK(quad_2d_value(1, 1) == 2);
  CHECK(quad_2d_value(0.5, 0.5) == doctest::Approx(-1.25));
  const auto d = gen_quad_2d();
  REQUIRE(d.size() == 121);
  CHECK(d.input_dim() == 2);
  // x varies fastest.
  CHECK(d.points()(1, 0) == doctest::Approx(0.1));
  CHECK(d.points()(1, 1) == 0.0);
  CHECK(d.values()(120, 0) == 2.0);
}

TEST_CASE("vector 2D system") {
  const auto g = unit_grid();
  const auto d = gen_vector_2d(g);
  REQUIRE(d.output_dim() == 2);
  CHECK(d.values().allFinite());
  int free = 0;
  for (Eigen::Index i = 0; i < d.points().rows(); ++i) {
    if (vector_2d_is_free_stream(g, d.points()(i, 0), d.points()(i, 1))) {
      ++free;
      CHECK(d.values()(i, 0) == 1.0);
      CHECK(d.values()(i, 1) == 0.0);
    }
  }
  CHECK(free == 59);
  // The three grid points on the separating line are not free stream.
  CHECK_FALSE(vector_2d_is_free_stream(g, 0.0, 0.3));
  CHECK_FALSE(vector_2d_is_free_stream(g, 0.5, 0.5));
  CHECK_FALSE(vector_2d_is_free_stream(g, 1.0, 0.7));
  CHECK(vector_2d_is_free_stream(g, 0.0, 0.4));
}

TEST_CASE("noise injection hits the requested SNR") {
  const auto clean = gen_two_domain();
  for (double snr : {0.0, 5.0, 10.0, 20.0, 40.0}) {
    const auto noisy = add_noise(clean, {snr, 42});
    CHECK(std::abs(achieved_snr(clean, noisy) - snr) < 1e-9);
  }
  const auto noisy = add_noise(clean, {10.0, 1});
  const double ratio = (noisy.values() - clean.values()).squaredNorm() / clean.value_energy();
  CHECK(ratio == doctest::Approx(0.1).epsilon(1e-12));

  CHECK(add_noise(clean, {10.0, 5}) == add_noise(clean, {10.0, 5}));
  CHECK_FALSE(add_noise(clean, {10.0, 5}) == add_noise(clean, {10.0, 6}));
  CHECK(add_noise(clean, {10.0, 5}).points() == clean.points());
}

TEST_CASE("SNR of known noise energies") {
  const auto clean = SampleSet::from_1d(std::vector<double>{0, 1}, std::vector<double>{3, 4});  // energy 25
  CHECK(achieved_snr(clean, SampleSet::from_1d(std::vector<double>{0, 1}, std::vector<double>{6, 8})) ==
        doctest::Approx(0.0));
  CHECK(achieved_snr(clean, SampleSet::from_1d(std::vector<double>{0, 1}, std::vector<double>{3, 4.5})) ==
        doctest::Approx(20.0));
  CHECK_THROWS_AS(achieved_snr(clean, clean), DataError);
}

TEST_CASE("noise needs a non-zero signal") {
  const auto zero = SampleSet::from_1d(std::vector<double>{0, 1}, std::vector<double>{0, 0});
  CHECK_THROWS_AS(add_noise(zero, {10.0, 1}), DataError);
  CHECK_THROWS_AS(add_noise(gen_two_domain(1.0), {INFINITY, 1}), ConfigError);
}

TEST_CASE("vector noise covers both components") {
  const auto clean = gen_vector_2d();
  const auto noisy = add_noise(clean, {20.0, 3});
  CHECK(std::abs(achieved_snr(clean, noisy) - 20.0) < 1e-9);
  CHECK((noisy.values().col(1) - clean.values().col(1)).squaredNorm() > 0.0);
}
