#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fparadox/error.hpp"
#include "fparadox/powerlaw.hpp"
#include "oracles.hpp"

using namespace fparadox;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fparadox::Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("normalization constant") {
  CHECK(normalization_constant({2.0, 1.0, kInfinite}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(normalization_constant({3.0, 1.0, kInfinite}) == doctest::Approx(2.0).epsilon(1e-15));
  // 1 / (quadrature of k^-2.5 on [1, 100]), mpmath at 30 digits.
  CHECK(rel(normalization_constant({2.5, 1.0, 100.0}), 1.5015015015015015) < 1e-14);

  CHECK(code_of([] { normalization_constant({2.0, 5.0, 5.0}); }) == ErrorCode::DegenerateSupport);
  CHECK(code_of([] { normalization_constant({0.5, 1.0, kInfinite}); }) == ErrorCode::Divergent);
  CHECK(code_of([] { normalization_constant({1.0, 1.0, kInfinite}); }) == ErrorCode::Divergent);
  CHECK(code_of([] { normalization_constant({2.0, 0.5, 10.0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { normalization_constant({2.0, 10.0, 5.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("pdf") {
  const PowerLawSpec pure{2.0, 1.0, kInfinite};
  CHECK(pdf(pure, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pdf(pure, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(rel(pdf({2.5, 2.0, 50.0}, 10.0), 0.0135246047026196957) < 1e-13);
  CHECK(pdf({2.5, 2.0, 50.0}, 1.0) == 0.0);
  CHECK(pdf({2.5, 2.0, 50.0}, 51.0) == 0.0);
}

TEST_CASE("pdf integrates to one") {
  for (double a : {1.1, 1.5, 2.0, 2.5, 3.0, 3.5}) {
    for (double hi : {10.0, 1000.0}) {
      const PowerLawSpec spec{a, 1.0, hi};
      const long double mass = normalization_constant(spec) * oracle::power_moment(a, 1.0, hi, 0);
      CHECK(std::abs(static_cast<double>(mass) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("cdf") {
  const PowerLawSpec spec{2.0, 1.0, 100.0};
  CHECK(cdf(spec, 1.0) == 0.0);
  CHECK(cdf(spec, 100.0) == 1.0);
  CHECK(rel(cdf(spec, 10.0), 10.0 / 11.0) < 1e-14);
  CHECK(cdf({3.0, 1.0, kInfinite}, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
  for (double k : {1.5, 3.0, 42.0}) {
    CHECK(rel(cdf({1.7, 1.0, 100.0}, k), oracle::power_cdf(1.7, 1.0, 100.0, k)) < 1e-12);
  }
}

TEST_CASE("predict matches quadrature away from singular points") {
  for (double a : {1.1, 1.5, 1.9, 2.5, 2.9, 3.5, 4.5}) {
    for (double lo : {1.0, 2.0, 3.5}) {
      for (double hi : {10.0, 100.0, 1000.0}) {
        const auto p = predict({a, lo, hi});
        const auto q = oracle::quadrature_moments(a, lo, hi);
        CHECK(p.branch == Branch::General);
        CHECK(rel(p.c, static_cast<double>(q.c)) < 1e-8);
        CHECK(rel(p.mean_k, static_cast<double>(q.mean)) < 1e-8);
        CHECK(rel(p.second_moment, static_cast<double>(q.second)) < 1e-8);
        CHECK(rel(p.variance, static_cast<double>(q.variance)) < 1e-8);
        CHECK(rel(p.var_to_mean, static_cast<double>(q.var_to_mean)) < 1e-8);
        CHECK(rel(p.k_ff, static_cast<double>(q.k_ff)) < 1e-8);
      }
    }
  }
}

TEST_CASE("limit branches") {
  const double e = std::numbers::e;
  const auto at2 = predict({2.0, 1.0, e});
  CHECK(at2.branch == Branch::LimitAlpha2);
  CHECK(rel(at2.mean_k, e / (e - 1.0)) < 1e-14);
  CHECK(rel(at2.k_ff, e - 1.0) < 1e-14);
  // Quadrature on either side of the singular point.
  for (double a : {2.0 - 1e-7, 2.0 + 1e-7}) {
    const auto q = oracle::quadrature_moments(a, 1.0, e);
    CHECK(rel(at2.mean_k, static_cast<double>(q.mean)) < 1e-6);
    CHECK(rel(at2.k_ff, static_cast<double>(q.k_ff)) < 1e-6);
  }

  for (auto [lo, hi] : {std::pair{1.0, 10.0}, std::pair{2.0, 300.0}}) {
    const auto at3 = predict({3.0, lo, hi});
    CHECK(at3.branch == Branch::LimitAlpha3);
    CHECK(rel(at3.mean_k, 2.0 * lo * hi / (lo + hi)) < 1e-14);
    CHECK(rel(at3.mean_k, static_cast<double>(oracle::quadrature_moments(3.0, lo, hi).mean)) < 1e-12);
  }

  CHECK(predict({2.0 + 0.9e-6, 1.0, 10.0}).branch == Branch::LimitAlpha2);
  CHECK(predict({2.0 + 1.1e-6, 1.0, 10.0}).branch == Branch::General);
  CHECK(predict({3.0 - 0.9e-6, 1.0, 10.0}).branch == Branch::LimitAlpha3);
}

TEST_CASE("continuity across the singular points") {
  for (double centre : {2.0, 3.0}) {
    for (double hi : {10.0, 1000.0}) {
      const auto limit = predict({centre, 1.0, hi});
      for (double a : {centre - 1e-6, centre + 1e-6, centre - 2e-6, centre + 2e-6}) {
        const auto p = predict({a, 1.0, hi});
        CHECK(rel(p.mean_k, limit.mean_k) < 1e-4);
        CHECK(rel(p.k_ff, limit.k_ff) < 1e-4);
        CHECK(rel(p.var_to_mean, limit.var_to_mean) < 1e-4);
        CHECK(rel(p.variance, limit.variance) < 1e-4);
      }
    }
  }
}

TEST_CASE("prediction invariants") {
  for (double a : {1.2, 2.0, 2.3, 3.0, 3.7}) {
    for (double hi : {5.0, 50.0, 5000.0}) {
      const auto p = predict({a, 1.0, hi});
      CHECK(p.mean_k > 0.0);
      CHECK(p.variance >= 0.0);
      CHECK(rel(p.var_to_mean, p.variance / p.mean_k) < 1e-15);
      CHECK(rel(p.k_ff, p.mean_k + p.var_to_mean) < 1e-12);
      CHECK(p.k_ff >= p.mean_k);
    }
  }
}

TEST_CASE("cross-formula identity between the two limits") {
  for (auto [lo, hi] : {std::pair{1.0, 10.0}, std::pair{3.0, 7.0}, std::pair{1.5, 1e4}}) {
    CHECK(rel(predict({3.0, lo, hi}).k_ff, predict({2.0, lo, hi}).mean_k) <= 1e-12);
  }
}

TEST_CASE("infinite k_max") {
  const auto p = predict({4.0, 1.0, kInfinite});
  CHECK(p.mean_k == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(p.k_ff == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.c == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(code_of([] { predict({3.0, 1.0, kInfinite}); }) == ErrorCode::Divergent);
  CHECK(code_of([] { predict({2.5, 1.0, kInfinite}); }) == ErrorCode::Divergent);
  CHECK(code_of([] { predict({1.0, 1.0, 100.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("point mass") {
  const auto p = predict({2.7, 5.0, 5.0});
  CHECK(p.branch == Branch::Degenerate);
  CHECK(p.mean_k == 5.0);
  CHECK(p.variance == 0.0);
  CHECK(p.k_ff == 5.0);
  CHECK(p.var_to_mean == 0.0);
}

TEST_CASE("ratio monotone on an (alpha, k_max) grid") {
  for (double a = 1.2; a < 2.95; a += 0.1) {
    double prev = 0.0;
    for (double hi : {10.0, 30.0, 100.0, 300.0, 1000.0, 3000.0, 10000.0}) {
      const double r = predict({a, 1.0, hi}).var_to_mean;
      CHECK(r > prev);
      prev = r;
    }
  }
  for (double hi : {10.0, 100.0, 1000.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double a = 1.2; a <= 3.0 + 1e-9; a += 0.1) {
      const double r = predict({a, 1.0, hi}).var_to_mean;
      CHECK(r < prev);
      prev = r;
    }
  }
}

TEST_CASE("sampling") {
  const PowerLawSpec spec{2.0, 1.0, 1000.0};
  CHECK(sample_degrees(spec, 0, 7).empty());

  const auto a = sample_continuous(spec, 1000, 42);
  const auto b = sample_continuous(spec, 1000, 42);
  CHECK(a == b);
  CHECK(sample_continuous(spec, 1000, 43) != a);

  const auto draws = sample_continuous(spec, 100000, 3);
  const double d = oracle::ks_distance(draws, [](double k) { return oracle::power_cdf(2.0, 1.0, 1000.0, k); });
  CHECK(d < 0.02);

  const auto degrees = sample_degrees({2.3, 2.0, 40.0}, 5000, 11);
  for (auto k : degrees) {
    CHECK(k >= 2);
    CHECK(k <= 40);
  }
  CHECK(round_degrees({1.49, 1.5, 2.5, 7.0}) == DegreeSequence{1, 2, 3, 7});

  for (double x : sample_continuous({2.5, 1.0, kInfinite}, 1000, 5)) CHECK(x >= 1.0);
  CHECK(code_of([] { sample_degrees({2.5, 1.0, kInfinite}, 10, 1); }) == ErrorCode::InvalidArgument);
}
