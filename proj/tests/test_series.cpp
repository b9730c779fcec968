#include "doctest.h"

#include <vector>

#include "fibpaths/series.hpp"
#include "support/properties.hpp"

using namespace fibpaths;
using fibpaths::testing::as_longs;

namespace {

// Schoolbook long division of polynomials as power series: an independent
// route to 1/a.
std::vector<Rational> long_division(const std::vector<long>& den,
                                    std::size_t order) {
  std::vector<Rational> rem(order + 1), quot;
  rem[0] = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    const Rational q = rem[n] / den[0];
    quot.push_back(q);
    for (std::size_t i = 0; i < den.size() && n + i <= order; ++i) {
      rem[n + i] -= q * den[i];
    }
  }
  return quot;
}

SeriesErrc error_of(auto&& fn) {
  try {
    fn();
  } catch (const SeriesError& e) {
    return e.code();
  }
  FAIL("expected a SeriesError");
  return SeriesErrc::NonIntegral;
}

}  // namespace

TEST_CASE("poly pads and truncates") {
  const Series p = poly({1, -2, -1}, 8);
  CHECK(p.order() == 8);
  CHECK(p.coeffs().size() == 9);
  CHECK(as_longs(p, 8) == std::vector<long>{1, -2, -1, 0, 0, 0, 0, 0, 0});

  const Series zero = poly({0}, 4);
  CHECK(zero.valuation().infinite());
  CHECK(zero.is_zero());

  CHECK(poly({1, 2, 3, 4}, 1).order() == 1);
}

TEST_CASE("the k = 1 denominator inverts to the Fibonacci numbers") {
  const Series den = poly({1, -1, -1}, 10);
  CHECK(as_longs(den, 3) == std::vector<long>{1, -1, -1, 0});
  const Series f = Series::monomial(1, 10) * inv(den);
  CHECK(as_longs(f, 10) ==
        std::vector<long>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55});
  CHECK(as_longs(inv(den), 5) == std::vector<long>{1, 1, 2, 3, 5, 8});
}

TEST_CASE("multiplication") {
  const std::size_t n = 12;
  CHECK(poly({1, 1}, n) * poly({1, -1}, n) == poly({1, 0, -1}, n));

  const Series f = poly({3, 0, -7, 2}, n);
  CHECK(f * poly({1}, n) == f);

  // Re-multiplying the expansion of z/(1-z-z^2) by its denominator gives z.
  const Series den = poly({1, -1, -1}, n);
  const Series fib = Series::monomial(1, n) * inv(den);
  CHECK(fib * den == Series::monomial(1, n));

  CHECK((poly({1, 1}, 5) * poly({1, 1}, 3)).order() == 3);
  CHECK(scale(poly({1, 2}, 3), Rational(1, 2)) ==
        poly(std::vector<Rational>{Rational(1, 2), 1}, 3));
}

TEST_CASE("inverse") {
  CHECK(as_longs(inv(poly({1, -1}, 6)), 6) ==
        std::vector<long>{1, 1, 1, 1, 1, 1, 1});

  // Grand-prefix denominator for k = 1, checked against long division.
  const std::size_t n = 12;
  const Series got = inv(poly({1, -4, 1, 2}, n));
  const auto expected = long_division({1, -4, 1, 2}, n);
  for (std::size_t i = 0; i <= n; ++i) CHECK(got[i] == expected[i]);
  // Frozen from the oracle above.
  CHECK(as_longs(got, 5) == std::vector<long>{1, 4, 15, 54, 193, 688});

  const Series half = inv(poly({2, 1}, 3));
  CHECK(half[0] == Rational(1, 2));
  CHECK(half[1] == Rational(-1, 4));
  CHECK_FALSE(half.is_integral());

  CHECK(error_of([] { inv(poly({0, 1}, 4)); }) == SeriesErrc::ZeroConstantTerm);
}

TEST_CASE("division cancels the common power of z") {
  const std::size_t n = 8;
  const Series z = Series::monomial(1, n);
  const Series q = div(Series::monomial(2, n), z);
  CHECK(q.order() == n - 1);
  CHECK(q == Series::monomial(1, n - 1));

  const Series f = poly({0, 0, 3, 1, -2}, n);
  const Series one = div(f, f);
  CHECK(one.order() == n - 2);
  CHECK(one == Series::constant(1, n - 2));

  // The k = 1 fib closed form written as an explicit quotient.
  const std::size_t w = 12;
  const Series a = poly({1, -2, -1}, w);
  const Series b = poly({1, -1, -1}, w);
  const Series z2 = Series::monomial(2, w);
  const Series root = sqrt(a * a - Rational(4) * z2 * b * b);
  const Series t = div(a - root, Rational(2) * z2 * b);
  CHECK(as_longs(t, 5) == std::vector<long>{1, 1, 3, 8, 23, 67});

  CHECK(error_of([&] { div(z, Series(n)); }) ==
        SeriesErrc::DivisionByZeroSeries);
  CHECK(error_of([&] { div(z, Series::monomial(2, n)); }) ==
        SeriesErrc::InsufficientValuation);
  // Zero numerator divides by anything nonzero.
  CHECK(div(Series(n), Series::monomial(3, n)).is_zero());
}

TEST_CASE("square root") {
  CHECK(sqrt(Series::constant(1, 5)) == Series::constant(1, 5));

  const std::size_t n = 12;
  const Series a = poly({1, -4}, n);
  const Series r = sqrt(a);
  CHECK(r * r == a);
  CHECK(as_longs(r, 6) == std::vector<long>{1, -2, -2, -4, -10, -28, -84});

  const Series m = poly({1, -2, -3}, n);
  const Series rm = sqrt(m);
  CHECK(rm * rm == m);
  CHECK(as_longs(rm, 6) == std::vector<long>{1, -1, -2, -2, -4, -8, -18});

  CHECK(error_of([] { sqrt(poly({4, 1}, 3)); }) == SeriesErrc::BadConstantTerm);
  CHECK(error_of([] { sqrt(poly({0, 1}, 3)); }) == SeriesErrc::BadConstantTerm);
}

TEST_CASE("coefficient access, integrality and valuation") {
  const Series p = poly({1, 2}, 4);
  CHECK(coefficient(p, 1) == 2);
  CHECK(error_of([&] { coefficient(p, 5); }) == SeriesErrc::OrderExceeded);
  CHECK(is_integral(p));

  const Series v = poly({0, 0, 0, 1, 0, -1}, 8);
  CHECK(valuation(v).value() == 3);
  CHECK(valuation(Series(3)).infinite());

  CHECK(error_of([&] { p.truncated(9); }) == SeriesErrc::OrderExceeded);
  CHECK(error_of([] { inv(poly({3, 1}, 2)).integers(); }) ==
        SeriesErrc::NonIntegral);
}

TEST_CASE("equality compares through the smaller order") {
  CHECK(poly({1, 2, 3}, 2) == poly({1, 2, 3, 4}, 5));
  CHECK_FALSE(poly({1, 2, 3}, 2) == poly({1, 2, 4}, 5));
}

TEST_CASE("pow") {
  const Series a = poly({1, 1}, 6);
  CHECK(as_longs(pow(a, 4), 6) == std::vector<long>{1, 4, 6, 4, 1, 0, 0});
  CHECK(pow(a, 0) == Series::constant(1, 6));
}

TEST_CASE("ring axioms on random series") {
  const auto r = fibpaths::testing::ring_axioms();
  CHECK(r.cases == 200);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("inverse round-trip on random series") {
  const auto r = fibpaths::testing::inv_roundtrip();
  CHECK(r.cases == 200);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("square-root round-trip on random series") {
  const auto r = fibpaths::testing::sqrt_roundtrip();
  CHECK(r.cases == 200);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("division is exact whenever it succeeds") {
  const auto r = fibpaths::testing::div_exactness();
  CHECK(r.cases == 200);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}
