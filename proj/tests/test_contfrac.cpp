#include "doctest.h"

#include <vector>

#include "fibpaths/automata.hpp"
#include "fibpaths/contfrac.hpp"
#include "fibpaths/families.hpp"
#include "fibpaths/kfib.hpp"
#include "support/properties.hpp"

using namespace fibpaths;
using fibpaths::testing::as_longs;

namespace {

Series z_(std::size_t order) { return Series::monomial(1, order); }
Series one(std::size_t order) { return Series::constant(1, order); }

Level motzkin_level(std::size_t order) {
  return Level{z_(order), z_(order), z_(order)};
}

}  // namespace

TEST_CASE("chain_fraction at depth zero is a single loop") {
  const std::size_t order = 8;
  const Level l = path_level(3, order);
  const std::vector<Level> levels{l};
  CHECK(chain_fraction(levels, 0, order) == inv(one(order) - l.loop));
}

TEST_CASE("chain_fraction reproduces Motzkin and fib rows") {
  const std::vector<Level> motzkin{motzkin_level(12)};
  CHECK(as_longs(chain_fraction(motzkin, 6, 12), 9) ==
        std::vector<long>{1, 1, 2, 4, 9, 21, 51, 127, 323, 835});

  const std::size_t order = 10;
  const std::vector<Level> k2{path_level(2, order)};
  CHECK(as_longs(chain_fraction(k2, 6, order), order) ==
        std::vector<long>{1, 1, 4, 13, 47, 168, 610, 2226, 8185, 30283, 112736});
}

TEST_CASE("closed excursions") {
  const std::size_t order = 16;
  const std::size_t w = order + 2;
  CHECK(as_longs(closed_excursions(z_(w), z_(w), z_(w), order), 6) ==
        std::vector<long>{1, 1, 2, 4, 9, 21, 51});

  // Without loops only even lengths survive, counted by Catalan numbers.
  const Series dyck = closed_excursions(z_(w), z_(w), Series(w), order);
  for (std::size_t n = 0; n <= order; ++n) {
    CHECK(dyck[n] == (n % 2 ? Integer(0) : catalan(unsigned(n / 2))));
  }

  CHECK_THROWS_AS(closed_excursions(z_(order), z_(order), z_(order), order),
                  SeriesError);
}

TEST_CASE("closed bilateral excursions") {
  const std::size_t order = 12;
  const std::size_t w = order + 2;
  CHECK(as_longs(closed_bilateral_excursions(z_(w), z_(w), z_(w), order), 6) ==
        std::vector<long>{1, 1, 3, 7, 19, 51, 141});
  const Level k1 = path_level(1, w);
  CHECK(as_longs(closed_bilateral_excursions(k1.away, k1.back, k1.loop, order), 6) ==
        std::vector<long>{1, 1, 4, 11, 36, 115, 378});
  CHECK(as_longs(closed_bilateral_excursions(z_(w), z_(w), Series(w), order), 6) ==
        std::vector<long>{1, 0, 2, 0, 6, 0, 20});
}

TEST_CASE("bilateral_fraction") {
  const std::size_t order = 10;
  const std::vector<Level> k2{path_level(2, order)};
  const Series g = bilateral_chain_fraction(k2, {}, 6, order);
  CHECK(as_longs(g, 7) == std::vector<long>{1, 1, 5, 16, 63, 237, 920, 3573});

  // With nothing on the negative side it collapses to the one-sided chain.
  const Level dead{Series(order), Series(order), Series(order)};
  const Series tail = chain_fraction(k2, 5, order, 1);
  CHECK(bilateral_fraction(k2[0], dead, tail, Series(order), order) ==
        chain_fraction(k2, 6, order));
}

TEST_CASE("closed prefixes") {
  const std::size_t order = 12;
  const std::size_t w = order + 2;
  CHECK(as_longs(closed_prefixes(z_(w), z_(w), z_(w), order), 7) ==
        std::vector<long>{1, 2, 5, 13, 35, 96, 267, 750});
  const Level k1 = path_level(1, w);
  CHECK(as_longs(closed_prefixes(k1.away, k1.back, k1.loop, order), 5) ==
        std::vector<long>{1, 2, 6, 19, 62, 205});
}

TEST_CASE("prefix_sum equals the closed prefix form") {
  const std::size_t order = 14;
  for (unsigned k = 1; k <= 4; ++k) {
    const Level l = path_level(k, order + 2);
    const std::vector<Level> levels{path_level(k, order)};
    CHECK(prefix_sum(levels, order, order) ==
          closed_prefixes(l.away, l.back, l.loop, order));
  }
}

TEST_CASE("closed bilateral prefixes") {
  const std::size_t order = 10;
  const Series p = closed_bilateral_prefixes(z_(order), z_(order), Series(order), order);
  for (std::size_t n = 0; n <= order; ++n) CHECK(p[n] == Rational(Integer(1) << n));

  const Level k1 = path_level(1, order);
  CHECK(as_longs(closed_bilateral_prefixes(k1.away, k1.back, k1.loop, order), 5) ==
        std::vector<long>{1, 3, 10, 35, 124, 441});
}

TEST_CASE("two-sided assembly with unequal sides matches an automaton") {
  const std::size_t order = 10;
  std::vector<Level> levels, mirror;
  for (long i = 0; i < 4; ++i) {
    levels.push_back(Level{poly({0, 2}, order), z_(order), poly({0, 0, i + 1}, order)});
    mirror.push_back(Level{z_(order), poly({0, 3}, order), poly({0, i}, order)});
  }
  ChainSpec spec{ChainKind::Bilinear, FinalStates::All, order, levels, mirror};
  const Series expected = solve(build_chain(spec), order);
  CHECK(bilateral_prefix_fraction(levels, mirror, order, order) == expected);

  spec.finals = FinalStates::InitialOnly;
  CHECK(bilateral_chain_fraction(levels, mirror, order, order) ==
        solve(build_chain(spec), order));
}

TEST_CASE("excursion functional equations") {
  const std::size_t order = 20;
  const std::size_t w = order + 2;
  for (unsigned k = 1; k <= 4; ++k) {
    const Level l = path_level(k, w);
    const Series b = closed_excursions(l.away, l.back, l.loop, order);
    const Series f = l.away.truncated(order), g = l.back.truncated(order),
                 h = l.loop.truncated(order);
    // fg B^2 - (1 - h) B + 1 = 0
    CHECK((f * g * b * b - (one(order) - h) * b + one(order)).is_zero());
    // Two-sided excursions factor through one-sided ones.
    const Series bb = closed_bilateral_excursions(l.away, l.back, l.loop, order);
    CHECK(bb == inv(one(order) - h - Rational(2) * f * g * b));
  }
}

TEST_CASE("closed forms equal deep continued fractions for every family") {
  const std::size_t order = 16;
  const std::size_t s = order;
  for (unsigned k = 1; k <= 4; ++k) {
    const Level l = path_level(k, order + 2);
    const std::vector<Level> levels{path_level(k, order)};
    CHECK(closed_excursions(l.away, l.back, l.loop, order) ==
          chain_fraction(levels, s, order));
    CHECK(closed_bilateral_excursions(l.away, l.back, l.loop, order) ==
          bilateral_chain_fraction(levels, {}, s, order));
    CHECK(closed_prefixes(l.away, l.back, l.loop, order) ==
          prefix_sum(levels, s, order));
    CHECK(closed_bilateral_prefixes(l.away, l.back, l.loop, order) ==
          bilateral_prefix_fraction(levels, {}, s, order));
  }
}

TEST_CASE("depth stability of every continued fraction") {
  const auto r = fibpaths::testing::cf_depth_stability();
  CHECK(r.cases == 4 * 8 * 4);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}
