#include "fibpaths/contfrac.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fibpaths {

namespace {

const Level& level_at(std::span<const Level> levels, std::size_t i) {
  return levels[std::min(i, levels.size() - 1)];
}

Series one(std::size_t order) { return Series::constant(1, order); }

Series fit(const Series& s, std::size_t order) {
  if (s.order() < order) {
    throw SeriesError(SeriesErrc::OrderExceeded,
                      "closed form is exact only to order " +
                          std::to_string(s.order()) + ", requested " +
                          std::to_string(order));
  }
  return s.truncated(order);
}

std::size_t working_order(const Series& a, const Series& b, const Series& c) {
  return std::min({a.order(), b.order(), c.order()});
}

Series discriminant(const Series& away, const Series& back,
                    const Series& loop) {
  const std::size_t w = working_order(away, back, loop);
  const Series one_minus_h = one(w) - loop;
  return one_minus_h * one_minus_h - Rational(4) * (away * back);
}

// Negative-side levels as a one-sided chain sharing level 0's loop.
std::vector<Level> mirror_chain(std::span<const Level> levels,
                                std::span<const Level> mirror) {
  std::vector<Level> out(mirror.empty() ? levels.begin() : mirror.begin(),
                         mirror.empty() ? levels.end() : mirror.end());
  out[0].loop = levels[0].loop;
  return out;
}

}  // namespace

Series chain_fraction(std::span<const Level> levels, std::size_t depth,
                      std::size_t order, std::size_t first) {
  if (levels.empty()) {
    throw std::invalid_argument("chain_fraction: no levels given");
  }
  const std::size_t last = first + depth;
  Series e = inv(one(order) - level_at(levels, last).loop);
  for (std::size_t i = last; i-- > first;) {
    const Level& w = level_at(levels, i);
    e = inv(one(order) - w.loop - w.away * w.back * e);
  }
  return e.truncated(order);
}

Series bilateral_fraction(const Level& level0, const Level& mirror0,
                          const Series& tail, const Series& mirror_tail,
                          std::size_t order) {
  return inv(one(order) - level0.loop - level0.away * level0.back * tail -
             mirror0.away * mirror0.back * mirror_tail)
      .truncated(order);
}

Series bilateral_chain_fraction(std::span<const Level> levels,
                                std::span<const Level> mirror,
                                std::size_t depth, std::size_t order) {
  const std::vector<Level> neg = mirror_chain(levels, mirror);
  if (depth == 0) {
    return inv(one(order) - levels[0].loop).truncated(order);
  }
  const Series tail = chain_fraction(levels, depth - 1, order, 1);
  const Series mirror_tail = chain_fraction(neg, depth - 1, order, 1);
  return bilateral_fraction(levels[0], neg[0], tail, mirror_tail, order);
}

Series closed_excursions(const Series& away, const Series& back,
                         const Series& loop, std::size_t order) {
  const std::size_t w = working_order(away, back, loop);
  const Series root = sqrt(discriminant(away, back, loop));
  const Series num = one(w) - loop - root;
  const Series den = Rational(2) * (away * back);
  return fit(div(num, den), order);
}

Series closed_bilateral_excursions(const Series& away, const Series& back,
                                   const Series& loop, std::size_t order) {
  return fit(inv(sqrt(discriminant(away, back, loop))), order);
}

Series closed_prefixes(const Series& away, const Series& back,
                       const Series& loop, std::size_t order) {
  const std::size_t w = working_order(away, back, loop);
  const Series root = sqrt(discriminant(away, back, loop));
  const Series num = one(w) - Rational(2) * away - loop - root;
  const Series den =
      Rational(2) * away * (away + back + loop - one(w));
  return fit(div(num, den), order);
}

Series prefix_sum(std::span<const Level> levels, std::size_t depth,
                  std::size_t order) {
  // E_i only depends on levels i..i+depth, so it stops changing once i
  // passes the last explicit level.
  std::vector<Series> fractions;
  auto fraction = [&](std::size_t i) -> const Series& {
    while (fractions.size() <= i) {
      const std::size_t j = fractions.size();
      if (j >= levels.size()) {
        fractions.push_back(fractions.back());
      } else {
        fractions.push_back(chain_fraction(levels, depth, order, j));
      }
    }
    return fractions[i];
  };

  Series total = fraction(0);
  Series product = one(order);
  for (std::size_t j = 1;; ++j) {
    product = product * level_at(levels, j - 1).away * fraction(j - 1);
    const Valuation v = product.valuation();
    if (v.infinite() || v.value() > order) break;
    total += product * fraction(j);
  }
  return total;
}

Series closed_bilateral_prefixes(const Series& away, const Series& back,
                                 const Series& loop, std::size_t order) {
  const std::size_t w = working_order(away, back, loop);
  return fit(inv(one(w) - away - back - loop), order);
}

Series assemble_bilateral_prefixes(const Series& excursions,
                                   const Series& mirror_excursions,
                                   const Series& prefixes,
                                   const Series& mirror_prefixes,
                                   const Series& loop0, std::size_t order) {
  const Series& e = excursions;
  const Series& em = mirror_excursions;
  const Series both = e * em;
  const Series num = em * prefixes + e * mirror_prefixes - both;
  const Series den = e + em - both * (one(loop0.order()) - loop0);
  return fit(div(num, den), order);
}

Series bilateral_prefix_fraction(std::span<const Level> levels,
                                 std::span<const Level> mirror,
                                 std::size_t depth, std::size_t order) {
  const std::vector<Level> neg = mirror_chain(levels, mirror);
  return assemble_bilateral_prefixes(
      chain_fraction(levels, depth, order), chain_fraction(neg, depth, order),
      prefix_sum(levels, depth, order), prefix_sum(neg, depth, order),
      levels[0].loop.truncated(std::min(order, levels[0].loop.order())),
      order);
}

}  // namespace fibpaths
