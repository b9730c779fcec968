#pragma once

// Continued fractions and closed forms for chain automata with arbitrary
// series weights. `away`, `back` and `loop` follow automata.hpp: the edge
// leaving level i outward, the edge returning to level i, and the loop at
// level i.
//
// Closed forms take weights at some working order W and return a series of
// the requested order; they throw OrderExceeded when W is too small to cover
// the valuation lost in exact division.

#include <cstddef>
#include <span>

#include "fibpaths/automata.hpp"
#include "fibpaths/series.hpp"

namespace fibpaths {

/// Bottom-up continued fraction
///   E_i = 1 / (1 - loop_i - away_i back_i E_{i+1}),  E_depth = 1/(1 - loop_depth)
/// starting at `first` and running `depth` levels further. Levels past the
/// end of `levels` repeat the last one.
Series chain_fraction(std::span<const Level> levels, std::size_t depth,
                      std::size_t order, std::size_t first = 0);

/// Two-sided assembly at level 0:
///   1 / (1 - loop_0 - away_0 back_0 E_1 - away'_0 back'_0 E'_1).
Series bilateral_fraction(const Level& level0, const Level& mirror0,
                          const Series& tail, const Series& mirror_tail,
                          std::size_t order);

/// bilateral_fraction with both tails evaluated by chain_fraction at `depth`
/// (levels 1..depth on each side). `mirror` empty means symmetric.
Series bilateral_chain_fraction(std::span<const Level> levels,
                                std::span<const Level> mirror,
                                std::size_t depth, std::size_t order);

/// Constant-weight limit of chain_fraction:
///   (1 - h - sqrt((1-h)^2 - 4fg)) / (2fg).
Series closed_excursions(const Series& away, const Series& back,
                         const Series& loop, std::size_t order);

/// Constant-weight limit of bilateral_chain_fraction:
///   1 / sqrt((1-h)^2 - 4fg).
Series closed_bilateral_excursions(const Series& away, const Series& back,
                                   const Series& loop, std::size_t order);

/// All states final, one-sided, constant weights:
///   (1 - 2f - h - sqrt((1-h)^2 - 4fg)) / (2f (f + g + h - 1)).
Series closed_prefixes(const Series& away, const Series& back,
                       const Series& loop, std::size_t order);

/// All states final, one-sided, as the sum over the level j where the walk
/// ends: E_0 + sum_{j>=1} (prod_{i<j} away_i E_i) E_j, each E_i a
/// chain_fraction of the given depth below level i. The sum stops once the
/// product's valuation exceeds `order`.
Series prefix_sum(std::span<const Level> levels, std::size_t depth,
                  std::size_t order);

/// All states final, two-sided, symmetric constant weights: 1/(1 - f - g - h).
Series closed_bilateral_prefixes(const Series& away, const Series& back,
                                 const Series& loop, std::size_t order);

/// Two-sided all-final GF from the one-sided pieces on each side:
///   (E' G + E G' - E E') / (E + E' - E E' (1 - loop_0)).
Series assemble_bilateral_prefixes(const Series& excursions,
                                   const Series& mirror_excursions,
                                   const Series& prefixes,
                                   const Series& mirror_prefixes,
                                   const Series& loop0, std::size_t order);

/// assemble_bilateral_prefixes with every piece evaluated by chain_fraction
/// and prefix_sum at `depth`. `mirror` empty means symmetric.
Series bilateral_prefix_fraction(std::span<const Level> levels,
                                 std::span<const Level> mirror,
                                 std::size_t depth, std::size_t order);

}  // namespace fibpaths
