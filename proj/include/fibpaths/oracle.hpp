#pragma once

// Brute-force enumeration of colored paths. This is deliberately written as
// plain recursion over step sequences, sharing nothing with the series or
// automaton code it is used to check.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibpaths/families.hpp"
#include "fibpaths/series.hpp"

namespace fibpaths::oracle {

inline constexpr unsigned kMaxCountLength = 14;
inline constexpr unsigned kMaxListLength = 6;

struct Step {
  enum class Kind { Up, Down, Horizontal };
  Kind kind;
  unsigned length = 1;  // horizontal length l; 1 for U and D

  friend bool operator==(const Step&, const Step&) = default;
};

using Path = std::vector<Step>;

struct PathConstraint {
  bool nonneg;
  bool end_at_zero;
};

PathConstraint constraint_of(FamilyKind family);

/// Number of colors of a horizontal step of length l.
using ColorCount = std::function<Integer(unsigned length)>;

/// F_{k,l} colors per horizontal step of length l.
ColorCount kfib_colors(unsigned k);

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class Mode {
  Plain,     // independent recursion, no caching
  Memoized,  // caches (remaining, height); faster, not an independent check
};

/// Weighted count of the family's paths of length n.
Integer count_paths(FamilyKind family, unsigned k, unsigned n,
                    Mode mode = Mode::Plain);
Integer count_paths(PathConstraint constraint, const ColorCount& colors,
                    unsigned n, Mode mode = Mode::Plain);

struct WeightedPath {
  Path steps;
  Integer weight;  // product of color counts of its horizontal steps
};

/// Every step sequence of length n with its color multiplicity (n <= 6).
std::vector<WeightedPath> list_paths(FamilyKind family, unsigned k,
                                     unsigned n);

/// "U H2 D" style rendering.
std::string format_path(const Path& path);

}  // namespace fibpaths::oracle
