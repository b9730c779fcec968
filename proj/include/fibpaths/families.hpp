#pragma once

// The four k-Fibonacci path families: Motzkin-like paths with steps U, D and
// horizontal steps H_l of length l carrying F_{k,l} colors.
//
//   fib           never below the axis, ends on the axis
//   grand         may go below the axis, ends on the axis
//   prefix        never below the axis, ends anywhere
//   grand-prefix  no constraint
//
// Every method below computes the same counting sequence. On chains the
// weights are away = back = z and loop = z / (1 - kz - z^2).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibpaths/automata.hpp"
#include "fibpaths/series.hpp"

namespace fibpaths {

enum class FamilyKind { Fib, Grand, Prefix, GrandPrefix };
enum class Method { Closed, ContinuedFraction, Automaton, Formula, Brute };

inline constexpr FamilyKind kAllFamilies[] = {
    FamilyKind::Fib, FamilyKind::Grand, FamilyKind::Prefix,
    FamilyKind::GrandPrefix};
inline constexpr Method kAllMethods[] = {Method::Closed,
                                         Method::ContinuedFraction,
                                         Method::Automaton, Method::Formula,
                                         Method::Brute};

std::string_view to_string(FamilyKind f);
std::string_view to_string(Method m);
std::optional<FamilyKind> parse_family(std::string_view s);
std::optional<Method> parse_method(std::string_view s);

bool method_available(FamilyKind family, Method method);

struct FamilyParams {
  FamilyKind family = FamilyKind::Fib;
  unsigned k = 1;
  std::size_t order = kDefaultOrder;
  Method method = Method::Closed;
  // Truncation depth for cf/automaton; defaults to an exact depth.
  std::optional<std::size_t> depth;
};

class FamilyError : public std::runtime_error {
 public:
  enum class Code { MethodUnavailable, NonIntegralResult, InvalidParams };
  FamilyError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Chain weights for parameter k, known through z^order.
Level path_level(unsigned k, std::size_t order);

/// Chain describing the family (linear/bilinear, initial/all final).
ChainSpec family_chain(FamilyKind family, unsigned k, std::size_t depth,
                       std::size_t order);

/// Depth used when FamilyParams::depth is empty.
std::size_t default_family_depth(FamilyKind family, Method method,
                                 std::size_t order);

/// Generating function through z^order by the requested method. The result
/// is checked to be integral.
Series gf(const FamilyParams& params);

/// [z^t] of the fib family by the Catalan / convolved double sum.
Integer coeff_fib(unsigned k, unsigned t);
/// [z^t] of the grand family by the ballot / convolved triple sum.
Integer coeff_grand(unsigned k, unsigned t);
/// [z^t] of the prefix family by the multinomial triple sum.
Integer coeff_prefix(unsigned k, unsigned t);

struct PathCountReport {
  FamilyKind family = FamilyKind::Fib;
  unsigned k = 1;
  Method method = Method::Closed;
  std::size_t order = 0;  // n_max
  std::vector<Integer> counts;
};

/// Counts for n = 0..n_max.
PathCountReport sequence(FamilyKind family, unsigned k, std::size_t n_max,
                         Method method,
                         std::optional<std::size_t> depth = std::nullopt);

}  // namespace fibpaths
