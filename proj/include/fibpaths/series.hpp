#pragma once

// Truncated formal power series in one variable z with exact rational
// coefficients. A Series of order N stores the coefficients of z^0..z^N.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fibpaths {

using Rational = mpq_class;
using Integer = mpz_class;

/// Default truncation order used when callers do not ask for one.
inline constexpr std::size_t kDefaultOrder = 64;

enum class SeriesErrc {
  ZeroConstantTerm,
  DivisionByZeroSeries,
  InsufficientValuation,
  BadConstantTerm,
  OrderExceeded,
  NonIntegral,
};

class SeriesError : public std::runtime_error {
 public:
  SeriesError(SeriesErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  SeriesErrc code() const noexcept { return code_; }

 private:
  SeriesErrc code_;
};

/// Index of the first nonzero coefficient; empty for the zero series.
struct Valuation {
  std::optional<std::size_t> index;

  bool infinite() const noexcept { return !index.has_value(); }
  std::size_t value() const { return index.value(); }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

class Series {
 public:
  /// The zero series of the given order.
  explicit Series(std::size_t order = kDefaultOrder);
  /// Leading coefficients zero-padded (or cut) to `order`. Empty input is
  /// rejected.
  Series(std::vector<Rational> leading, std::size_t order);

  static Series constant(const Rational& c, std::size_t order);
  /// z^n, or zero if n > order.
  static Series monomial(std::size_t n, std::size_t order,
                         const Rational& c = 1);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// [z^n]; throws OrderExceeded if n > order().
  const Rational& coefficient(std::size_t n) const;
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

  Valuation valuation() const;
  bool is_zero() const { return valuation().infinite(); }
  bool is_integral() const;

  /// Copy cut down to order m (m <= order()).
  Series truncated(std::size_t m) const;

  /// Coefficients as integers; throws NonIntegral otherwise.
  std::vector<Integer> integers() const;

  Series operator-() const;
  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b);
  Series& operator*=(const Series& b);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& c, const Series& a);

  /// Coefficientwise through min(order_a, order_b).
  friend bool operator==(const Series& a, const Series& b);

  friend std::ostream& operator<<(std::ostream& os, const Series& s);

 private:
  std::vector<Rational> coeffs_;
};

Series poly(std::initializer_list<long> coeffs, std::size_t order);
Series poly(const std::vector<Rational>& coeffs, std::size_t order);

inline Series add(const Series& a, const Series& b) { return a + b; }
inline Series sub(const Series& a, const Series& b) { return a - b; }
inline Series mul(const Series& a, const Series& b) { return a * b; }
inline Series scale(const Series& a, const Rational& c) { return c * a; }

/// Multiplicative inverse. Requires a nonzero constant term.
Series inv(const Series& a);

/// a / b with common powers of z cancelled first. The result has order
/// min(order_a, order_b) - valuation(b).
Series div(const Series& a, const Series& b);

/// The square root with constant term +1. Requires [z^0]a = 1.
Series sqrt(const Series& a);

/// a^e by repeated squaring; a^0 is the constant 1.
Series pow(const Series& a, unsigned e);

inline Rational coefficient(const Series& a, std::size_t n) {
  return a.coefficient(n);
}
inline bool is_integral(const Series& a) { return a.is_integral(); }
inline Valuation valuation(const Series& a) { return a.valuation(); }

}  // namespace fibpaths
