#include "fibpaths/series.hpp"

#include <algorithm>

namespace fibpaths {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> leading, std::size_t order)
    : coeffs_(std::move(leading)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("Series: empty coefficient list");
  }
  coeffs_.resize(order + 1);
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(std::size_t n, std::size_t order, const Rational& c) {
  Series s(order);
  if (n <= order) s.coeffs_[n] = c;
  return s;
}

const Rational& Series::coefficient(std::size_t n) const {
  if (n > order()) {
    throw SeriesError(SeriesErrc::OrderExceeded,
                      "coefficient " + std::to_string(n) +
                          " requested from a series of order " +
                          std::to_string(order()));
  }
  return coeffs_[n];
}

Valuation Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return Valuation{i};
  }
  return Valuation{};
}

bool Series::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
    return c.get_den() == 1;
  });
}

Series Series::truncated(std::size_t m) const {
  if (m > order()) {
    throw SeriesError(SeriesErrc::OrderExceeded,
                      "cannot extend a series of order " +
                          std::to_string(order()) + " to order " +
                          std::to_string(m));
  }
  Series s(m);
  std::copy_n(coeffs_.begin(), m + 1, s.coeffs_.begin());
  return s;
}

std::vector<Integer> Series::integers() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw SeriesError(SeriesErrc::NonIntegral,
                        "coefficient " + std::to_string(i) + " = " +
                            coeffs_[i].get_str() + " is not an integer");
    }
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

Series Series::operator-() const {
  Series s(*this);
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

Series& Series::operator+=(const Series& b) {
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& b) {
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Series& b) { return *this = *this * b; }

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series out(n);
  // Sparse inputs (z, 1 - kz - z^2, ...) are common; skip zero terms.
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j <= n; ++j) {
    if (sgn(b.coeffs_[j]) != 0) nz.push_back(j);
  }
  mpq_class term;
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j : nz) {
      if (i + j > n) break;
      term = a.coeffs_[i] * b.coeffs_[j];
      out.coeffs_[i + j] += term;
    }
  }
  return out;
}

Series operator*(const Rational& c, const Series& a) {
  Series s(a);
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

bool operator==(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  os << '[';
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << s.coeffs_[i];
  }
  return os << "] + O(z^" << s.order() + 1 << ')';
}

Series poly(std::initializer_list<long> coeffs, std::size_t order) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return poly(v, order);
}

Series poly(const std::vector<Rational>& coeffs, std::size_t order) {
  return Series(coeffs, order);
}

Series inv(const Series& a) {
  if (sgn(a[0]) == 0) {
    throw SeriesError(SeriesErrc::ZeroConstantTerm,
                      "inverse of a series with zero constant term");
  }
  const std::size_t n = a.order();
  const Rational lead_inv = 1 / a[0];
  std::vector<Rational> b(n + 1);
  b[0] = lead_inv;
  mpq_class acc;
  for (std::size_t m = 1; m <= n; ++m) {
    acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (sgn(a[i]) != 0) acc += a[i] * b[m - i];
    }
    b[m] = -acc * lead_inv;
  }
  return Series(std::move(b), n);
}

Series div(const Series& a, const Series& b) {
  const Valuation vb = b.valuation();
  if (vb.infinite()) {
    throw SeriesError(SeriesErrc::DivisionByZeroSeries,
                      "division by the zero series");
  }
  const std::size_t shift = vb.value();
  const Valuation va = a.valuation();
  if (!va.infinite() && va.value() < shift) {
    throw SeriesError(SeriesErrc::InsufficientValuation,
                      "numerator valuation " + std::to_string(va.value()) +
                          " is below denominator valuation " +
                          std::to_string(shift));
  }
  const std::size_t n = std::min(a.order(), b.order());
  if (shift > n) {
    throw SeriesError(SeriesErrc::OrderExceeded,
                      "denominator valuation exceeds the working order");
  }
  const std::size_t m = n - shift;
  std::vector<Rational> num(m + 1), den(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    num[i] = a[i + shift];
    den[i] = b[i + shift];
  }
  return Series(std::move(num), m) * inv(Series(std::move(den), m));
}

Series sqrt(const Series& a) {
  if (a[0] != 1) {
    throw SeriesError(SeriesErrc::BadConstantTerm,
                      "square root needs constant term 1, got " +
                          a[0].get_str());
  }
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  mpq_class acc;
  // b_m = (a_m - sum_{0<i<m} b_i b_{m-i}) / 2, using symmetry of the sum.
  for (std::size_t m = 1; m <= n; ++m) {
    acc = 0;
    for (std::size_t i = 1; 2 * i < m; ++i) acc += b[i] * b[m - i];
    acc *= 2;
    if (m % 2 == 0) acc += b[m / 2] * b[m / 2];
    b[m] = (a[m] - acc) / 2;
  }
  return Series(std::move(b), n);
}

Series pow(const Series& a, unsigned e) {
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace fibpaths
