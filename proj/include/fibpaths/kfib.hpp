#pragma once

// k-Fibonacci numbers, their convolutions, and the classical counting
// numbers the path formulas are built from. Everything is exact.

#include <cstddef>
#include <stdexcept>

#include "fibpaths/series.hpp"

namespace fibpaths {

/// F_{k,n}: F_{k,0} = 0, F_{k,1} = 1, F_{k,n+1} = k F_{k,n} + F_{k,n-1}.
Integer kfib(unsigned k, unsigned n);

/// (1 - kz - z^2)^{-r} through z^order. Coefficient j is the convolved
/// number F^{(r)}_{k,j+1}; r = 0 gives the constant 1.
Series convolved_gf(unsigned k, unsigned r, std::size_t order);

/// F^{(r)}_{k,m+1} as the sum over weak compositions j_1 + ... + j_r = m of
/// F_{k,j_1+1} ... F_{k,j_r+1}, enumerated explicitly. Requires r >= 1.
Integer convolved_sum(unsigned k, unsigned m, unsigned r);

/// F^{(r)}_{k,j+1} = sum_{l <= j/2} C(j+r-l-1, j-l) C(j-l, l) k^{j-2l}.
/// r = 0 follows the empty-product convention: 1 if j = 0, else 0.
Integer convolved_gould(unsigned k, unsigned j, unsigned r);

Integer catalan(unsigned n);
Integer binom(unsigned n, unsigned j);

class IndexMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n! / (a! b! c!); throws IndexMismatch unless a + b + c = n.
Integer multinom(unsigned n, unsigned a, unsigned b, unsigned c);

}  // namespace fibpaths
