#include "fibpaths/kfib.hpp"

#include <string>
#include <vector>

namespace fibpaths {

Integer kfib(unsigned k, unsigned n) {
  Integer prev = 0, cur = 1;
  if (n == 0) return prev;
  for (unsigned i = 1; i < n; ++i) {
    Integer next = k * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Series convolved_gf(unsigned k, unsigned r, std::size_t order) {
  const Series base = inv(poly({1, -static_cast<long>(k), -1}, order));
  return pow(base, r);
}

namespace {

void accumulate_compositions(const std::vector<Integer>& fib, unsigned remaining,
                             unsigned parts, const Integer& prefix,
                             Integer& total) {
  if (parts == 1) {
    total += prefix * fib[remaining];
    return;
  }
  for (unsigned j = 0; j <= remaining; ++j) {
    accumulate_compositions(fib, remaining - j, parts - 1, prefix * fib[j],
                            total);
  }
}

}  // namespace

Integer convolved_sum(unsigned k, unsigned m, unsigned r) {
  if (r == 0) throw std::invalid_argument("convolved_sum: r must be >= 1");
  // fib[j] = F_{k,j+1}
  std::vector<Integer> fib(m + 1);
  for (unsigned j = 0; j <= m; ++j) fib[j] = kfib(k, j + 1);
  Integer total = 0;
  accumulate_compositions(fib, m, r, Integer(1), total);
  return total;
}

Integer convolved_gould(unsigned k, unsigned j, unsigned r) {
  if (r == 0) return j == 0 ? 1 : 0;
  Integer total = 0;
  Integer kpow;
  for (unsigned l = 0; 2 * l <= j; ++l) {
    mpz_ui_pow_ui(kpow.get_mpz_t(), k, j - 2 * l);
    total += binom(j + r - l - 1, j - l) * binom(j - l, l) * kpow;
  }
  return total;
}

Integer catalan(unsigned n) {
  Integer c = binom(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
  return c;
}

Integer binom(unsigned n, unsigned j) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, j);
  return out;
}

Integer multinom(unsigned n, unsigned a, unsigned b, unsigned c) {
  if (static_cast<unsigned long>(a) + b + c != n) {
    throw IndexMismatch("multinom: parts " + std::to_string(a) + "+" +
                        std::to_string(b) + "+" + std::to_string(c) +
                        " do not sum to " + std::to_string(n));
  }
  return binom(n, a) * binom(n - a, b);
}

}  // namespace fibpaths
