#include "fibpaths/families.hpp"

#include "fibpaths/contfrac.hpp"
#include "fibpaths/kfib.hpp"
#include "fibpaths/oracle.hpp"

namespace fibpaths {

std::string_view to_string(FamilyKind f) {
  switch (f) {
    case FamilyKind::Fib: return "fib";
    case FamilyKind::Grand: return "grand";
    case FamilyKind::Prefix: return "prefix";
    case FamilyKind::GrandPrefix: return "grand-prefix";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::ContinuedFraction: return "cf";
    case Method::Automaton: return "automaton";
    case Method::Formula: return "formula";
    case Method::Brute: return "brute";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view s) {
  for (FamilyKind f : kAllFamilies) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  for (Method m : kAllMethods) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

bool method_available(FamilyKind family, Method method) {
  return !(family == FamilyKind::GrandPrefix && method == Method::Formula);
}

Level path_level(unsigned k, std::size_t order) {
  const Series z = Series::monomial(1, order);
  const Series horizontal = z * inv(poly({1, -static_cast<long>(k), -1}, order));
  return Level{z, z, horizontal};
}

namespace {

bool two_sided(FamilyKind f) {
  return f == FamilyKind::Grand || f == FamilyKind::GrandPrefix;
}

bool all_final(FamilyKind f) {
  return f == FamilyKind::Prefix || f == FamilyKind::GrandPrefix;
}

// Polynomial closed forms in terms of
//   A = 1 - (k+1)z - z^2,  B = 1 - kz - z^2,  disc = A^2 - 4z^2 B^2.
Series closed_form(FamilyKind family, unsigned k, std::size_t order) {
  const std::size_t w = order + 2;
  const long kk = static_cast<long>(k);
  const Series a = poly({1, -(kk + 1), -1}, w);
  const Series b = poly({1, -kk, -1}, w);
  const Series z = Series::monomial(1, w);
  const Series z2 = Series::monomial(2, w);

  if (family == FamilyKind::GrandPrefix) {
    return (b * inv(poly({1, -(kk + 3), 2 * kk - 1, 2}, w))).truncated(order);
  }
  const Series root = sqrt(a * a - Rational(4) * z2 * b * b);
  switch (family) {
    case FamilyKind::Fib:
      return div(a - root, Rational(2) * z2 * b).truncated(order);
    case FamilyKind::Grand:
      return (b * inv(root)).truncated(order);
    case FamilyKind::Prefix: {
      const Series one = Series::constant(1, w);
      const Series num = (one - Rational(2) * z) * b - z - root;
      const Series den =
          Rational(2) * z * ((Rational(2) * z - one) * b + z);
      return div(num, den).truncated(order);
    }
    default:
      break;
  }
  throw std::logic_error("closed_form: unhandled family");
}

Series continued_fraction(FamilyKind family, unsigned k, std::size_t depth,
                          std::size_t order) {
  const std::vector<Level> levels{path_level(k, order)};
  switch (family) {
    case FamilyKind::Fib:
      return chain_fraction(levels, depth, order);
    case FamilyKind::Grand:
      return bilateral_chain_fraction(levels, {}, depth, order);
    case FamilyKind::Prefix:
      return prefix_sum(levels, depth, order);
    case FamilyKind::GrandPrefix:
      return bilateral_prefix_fraction(levels, {}, depth, order);
  }
  throw std::logic_error("continued_fraction: unhandled family");
}

Series from_integers(const std::vector<Integer>& counts) {
  std::vector<Rational> c(counts.begin(), counts.end());
  return Series(std::move(c), counts.size() - 1);
}

Integer ballot(unsigned numer, unsigned denom, const Integer& value) {
  Integer scaled = value * numer;
  if (!mpz_divisible_ui_p(scaled.get_mpz_t(), denom)) {
    throw std::logic_error("ballot term is not integral");
  }
  mpz_divexact_ui(scaled.get_mpz_t(), scaled.get_mpz_t(), denom);
  return scaled;
}

}  // namespace

ChainSpec family_chain(FamilyKind family, unsigned k, std::size_t depth,
                       std::size_t order) {
  ChainSpec spec;
  spec.kind = two_sided(family) ? ChainKind::Bilinear : ChainKind::Linear;
  spec.finals = all_final(family) ? FinalStates::All : FinalStates::InitialOnly;
  spec.depth = depth;
  spec.levels = {path_level(k, order)};
  return spec;
}

std::size_t default_family_depth(FamilyKind family, Method method,
                                 std::size_t order) {
  if (method == Method::Automaton) {
    return default_depth(
        all_final(family) ? FinalStates::All : FinalStates::InitialOnly, order);
  }
  return (order + 1) / 2 + 1;
}

Integer coeff_fib(unsigned k, unsigned t) {
  Integer total = 0;
  for (unsigned n = 0; 2 * n <= t; ++n) {
    const Integer cat = catalan(n);
    for (unsigned m = 0; m <= t - 2 * n; ++m) {
      total += binom(m + 2 * n, m) * cat *
               convolved_gould(k, t - 2 * n - m, m);
    }
  }
  return total;
}

Integer coeff_grand(unsigned k, unsigned t) {
  if (t == 0) return 1;
  Integer total = kfib(k + 1, t);
  for (unsigned n = 1; 2 * n <= t; ++n) {
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
    for (unsigned m = 0; 2 * n + 2 * m <= t; ++m) {
      const Integer paths = two_n * ballot(n, n + 2 * m, binom(n + 2 * m, m));
      for (unsigned l = 0; 2 * n + 2 * m + l <= t; ++l) {
        total += paths * binom(l + 2 * n + 2 * m, l) *
                 convolved_gould(k, t - 2 * n - 2 * m - l, l);
      }
    }
  }
  return total;
}

Integer coeff_prefix(unsigned k, unsigned t) {
  Integer total = 0;
  for (unsigned n = 0; n <= t; ++n) {
    for (unsigned m = 0; n + 2 * m <= t; ++m) {
      for (unsigned l = 0; n + 2 * m + l <= t; ++l) {
        const Integer shape =
            ballot(n + 1, n + m + 1, multinom(n + 2 * m + l, m, l, m + n));
        total += shape * convolved_gould(k, t - 2 * m - n - l, l);
      }
    }
  }
  return total;
}

Series gf(const FamilyParams& p) {
  if (p.k == 0) {
    throw FamilyError(FamilyError::Code::InvalidParams, "k must be >= 1");
  }
  if (!method_available(p.family, p.method)) {
    throw FamilyError(FamilyError::Code::MethodUnavailable,
                      "no coefficient formula for the " +
                          std::string(to_string(p.family)) + " family");
  }
  const std::size_t depth =
      p.depth.value_or(default_family_depth(p.family, p.method, p.order));

  Series result(p.order);
  switch (p.method) {
    case Method::Closed:
      result = closed_form(p.family, p.k, p.order);
      break;
    case Method::ContinuedFraction:
      result = continued_fraction(p.family, p.k, depth, p.order);
      break;
    case Method::Automaton:
      result = solve(build_chain(family_chain(p.family, p.k, depth, p.order)),
                     p.order);
      break;
    case Method::Formula: {
      std::vector<Integer> counts;
      for (unsigned t = 0; t <= p.order; ++t) {
        switch (p.family) {
          case FamilyKind::Fib: counts.push_back(coeff_fib(p.k, t)); break;
          case FamilyKind::Grand: counts.push_back(coeff_grand(p.k, t)); break;
          default: counts.push_back(coeff_prefix(p.k, t)); break;
        }
      }
      result = from_integers(counts);
      break;
    }
    case Method::Brute: {
      if (p.order > oracle::kMaxCountLength) {
        throw oracle::BudgetExceeded(
            "brute force supports n <= " +
            std::to_string(oracle::kMaxCountLength));
      }
      std::vector<Integer> counts;
      for (unsigned t = 0; t <= p.order; ++t) {
        counts.push_back(oracle::count_paths(p.family, p.k, t));
      }
      result = from_integers(counts);
      break;
    }
  }

  if (!result.is_integral()) {
    throw FamilyError(FamilyError::Code::NonIntegralResult,
                      std::string(to_string(p.family)) + " k=" +
                          std::to_string(p.k) + " via " +
                          std::string(to_string(p.method)) +
                          " produced a non-integral coefficient");
  }
  return result;
}

PathCountReport sequence(FamilyKind family, unsigned k, std::size_t n_max,
                         Method method, std::optional<std::size_t> depth) {
  const Series s = gf(FamilyParams{family, k, n_max, method, depth});
  return PathCountReport{family, k, method, n_max, s.integers()};
}

}  // namespace fibpaths
