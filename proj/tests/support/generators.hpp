#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ncspan/matrix.hpp"
#include "ncspan/polynomial.hpp"

namespace ncspan::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Coefficient rational(long bound = 9, long max_den = 5) {
    Coefficient c(integer(-bound, bound), integer(1, max_den));
    c.canonicalize();
    return c;
  }
  Coefficient nonzero_integer(long bound = 5) {
    long v = 0;
    while (v == 0) v = integer(-bound, bound);
    return Coefficient(v);
  }

  Word word(std::size_t length, VarIndex nvars) {
    Word w;
    for (std::size_t k = 0; k < length; ++k)
      w.letters.push_back(static_cast<VarIndex>(integer(1, nvars)));
    return w;
  }

  /// Random sparse polynomial: `terms` words of length 0..max_deg in X1..X_nvars.
  NcPolynomial polynomial(std::size_t max_deg, VarIndex nvars, std::size_t terms,
                          bool allow_constant = true) {
    NcPolynomial f;
    for (std::size_t t = 0; t < terms; ++t) {
      long lo = allow_constant ? 0 : 1;
      f.add_term(word(static_cast<std::size_t>(integer(lo, static_cast<long>(max_deg))), nvars),
                 nonzero_integer());
    }
    return f;
  }

  /// Random element of [F<X>, F<X>] of degree <= max_deg, built as a sum of commutators.
  NcPolynomial commutator_sum(std::size_t max_deg, VarIndex nvars, std::size_t summands) {
    NcPolynomial f;
    for (std::size_t s = 0; s < summands; ++s) {
      auto du = static_cast<std::size_t>(integer(1, static_cast<long>(max_deg) - 1));
      auto dv = static_cast<std::size_t>(integer(1, static_cast<long>(max_deg - du)));
      NcPolynomial u = NcPolynomial::monomial(word(du, nvars), nonzero_integer());
      NcPolynomial v = NcPolynomial::monomial(word(dv, nvars));
      f += u * v - v * u;
    }
    return f;
  }

  /// Random polynomial homogeneous of degree k in X1, other letters from X2..X_nvars.
  NcPolynomial homogeneous_in_x1(std::size_t k, VarIndex nvars, std::size_t terms,
                                 std::size_t max_extra) {
    NcPolynomial f;
    for (std::size_t t = 0; t < terms; ++t) {
      std::size_t extra = static_cast<std::size_t>(integer(0, static_cast<long>(max_extra)));
      Word w;
      for (std::size_t e = 0; e < extra; ++e)
        w.letters.push_back(static_cast<VarIndex>(integer(2, nvars)));
      for (std::size_t e = 0; e < k; ++e) {
        auto at = static_cast<std::ptrdiff_t>(integer(0, static_cast<long>(w.size())));
        w.letters.insert(w.letters.begin() + at, 1);
      }
      f.add_term(std::move(w), nonzero_integer());
    }
    return f;
  }

  MatrixQ integer_matrix(std::size_t d, long bound = 10) {
    MatrixQ m(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = integer(-bound, bound);
    return m;
  }
  MatrixQ rational_matrix(std::size_t d) {
    MatrixQ m(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = rational();
    return m;
  }
  MatrixQ trace_zero_matrix(std::size_t d, long bound = 10) {
    MatrixQ m = integer_matrix(d, bound);
    Coefficient t = 0;
    for (std::size_t k = 0; k + 1 < d; ++k) t += m(k, k);
    m(d - 1, d - 1) = -t;
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

/// Standard polynomial s_n = sum over permutations of sgn(σ) X_σ(1)...X_σ(n).
inline NcPolynomial standard_polynomial(VarIndex n) {
  std::vector<VarIndex> perm(n);
  for (VarIndex k = 0; k < n; ++k) perm[k] = k + 1;
  NcPolynomial s;
  do {
    int inversions = 0;
    for (VarIndex a = 0; a < n; ++a)
      for (VarIndex b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    s.add_term(Word(perm), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

}  // namespace ncspan::testing
