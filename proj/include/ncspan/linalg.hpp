#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncspan/errors.hpp"
#include "ncspan/matrix.hpp"

namespace ncspan {

/// Dense rectangular rational matrix used for small linear solves.
using DenseQ = std::vector<std::vector<Coefficient>>;

/// Solves A x = b exactly by Gauss-Jordan elimination. Returns one solution
/// (free variables set to zero) or nullopt when the system is inconsistent.
inline std::optional<std::vector<Coefficient>> solve_linear(DenseQ a, std::vector<Coefficient> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    std::swap(b[sel], b[r]);
    const Coefficient inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || a[o][c] == 0) continue;
      const Coefficient factor = a[o][c];
      for (std::size_t k = c; k < cols; ++k) a[o][k] -= factor * a[r][k];
      b[o] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t o = r; o < rows; ++o)
    if (b[o] != 0) return std::nullopt;
  std::vector<Coefficient> x(cols, 0);
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[k];
  return x;
}

inline std::optional<MatrixQ> inverse(const MatrixQ& m) {
  const std::size_t d = m.dim();
  DenseQ aug(d, std::vector<Coefficient>(2 * d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug[r][c] = m(r, c);
    aug[r][d + r] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t sel = c;
    while (sel < d && aug[sel][c] == 0) ++sel;
    if (sel == d) return std::nullopt;
    std::swap(aug[sel], aug[c]);
    const Coefficient inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t o = 0; o < d; ++o) {
      if (o == c || aug[o][c] == 0) continue;
      const Coefficient factor = aug[o][c];
      for (std::size_t k = 0; k < 2 * d; ++k) aug[o][k] -= factor * aug[c][k];
    }
  }
  MatrixQ out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(r, c) = aug[r][d + c];
  return out;
}

/// Given values[j] = sum_i lambdas[j]^i c_i for i = 0..m, recovers (c_0, ..., c_m).
inline std::vector<MatrixQ> vandermonde_extract(const std::vector<Coefficient>& lambdas,
                                                const std::vector<MatrixQ>& values) {
  const std::size_t n = lambdas.size();
  if (values.size() != n) throw DimensionMismatch(n, values.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (lambdas[a] == lambdas[b]) throw DuplicateNodes();
  if (n == 0) return {};
  const std::size_t d = values[0].dim();
  for (const auto& v : values) v.check_same(values[0]);

  // Invert the Vandermonde matrix once, then apply it to all d² entries.
  MatrixQ vdm(n);
  for (std::size_t j = 0; j < n; ++j) {
    Coefficient p = 1;
    for (std::size_t i = 0; i < n; ++i) {
      vdm(j, i) = p;
      p *= lambdas[j];
    }
  }
  MatrixQ vinv = *inverse(vdm);
  std::vector<MatrixQ> coeffs(n, MatrixQ(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) coeffs[i].add_scaled(vinv(i, j), values[j]);
  return coeffs;
}

/// Nodes 0, 1, ..., m.
inline std::vector<Coefficient> default_nodes(std::size_t m) {
  std::vector<Coefficient> out;
  for (std::size_t k = 0; k <= m; ++k) out.emplace_back(static_cast<long>(k));
  return out;
}

struct Conjugation {
  MatrixQ p;  // invertible change of basis
  MatrixQ n;  // p⁻¹ m p, zero diagonal
};

namespace detail {

inline std::vector<Coefficient> apply(const MatrixQ& m, const std::vector<Coefficient>& v) {
  std::vector<Coefficient> out(m.dim(), 0);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

// Rank of a list of vectors.
inline std::size_t rank_of(DenseQ rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t o = rank + 1; o < rows.size(); ++o) {
      if (rows[o][c] == 0) continue;
      const Coefficient factor = rows[o][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[o][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// A basis of Q^d whose first two vectors are v and m v, for non-scalar m.
inline MatrixQ cyclic_start_basis(const MatrixQ& m) {
  const std::size_t d = m.dim();
  auto e = [d](std::size_t k) {
    std::vector<Coefficient> v(d, 0);
    v[k] = 1;
    return v;
  };
  std::vector<std::vector<Coefficient>> probes;
  for (std::size_t k = 0; k < d; ++k) probes.push_back(e(k));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      auto v = e(a);
      v[b] = 1;
      probes.push_back(v);
    }
  for (const auto& v : probes) {
    auto mv = apply(m, v);
    DenseQ cols{v, mv};
    if (rank_of(cols) < 2) continue;
    for (std::size_t k = 0; k < d && cols.size() < d; ++k) {
      cols.push_back(e(k));
      if (rank_of(cols) < cols.size()) cols.pop_back();
    }
    MatrixQ p(d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) p(r, c) = cols[c][r];
    return p;
  }
  throw PreconditionViolated("cyclic_start_basis: matrix is scalar");
}

}  // namespace detail

/// Finds invertible P with P⁻¹ M P having zero diagonal, for trace-zero M.
///
/// Peels one coordinate at a time: if the trailing block is not scalar, pick v
/// with v, Mv independent and use (v, Mv, ...) as the new basis, which puts a
/// zero in the leading diagonal slot; the remaining block still has trace zero.
/// A trace-zero scalar block is zero.
inline Conjugation zero_diagonal_conjugate(const MatrixQ& m) {
  if (trace(m) != 0) throw NonzeroTrace();
  const std::size_t d = m.dim();
  MatrixQ p = MatrixQ::identity(d);
  MatrixQ n = m;
  for (std::size_t start = 0; start + 1 < d; ++start) {
    const std::size_t k = d - start;
    MatrixQ block(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) block(r, c) = n(start + r, start + c);
    bool diag_zero = true;
    for (std::size_t r = 0; r < k; ++r) diag_zero = diag_zero && block(r, r) == 0;
    if (diag_zero) break;
    if (block.is_scalar()) break;  // trace zero => block is zero

    MatrixQ q = detail::cyclic_start_basis(block);
    MatrixQ step = MatrixQ::identity(d);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) step(start + r, start + c) = q(r, c);
    MatrixQ step_inv = *inverse(step);
    n = step_inv * n * step;
    p = p * step;
  }
  return {std::move(p), std::move(n)};
}

/// Returns (A, B) with [A, B] = M for trace-zero M.
inline std::pair<MatrixQ, MatrixQ> commutator_decomposition(const MatrixQ& m) {
  if (trace(m) != 0) throw NonzeroTrace();
  const std::size_t d = m.dim();
  if (m.is_zero()) return {MatrixQ(d), MatrixQ(d)};

  auto [p, n] = zero_diagonal_conjugate(m);
  std::vector<Coefficient> diag;
  for (std::size_t k = 0; k < d; ++k) diag.emplace_back(static_cast<long>(k + 1));
  MatrixQ a0 = MatrixQ::diagonal(diag);
  MatrixQ b0(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (r != c) b0(r, c) = n(r, c) / Coefficient(static_cast<long>(r) - static_cast<long>(c));

  MatrixQ p_inv = *inverse(p);
  return {p * a0 * p_inv, p * b0 * p_inv};
}

}  // namespace ncspan
