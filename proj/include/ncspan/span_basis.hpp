#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ncspan/errors.hpp"
#include "ncspan/matrix.hpp"

namespace ncspan {

/// The four subspaces a span of polynomial values on M_d can be.
enum class CanonicalSpace { Zero, Scalars, TraceZero, Full };

inline std::string_view to_string(CanonicalSpace s) {
  switch (s) {
    case CanonicalSpace::Zero: return "ZERO";
    case CanonicalSpace::Scalars: return "SCALARS";
    case CanonicalSpace::TraceZero: return "TRACE_ZERO";
    case CanonicalSpace::Full: return "FULL";
  }
  return "?";
}

/// Subspace of M_d kept in fully reduced row echelon form over flattened
/// (row-major) matrices. Two bases of the same d are equal iff they span the
/// same subspace.
class SpanBasis {
 public:
  using Row = std::vector<Coefficient>;

  SpanBasis() = default;
  explicit SpanBasis(std::size_t d) : dim_(d) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  MatrixQ row_matrix(std::size_t k) const { return MatrixQ::from_flat(dim_, rows_[k]); }

  /// v minus its projection onto the span along pivot coordinates; zero iff v is a member.
  Row residual(std::span<const Coefficient> v) const {
    Row r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Coefficient factor = r[pivots_[k]];
      if (factor == 0) continue;
      const Row& row = rows_[k];
      for (std::size_t c = pivots_[k]; c < r.size(); ++c)
        if (row[c] != 0) r[c] -= factor * row[c];
    }
    return r;
  }

  bool contains(const MatrixQ& m) const {
    check(m);
    Row r = residual(m.flat());
    return std::all_of(r.begin(), r.end(), [](const Coefficient& x) { return x == 0; });
  }

  /// Adds m to the span in place; returns whether the rank grew.
  bool insert(const MatrixQ& m) {
    check(m);
    return insert_vector(residual(m.flat()));
  }

  friend bool operator==(const SpanBasis&, const SpanBasis&) = default;

 private:
  void check(const MatrixQ& m) const {
    if (m.dim() != dim_) throw DimensionMismatch(dim_, m.dim());
  }

  bool insert_vector(Row r) {
    auto lead = std::find_if(r.begin(), r.end(), [](const Coefficient& x) { return x != 0; });
    if (lead == r.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - r.begin());
    const Coefficient inv = 1 / r[p];
    for (std::size_t c = p; c < r.size(); ++c) r[c] *= inv;

    for (auto& row : rows_) {
      const Coefficient factor = row[p];
      if (factor == 0) continue;
      for (std::size_t c = p; c < row.size(); ++c)
        if (r[c] != 0) row[c] -= factor * r[c];
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto offset = at - pivots_.begin();
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + offset, std::move(r));
    return true;
  }

  std::size_t dim_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// Functional insert: returns the enlarged basis and whether the rank grew.
inline std::pair<SpanBasis, bool> basis_insert(SpanBasis b, const MatrixQ& m) {
  bool grew = b.insert(m);
  return {std::move(b), grew};
}

inline bool membership(const SpanBasis& b, const MatrixQ& m) { return b.contains(m); }

/// span(inner) ⊆ span(outer).
inline bool subspace_of(const SpanBasis& inner, const SpanBasis& outer) {
  if (inner.dim() != outer.dim()) throw DimensionMismatch(outer.dim(), inner.dim());
  for (std::size_t k = 0; k < inner.rank(); ++k)
    if (!outer.contains(inner.row_matrix(k))) return false;
  return true;
}

inline bool equals_canonical(const SpanBasis& b, CanonicalSpace which) {
  const std::size_t d = b.dim();
  switch (which) {
    case CanonicalSpace::Zero:
      return b.rank() == 0;
    case CanonicalSpace::Scalars:
      return b.rank() == 1 && b.row_matrix(0) == MatrixQ::identity(d);
    case CanonicalSpace::TraceZero:
      if (b.rank() != d * d - 1) return false;
      for (std::size_t k = 0; k < b.rank(); ++k)
        if (trace(b.row_matrix(k)) != 0) return false;
      return true;
    case CanonicalSpace::Full:
      return b.rank() == d * d;
  }
  return false;
}

inline SpanBasis canonical_basis(std::size_t d, CanonicalSpace which) {
  SpanBasis b(d);
  switch (which) {
    case CanonicalSpace::Zero:
      break;
    case CanonicalSpace::Scalars:
      b.insert(MatrixQ::identity(d));
      break;
    case CanonicalSpace::TraceZero:
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          if (r != c) b.insert(MatrixQ::unit(d, r, c));
          else if (r + 1 < d) b.insert(MatrixQ::unit(d, r, r) - MatrixQ::unit(d, r + 1, r + 1));
        }
      break;
    case CanonicalSpace::Full:
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) b.insert(MatrixQ::unit(d, r, c));
      break;
  }
  return b;
}

}  // namespace ncspan
