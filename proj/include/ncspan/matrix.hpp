#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ncspan/errors.hpp"
#include "ncspan/rational.hpp"

namespace ncspan {

/// Square d×d matrix over Q, stored row-major.
class MatrixQ {
 public:
  MatrixQ() = default;
  explicit MatrixQ(std::size_t d) : dim_(d), entries_(d * d) {}

  static MatrixQ identity(std::size_t d) { return scalar(d, 1); }
  static MatrixQ scalar(std::size_t d, const Coefficient& c) {
    MatrixQ m(d);
    for (std::size_t k = 0; k < d; ++k) m(k, k) = c;
    return m;
  }
  /// E_rc (0-based row and column).
  static MatrixQ unit(std::size_t d, std::size_t r, std::size_t c) {
    MatrixQ m(d);
    m(r, c) = 1;
    return m;
  }
  static MatrixQ diagonal(const std::vector<Coefficient>& diag) {
    MatrixQ m(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
    return m;
  }
  static MatrixQ from_rows(const std::vector<std::vector<Coefficient>>& rows) {
    MatrixQ m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) throw DimensionMismatch(rows.size(), rows[r].size());
      for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  /// Inverse of flat(): rebuilds a d×d matrix from a row-major vector of length d².
  static MatrixQ from_flat(std::size_t d, std::vector<Coefficient> flat) {
    if (flat.size() != d * d) throw DimensionMismatch(d * d, flat.size());
    MatrixQ m;
    m.dim_ = d;
    m.entries_ = std::move(flat);
    return m;
  }

  std::size_t dim() const { return dim_; }
  Coefficient& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Coefficient& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  std::span<const Coefficient> flat() const { return entries_; }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (x != 0) return false;
    return true;
  }
  bool is_scalar() const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) {
        if (r != c && (*this)(r, c) != 0) return false;
        if (r == c && (*this)(r, c) != (*this)(0, 0)) return false;
      }
    return true;
  }

  MatrixQ& operator+=(const MatrixQ& o) {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  MatrixQ& operator-=(const MatrixQ& o) {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  MatrixQ& operator*=(const Coefficient& s) {
    for (auto& x : entries_) x *= s;
    return *this;
  }
  /// this += s * o
  void add_scaled(const Coefficient& s, const MatrixQ& o) {
    check_same(o);
    if (s == 0) return;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (o.entries_[k] != 0) entries_[k] += s * o.entries_[k];
  }

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

  void check_same(const MatrixQ& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch(dim_, o.dim_);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Coefficient> entries_;
};

inline MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
inline MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
inline MatrixQ operator*(const Coefficient& s, MatrixQ a) { return a *= s; }

inline MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  a.check_same(b);
  const std::size_t d = a.dim();
  MatrixQ out(d);
  mpq_class t;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const Coefficient& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (b(k, c) == 0) continue;
        t = x * b(k, c);
        out(r, c) += t;
      }
    }
  return out;
}

inline MatrixQ mat_mul(const MatrixQ& a, const MatrixQ& b) { return a * b; }
inline MatrixQ mat_add(const MatrixQ& a, const MatrixQ& b) { return a + b; }
inline MatrixQ mat_scale(const Coefficient& s, const MatrixQ& a) { return s * a; }

inline Coefficient trace(const MatrixQ& a) {
  Coefficient t = 0;
  for (std::size_t k = 0; k < a.dim(); ++k) t += a(k, k);
  return t;
}

/// [A, B] = AB - BA.
inline MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) { return a * b - b * a; }

}  // namespace ncspan
