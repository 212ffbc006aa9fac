#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncspan/errors.hpp"
#include "ncspan/rational.hpp"

namespace ncspan {

/// 1-based index of a free variable X_i.
using VarIndex = std::uint32_t;

/// A monomial of the free algebra: the ordered sequence of variable indices.
/// The empty word is the constant monomial 1.
struct Word {
  std::vector<VarIndex> letters;

  Word() = default;
  Word(std::initializer_list<VarIndex> init) : letters(init) {}
  explicit Word(std::vector<VarIndex> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  VarIndex operator[](std::size_t k) const { return letters[k]; }

  std::size_t count(VarIndex v) const {
    return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), v));
  }
  bool contains(VarIndex v) const {
    return std::find(letters.begin(), letters.end(), v) != letters.end();
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

inline Word concat(const Word& a, const Word& b) {
  Word w;
  w.letters.reserve(a.size() + b.size());
  w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

/// Graded lexicographic order: shorter words first, ties broken lexicographically.
struct GradedLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
  }
};

/// Lexicographically least rotation of w; the representative of its cyclic class.
inline Word least_rotation(const Word& w) {
  Word best = w;
  const std::size_t n = w.size();
  for (std::size_t s = 1; s < n; ++s) {
    Word r;
    r.letters.reserve(n);
    r.letters.insert(r.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(s),
                     w.letters.end());
    r.letters.insert(r.letters.end(), w.letters.begin(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(s));
    if (r.letters < best.letters) best = std::move(r);
  }
  return best;
}

/// Element of Q<X1, X2, ...>: a sparse map from words to nonzero rationals.
class NcPolynomial {
 public:
  using TermMap = std::map<Word, Coefficient, GradedLexLess>;

  NcPolynomial() = default;
  explicit NcPolynomial(const Coefficient& c) { add_term(Word{}, c); }
  explicit NcPolynomial(long c) : NcPolynomial(Coefficient(c)) {}

  static NcPolynomial variable(VarIndex i) { return monomial(Word{i}); }
  static NcPolynomial monomial(Word w, const Coefficient& c = 1) {
    NcPolynomial p;
    p.add_term(std::move(w), c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  VarIndex nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  Coefficient coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// Adds c·w, dropping the term if it cancels.
  void add_term(Word w, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
        recompute_nvars();
        return;
      }
    }
    for (VarIndex v : it->first.letters) nvars_ = std::max(nvars_, v);
  }

  NcPolynomial& operator+=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPolynomial& operator-=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  NcPolynomial& operator*=(const Coefficient& s) {
    if (s == 0) {
      terms_.clear();
      nvars_ = 0;
    } else {
      for (auto& [w, c] : terms_) c *= s;
    }
    return *this;
  }

  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void recompute_nvars() {
    nvars_ = 0;
    for (const auto& [w, c] : terms_)
      for (VarIndex v : w.letters) nvars_ = std::max(nvars_, v);
  }

  TermMap terms_;
  VarIndex nvars_ = 0;
};

inline NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
inline NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
inline NcPolynomial operator-(NcPolynomial a) { return a *= Coefficient(-1); }
inline NcPolynomial operator*(const Coefficient& s, NcPolynomial a) { return a *= s; }
inline NcPolynomial operator*(NcPolynomial a, const Coefficient& s) { return a *= s; }

inline NcPolynomial operator*(const NcPolynomial& f, const NcPolynomial& g) {
  NcPolynomial out;
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) out.add_term(concat(u, v), a * b);
  return out;
}

inline NcPolynomial add(const NcPolynomial& f, const NcPolynomial& g) { return f + g; }
inline NcPolynomial sub(const NcPolynomial& f, const NcPolynomial& g) { return f - g; }
inline NcPolynomial mul(const NcPolynomial& f, const NcPolynomial& g) { return f * g; }

/// [f, g] = fg - gf.
inline NcPolynomial commutator(const NcPolynomial& f, const NcPolynomial& g) {
  return f * g - g * f;
}

inline NcPolynomial pow(const NcPolynomial& f, unsigned k) {
  NcPolynomial out(1);
  for (unsigned i = 0; i < k; ++i) out = out * f;
  return out;
}

using Assignment = std::map<VarIndex, NcPolynomial>;

/// Algebra homomorphism X_i -> assignment[i] applied to f.
inline NcPolynomial substitute(const NcPolynomial& f, const Assignment& assignment) {
  NcPolynomial out;
  for (const auto& [w, c] : f.terms()) {
    NcPolynomial image(c);
    for (VarIndex v : w.letters) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw MissingAssignment(v);
      image = image * it->second;
      if (image.is_zero()) break;
    }
    out += image;
  }
  return out;
}

/// Total degree; absent for the zero polynomial.
inline std::optional<std::size_t> degree(const NcPolynomial& f) {
  if (f.is_zero()) return std::nullopt;
  // Graded order puts the longest words last.
  return f.terms().rbegin()->first.size();
}

inline std::optional<std::size_t> degree_in(const NcPolynomial& f, VarIndex i) {
  if (f.is_zero()) return std::nullopt;
  std::size_t best = 0;
  for (const auto& [w, c] : f.terms()) best = std::max(best, w.count(i));
  return best;
}

/// Max degree of f in each of X_1..X_nvars (index 0 holds X_1).
inline std::vector<std::size_t> degree_vector(const NcPolynomial& f) {
  std::vector<std::size_t> out(f.nvars(), 0);
  for (const auto& [w, c] : f.terms()) {
    std::vector<std::size_t> counts(f.nvars(), 0);
    for (VarIndex v : w.letters) ++counts[v - 1];
    for (std::size_t k = 0; k < counts.size(); ++k) out[k] = std::max(out[k], counts[k]);
  }
  return out;
}

inline bool is_homogeneous_in(const NcPolynomial& f, VarIndex i) {
  std::optional<std::size_t> seen;
  for (const auto& [w, c] : f.terms()) {
    std::size_t k = w.count(i);
    if (seen && *seen != k) return false;
    seen = k;
  }
  return true;
}

inline bool occurs(const NcPolynomial& f, VarIndex i) {
  for (const auto& [w, c] : f.terms())
    if (w.contains(i)) return true;
  return false;
}

/// Variables that actually occur in f, ascending.
inline std::vector<VarIndex> occurring_variables(const NcPolynomial& f) {
  std::vector<bool> seen(f.nvars() + 1, false);
  for (const auto& [w, c] : f.terms())
    for (VarIndex v : w.letters) seen[v] = true;
  std::vector<VarIndex> out;
  for (VarIndex v = 1; v <= f.nvars(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

/// Partition of f by degree in X_i, ascending degree, nonzero parts only.
inline std::vector<std::pair<std::size_t, NcPolynomial>> homogeneous_components_in(
    const NcPolynomial& f, VarIndex i) {
  std::map<std::size_t, NcPolynomial> parts;
  for (const auto& [w, c] : f.terms()) parts[w.count(i)].add_term(w, c);
  return {parts.begin(), parts.end()};
}

struct StrippedPair {
  NcPolynomial with_var;     // g_i: monomials containing X_i
  NcPolynomial without_var;  // h_i: monomials free of X_i
};

inline StrippedPair strip_variable(const NcPolynomial& f, VarIndex i) {
  StrippedPair out;
  for (const auto& [w, c] : f.terms()) (w.contains(i) ? out.with_var : out.without_var).add_term(w, c);
  return out;
}

/// Every word contains each of X_1..X_nvars exactly once. Constants qualify vacuously.
inline bool is_multilinear(const NcPolynomial& f) {
  const VarIndex n = f.nvars();
  for (const auto& [w, c] : f.terms()) {
    if (w.size() != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (VarIndex v : w.letters) {
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

struct CommutatorTest {
  bool is_sum_of_commutators = true;
  /// Least-rotation representative of a cyclic class whose coefficients do not cancel.
  std::optional<Word> offending_class;
  Coefficient class_sum = 0;
};

/// In characteristic 0, f lies in [F<X>, F<X>] iff the coefficients over each
/// cyclic-rotation class of words sum to zero.
inline CommutatorTest commutator_test(const NcPolynomial& f) {
  std::map<Word, Coefficient, GradedLexLess> sums;
  for (const auto& [w, c] : f.terms()) sums[least_rotation(w)] += c;
  for (const auto& [rep, s] : sums) {
    if (s != 0) return CommutatorTest{false, rep, s};
  }
  return {};
}

inline bool is_sum_of_commutators(const NcPolynomial& f) {
  return commutator_test(f).is_sum_of_commutators;
}

/// Renames the occurring variables to 1..k preserving order. Returns the
/// relabelled polynomial and the old index of each new variable.
inline std::pair<NcPolynomial, std::vector<VarIndex>> compact_variables(const NcPolynomial& f) {
  std::vector<VarIndex> used = occurring_variables(f);
  std::vector<VarIndex> rename(f.nvars() + 1, 0);
  for (std::size_t k = 0; k < used.size(); ++k) rename[used[k]] = static_cast<VarIndex>(k + 1);
  NcPolynomial out;
  for (const auto& [w, c] : f.terms()) {
    Word r;
    r.letters.reserve(w.size());
    for (VarIndex v : w.letters) r.letters.push_back(rename[v]);
    out.add_term(std::move(r), c);
  }
  return {std::move(out), std::move(used)};
}

}  // namespace ncspan
