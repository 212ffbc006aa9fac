#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncspan/errors.hpp"
#include "ncspan/polynomial.hpp"

namespace ncspan {

/// f(.., X_i + X_m, ..) - f(.., X_i, ..) - f(.., X_m, ..).
///
/// Words of f that do not contain X_i contribute -w; when every word of f
/// contains X_i, every surviving word contains both X_i and X_m.
inline NcPolynomial delta(const NcPolynomial& f, VarIndex i, VarIndex m) {
  if (occurs(f, m)) throw VariableCollision(m);
  auto k = degree_in(f, i);
  if (!k || *k < 1) throw PreconditionViolated("delta: polynomial does not involve the variable");

  Assignment shifted, renamed;
  for (VarIndex v = 1; v <= f.nvars(); ++v) {
    shifted[v] = NcPolynomial::variable(v);
    renamed[v] = NcPolynomial::variable(v);
  }
  shifted[i] = NcPolynomial::variable(i) + NcPolynomial::variable(m);
  renamed[i] = NcPolynomial::variable(m);
  return substitute(f, shifted) - f - substitute(f, renamed);
}

/// Checks (2^k - 2) f == fprime|_{X_m -> X_i} for f homogeneous of degree k >= 2 in X_i.
inline bool resubstitute_check(const NcPolynomial& f, const NcPolynomial& fprime, VarIndex i,
                               VarIndex m) {
  auto k = degree_in(f, i);
  if (!k || *k < 2 || !is_homogeneous_in(f, i))
    throw PreconditionViolated("resubstitute_check: f must be homogeneous of degree >= 2 in X_i");

  Assignment back;
  for (VarIndex v = 1; v <= std::max(fprime.nvars(), m); ++v) back[v] = NcPolynomial::variable(v);
  back[m] = NcPolynomial::variable(i);
  mpz_class factor = 1;
  factor <<= static_cast<mp_bitcnt_t>(*k);
  factor -= 2;
  return substitute(fprime, back) == Coefficient(factor) * f;
}

enum class StepKind { Strip, HomogeneousSelect, Delta, Relabel };

inline std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::Strip: return "STRIP";
    case StepKind::HomogeneousSelect: return "HOMOGENEOUS_SELECT";
    case StepKind::Delta: return "DELTA";
    case StepKind::Relabel: return "RELABEL";
  }
  return "?";
}

struct ReductionStep {
  StepKind kind;
  VarIndex variable;
  // STRIP: 1 if the monomials containing the variable were kept, 0 if dropped.
  // HOMOGENEOUS_SELECT: degree of the selected component.
  // DELTA: index of the fresh variable.
  // RELABEL: number of variables after compaction.
  std::size_t detail;
  NcPolynomial before;
  NcPolynomial after;
};

struct MultilinearReduction {
  NcPolynomial input;
  NcPolynomial output;
  std::vector<ReductionStep> steps;
};

/// True iff the polynomial is neither an identity nor a central polynomial of
/// the algebra the oracle represents.
using NonTrivialityOracle = std::function<bool(const NcPolynomial&)>;

namespace detail {

// Smallest total degree first, then smallest per-variable degree vector.
inline bool reduction_preferred(const NcPolynomial& a, const NcPolynomial& b) {
  auto da = degree(a).value_or(0), db = degree(b).value_or(0);
  if (da != db) return da < db;
  return degree_vector(a) < degree_vector(b);
}

inline std::size_t select_candidate(const std::vector<NcPolynomial>& candidates,
                                    const NonTrivialityOracle& oracle, std::string_view stage) {
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return reduction_preferred(candidates[a], candidates[b]);
  });
  for (std::size_t k : order)
    if (!candidates[k].is_zero() && oracle(candidates[k])) return k;
  throw OracleFailed("no candidate passed the oracle during " + std::string(stage));
}

}  // namespace detail

/// Reduces f to a multilinear polynomial whose span of values is contained in
/// that of f, keeping every intermediate polynomial oracle-true.
///
/// Order: strip each variable (keep all-containing or all-free monomials),
/// compact variable indices if gaps appear, select a homogeneous component per
/// variable, then polarize each variable down to degree 1, re-selecting a
/// homogeneous component after every polarization.
inline MultilinearReduction reduce_to_multilinear(const NcPolynomial& f,
                                                  const NonTrivialityOracle& oracle) {
  if (f.is_constant()) throw NotReducible("cannot multilinearize a constant polynomial");
  if (!oracle(f)) throw OracleFailed("input polynomial does not pass the oracle");

  MultilinearReduction out{f, f, {}};
  NcPolynomial& cur = out.output;
  auto record = [&](StepKind kind, VarIndex v, std::size_t detail, NcPolynomial next) {
    out.steps.push_back(ReductionStep{kind, v, detail, cur, next});
    cur = std::move(next);
  };

  for (VarIndex v = 1; v <= cur.nvars(); ++v) {
    if (!occurs(cur, v)) continue;
    auto split = strip_variable(cur, v);
    if (split.with_var.is_zero() || split.without_var.is_zero()) continue;
    std::vector<NcPolynomial> candidates{split.with_var, split.without_var};
    std::size_t pick = detail::select_candidate(candidates, oracle, "variable stripping");
    record(StepKind::Strip, v, pick == 0 ? 1 : 0, std::move(candidates[pick]));
  }

  if (occurring_variables(cur).size() != cur.nvars()) {
    NcPolynomial compact = compact_variables(cur).first;
    const std::size_t n = compact.nvars();
    record(StepKind::Relabel, 0, n, std::move(compact));
  }

  // A lone component is still put through the oracle.
  auto select_component = [&](VarIndex v, std::string_view stage) {
    auto comps = homogeneous_components_in(cur, v);
    std::vector<NcPolynomial> candidates;
    for (auto& [deg, part] : comps) candidates.push_back(part);
    std::size_t pick = detail::select_candidate(candidates, oracle, stage);
    if (comps.size() > 1)
      record(StepKind::HomogeneousSelect, v, comps[pick].first, std::move(candidates[pick]));
  };

  for (VarIndex v = 1; v <= cur.nvars(); ++v) {
    if (homogeneous_components_in(cur, v).size() > 1) select_component(v, "homogeneous selection");
  }

  for (VarIndex v = 1; v <= cur.nvars(); ++v) {
    while (degree_in(cur, v).value_or(0) > 1) {
      const VarIndex fresh = cur.nvars() + 1;
      NcPolynomial polarized = delta(cur, v, fresh);
      record(StepKind::Delta, v, fresh, polarized);
      select_component(v, "polarization");
    }
  }

  if (!is_multilinear(cur)) throw OracleFailed("reduction did not reach a multilinear polynomial");
  return out;
}

}  // namespace ncspan
