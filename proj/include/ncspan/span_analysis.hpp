#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ncspan/errors.hpp"
#include "ncspan/linalg.hpp"
#include "ncspan/linearize.hpp"
#include "ncspan/matrix.hpp"
#include "ncspan/polynomial.hpp"
#include "ncspan/span_basis.hpp"

namespace ncspan {

inline constexpr std::uint64_t kDefaultSeed = 20090909;

/// Multilinear polynomials are decided exactly by enumerating matrix-unit
/// tuples when there are at most this many; beyond it the sampled path is used.
inline constexpr std::uint64_t kExactTupleLimit = 1u << 20;

struct SampleConfig {
  std::uint64_t seed = kDefaultSeed;
  long coeff_bound = 10;          // entries uniform in [-coeff_bound, coeff_bound]
  std::size_t max_samples = 0;    // 0 selects 64·d²
  std::size_t stability_window = 50;

  std::size_t samples_for(std::size_t d) const { return max_samples ? max_samples : 64 * d * d; }
};

/// Deterministic source of random integer matrices.
class MatrixSampler {
 public:
  MatrixSampler(std::uint64_t seed, long bound) : rng_(seed), dist_(-bound, bound) {}

  MatrixQ matrix(std::size_t d) {
    MatrixQ m(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = dist_(rng_);
    return m;
  }
  std::vector<MatrixQ> tuple(std::size_t n, std::size_t d) {
    std::vector<MatrixQ> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(matrix(d));
    return out;
  }
  long integer() { return dist_(rng_); }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_;
};

/// f(args) in M_d. Variables beyond args.size() are an error; a constant term c contributes c·I.
inline MatrixQ evaluate(const NcPolynomial& f, std::span<const MatrixQ> args, std::size_t d) {
  if (args.size() < f.nvars()) throw ArityMismatch(f.nvars(), args.size());
  for (const auto& a : args)
    if (a.dim() != d) throw DimensionMismatch(d, a.dim());

  // Lexicographic order lets consecutive words share prefix products.
  std::vector<std::pair<const Word*, const Coefficient*>> order;
  order.reserve(f.size());
  for (const auto& [w, c] : f.terms()) order.emplace_back(&w, &c);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first->letters < b.first->letters; });

  MatrixQ out(d);
  std::vector<MatrixQ> prefix;
  const Word* prev = nullptr;
  for (const auto& [w, c] : order) {
    std::size_t common = 0;
    if (prev)
      while (common < prefix.size() && common < w->size() && (*prev)[common] == (*w)[common])
        ++common;
    prefix.resize(common);
    for (std::size_t k = common; k < w->size(); ++k) {
      const MatrixQ& x = args[(*w)[k] - 1];
      prefix.push_back(k == 0 ? x : prefix.back() * x);
    }
    if (w->empty()) {
      for (std::size_t k = 0; k < d; ++k) out(k, k) += *c;
    } else {
      out.add_scaled(*c, prefix.back());
    }
    prev = w;
  }
  return out;
}

inline MatrixQ evaluate(const NcPolynomial& f, std::span<const MatrixQ> args) {
  if (args.empty())
    throw PreconditionViolated("evaluate: no arguments to infer the matrix size from");
  return evaluate(f, args, args[0].dim());
}

/// Position of a matrix unit E_rc.
struct UnitIndex {
  std::size_t row = 0;
  std::size_t col = 0;
};

/// f evaluated at a tuple of matrix units; products of units chain or vanish.
inline MatrixQ evaluate_on_units(const NcPolynomial& f, std::span<const UnitIndex> units,
                                 std::size_t d) {
  if (units.size() < f.nvars()) throw ArityMismatch(f.nvars(), units.size());
  MatrixQ out(d);
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) {
      for (std::size_t k = 0; k < d; ++k) out(k, k) += c;
      continue;
    }
    const UnitIndex& first = units[w[0] - 1];
    std::size_t col = first.col;
    bool alive = true;
    for (std::size_t k = 1; k < w.size() && alive; ++k) {
      const UnitIndex& u = units[w[k] - 1];
      alive = u.row == col;
      col = u.col;
    }
    if (alive) out(first.row, col) += c;
  }
  return out;
}

namespace detail {

inline std::optional<std::uint64_t> unit_tuple_count(std::size_t nvars, std::size_t d) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < nvars; ++k) {
    count *= d * d;
    if (count > kExactTupleLimit) return std::nullopt;
  }
  return count;
}

inline bool exact_path_available(const NcPolynomial& f, std::size_t d) {
  return is_multilinear(f) && unit_tuple_count(f.nvars(), d).has_value();
}

// Calls visit(units) for every tuple of matrix units until it returns false.
template <typename Visit>
std::uint64_t for_each_unit_tuple(std::size_t nvars, std::size_t d, Visit&& visit) {
  std::vector<UnitIndex> units(nvars);
  std::vector<std::size_t> digit(nvars, 0);
  std::uint64_t visited = 0;
  while (true) {
    for (std::size_t k = 0; k < nvars; ++k) units[k] = {digit[k] / d, digit[k] % d};
    ++visited;
    if (!visit(std::span<const UnitIndex>(units))) return visited;
    std::size_t k = 0;
    while (k < nvars && ++digit[k] == d * d) digit[k++] = 0;
    if (k == nvars) return visited;
  }
}

inline std::vector<MatrixQ> unit_matrices(std::span<const UnitIndex> units, std::size_t d) {
  std::vector<MatrixQ> out;
  for (const auto& u : units) out.push_back(MatrixQ::unit(d, u.row, u.col));
  return out;
}

}  // namespace detail

struct IdentityVerdict {
  bool identity = true;
  bool exact = true;
  /// Upper bound on the probability that a non-identity passed every sample.
  double error_bound = 0.0;
  std::uint64_t evaluations = 0;
  /// A tuple with nonzero value, when one was found.
  std::optional<std::vector<MatrixQ>> witness;
};

/// Decides whether f vanishes identically on M_d. Multilinear f is decided
/// exactly on matrix-unit tuples; otherwise random integer tuples are tried
/// and a surviving f is reported with the polynomial-vanishing error bound.
inline IdentityVerdict identity_test(const NcPolynomial& f, std::size_t d, const SampleConfig& cfg) {
  IdentityVerdict v;
  if (f.is_zero()) return v;

  if (detail::exact_path_available(f, d)) {
    v.evaluations = detail::for_each_unit_tuple(f.nvars(), d, [&](std::span<const UnitIndex> u) {
      if (evaluate_on_units(f, u, d).is_zero()) return true;
      v.identity = false;
      v.witness = detail::unit_matrices(u, d);
      return false;
    });
    return v;
  }

  v.exact = false;
  MatrixSampler sampler(cfg.seed, cfg.coeff_bound);
  const std::size_t budget = cfg.samples_for(d);
  for (std::size_t s = 0; s < budget; ++s) {
    auto args = sampler.tuple(f.nvars(), d);
    ++v.evaluations;
    if (!evaluate(f, args, d).is_zero()) {
      v.identity = false;
      v.witness = std::move(args);
      return v;
    }
  }
  const double ratio = static_cast<double>(degree(f).value_or(0)) /
                       static_cast<double>(2 * cfg.coeff_bound + 1);
  v.error_bound = std::min(1.0, std::pow(ratio, static_cast<double>(budget)));
  return v;
}

inline bool is_identity(const NcPolynomial& f, std::size_t d, const SampleConfig& cfg = {}) {
  return identity_test(f, d, cfg).identity;
}

/// f takes only central (scalar) values on M_d but is not an identity; tested
/// as [f, X_{n+1}] being an identity.
inline bool is_central(const NcPolynomial& f, std::size_t d, const SampleConfig& cfg = {}) {
  if (is_identity(f, d, cfg)) return false;
  const NcPolynomial probe = commutator(f, NcPolynomial::variable(f.nvars() + 1));
  return is_identity(probe, d, cfg);
}

/// Neither an identity nor a central polynomial of M_d.
inline bool is_nontrivial(const NcPolynomial& f, std::size_t d, const SampleConfig& cfg = {}) {
  if (is_identity(f, d, cfg)) return false;
  return !is_identity(commutator(f, NcPolynomial::variable(f.nvars() + 1)), d, cfg);
}

inline NonTrivialityOracle nontriviality_oracle(std::size_t d, SampleConfig cfg = {}) {
  return [d, cfg](const NcPolynomial& f) { return is_nontrivial(f, d, cfg); };
}

/// Smallest d <= d_max at which f is neither an identity nor central.
inline std::optional<std::size_t> find_witness_dimension(const NcPolynomial& f, std::size_t d_max,
                                                         const SampleConfig& cfg = {}) {
  if (f.is_constant()) throw ConstantInput();
  for (std::size_t d = 1; d <= d_max; ++d)
    if (is_nontrivial(f, d, cfg)) return d;
  return std::nullopt;
}

enum class Classification { Zero, Scalars, TraceZero, Full, Undetermined };

inline std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "ZERO";
    case Classification::Scalars: return "SCALARS";
    case Classification::TraceZero: return "TRACE_ZERO";
    case Classification::Full: return "FULL";
    case Classification::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

/// First canonical space the basis equals, tried in the order ZERO, SCALARS,
/// TRACE_ZERO, FULL (this matters only for d = 1).
inline Classification match_canonical(const SpanBasis& b) {
  constexpr CanonicalSpace order[] = {CanonicalSpace::Zero, CanonicalSpace::Scalars,
                                      CanonicalSpace::TraceZero, CanonicalSpace::Full};
  for (CanonicalSpace s : order)
    if (equals_canonical(b, s)) return static_cast<Classification>(s);
  return Classification::Undetermined;
}

struct Witness {
  std::vector<MatrixQ> inputs;
  MatrixQ value;
};

struct SpanReport {
  Classification classification = Classification::Undetermined;
  SpanBasis basis;
  std::vector<Witness> witnesses;  // one per rank increase, in discovery order
  std::size_t samples_used = 0;
  std::size_t d = 0;
  NcPolynomial f_echo;
  std::uint64_t seed = 0;
  /// True when the span was enumerated exactly or reached all of M_d; false
  /// when saturation rests on the stability window.
  bool saturation_certified = false;
};

/// Spans the values of f on M_d and classifies the span.
inline SpanReport classify_span(const NcPolynomial& f, std::size_t d, const SampleConfig& cfg = {}) {
  if (d == 0) throw PreconditionViolated("classify_span: d must be positive");
  SpanReport rep;
  rep.d = d;
  rep.f_echo = f;
  rep.seed = cfg.seed;
  rep.basis = SpanBasis(d);
  const std::size_t full_rank = d * d;

  if (detail::exact_path_available(f, d)) {
    rep.samples_used = detail::for_each_unit_tuple(f.nvars(), d, [&](std::span<const UnitIndex> u) {
      MatrixQ value = evaluate_on_units(f, u, d);
      if (rep.basis.insert(value)) rep.witnesses.push_back({detail::unit_matrices(u, d), value});
      return rep.basis.rank() < full_rank;
    });
    rep.saturation_certified = true;
    rep.classification = match_canonical(rep.basis);
    return rep;
  }

  MatrixSampler sampler(cfg.seed, cfg.coeff_bound);
  const std::size_t budget = cfg.samples_for(d);
  std::size_t quiet = 0;
  while (rep.samples_used < budget) {
    auto args = sampler.tuple(f.nvars(), d);
    MatrixQ value = evaluate(f, args, d);
    ++rep.samples_used;
    if (rep.basis.insert(value)) {
      rep.witnesses.push_back({std::move(args), std::move(value)});
      quiet = 0;
    } else {
      ++quiet;
    }
    if (rep.basis.rank() == full_rank) {
      rep.saturation_certified = true;
      break;
    }
    if (quiet >= cfg.stability_window && match_canonical(rep.basis) != Classification::Undetermined)
      break;
  }
  rep.classification = match_canonical(rep.basis);
  return rep;
}

/// [r, E_jk] stays in the span for every basis row r and matrix unit E_jk.
inline bool lie_ideal_check(const SpanBasis& b) {
  const std::size_t d = b.dim();
  for (std::size_t k = 0; k < b.rank(); ++k) {
    const MatrixQ r = b.row_matrix(k);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        if (!b.contains(commutator(r, MatrixQ::unit(d, j, l)))) return false;
  }
  return true;
}

/// Smallest subspace containing seed that is closed under brackets with
/// matrix units and under products: a Lie ideal that is also a subalgebra.
inline SpanBasis herstein_closure(const MatrixQ& seed, std::size_t d) {
  if (seed.dim() != d) throw DimensionMismatch(d, seed.dim());
  SpanBasis basis(d);
  std::vector<MatrixQ> gens;
  std::deque<std::size_t> pending;
  auto add = [&](const MatrixQ& m) {
    if (!basis.insert(m)) return;
    gens.push_back(m);
    pending.push_back(gens.size() - 1);
  };
  add(seed);
  while (!pending.empty() && basis.rank() < d * d) {
    const std::size_t k = pending.front();
    pending.pop_front();
    const MatrixQ x = gens[k];
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) add(commutator(x, MatrixQ::unit(d, j, l)));
    for (std::size_t g = 0; g <= k; ++g) {
      const MatrixQ y = gens[g];
      add(x * y);
      add(y * x);
    }
  }
  return basis;
}

struct DecompositionTerm {
  Coefficient weight;
  std::vector<MatrixQ> inputs;
};

/// Writes target as a combination of f-values at witness tuples of the report.
inline std::vector<DecompositionTerm> decompose_target(const SpanReport& report,
                                                       const MatrixQ& target) {
  const std::size_t d = report.d;
  if (target.dim() != d) throw DimensionMismatch(d, target.dim());
  if (!report.basis.contains(target)) throw NotInSpan();

  const NcPolynomial& f = report.f_echo;
  // c·X_i is hit directly at X_i = target / c.
  if (f.size() == 1 && f.terms().begin()->first.size() == 1) {
    const auto& [w, c] = *f.terms().begin();
    std::vector<MatrixQ> inputs(f.nvars(), MatrixQ(d));
    inputs[w[0] - 1] = target;
    return {DecompositionTerm{1 / c, std::move(inputs)}};
  }

  const std::size_t r = report.witnesses.size();
  DenseQ system(d * d, std::vector<Coefficient>(r));
  std::vector<Coefficient> rhs(target.flat().begin(), target.flat().end());
  for (std::size_t j = 0; j < r; ++j) {
    auto col = report.witnesses[j].value.flat();
    for (std::size_t e = 0; e < d * d; ++e) system[e][j] = col[e];
  }
  auto weights = solve_linear(std::move(system), std::move(rhs));
  if (!weights) throw NotInSpan();
  std::vector<DecompositionTerm> out;
  for (std::size_t j = 0; j < r; ++j)
    if ((*weights)[j] != 0) out.push_back({(*weights)[j], report.witnesses[j].inputs});
  return out;
}

enum class RuleStatus { Satisfied, Inapplicable, Violated, Undetermined };

inline std::string_view to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::Satisfied: return "satisfied";
    case RuleStatus::Inapplicable: return "inapplicable";
    case RuleStatus::Violated: return "violated";
    case RuleStatus::Undetermined: return "undetermined";
  }
  return "?";
}

struct ConsistencyFlags {
  bool lie_ideal = false;
  /// For nonconstant f with 2d > deg f the span is TRACE_ZERO or FULL.
  RuleStatus exclusion = RuleStatus::Inapplicable;
  /// Under the same hypothesis, TRACE_ZERO iff f is a sum of commutators.
  RuleStatus commutator_rule = RuleStatus::Inapplicable;
  bool saturation_certified = false;

  bool violated() const {
    return !lie_ideal || exclusion == RuleStatus::Violated ||
           commutator_rule == RuleStatus::Violated;
  }
};

inline ConsistencyFlags check_consistency(const SpanReport& rep) {
  ConsistencyFlags flags;
  flags.lie_ideal = lie_ideal_check(rep.basis);
  flags.saturation_certified = rep.saturation_certified;
  const NcPolynomial& f = rep.f_echo;
  if (f.is_constant() || 2 * rep.d <= *degree(f)) return flags;
  if (rep.classification == Classification::Undetermined) {
    flags.exclusion = flags.commutator_rule = RuleStatus::Undetermined;
    return flags;
  }
  const bool excluded_case = rep.classification == Classification::Zero ||
                             rep.classification == Classification::Scalars;
  flags.exclusion = excluded_case ? RuleStatus::Violated : RuleStatus::Satisfied;
  const bool trace_zero = rep.classification == Classification::TraceZero;
  flags.commutator_rule =
      trace_zero == is_sum_of_commutators(f) ? RuleStatus::Satisfied : RuleStatus::Violated;
  return flags;
}

}  // namespace ncspan
