#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncspan/linearize.hpp"
#include "ncspan/span_analysis.hpp"

namespace ncspan {

/// Span of the values of step.after lies inside the span of step.before on M_d.
inline bool step_containment(const ReductionStep& step, std::size_t d, const SampleConfig& cfg) {
  SpanReport before = classify_span(step.before, d, cfg);
  SpanReport after = classify_span(step.after, d, cfg);
  return subspace_of(after.basis, before.basis);
}

struct SuiteEntry {
  NcPolynomial f;
  SpanReport report;
  ConsistencyFlags flags;
  /// Present when f is nonconstant and passes the oracle at d.
  std::optional<MultilinearReduction> reduction;
  std::vector<bool> step_contained;
  std::string reduction_error;

  bool reduction_ok() const {
    if (!reduction_error.empty()) return false;
    for (bool b : step_contained)
      if (!b) return false;
    return true;
  }
  bool violated() const { return flags.violated() || !reduction_ok(); }
};

struct SuiteResult {
  std::size_t d = 0;
  std::vector<SuiteEntry> entries;

  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.violated() ? 1 : 0;
    return n;
  }
  std::size_t undetermined() const {
    std::size_t n = 0;
    for (const auto& e : entries)
      n += e.report.classification == Classification::Undetermined ? 1 : 0;
    return n;
  }
};

/// Classifies every polynomial, checks the Lie-ideal property and the
/// degree-based exclusion rules, and multilinearizes the nontrivial ones with
/// an exact containment test for every reduction step.
inline SuiteResult run_suite(const std::vector<NcPolynomial>& corpus, std::size_t d,
                             const SampleConfig& cfg) {
  SuiteResult out;
  out.d = d;
  for (const auto& f : corpus) {
    SuiteEntry e;
    e.f = f;
    e.report = classify_span(f, d, cfg);
    e.flags = check_consistency(e.report);
    if (!f.is_constant() && is_nontrivial(f, d, cfg)) {
      try {
        e.reduction = reduce_to_multilinear(f, nontriviality_oracle(d, cfg));
        for (const auto& step : e.reduction->steps)
          e.step_contained.push_back(step_containment(step, d, cfg));
      } catch (const Error& err) {
        e.reduction_error = err.what();
      }
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace ncspan
