#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncspan/linearize.hpp"
#include "ncspan/span_analysis.hpp"
#include "ncspan/suite.hpp"
#include "ncspan/text.hpp"

// JSON documents emitted by the command-line tool. Rationals are strings in
// GMP canonical form ("3", "-1/2") so no precision is lost.

namespace ncspan::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ncspan/1";

inline Json matrix(const MatrixQ& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json tuple(const std::vector<MatrixQ>& inputs) {
  Json out = Json::array();
  for (const auto& m : inputs) out.push_back(matrix(m));
  return out;
}

inline Json flags(const ConsistencyFlags& f) {
  return Json{{"lie_ideal", f.lie_ideal},
              {"exclusion_rule", std::string(to_string(f.exclusion))},
              {"commutator_rule", std::string(to_string(f.commutator_rule))},
              {"saturation", f.saturation_certified ? "certified" : "stability-window"}};
}

inline Json span_report(const SpanReport& rep) {
  Json basis = Json::array();
  for (std::size_t k = 0; k < rep.basis.rank(); ++k) basis.push_back(matrix(rep.basis.row_matrix(k)));
  Json witnesses = Json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back(Json{{"inputs", tuple(w.inputs)}, {"value", matrix(w.value)}});
  return Json{{"schema", kSchema},
              {"polynomial", print(rep.f_echo)},
              {"dim", rep.d},
              {"seed", rep.seed},
              {"classification", std::string(to_string(rep.classification))},
              {"rank", rep.basis.rank()},
              {"basis", std::move(basis)},
              {"witnesses", std::move(witnesses)},
              {"samples_used", rep.samples_used},
              {"consistency_flags", flags(check_consistency(rep))}};
}

inline Json reduction(const MultilinearReduction& red, std::size_t d) {
  Json steps = Json::array();
  for (const auto& s : red.steps)
    steps.push_back(Json{{"kind", std::string(to_string(s.kind))},
                         {"variable", s.variable},
                         {"detail", s.detail},
                         {"before", print(s.before)},
                         {"after", print(s.after)}});
  return Json{{"schema", kSchema},
              {"input", print(red.input)},
              {"dim", d},
              {"output", print(red.output)},
              {"multilinear", is_multilinear(red.output)},
              {"steps", std::move(steps)}};
}

inline Json commutator_report(const NcPolynomial& f, const CommutatorTest& t) {
  Json out{{"schema", kSchema},
           {"polynomial", print(f)},
           {"sum_of_commutators", t.is_sum_of_commutators}};
  if (t.offending_class) {
    out["offending_class"] = t.offending_class->empty() ? "1" : detail::word_text(*t.offending_class);
    out["class_sum"] = t.class_sum.get_str();
  }
  return out;
}

inline Json witness_dimension(const NcPolynomial& f, std::size_t d_max, std::optional<std::size_t> d,
                              std::uint64_t seed) {
  Json out{{"schema", kSchema}, {"polynomial", print(f)}, {"dmax", d_max}, {"seed", seed}};
  out["witness_dimension"] = d ? Json(*d) : Json(nullptr);
  return out;
}

inline Json decomposition(const SpanReport& rep, const MatrixQ& target,
                          const std::vector<DecompositionTerm>& terms) {
  Json out{{"schema", kSchema},
           {"polynomial", print(rep.f_echo)},
           {"dim", rep.d},
           {"seed", rep.seed},
           {"target", matrix(target)}};
  Json list = Json::array();
  for (const auto& t : terms)
    list.push_back(Json{{"weight", t.weight.get_str()}, {"inputs", tuple(t.inputs)}});
  out["terms"] = std::move(list);
  return out;
}

inline Json suite(const SuiteResult& res, std::uint64_t seed) {
  Json entries = Json::array();
  for (const auto& e : res.entries) {
    Json entry{{"polynomial", print(e.f)},
               {"classification", std::string(to_string(e.report.classification))},
               {"rank", e.report.basis.rank()},
               {"samples_used", e.report.samples_used},
               {"consistency_flags", flags(e.flags)}};
    if (e.reduction) {
      Json contained = Json::array();
      for (bool b : e.step_contained) contained.push_back(b);
      entry["reduction"] = Json{{"output", print(e.reduction->output)},
                                {"steps", e.reduction->steps.size()},
                                {"step_containment", std::move(contained)}};
    }
    if (!e.reduction_error.empty()) entry["reduction_error"] = e.reduction_error;
    entry["violated"] = e.violated();
    entries.push_back(std::move(entry));
  }
  return Json{{"schema", kSchema},
              {"dim", res.d},
              {"seed", seed},
              {"polynomials", res.entries.size()},
              {"violations", res.violations()},
              {"undetermined", res.undetermined()},
              {"entries", std::move(entries)}};
}

}  // namespace ncspan::json
