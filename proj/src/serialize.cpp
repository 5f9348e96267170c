#include "serialize.hpp"

#include "biop/literal.hpp"

namespace biop {

namespace {

Json multisets(const std::vector<Multiset>& list) {
  Json out = Json::array();
  for (const auto& s : list) out.push_back(render(s));
  return out;
}

}  // namespace

Json to_json(const SumProductReport& report, const Multiset& s,
             const std::optional<MinimalityResult>& minimality) {
  Json j;
  j["ring"] = s.ring().name();
  j["multiset"] = render(s);
  j["size"] = s.size();
  j["sum"] = render(report.sum);
  j["product"] = render(report.product);
  j["bioperational"] = report.is_bioperational;
  j["trivial"] = report.is_trivial;
  j["vanishing"] = report.is_vanishing;
  if (minimality) {
    j["minimal"] = minimality->minimal;
    j["witness"] = minimality->witness ? Json(render(*minimality->witness)) : Json(nullptr);
  } else {
    j["minimal"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const ConstructionTrace& trace) {
  Json j;
  j["input"] = render(trace.input_factors);
  j["target"] = render(trace.target);
  j["transforms"] = Json::array();
  for (const auto& t : trace.transforms)
    j["transforms"].push_back({{"removed", render(t.removed)}, {"inserted", render(t.inserted)}});
  j["appendages"] = Json::array();
  for (const auto& a : trace.appendages) j["appendages"].push_back({{"label", a.label}, {"count", a.count}});
  j["trimmed"] = Json::array();
  for (const auto& t : trace.trimmed)
    j["trimmed"].push_back({{"removed", render(t.removed)}, {"times", t.times}});
  j["result"] = render(trace.result);
  return j;
}

Json to_json(const EnumerationReport& report) {
  Json j;
  j["ring"] = report.ring.name();
  j["query"] = report.kind == QueryKind::ByLength ? "length" : "sum-product";
  j["value"] = report.value;
  j["count"] = report.count();
  j["solutions"] = multisets(report.solutions);
  return j;
}

Json to_json(const RecordReport& report) {
  Json j;
  j["max_n"] = report.max_n;
  j["counts"] = report.counts;
  j["positions"] = report.positions;
  return j;
}

Json uniform_json(std::int64_t p, std::int64_t n_max, const std::vector<UniformSolution>& solutions) {
  Json j;
  j["p"] = p;
  j["n_max"] = n_max;
  j["solutions"] = Json::array();
  for (const auto& s : solutions) j["solutions"].push_back({{"a", s.a}, {"n", s.n}});
  return j;
}

Json to_json(const VerifyReport& report) {
  Json j;
  j["target"] = report.target;
  j["holds"] = report.holds;
  j["cases"] = report.cases;
  j["counterexamples"] = multisets(report.counterexamples);
  j["found"] = multisets(report.found);
  return j;
}

Json completion_json(const Multiset& input, const Multiset& completed) {
  Json j;
  j["ring"] = input.ring().name();
  j["input"] = render(input);
  j["appended"] = render(mdiff(completed, input));
  j["result"] = render(completed);
  return j;
}

}  // namespace biop
