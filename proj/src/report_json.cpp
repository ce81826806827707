#include "fqid/report_json.hpp"

#include <algorithm>

namespace fqid {

json rational_json(const Rational& r) { return r.str(); }

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json vectors_json(const Algebra& algebra, const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(algebra.vector_string(v));
  return out;
}

}  // namespace

json ideal_json(const Algebra& algebra, const Ideal& ideal) {
  return {{"rank", ideal.rank()}, {"codim", ideal.codim()}, {"basis", vectors_json(algebra, ideal.space().rows())}};
}

json report_json(const EvalReport& r) {
  json j = {
      {"zero_count", r.zero_count},
      {"total", r.total},
      {"probability", rational_json(r.probability)},
      {"degree", optional_json(r.degree)},
      {"threshold", rational_json(r.threshold)},
      {"homogeneous", r.homogeneous},
      {"is_identity", r.is_identity},
      {"verdict_consistent", r.verdict_consistent},
      {"mode", r.mode.sampled ? json{{"kind", "sampled"}, {"samples", r.mode.samples}, {"seed", r.mode.seed}}
                              : json{{"kind", "exact"}}},
      {"std_error", optional_json(r.std_error)},
  };
  if (r.functional) {
    const auto& f = *r.functional;
    json degrees = json::array();
    for (const auto& d : f.reduced_degrees) degrees.push_back(optional_json(d));
    j["functional"] = {
        {"nonzero_coordinates", f.nonzero_coordinates},
        {"reduced_degrees", degrees},
        {"nonzero_lower_bound", rational_json(f.nonzero_lower_bound)},
        {"zero_upper_bound", rational_json(f.zero_upper_bound)},
        {"common_zero_count", optional_json(f.common_zero_count)},
        {"consistent", f.consistent},
    };
  } else {
    j["functional"] = nullptr;
  }
  return j;
}

EvalReport eval_report_from_json(const json& j) {
  EvalReport r;
  r.zero_count = j.at("zero_count").get<std::uint64_t>();
  r.total = j.at("total").get<std::uint64_t>();
  r.probability = Rational::parse(j.at("probability").get<std::string>());
  if (!j.at("degree").is_null()) r.degree = j.at("degree").get<int>();
  r.threshold = Rational::parse(j.at("threshold").get<std::string>());
  r.homogeneous = j.at("homogeneous").get<bool>();
  r.is_identity = j.at("is_identity").get<bool>();
  r.verdict_consistent = j.at("verdict_consistent").get<bool>();
  const auto& mode = j.at("mode");
  if (mode.at("kind") == "sampled") {
    r.mode = EvalMode::sampling(mode.at("samples").get<std::uint64_t>(), mode.at("seed").get<std::uint64_t>());
  }
  if (!j.at("std_error").is_null()) r.std_error = j.at("std_error").get<double>();
  if (const auto& f = j.at("functional"); !f.is_null()) {
    FunctionalRoute route;
    route.nonzero_coordinates = f.at("nonzero_coordinates").get<int>();
    for (const auto& d : f.at("reduced_degrees")) {
      route.reduced_degrees.push_back(d.is_null() ? std::nullopt : std::optional<int>(d.get<int>()));
    }
    route.nonzero_lower_bound = Rational::parse(f.at("nonzero_lower_bound").get<std::string>());
    route.zero_upper_bound = Rational::parse(f.at("zero_upper_bound").get<std::string>());
    if (!f.at("common_zero_count").is_null()) route.common_zero_count = f.at("common_zero_count").get<std::uint64_t>();
    route.consistent = f.at("consistent").get<bool>();
    r.functional = std::move(route);
  }
  return r;
}

json report_json(const Algebra& algebra, const CosetWitness& w) {
  return {{"ideal", ideal_json(algebra, w.ideal)},
          {"representatives", vectors_json(algebra, w.representatives)},
          {"codim", w.codim},
          {"trivial", w.trivial}};
}

json report_json(const DescentCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"stage", s.stage},
                     {"statement", s.statement},
                     {"checked", s.checked},
                     {"expansion_verified", s.expansion_verified},
                     {"verified", s.verified}});
  }
  return {{"steps", steps}, {"identity_on_ideal", c.identity_on_ideal}, {"verified", c.verified}};
}

json report_json(const BlockReport& r, const Algebra& algebra) {
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"representatives", vectors_json(algebra, b.representatives)},
                      {"zero_count", b.zero_count},
                      {"size", b.size},
                      {"over_zero", b.over_zero},
                      {"identically_zero", b.identically_zero},
                      {"fraction", rational_json(b.fraction)}});
  }
  return {{"degree", r.degree},
          {"block_bound", rational_json(r.block_bound)},
          {"f_outer", rational_json(r.f_outer)},
          {"f_inner", rational_json(r.f_inner)},
          {"blocks", blocks},
          {"no_zeros_off_fiber", r.no_zeros_off_fiber},
          {"blocks_within_bound", r.blocks_within_bound},
          {"hypothesis_holds", r.hypothesis_holds},
          {"decay_holds", optional_json(r.decay_holds)},
          {"weighted_average_matches", r.weighted_average_matches},
          {"quotient_consistent", r.quotient_consistent},
          {"consistent", r.consistent}};
}

json report_json(const NagataReport& r) {
  return {{"d", r.d},
          {"characteristic", r.characteristic},
          {"associative", r.associative},
          {"identity", r.identity},
          {"probability", rational_json(r.probability)},
          {"char_exceeds_degree", r.char_exceeds_degree},
          {"nilpotency_index", optional_json(r.nilpotency_index)},
          {"asserted", r.asserted},
          {"consistent", r.consistent}};
}

json report_json(const FqDecomposition& f) {
  return {{"q", f.q}, {"d", f.d}, {"m", f.m}, {"r", f.r}, {"value", rational_json(f.value)}};
}

json report_json(const SequenceMinimum& s) {
  return {{"minimum", rational_json(s.minimum)}, {"witness", s.witness}, {"visited", s.visited}};
}

json report_json(const ExhaustiveMinimum& e) {
  return {{"minimum", e.minimum},
          {"witness", e.witness.str()},
          {"polynomials", e.polynomials},
          {"bound", rational_json(e.bound)},
          {"violations", e.violations}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

namespace {

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_array()) {
    std::string s;
    for (const auto& e : j) s += (s.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
    rows.emplace_back(prefix, "[" + s + "]");
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

std::string render_table(const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace fqid
