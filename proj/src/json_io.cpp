#include "orientalis/json_io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "orientalis/diagnostics.hpp"

namespace orientalis {

namespace {

constexpr const char* kFormat = "orientalis-certificate/1";

nlohmann::json int_to_json(const Int& c) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (c >= lo && c <= hi) return c.convert_to<std::int64_t>();
  return c.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  ORI_REQUIRE(j.is_number_integer(), "coefficient must be an integer or string");
  return Int(j.get<std::int64_t>());
}

}  // namespace

nlohmann::json to_json(const Operator& a) {
  return {{"values", a.values()}, {"target", a.target_dim()}};
}

Operator operator_from_json(const nlohmann::json& j) {
  ORI_REQUIRE(j.contains("values") && j.contains("target"),
              "operator JSON needs values and target");
  return Operator(j.at("values").get<std::vector<int>>(), j.at("target").get<int>());
}

nlohmann::json to_json(const Chain& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, c] : x.terms()) {
    terms.push_back({int_to_json(c), a.values()});
  }
  return {{"m", x.source_dim()}, {"n", x.target_dim()}, {"terms", terms}};
}

Chain chain_from_json(const nlohmann::json& j) {
  ORI_REQUIRE(j.contains("m") && j.contains("n") && j.contains("terms"),
              "chain JSON needs m, n and terms");
  int m = j.at("m").get<int>();
  int n = j.at("n").get<int>();
  Chain x(m, n);
  for (const auto& term : j.at("terms")) {
    ORI_REQUIRE(term.is_array() && term.size() == 2, "malformed chain term");
    x.add_term(Operator(term.at(1).get<std::vector<int>>(), n),
               int_from_json(term.at(0)));
  }
  return x;
}

nlohmann::json to_json(const CertStep& s) {
  return {{"step", s.kind == StepKind::HornFill ? "horn" : "thin"},
          {"m", s.m},
          {"k", s.k},
          {"w", to_json(s.w)}};
}

CertStep cert_step_from_json(const nlohmann::json& j) {
  ORI_REQUIRE(j.contains("step") && j.contains("m") && j.contains("k") &&
                  j.contains("w"),
              "step JSON needs step, m, k and w");
  std::string kind = j.at("step").get<std::string>();
  ORI_REQUIRE(kind == "horn" || kind == "thin", "unknown step kind: " + kind);
  return CertStep{kind == "horn" ? StepKind::HornFill : StepKind::ThinExt,
                  j.at("m").get<int>(), j.at("k").get<int>(),
                  chain_from_json(j.at("w"))};
}

void write_certificate(std::ostream& out, const Certificate& cert) {
  nlohmann::json header = {
      {"format", kFormat}, {"n", cert.n}, {"max_dim", cert.max_dim}};
  out << header.dump() << '\n';
  for (const CertStep& s : cert.steps) {
    out << to_json(s).dump() << '\n';
  }
}

Certificate read_certificate(std::istream& in) {
  std::string line;
  ORI_REQUIRE(static_cast<bool>(std::getline(in, line)),
              "certificate is empty");
  nlohmann::json header = nlohmann::json::parse(line);
  ORI_REQUIRE(header.value("format", "") == kFormat,
              "unrecognized certificate format");
  Certificate cert;
  cert.n = header.at("n").get<int>();
  cert.max_dim = header.at("max_dim").get<int>();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    cert.steps.push_back(cert_step_from_json(nlohmann::json::parse(line)));
  }
  return cert;
}

nlohmann::json to_json(const ReplayReport& r) {
  nlohmann::json j = {{"legal", r.legal},
                      {"complete", r.complete},
                      {"verified_through", r.verified_through},
                      {"state_counts", r.state_counts},
                      {"oracle_counts", r.oracle_counts}};
  if (r.rejection) {
    j["rejection"] = {{"step_index", r.rejection->step_index},
                      {"clause", to_string(r.rejection->clause)},
                      {"detail", r.rejection->detail}};
  }
  return j;
}

nlohmann::json to_json(const EnumReport& r) {
  nlohmann::json j = {{"n", r.n},
                      {"m", r.m},
                      {"bound", r.bound},
                      {"strategy", r.strategy},
                      {"boundary_hit", r.boundary_hit}};
  if (r.member_count >= 0) {
    j["member_count"] = r.member_count;
    j["nondegenerate_count"] = r.nondegenerate_count;
  }
  if (r.closure_count >= 0) j["closure_count"] = r.closure_count;
  if (r.strategy == "both") j["strategies_agree"] = r.strategies_agree;
  return j;
}

nlohmann::json to_json(const JoinReport& r) {
  return {{"ok", r.ok},
          {"base_count", r.base_count},
          {"cone_count", r.cone_count},
          {"point_count", r.point_count},
          {"detail", r.detail}};
}

}  // namespace orientalis
