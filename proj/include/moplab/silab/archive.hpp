#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "moplab/core/parse.hpp"
#include "moplab/silab/suites.hpp"

namespace moplab {

using Json = nlohmann::ordered_json;

inline Json scalar_json(const ParamScalar& x) {
  return Json{{"num", poly_str(x.numerator())}, {"den", poly_str(x.denominator())}};
}

inline ParamScalar scalar_from_json(const Json& j) {
  return ParamScalar::fraction(parse_scalar(j.at("num").get<std::string>()).numerator(),
                               parse_scalar(j.at("den").get<std::string>()).numerator());
}

inline Json report_json(const Report& r) {
  Json j;
  j["id"] = r.id;
  j["model"] = r.model;
  j["R"] = r.r.str();
  j["Q"] = r.q ? Json(r.q->str()) : Json(nullptr);
  j["N"] = r.n;
  j["lhs"] = scalar_json(r.lhs);
  j["rhs"] = scalar_json(r.rhs);
  j["equal"] = r.equal;
  j["discrepancy"] = r.discrepancy ? scalar_json(*r.discrepancy) : Json(nullptr);
  j["note"] = r.note;
  return j;
}

inline Report report_from_json(const Json& j) {
  Report r;
  r.id = j.at("id").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.r = Partition::parse(j.at("R").get<std::string>());
  if (!j.at("Q").is_null()) r.q = Partition::parse(j.at("Q").get<std::string>());
  r.n = j.at("N").get<int>();
  r.lhs = scalar_from_json(j.at("lhs"));
  r.rhs = scalar_from_json(j.at("rhs"));
  r.equal = j.at("equal").get<bool>();
  if (!j.at("discrepancy").is_null()) r.discrepancy = scalar_from_json(j.at("discrepancy"));
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

inline bool same_report(const Report& a, const Report& b) {
  return a.id == b.id && a.model == b.model && a.r == b.r && a.q == b.q && a.n == b.n && a.lhs == b.lhs && a.rhs == b.rhs &&
         a.equal == b.equal && a.discrepancy == b.discrepancy && a.note == b.note;
}

inline Json suite_json(const SuiteResult& s) {
  Json j;
  j["suite"] = s.suite;
  j["seed"] = s.seed;
  j["variant"] = s.variant;
  Json cases = Json::array();
  for (auto& c : s.cases) cases.push_back(report_json(c));
  j["cases"] = std::move(cases);
  j["summary"] = Json{{"pass", s.pass()}, {"fail", s.fail()}};
  return j;
}

inline SuiteResult suite_from_json(const Json& j) {
  SuiteResult s;
  s.suite = j.at("suite").get<std::string>();
  s.seed = j.at("seed").get<uint64_t>();
  s.variant = j.at("variant").get<std::string>();
  for (auto& c : j.at("cases")) s.cases.push_back(report_from_json(c));
  return s;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}
}  // namespace detail

inline std::string suite_csv(const SuiteResult& s) {
  std::ostringstream os;
  os << "suite,variant,id,model,R,Q,N,lhs,rhs,equal,discrepancy,note\n";
  for (auto& c : s.cases) {
    using detail::csv_field;
    os << csv_field(s.suite) << ',' << csv_field(s.variant) << ',' << csv_field(c.id) << ',' << csv_field(c.model) << ','
       << csv_field(c.r.str()) << ',' << csv_field(c.q ? c.q->str() : "") << ',' << c.n << ',' << csv_field(c.lhs.str()) << ','
       << csv_field(c.rhs.str()) << ',' << (c.equal ? "true" : "false") << ','
       << csv_field(c.discrepancy ? c.discrepancy->str() : "") << ',' << csv_field(c.note) << '\n';
  }
  return os.str();
}

inline std::string suite_pretty(const SuiteResult& s) {
  std::ostringstream os;
  os << s.suite << " (" << s.variant << ", seed " << s.seed << "): " << s.pass() << " pass, " << s.fail() << " fail\n";
  for (auto& c : s.cases) {
    os << (c.equal ? "  ok   " : "  FAIL ") << c.id << ' ' << c.r.str();
    if (c.q) os << '/' << c.q->str();
    os << " N=" << c.n << ": " << display(c.lhs);
    os << (c.equal ? " = " : " != ") << display(c.rhs);
    if (c.discrepancy) os << "  [ratio " << display(*c.discrepancy) << ']';
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace moplab
