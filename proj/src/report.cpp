#include "mvop/report.hpp"

#include <algorithm>
#include <sstream>

namespace mvop {

Json json_of(const Rational& x) { return to_string(x); }

Json json_of(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_of(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const MatrixPoly& p) {
  Json coeffs = Json::array();
  for (int d = 0; d <= p.degree(); ++d) coeffs.push_back(json_of(p.coeff(d)));
  return coeffs;
}

Json json_of(const Poly& p) {
  Json coeffs = Json::array();
  for (int d = 0; d <= p.degree(); ++d) coeffs.push_back(json_of(p.coeff(d)));
  return coeffs;
}

Json json_of(const EigenSeq& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.size(); ++j) row.push_back(json_of(s.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void Report::add(const std::string& name, bool pass, Json witness, double ms) {
  checks.push_back(CheckEntry{name, pass ? "pass" : "fail", std::move(witness), ms});
}

void Report::add_evidence(const std::string& name, Json witness, double ms) {
  checks.push_back(CheckEntry{name, "evidence", std::move(witness), ms});
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::string Report::to_json() const {
  Json j;
  j["family"] = family;
  j["params"] = params;
  j["command"] = command;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = c.status;
    if (!c.witness.is_null()) e["witness"] = c.witness;
    if (timing) e["ms"] = c.ms;
    cs.push_back(std::move(e));
  }
  j["checks"] = cs;
  if (!data.is_null()) j["data"] = data;
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << (timing ? "name,status,ms\n" : "name,status\n");
  for (const auto& c : checks) {
    os << c.name << "," << c.status;
    if (timing) os << "," << c.ms;
    os << "\n";
  }
  // flat data payloads (tables, dimensions) as key,value... rows
  if (data.is_object())
    for (const auto& [key, value] : data.items()) {
      if (value.is_array() &&
          std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_primitive(); })) {
        os << key;
        for (const auto& x : value) os << "," << (x.is_string() ? x.get<std::string>() : x.dump());
        os << "\n";
      } else if (value.is_primitive()) {
        os << key << "," << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  return os.str();
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "# " << command << " (" << family << ")\n\n";
  os << (timing ? "| check | status | ms |\n|---|---|---|\n" : "| check | status |\n|---|---|\n");
  for (const auto& c : checks) {
    os << "| " << c.name << " | " << c.status << " |";
    if (timing) os << " " << c.ms << " |";
    os << "\n";
  }
  if (!data.is_null()) os << "\n```json\n" << data.dump(2) << "\n```\n";
  return os.str();
}

std::string Report::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "md") return to_markdown();
  return to_json();
}

}  // namespace mvop
