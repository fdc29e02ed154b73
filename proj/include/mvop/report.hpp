#ifndef MVOP_REPORT_HPP
#define MVOP_REPORT_HPP

#include <json.hpp>

#include "mvop/eigen_seq.hpp"
#include "mvop/matrix_poly.hpp"

namespace mvop {

using Json = nlohmann::ordered_json;

// Value encodings shared by every command: rationals as "p/q" strings,
// matrices as row-major nested arrays, matrix polynomials as coefficient
// lists ascending in t, eigenvalue sequences as matrices of coefficient
// lists in n.
Json json_of(const Rational& x);
Json json_of(const Matrix& m);
Json json_of(const MatrixPoly& p);
Json json_of(const Poly& p);
Json json_of(const EigenSeq& s);

struct CheckEntry {
  std::string name;
  std::string status;  // pass | fail | evidence
  Json witness;        // optional detail
  double ms = 0;
};

struct Report {
  std::string family;
  Json params;
  std::string command;
  bool timing = true;
  std::vector<CheckEntry> checks;
  Json data;  // command-specific payload

  void add(const std::string& name, bool pass, Json witness = Json(), double ms = 0);
  // finite computational support for a conjecture; never pass/fail
  void add_evidence(const std::string& name, Json witness, double ms = 0);
  bool all_pass() const;
  std::string to_json() const;
  std::string to_csv() const;
  std::string to_markdown() const;
  std::string render(const std::string& format) const;
};

}  // namespace mvop

#endif
