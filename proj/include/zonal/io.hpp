// Deterministic CSV/JSON emission shared by the CLI.
//
// Numbers are printed with %.15g, complex values as paired re/im columns,
// exact rationals as canonical "num/den" strings; identical inputs produce
// byte-identical reports.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zonal/exact_poly.hpp"
#include "zonal/zones.hpp"

namespace zonal::io {

using Json = nlohmann::ordered_json;

std::string fmt(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
  size_t width_;
};

Json poly_to_json(const ExactPoly& p);
ExactPoly poly_from_json(const Json& j);

Json eigen_state_to_json(const EigenState& st);

// Writes atomically enough for our purposes: the full report is assembled in
// memory first, so a failed computation never leaves partial output.
void write_file(const std::string& path, const std::string& content);

}  // namespace zonal::io
