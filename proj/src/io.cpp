#include "zonal/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace zonal::io {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

Json poly_to_json(const ExactPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json term;
    term["i"] = k.first;
    term["j"] = k.second;
    term["re"] = c.re.get_str();
    term["im"] = c.im.get_str();
    terms.push_back(term);
  }
  Json out;
  out["terms"] = terms;
  return out;
}

ExactPoly poly_from_json(const Json& j) {
  ExactPoly p;
  for (const Json& term : j.at("terms")) {
    GaussianRational c{rational_from_string(term.at("re").get<std::string>()),
                       rational_from_string(term.at("im").get<std::string>())};
    p.add_term(term.at("i").get<int>(), term.at("j").get<int>(), c);
  }
  return p;
}

Json eigen_state_to_json(const EigenState& st) {
  Json out;
  out["p"] = st.qn.p;
  out["q"] = st.qn.q;
  out["tau"] = st.qn.tau;
  out["m"] = st.qn.m;
  out["l"] = st.qn.l;
  out["n"] = st.qn.n;
  out["eigenvalue"] = st.eigenvalue.get_str();
  out["norm_sq_over_pi"] = st.norm_sq.get_str();
  out["poly"] = poly_to_json(st.poly);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("write_file: cannot open '" + path + "'");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw std::runtime_error("write_file: short write to '" + path + "'");
}

}  // namespace zonal::io
