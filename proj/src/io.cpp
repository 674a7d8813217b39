#include "hyperoct/io.hpp"

#include <sstream>

#include "hyperoct/error.hpp"

namespace hyperoct::io {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

Json rational_json(const Rational& r) {
  if (r.get_den() == 1) return integer_json(r.get_num());
  return Json(r.get_str());
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SignedPermutation& beta) { return Json(beta.window()); }

Json to_json(const QTSeries& s) {
  Json out = Json::array();
  for (const auto& [k, c] : s.terms())
    out.push_back(Json::array({k.first, k.second, integer_json(c.get_num()), integer_json(c.get_den())}));
  return out;
}

namespace {

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(Json::array({c.a, c.b}));
  return out;
}

}  // namespace

Json to_json(const EDiagram& d) { return Json{{"cells", cells_json(d.cells())}}; }

Json to_json(const ODiagram& d) { return Json{{"kind", "o"}, {"cells", cells_json(d.cells())}}; }

Json to_json(const DiagPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back(Json::array({Json(it->first), integer_json(it->second.get_num()),
                               integer_json(it->second.get_den())}));
  return out;
}

Json to_json(const StraightenedForm& s) {
  Json out = Json::array();
  for (const StraightenedTerm& t : s.terms)
    out.push_back(Json{{"lam", to_json(t.lam)},
                       {"mu", to_json(t.mu)},
                       {"beta", to_json(t.beta)},
                       {"coeff", t.coeff.get_str()}});
  return out;
}

Json to_json(const VerifyReport& r) {
  Json out{{"identity", r.identity}, {"n", r.n}, {"status", r.pass ? "PASS" : "FAIL"}};
  if (r.first_discrepancy) {
    const Discrepancy& d = *r.first_discrepancy;
    Json fd{{"q_exp", d.q_exp}, {"t_exp", d.t_exp}, {"lhs", d.lhs}, {"rhs", d.rhs}};
    if (!d.label.empty()) fd["label"] = d.label;
    out["first_discrepancy"] = fd;
  } else {
    out["first_discrepancy"] = nullptr;
  }
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "partition must be an array");
  std::vector<int> parts;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "partition part " + v.dump());
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

SignedPermutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "signed permutation must be an array");
  std::vector<int> w;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "entry " + v.dump());
    w.push_back(v.get<int>());
  }
  return SignedPermutation(std::move(w));
}

QTSeries series_from_json(const Json& j, int truncation) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "series must be an array");
  QTSeries s(truncation);
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 4 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw Error(ErrorCode::Parse, "series term " + t.dump());
    Rational c(integer_from_json(t[2]), integer_from_json(t[3]));
    if (c.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator");
    c.canonicalize();
    s.add_term(t[0].get<int>(), t[1].get<int>(), c);
  }
  return s;
}

std::vector<Cell> cells_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("cells") : j;
  if (!arr.is_array()) throw Error(ErrorCode::Parse, "cells must be an array");
  std::vector<Cell> cells;
  for (const Json& c : arr) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw Error(ErrorCode::Parse, "cell " + c.dump());
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return cells;
}

DiagPoly poly_from_json(const Json& j, int n) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "polynomial must be an array");
  DiagPoly p(n);
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_array())
      throw Error(ErrorCode::Parse, "polynomial term " + t.dump());
    Rational c(integer_from_json(t[1]), integer_from_json(t[2]));
    if (c.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator");
    c.canonicalize();
    p.add_term(t[0].get<Exponent>(), c);
  }
  return p;
}

std::vector<Cell> parse_two_line(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size())
        throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad entry '" + tok + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != 2)
    throw Error(ErrorCode::Parse, "expected two rows, found " + std::to_string(rows.size()));
  if (rows[0].size() != rows[1].size())
    throw Error(ErrorCode::Parse, "rows have " + std::to_string(rows[0].size()) + " and " +
                                      std::to_string(rows[1].size()) + " entries");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < rows[0].size(); ++i) cells.push_back({rows[0][i], rows[1][i]});
  return cells;
}

std::string to_latex(const std::vector<Cell>& cells) {
  std::ostringstream os;
  os << "\\begin{pmatrix} ";
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? " & " : "") << cells[i].a;
  os << " \\\\ ";
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? " & " : "") << cells[i].b;
  os << " \\end{pmatrix}";
  return os.str();
}

}  // namespace hyperoct::io
