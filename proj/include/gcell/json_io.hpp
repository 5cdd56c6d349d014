#ifndef GCELL_JSON_IO_HPP
#define GCELL_JSON_IO_HPP

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcell/decomposition.hpp"

namespace gcell {

using json = nlohmann::json;

inline std::string monomial_ideal_str(const std::vector<ExpPair>& gens) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) os << ", ";
    os << mono_str(Mono{gens[k].x, gens[k].y});
  }
  os << ")";
  return os.str();
}

inline json matrix_to_json(const PBMatrix& M) {
  json rows = json::array();
  for (const auto& row : M) {
    json r = json::array();
    for (const auto& e : row) r.push_back(poly_str(e));
    rows.push_back(r);
  }
  return rows;
}

inline json cell_to_json(const Cell& c) {
  json j;
  j["m"] = c.m.parts;
  json egens = json::array();
  for (const auto& g : c.E) egens.push_back(mono_str(Mono{g.x, g.y}));
  j["E"] = egens;
  j["d"] = c.d;
  j["U"] = c.U.entries;
  j["hilb"] = c.hilb.values;
  j["H"] = matrix_to_json(c.H);
  j["M"] = matrix_to_json(c.M);
  json shape;
  shape["kind"] = c.shape.kind == ShapeKind::lower ? "lower" : "full";
  json params = json::array();
  for (int k = 1; k <= c.params.dim(); ++k) {
    const ParamRef& r = c.params.of(k);
    params.push_back(json{{"i", r.i}, {"j", r.j}, {"deg", r.deg}});
  }
  shape["params"] = params;
  j["N"] = shape;
  json minors = json::array();
  for (const auto& f : c.minors) minors.push_back(poly_str(f));
  j["I"] = minors;
  j["dim"] = c.dim;
  j["dim_hom"] = c.dim_hom;
  j["proven"] = c.proven;
  return j;
}

/// Rebuild the cell named by "m" and check every stored field against the
/// reconstruction; throws on any mismatch.
inline Cell cell_from_json(const json& j) {
  Partition m{j.at("m").get<std::vector<int>>()};
  Cell c = cell(m);
  json round = cell_to_json(c);
  for (const char* key : {"E", "d", "U", "hilb", "H", "M", "N", "I", "dim", "dim_hom", "proven"})
    if (j.at(key) != round.at(key))
      throw std::invalid_argument(std::string("cell_from_json: field '") + key +
                                  "' inconsistent with partition");
  return c;
}

inline json report_to_json(const DecompositionReport& rep) {
  json j;
  j["n"] = rep.n;
  json cells = json::array();
  for (const Cell& c : rep.cells) cells.push_back(cell_to_json(c));
  j["cells"] = cells;
  j["a"] = rep.a;
  j["betti"] = rep.betti;
  if (rep.verification) {
    json ver = json::array();
    for (const auto& v : *rep.verification)
      ver.push_back(json{{"trials", v.trials},
                         {"passed", v.passed},
                         {"distinct_ok", v.distinct_ok},
                         {"failures", v.failures}});
    j["verification"] = ver;
    j["seed"] = rep.seed;
    j["field"] = rep.field;
  }
  return j;
}

// ---- aligned text tables ----

inline std::vector<std::string> matrix_lines(const PBMatrix& M) {
  std::size_t cols = M.empty() ? 0 : M[0].size();
  std::vector<std::size_t> width(cols, 0);
  std::vector<std::vector<std::string>> cellstr;
  for (const auto& row : M) {
    std::vector<std::string> r;
    for (std::size_t j = 0; j < cols; ++j) {
      std::string s = poly_str(row[j]);
      if (s.size() > width[j]) width[j] = s.size();
      r.push_back(std::move(s));
    }
    cellstr.push_back(std::move(r));
  }
  std::vector<std::string> lines;
  for (const auto& r : cellstr) {
    std::ostringstream os;
    os << "[ ";
    for (std::size_t j = 0; j < cols; ++j) {
      os << std::left << std::setw(static_cast<int>(width[j])) << r[j];
      os << (j + 1 < cols ? "  " : " ");
    }
    os << "]";
    lines.push_back(os.str());
  }
  return lines;
}

inline std::string int_list(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ", ";
    os << v[k];
  }
  os << "]";
  return os.str();
}

inline std::string mu_range_str(const Cell& c) {
  std::ostringstream os;
  for (int mu = c.mu_min; mu <= c.mu_max; ++mu) {
    if (mu > c.mu_min) os << ",";
    os << mu;
  }
  return os.str();
}

inline std::string cell_table_block(const Cell& c) {
  std::ostringstream os;
  os << "m = " << int_list(c.m.parts) << "   E = " << monomial_ideal_str(c.E)
     << "   h = " << int_list(c.hilb.values) << "\n";
  os << "dimension = " << c.dim << "   dim_hom = " << c.dim_hom << "   mu = " << mu_range_str(c)
     << "   " << (c.proven ? "proven" : "conjectural") << "\n";
  os << "H+N =\n";
  for (const auto& line : matrix_lines(c.M)) os << "  " << line << "\n";
  return os.str();
}

inline std::string report_table(const DecompositionReport& rep, bool group_by_h) {
  std::ostringstream os;
  os << "Groebner cells of Hilb^" << rep.n << "(k[[x,y]]): " << rep.cells.size() << " cells\n";
  if (group_by_h) {
    for (const auto& [h, idxs] : rep.groups) {
      os << "\nHilbert function " << int_list(h.values) << "\n";
      os << std::string(60, '-') << "\n";
      for (int k : idxs) os << "\n" << cell_table_block(rep.cells[static_cast<std::size_t>(k)]);
    }
  } else {
    for (const Cell& c : rep.cells) os << "\n" << cell_table_block(c);
  }
  os << "\ndimension vector a = (";
  for (std::size_t i = 0; i < rep.a.size(); ++i) {
    if (i) os << ",";
    os << rep.a[i];
  }
  os << ")\n";
  return os.str();
}

inline std::string param_poly_list(const std::vector<ParamPoly>& gens) {
  if (gens.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) os << ", ";
    os << gens[k].str();
  }
  return os.str();
}

inline std::string strata_table(const BettiStrata& s, const Cell& c) {
  std::ostringstream os;
  os << "Betti strata of the cell of m = " << int_list(s.m.parts) << " (dim " << c.dim << ")";
  if (s.conjectural) os << "  [conjectural: outside the proven parametrization class]";
  os << "\n";
  for (const auto& st : s.strata) {
    os << "V_" << st.d << " = V(" << param_poly_list(st.closed) << ")";
    if (!st.removed.empty()) os << " \\ V(" << param_poly_list(st.removed) << ")";
    os << "\n";
  }
  std::vector<int> mask = homogeneous_mask(c.m, c.shape);
  os << "homogeneous sub-cell: A^" << c.dim_hom << ", coordinates {";
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (k) os << ", ";
    os << "c" << mask[k];
  }
  os << "}\n";
  return os.str();
}

inline json strata_to_json(const BettiStrata& s, const Cell& c) {
  json j;
  j["m"] = s.m.parts;
  j["conjectural"] = s.conjectural;
  json strata = json::array();
  for (const auto& st : s.strata) {
    json gens_closed = json::array();
    for (const auto& g : st.closed) gens_closed.push_back(g.str());
    json gens_removed = json::array();
    for (const auto& g : st.removed) gens_removed.push_back(g.str());
    strata.push_back(json{{"d", st.d}, {"closed", gens_closed}, {"removed", gens_removed}});
  }
  j["strata"] = strata;
  std::vector<int> mask = homogeneous_mask(c.m, c.shape);
  j["homogeneous_mask"] = mask;
  j["dim_hom"] = c.dim_hom;
  return j;
}

}  // namespace gcell

#endif
