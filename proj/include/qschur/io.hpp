#pragma once

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qschur/fock.hpp"
#include "qschur/oracle.hpp"

namespace qschur {

using json = nlohmann::ordered_json;

// ---- Laurent polynomials ----
// JSON object form: map from decimal exponent string to decimal coefficient
// string, e.g. {"-2": "1", "0": "3", "4": "2"}.

inline json laurent_to_json(const laurent& f) {
  json obj = json::object();
  for (const auto& [e, c] : f.terms()) obj[std::to_string(e)] = c.str();
  return obj;
}

inline laurent laurent_from_json(const json& obj) {
  laurent f;
  for (const auto& [key, value] : obj.items())
    f += laurent::monomial(bigint(value.get<std::string>()), std::stoi(key));
  return f;
}

// LaTeX rendering, descending powers: "q^{3}+q", "q^{-1}", "1".
inline std::string laurent_to_latex(const laurent& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bigint a = c;
    if (!first && a > 0) out << '+';
    if (a < 0) {
      out << '-';
      a = -a;
    }
    if (e == 0) {
      out << a;
    } else {
      if (a != 1) out << a;
      out << 'q';
      if (e != 1) out << "^{" << e << '}';
    }
    first = false;
  }
  return out.str();
}

// ---- Multipartitions and tableaux ----

inline json multipartition_to_json(const multipartition& mu) {
  json arr = json::array();
  for (const partition& p : mu.components()) arr.push_back(p);
  return arr;
}

inline multipartition multipartition_from_json(const json& arr) {
  std::vector<partition> comps;
  for (const auto& p : arr) comps.push_back(p.get<partition>());
  return multipartition(std::move(comps));
}

// Tableau JSON: shape plus row-major entry lists per component.
inline json tableau_to_json(const standard_tableau& t) {
  json rows = json::array();
  for (int l = 1; l <= t.shape().level(); ++l) {
    json comp = json::array();
    for (int r = 1; r <= t.shape().rows(l); ++r) {
      json row = json::array();
      for (int c = 1; c <= t.shape().part(l, r); ++c) row.push_back(t.entry({r, c, l}));
      comp.push_back(row);
    }
    rows.push_back(comp);
  }
  return json{{"shape", multipartition_to_json(t.shape())}, {"entries", rows}};
}

inline standard_tableau tableau_from_json(const json& obj) {
  multipartition shape = multipartition_from_json(obj.at("shape"));
  std::vector<std::vector<std::vector<int>>> entries;
  for (const auto& comp : obj.at("entries")) {
    entries.emplace_back();
    for (const auto& row : comp) entries.back().push_back(row.get<std::vector<int>>());
  }
  return standard_tableau(std::move(shape), std::move(entries));
}

// ---- Root vectors and blocks ----

inline json root_vector_to_json(const root_vector& beta) {
  json obj = json::object();
  for (const auto& [i, bi] : beta.coefficients()) obj[std::to_string(i)] = bi;
  return obj;
}

inline json block_to_json(const block_t& blk) {
  json members = json::array();
  for (const multipartition& mu : blk.members) members.push_back(format_multipartition(mu));
  return json{{"beta", root_vector_to_json(blk.beta)},
              {"defect", blk.defect},
              {"members", members}};
}

// ---- Fock vectors ----

inline json fock_vector_to_json(const fock_vector& v) {
  json obj = json::object();
  for (const auto& [lam, coeff] : v.entries())
    obj[format_multipartition(lam)] = coeff.to_string();
  return obj;
}

// ---- Graded matrices ----

inline json matrix_to_json(const graded_matrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const multipartition& lam : m.row_labels()) rows.push_back(format_multipartition(lam));
  for (const multipartition& mu : m.col_labels()) cols.push_back(format_multipartition(mu));
  for (size_t i = 0; i < m.row_labels().size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.col_labels().size(); ++j) row.push_back(m.at(i, j).to_string());
    entries.push_back(row);
  }
  return json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

inline graded_matrix matrix_from_json(const json& obj) {
  std::vector<multipartition> rows, cols;
  for (const auto& r : obj.at("rows")) rows.push_back(parse_multipartition(r.get<std::string>()));
  for (const auto& c : obj.at("cols")) cols.push_back(parse_multipartition(c.get<std::string>()));
  graded_matrix m(rows, cols);
  const auto& entries = obj.at("entries");
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m.at(i, j) = laurent::from_string(entries.at(i).at(j).get<std::string>());
  return m;
}

inline std::string matrix_to_csv(const graded_matrix& m) {
  std::ostringstream out;
  for (const multipartition& mu : m.col_labels()) out << ',' << format_multipartition(mu);
  out << '\n';
  for (size_t i = 0; i < m.row_labels().size(); ++i) {
    out << format_multipartition(m.row_labels()[i]);
    for (size_t j = 0; j < m.col_labels().size(); ++j) out << ',' << m.at(i, j).to_string();
    out << '\n';
  }
  return out.str();
}

// LaTeX array in the layout used for decomposition matrices: row labels in
// the compact (…|…|…) notation, zero entries rendered as ".", cells above
// the diagonal left empty for square matrices.
inline std::string matrix_to_latex(const graded_matrix& m) {
  std::ostringstream out;
  size_t nrows = m.row_labels().size(), ncols = m.col_labels().size();
  bool square = nrows == ncols && m.row_labels() == m.col_labels();
  int level = nrows ? m.row_labels().front().level() : 1;
  out << "\\begin{array}{r";
  for (int l = 1; l < level; ++l) out << "@{|}" << (l + 1 == level ? 'l' : 'c');
  out << "|*{" << (ncols + 1) << "}{c}}\n";
  for (size_t i = 0; i < nrows; ++i) {
    std::string label = format_multipartition(m.row_labels()[i], /*compact=*/true);
    std::replace(label.begin(), label.end(), '|', '&');
    out << '(' << label << ')';
    for (size_t j = 0; j < ncols; ++j) {
      out << '&';
      if (square && j > i) continue;
      const laurent& entry = m.at(i, j);
      out << (entry.is_zero() ? "." : laurent_to_latex(entry));
    }
    out << "\\\\\n";
  }
  out << "\\end{array}\n";
  return out.str();
}

inline std::string matrix_to_text(const graded_matrix& m) {
  size_t ncols = m.col_labels().size();
  std::vector<size_t> width(ncols, 1);
  std::vector<std::vector<std::string>> cells(m.row_labels().size(),
                                              std::vector<std::string>(ncols));
  size_t label_width = 0;
  for (size_t i = 0; i < m.row_labels().size(); ++i) {
    label_width = std::max(label_width, format_multipartition(m.row_labels()[i], true).size());
    for (size_t j = 0; j < ncols; ++j) {
      const laurent& entry = m.at(i, j);
      cells[i][j] = entry.is_zero() ? "." : entry.to_string();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  std::ostringstream out;
  for (size_t i = 0; i < m.row_labels().size(); ++i) {
    out << std::left << std::setw(static_cast<int>(label_width + 2))
        << format_multipartition(m.row_labels()[i], true);
    for (size_t j = 0; j < ncols; ++j)
      out << ' ' << std::left << std::setw(static_cast<int>(width[j])) << cells[i][j];
    out << '\n';
  }
  return out.str();
}

// Matrix equality as label-indexed triple sets, insensitive to row and
// column order; zero entries are immaterial.
using matrix_triple = std::tuple<std::string, std::string, std::string>;

inline std::set<matrix_triple> matrix_triples(const graded_matrix& m) {
  std::set<matrix_triple> out;
  for (size_t i = 0; i < m.row_labels().size(); ++i)
    for (size_t j = 0; j < m.col_labels().size(); ++j)
      if (!m.at(i, j).is_zero())
        out.emplace(format_multipartition(m.row_labels()[i]),
                    format_multipartition(m.col_labels()[j]), m.at(i, j).to_string());
  return out;
}

inline bool matrices_equal_as_triples(const graded_matrix& a, const graded_matrix& b) {
  return matrix_triples(a) == matrix_triples(b);
}

// ---- Check reports ----

inline json check_report_to_json(const check_report& r) {
  json obj{{"name", r.name}, {"scope", r.scope}, {"passed", r.passed}};
  if (r.counterexample) obj["counterexample"] = *r.counterexample;
  return obj;
}

}  // namespace qschur
