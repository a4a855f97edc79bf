#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqc/point.hpp"

namespace eqc {

/** \brief A rectangle of cells: rows are |alpha| from top to bottom, columns alpha^G. */
struct Grid {
  int p = 2;
  Ring ring = Ring::S0;
  Coeff coeff = Coeff::A;
  bool schematic = false;
  Int row_hi = 0, row_lo = 0, col_lo = 0, col_hi = 0;
  std::vector<std::vector<std::string>> types, labels;  // [row][col]

  Int rows() const { return row_hi - row_lo + 1; }
  Int cols() const { return col_hi - col_lo + 1; }
  const std::string& type_at(Int d, Int f) const { return types.at(row_hi - d).at(f - col_lo); }
  const std::string& label_at(Int d, Int f) const { return labels.at(row_hi - d).at(f - col_lo); }
};

// RO_0 part used for the schematic (p odd) figures: any nonzero class works, the labels
// print it as alpha.
inline GradingROG schematic_alpha(int p) {
  if (p == 2) return GradingROG(2);
  if (p == 3) return GradingROG(3);  // RO_0 is trivial for p = 3
  return GradingROG::M(p, 2) - GradingROG::M(p, 1);
}

inline Grid make_grid(Ring ring, int p, Int row_hi, Int row_lo, Int col_lo, Int col_hi, Coeff coeff = Coeff::A,
                      std::optional<GradingROG> a0 = std::nullopt) {
  Grid g;
  g.p = p;
  g.ring = ring;
  g.coeff = coeff;
  g.schematic = p != 2 && !a0;
  g.row_hi = row_hi;
  g.row_lo = row_lo;
  g.col_lo = col_lo;
  g.col_hi = col_hi;
  GradingROG base = a0 ? *a0 : schematic_alpha(p);
  Style st{g.schematic};
  for (Int d = row_hi; d >= row_lo; --d) {
    std::vector<std::string> tr, lr;
    for (Int f = col_lo; f <= col_hi; ++f) {
      if (p != 2 && mod(d - f, 2) != 0) {
        tr.emplace_back();
        lr.emplace_back();
        continue;
      }
      Cell c = group_at(ring, grading_from(base, d, f), coeff);
      tr.push_back(c.is_zero() ? "." : c.type_label(st));
      lr.push_back(c.figure_label(st));
    }
    g.types.push_back(std::move(tr));
    g.labels.push_back(std::move(lr));
  }
  return g;
}

// Square window |alpha^G| <= w, |alpha| <= w.
inline Grid make_grid(Ring ring, int p, Int window, Coeff coeff = Coeff::A) {
  return make_grid(ring, p, window, -window, -window, window, coeff);
}

inline std::string grid_text(const Grid& g, bool labels) {
  const auto& t = labels ? g.labels : g.types;
  size_t w = 4;
  for (auto& r : t)
    for (auto& s : r) w = std::max(w, s.size());
  w += 2;
  std::ostringstream os;
  auto pad = [&](const std::string& s) {
    os << s;
    for (size_t i = s.size(); i < w; ++i) os << ' ';
  };
  os << "     ";
  for (Int f = g.col_lo; f <= g.col_hi; ++f) pad("f=" + std::to_string(f));
  os << "\n";
  for (Int r = 0; r < g.rows(); ++r) {
    std::string d = std::to_string(g.row_hi - r);
    os << std::string(4 - std::min<size_t>(4, d.size()), ' ') << d << " ";
    for (auto& s : t[r]) pad(s);
    os << "\n";
  }
  return os.str();
}

inline nlohmann::json grid_json(const Grid& g) {
  nlohmann::json j;
  j["p"] = g.p;
  j["ring"] = ring_name(g.ring);
  j["coeff"] = coeff_name(g.coeff);
  j["schematic"] = g.schematic;
  j["rows"] = {g.row_hi, g.row_lo};
  j["cols"] = {g.col_lo, g.col_hi};
  nlohmann::json cells = nlohmann::json::array();
  for (Int r = 0; r < g.rows(); ++r)
    for (Int c = 0; c < g.cols(); ++c) {
      if (g.types[r][c].empty()) continue;
      cells.push_back({{"dim", g.row_hi - r}, {"fixed", g.col_lo + c}, {"type", g.types[r][c]},
                       {"label", g.labels[r][c]}});
    }
  j["cells"] = cells;
  return j;
}

inline std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

// Same axes as the text form: alpha^G across, |alpha| up; cells show type over label.
inline std::string grid_svg(const Grid& g) {
  const int cw = 120, ch = 44, m = 40;
  const Int W = m + cw * g.cols() + 10, H = m + ch * g.rows() + 10;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"monospace\" font-size=\"10\">\n";
  Int x0 = m + cw * (0 - g.col_lo) + cw / 2, y0 = m + ch * g.row_hi + ch / 2;
  if (g.col_lo <= 0 && 0 <= g.col_hi)
    os << "<line x1=\"" << x0 << "\" y1=\"" << m << "\" x2=\"" << x0 << "\" y2=\"" << H - 10
       << "\" stroke=\"#999\"/>\n";
  if (g.row_lo <= 0 && 0 <= g.row_hi)
    os << "<line x1=\"" << m << "\" y1=\"" << y0 << "\" x2=\"" << W - 10 << "\" y2=\"" << y0
       << "\" stroke=\"#999\"/>\n";
  for (Int c = 0; c < g.cols(); ++c)
    os << "<text x=\"" << m + cw * c + cw / 2 << "\" y=\"20\" text-anchor=\"middle\">" << g.col_lo + c << "</text>\n";
  for (Int r = 0; r < g.rows(); ++r) {
    Int y = m + ch * r + ch / 2;
    os << "<text x=\"10\" y=\"" << y << "\">" << g.row_hi - r << "</text>\n";
    for (Int c = 0; c < g.cols(); ++c) {
      if (g.types[r][c].empty()) continue;
      Int x = m + cw * c + cw / 2;
      os << "<text x=\"" << x << "\" y=\"" << y - 6 << "\" text-anchor=\"middle\">" << xml_escape(g.types[r][c])
         << "</text>\n";
      os << "<text x=\"" << x << "\" y=\"" << y + 8 << "\" text-anchor=\"middle\" fill=\"#336\">"
         << xml_escape(g.labels[r][c]) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

// The printed windows of the six figures: (ring, p-parity, rows hi..lo, columns lo..hi).
struct FigureWindow {
  int number;
  Ring ring;
  bool odd;
  Int row_hi, row_lo, col_lo, col_hi;
};

inline const std::vector<FigureWindow>& figure_windows() {
  static const std::vector<FigureWindow> w{
      {1, Ring::S0, false, 4, -4, -4, 5}, {2, Ring::EG, false, 5, 0, -4, 4}, {3, Ring::TEG, false, 3, -3, 0, 7},
      {4, Ring::S0, true, 4, -4, -4, 5},  {5, Ring::EG, true, 6, 0, -4, 4},  {6, Ring::TEG, true, 4, -4, 0, 7}};
  return w;
}

inline Grid figure_grid(int number, int p_odd = 5) {
  for (auto& f : figure_windows())
    if (f.number == number) return make_grid(f.ring, f.odd ? p_odd : 2, f.row_hi, f.row_lo, f.col_lo, f.col_hi);
  throw Error("no figure " + std::to_string(number));
}

}  // namespace eqc
