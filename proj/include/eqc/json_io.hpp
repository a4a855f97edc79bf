#pragma once

#include <json.hpp>

#include "eqc/bgu1.hpp"
#include "eqc/parse.hpp"
#include "eqc/suites.hpp"

namespace eqc {

using nlohmann::json;

inline json to_json(const GradingROG& a) { return {{"p", a.p}, {"n0", a.n0}, {"m", a.m}}; }

inline json to_json(const GradingROPi& a) {
  json c = json::array();
  for (int k = 0; k < a.p; ++k) c.push_back(to_json(a[k]));
  return {{"p", a.p}, {"components", c}};
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

inline json to_json(const FgAbGroup& g) { return {{"orders", g.orders}}; }

inline json to_json(const MackeyFunctor& M) {
  return {{"label", M.label}, {"GG", to_json(M.GG)}, {"Ge", to_json(M.Ge)},
          {"rho", to_json(M.rho)}, {"tau", to_json(M.tau)}, {"t", to_json(M.t)}};
}

inline json to_json(const Cell& c) {
  json gg = json::array(), ge = json::array();
  for (auto& g : c.gg) gg.push_back(g.name());
  for (auto& g : c.ge) ge.push_back(g.name());
  return {{"ring", ring_name(c.ring)}, {"coeff", coeff_name(c.coeff)}, {"grading", to_json(c.alpha)},
          {"type", c.type}, {"generators", {{"GG", gg}, {"Ge", ge}}}, {"functor", to_json(c.functor)}};
}

inline json to_json(const PointClass& x) {
  return {{"p", x.p}, {"ring", ring_name(x.ring)}, {"coeff", coeff_name(x.coeff)}, {"grading", to_json(x.alpha)},
          {"level", x.level == Level::GG ? "G/G" : "G/e"}, {"coords", x.c}, {"text", x.str()}};
}

// printable form of a point class; falls back to the generator listing off the point
inline std::string point_text(const PointClass& x) {
  if (x.ring != Ring::S0 || x.level != Level::GG) return x.str();
  return expr(x);
}

// (monomial, coefficient) pairs
inline json to_json(const BClass& x) {
  json terms = json::array();
  for (auto& [w, c] : x.terms) terms.push_back({{"monomial", w.str()}, {"coefficient", point_text(c)}, {"coefficient_grading", to_json(c.alpha)}});
  return {{"p", x.p}, {"coeff", coeff_name(x.coeff)}, {"grading", to_json(x.grading)}, {"terms", terms},
          {"text", expr(x)}};
}

inline json to_json(const FixedRingClass& x) {
  json comps = json::array();
  for (int k = 0; k < x.p; ++k) {
    json t = json::array();
    for (auto& [s, c] : x.comp[k]) t.push_back({{"sigma_power", s}, {"coefficient", point_text(c)}});
    comps.push_back({{"k", k}, {"zeta_grading", to_json(x.zeta_grading(k))}, {"terms", t}});
  }
  std::string text;
  try {
    text = expr(x);
  } catch (const Error&) {
    text = x.str();
  }
  return {{"p", x.p}, {"ring", ring_name(x.ring)}, {"coeff", coeff_name(x.coeff)}, {"grading", to_json(x.grading)},
          {"components", comps}, {"text", text}};
}

inline json to_json(const SuiteResult& r) {
  return {{"name", r.name}, {"ok", r.ok()}, {"checks", r.checks}, {"seconds", r.seconds}, {"seed", r.seed},
          {"notes", r.notes}, {"failures", r.report.failures}};
}

}  // namespace eqc
