// eqc: command-line front end for the engine.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqc/grid.hpp"
#include "eqc/json_io.hpp"

using namespace eqc;

namespace {

constexpr int kOk = 0, kVerifyFail = 1, kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  int p = 2;
  int max_p = 13;
  std::string ring = "S0";
  std::string coeff = "A";
  std::string grading;
  Int window = 8;
  bool window_set = false;
  std::string format = "text";
  std::uint64_t seed = 12345;
  bool labels = false;
  int figure = 0;
  Int max_dim = -1;
  std::string suite;
  std::vector<std::string> exprs;
};

Ring point_ring(const std::string& s) {
  if (s == "S0") return Ring::S0;
  if (s == "EG") return Ring::EG;
  if (s == "TEG") return Ring::TEG;
  throw UsageError("ring " + s + " has no point-ring form here");
}

Coeff coeff_of(const std::string& s) {
  if (s == "RZ") return Coeff::RZ;
  if (s == "concZ") return Coeff::concZ;
  return Coeff::A;
}

void check_prime(const Options& o) {
  if (!is_prime(o.p)) throw UsageError("--p " + std::to_string(o.p) + " is not prime");
  if (o.p > o.max_p)
    throw UsageError("--p " + std::to_string(o.p) + " exceeds the bound " + std::to_string(o.max_p) + " (raise --max-p)");
}

void need_text_or_json(const Options& o) {
  if (o.format == "svg") throw UsageError("svg output is only available for grid");
}

std::string group_name(const FgAbGroup& g) {
  if (g.orders.empty()) return "0";
  std::string s;
  for (Int n : g.orders) s += (s.empty() ? "" : " + ") + (n == 0 ? std::string("Z") : "Z/" + std::to_string(n));
  return s;
}

std::string mat_text(const Mat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < m.cols; ++j) s += (j ? " " : "") + std::to_string(m(i, j));
  }
  return s + "]";
}

void print_cell(std::ostream& os, const Cell& c, const std::string& indent = "") {
  auto names = [](const std::vector<Gen>& v) {
    std::string s;
    for (auto& g : v) s += (s.empty() ? "" : ", ") + g.name();
    return s.empty() ? std::string("-") : s;
  };
  os << indent << "type: " << c.type_label() << "\n";
  os << indent << "G/G: " << group_name(c.functor.GG) << "   generators " << names(c.gg) << "\n";
  os << indent << "G/e: " << group_name(c.functor.Ge) << "   generators " << names(c.ge) << "\n";
  if (!c.is_zero())
    os << indent << "rho " << mat_text(c.functor.rho) << "  tau " << mat_text(c.functor.tau) << "  t "
       << mat_text(c.functor.t) << "\n";
}

// ---------- group ----------

struct Summand {
  std::string label;
  Cell cell;
};

// B: free over the point on admissible words.  BG: only component 0 matters.  BEG: only the fixed set.
std::vector<Summand> b_summands(const std::string& ring, const GradingROPi& T, Coeff coeff, Int max_dim) {
  std::vector<Summand> out;
  if (ring == "B") {
    for (auto& w : enumerate_admissible(T, max_dim)) {
      GradingROPi d = T - w.grading();
      Cell c = group_at(Ring::S0, d[0], coeff);
      if (!c.is_zero()) out.push_back({w.str(), c});
    }
    return out;
  }
  if (coeff != Coeff::A) throw UsageError("--ring " + ring + " supports --coeff A only");
  bool eg = ring == "BG";
  for (int k = 0; k < T.p; ++k) {
    if (eg && k > 0) break;
    for (Int s = 0; 2 * s <= max_dim; ++s) {
      Cell c = group_at(eg ? Ring::EG : Ring::TEG, T[k] - GradingROG::trivial(T.p, 2 * s));
      if (c.is_zero()) continue;
      std::string z = "zeta(" + std::to_string(k) + "; " + (T - T[k]).str() + ")";
      out.push_back({parse_detail::factors({parse_detail::pw("sigma(" + std::to_string(k) + ")", s), z}), c});
    }
  }
  return out;
}

int cmd_group(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  if (o.grading.empty()) throw UsageError("group needs --grading");
  Coeff coeff = coeff_of(o.coeff);
  if (o.ring == "S0" || o.ring == "EG" || o.ring == "TEG") {
    Ring r = point_ring(o.ring);
    if (r != Ring::S0 && coeff != Coeff::A) throw UsageError("--coeff " + o.coeff + " is only defined for S0");
    GradingROG a = parse_grading(o.p, o.grading);
    Cell c = group_at(r, a, coeff);
    if (o.format == "json") {
      std::cout << to_json(c).dump(2) << "\n";
    } else {
      std::cout << "H^{" << a.str() << "}(" << o.ring << "; " << o.coeff << ")  |a| = " << a.dim()
                << ", a^G = " << a.fixed() << "\n";
      print_cell(std::cout, c, "  ");
    }
    return kOk;
  }
  GradingROPi T = parse_grading_pi(o.p, o.grading);
  auto fd = T.fixed_dims();
  Int spread = *std::max_element(fd.begin(), fd.end()) - *std::min_element(fd.begin(), fd.end());
  Int max_dim = o.max_dim >= 0 ? o.max_dim : std::max<Int>(T.dim(), 0) + 2 * spread + 2 * o.window;
  auto sums = b_summands(o.ring, T, coeff, max_dim);
  if (o.format == "json") {
    json j = {{"ring", o.ring}, {"coeff", o.coeff}, {"grading", to_json(T)}, {"max_dim", max_dim}};
    json s = json::array();
    for (auto& x : sums) s.push_back({{"summand", x.label}, {"cell", to_json(x.cell)}});
    j["summands"] = s;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "H^{" << T.str() << "}(" << o.ring << "; " << o.coeff << "), words up to dimension " << max_dim
              << ": " << sums.size() << " nonzero summand" << (sums.size() == 1 ? "" : "s") << "\n";
    for (auto& x : sums) {
      std::cout << "  " << x.label << "  (coefficient grading " << x.cell.alpha.str() << ")\n";
      print_cell(std::cout, x.cell, "    ");
    }
  }
  return kOk;
}

// ---------- expressions ----------

json value_json(const parse_detail::CVal& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Int>) return {{"integer", x}};
        else return to_json(x);
      },
      v);
}

std::string value_text(const parse_detail::CVal& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Int>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, PointClass>) return point_text(x) + "   in degree " + x.alpha.str();
        else {
          std::string s;
          if constexpr (std::is_same_v<T, FixedRingClass>) {
            try {
              s = expr(x);
            } catch (const Error&) {
              s = x.str();
            }
          } else {
            s = expr(x);
          }
          return s + "   in degree " + x.grading.str();
        }
      },
      v);
}

void emit_value(const Options& o, const parse_detail::CVal& v) {
  if (o.format == "json") std::cout << value_json(v).dump(2) << "\n";
  else std::cout << value_text(v) << "\n";
}

parse_detail::CVal parse_value(const Options& o, const std::string& s) { return Parser(o.p, s, coeff_of(o.coeff)).value(); }

int cmd_mul(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  if (o.exprs.empty()) throw UsageError("mul needs at least one expression");
  // each operand on its own so error spans point into the argument the user typed
  std::vector<std::string> parts;
  for (auto& e : o.exprs) {
    parse_value(o, e);
    parts.push_back("(" + e + ")");
  }
  std::string joined;
  for (auto& s : parts) joined += (joined.empty() ? "" : "*") + s;
  emit_value(o, parse_value(o, joined));
  return kOk;
}

int cmd_normalize(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  if (o.exprs.size() != 1) throw UsageError("normalize takes one expression");
  emit_value(o, parse_value(o, o.exprs[0]));
  return kOk;
}

int cmd_eta(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  if (o.exprs.size() != 1) throw UsageError("eta takes one expression");
  BClass x = Parser(o.p, o.exprs[0], coeff_of(o.coeff)).bclass();
  FixedRingClass y = eta(x);
  bool inj = eta_injective_at(x.grading);
  if (o.format == "json") {
    std::cout << json{{"input", to_json(x)}, {"eta", to_json(y)}, {"injective_here", inj}}.dump(2) << "\n";
  } else {
    std::cout << "x      = " << value_text(x) << "\n";
    std::cout << "eta(x) = " << value_text(y) << "\n";
    std::cout << "eta is " << (inj ? "" : "not ") << "injective in this grading\n";
  }
  return kOk;
}

// ---------- grid ----------

int cmd_grid(const Options& o) {
  check_prime(o);
  Grid g;
  if (o.figure) {
    auto& ws = figure_windows();
    auto it = std::find_if(ws.begin(), ws.end(), [&](auto& w) { return w.number == o.figure; });
    if (it == ws.end()) throw UsageError("--figure must be 1..6");
    if (it->odd == (o.p == 2)) throw UsageError("figure " + std::to_string(o.figure) + " needs " + (it->odd ? "an odd" : "p = 2") + " prime");
    g = figure_grid(o.figure, o.p == 2 ? 5 : o.p);
  } else {
    if (o.window < 0 || o.window > 40) throw UsageError("--window must be in 0..40");
    std::optional<GradingROG> a0;
    if (!o.grading.empty()) {
      a0 = parse_grading(o.p, o.grading);
      if (!a0->in_RO0()) throw UsageError("--grading for grid must be an RO_0 offset (dimension and fixed dimension 0)");
    }
    g = make_grid(point_ring(o.ring), o.p, o.window, -o.window, -o.window, o.window, coeff_of(o.coeff), a0);
  }
  if (o.format == "json") std::cout << grid_json(g).dump(2) << "\n";
  else if (o.format == "svg") std::cout << grid_svg(g);
  else {
    std::cout << "ring " << ring_name(g.ring) << ", p = " << g.p << ", coefficients " << coeff_name(g.coeff)
              << (g.schematic ? ", schematic (alpha in RO_0 nonzero)" : "") << "; rows |a|, columns a^G\n";
    std::cout << grid_text(g, o.labels);
  }
  return kOk;
}

// ---------- verification verbs ----------

int report_suites(const Options& o, const std::vector<SuiteResult>& rs) {
  bool ok = std::all_of(rs.begin(), rs.end(), [](auto& r) { return r.ok(); });
  if (o.format == "json") {
    json a = json::array();
    for (auto& r : rs) a.push_back(to_json(r));
    std::cout << json{{"ok", ok}, {"seed", o.seed}, {"results", a}}.dump(2) << "\n";
  } else {
    for (auto& r : rs) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, "
                << std::to_string(r.seconds).substr(0, 5) << " s, seed " << r.seed << "\n";
      for (auto& n : r.notes) std::cout << "  " << n << "\n";
      for (auto& f : r.report.failures) std::cout << "  failure: " << f << "\n";
    }
  }
  return ok ? kOk : kVerifyFail;
}

int cmd_les(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  if (o.grading.empty()) return report_suites(o, {suite_les(o.p, o.window)});
  GradingROG a = parse_grading(o.p, o.grading);
  Report r = les_report(a);
  if (o.format == "json") {
    std::cout << json{{"grading", to_json(a)}, {"ok", r.ok}, {"failures", r.failures}}.dump(2) << "\n";
  } else {
    std::cout << "EG+ -> S0 -> TEG at " << a.str() << ": " << (r.ok ? "exact" : "NOT exact") << "\n";
    for (auto& f : r.failures) std::cout << "  failure: " << f << "\n";
  }
  return r.ok ? kOk : kVerifyFail;
}

int cmd_ext(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  auto cls = ext1_classify(catalog::RZ(o.p), catalog::concZ(o.p));
  SuiteResult check = suite_ext(o.p);
  if (o.format == "json") {
    json a = json::array();
    for (auto& e : cls)
      a.push_back({{"identified", e.identified}, {"invariant", e.invariant}, {"split", e.split}, {"middle", to_json(e.middle)}});
    std::cout << json{{"p", o.p}, {"classes", a}, {"count", cls.size()}, {"check", to_json(check)}}.dump(2) << "\n";
  } else {
    std::cout << "Ext^1(RZ, <Z>) for p = " << o.p << ": " << cls.size() << " classes\n";
    for (auto& e : cls)
      std::cout << "  " << e.identified << (e.split ? "  (split)" : "") << "  invariant " << e.invariant << ", middle G/G "
                << group_name(e.middle.GG) << ", G/e " << group_name(e.middle.Ge) << "\n";
    if (!check.ok())
      for (auto& f : check.report.failures) std::cout << "  failure: " << f << "\n";
  }
  return check.ok() ? kOk : kVerifyFail;
}

int cmd_relations(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  Coeff c = coeff_of(o.coeff);
  std::vector<SuiteResult> rs;
  if (c == Coeff::A) rs.push_back(suite_point_relations(o.p));
  rs.push_back(suite_detail::timed("relations-B", 0, [&](auto& ck, SuiteResult&) { ck.merge(verify_relations(o.p, c), ""); }));
  return report_suites(o, rs);
}

int cmd_basis(const Options& o) {
  check_prime(o);
  need_text_or_json(o);
  if (o.grading.empty()) throw UsageError("basis needs --grading");
  GradingROPi T = parse_grading_pi(o.p, o.grading);
  Int max_dim = o.max_dim >= 0 ? o.max_dim : 2 * o.window;
  auto ws = enumerate_admissible(T, max_dim);
  if (o.format == "json") {
    json a = json::array();
    for (auto& w : ws) a.push_back({{"word", w.str()}, {"dim", w.grading().dim()}, {"coefficient_grading", to_json((T - w.grading())[0])}});
    std::cout << json{{"grading", to_json(T)}, {"max_dim", max_dim}, {"basis", a}}.dump(2) << "\n";
  } else {
    std::cout << "admissible monomials for " << T.str() << " up to dimension " << max_dim << "\n";
    for (auto& w : ws)
      std::cout << "  " << w.str() << "   |w| = " << w.grading().dim() << ", coefficient in H^{" << (T - w.grading())[0].str()
                << "}\n";
  }
  return kOk;
}

int cmd_suite(const Options& o) {
  need_text_or_json(o);
  int p = 0;
  if (o.p != 0) {
    check_prime(o);
    p = o.p;
  }
  std::vector<SuiteResult> rs;
  if (o.suite == "all")
    for (auto& n : suite_names()) {
      auto r = run_suite(n, p, o.seed);
      rs.insert(rs.end(), r.begin(), r.end());
    }
  else if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
    throw UsageError("unknown suite '" + o.suite + "'");
  else
    rs = run_suite(o.suite, p, o.seed);
  return report_suites(o, rs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eqc: RO(G)-graded cohomology of the point, EG, EG~ and B_GU(1) for G = Z/p"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool ring) {
    s->add_option("--p", o.p, "the prime")->check(CLI::PositiveNumber);
    s->add_option("--max-p", o.max_p, "largest accepted prime")->capture_default_str();
    s->add_option("--coeff", o.coeff, "coefficients")->check(CLI::IsMember({"A", "RZ", "concZ"}))->capture_default_str();
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "svg"}))->capture_default_str();
    s->add_option("--seed", o.seed, "seed for random suites")->capture_default_str();
    if (ring)
      s->add_option("--ring", o.ring, "space")->check(CLI::IsMember({"S0", "EG", "TEG", "B", "BG", "BEG"}))->capture_default_str();
  };

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Verb verbs[] = {
      {"group", "the Mackey functor in one grading", cmd_group},
      {"mul", "multiply expressions", cmd_mul},
      {"normalize", "normal form of an expression", cmd_normalize},
      {"eta", "restriction to the fixed set", cmd_eta},
      {"grid", "a window of cells, rows |a| and columns a^G", cmd_grid},
      {"les-check", "exactness of EG+ -> S0 -> EG~", cmd_les},
      {"ext-classify", "classes of extensions of RZ by <Z>", cmd_ext},
      {"verify-relations", "check the relations of the presentations", cmd_relations},
      {"basis", "admissible monomials in a grading", cmd_basis},
      {"run-suite", "run a named verification suite", cmd_suite},
  };
  int (*chosen)(const Options&) = nullptr;
  for (auto& v : verbs) {
    auto* s = app.add_subcommand(v.name, v.help);
    common(s, std::string(v.name) == "group" || std::string(v.name) == "grid");
    std::string n = v.name;
    if (n == "group" || n == "grid" || n == "les-check" || n == "basis")
      s->add_option("--grading", o.grading, "grading, e.g. \"2 + 3*M1 - M2\" or a p-tuple");
    if (n == "grid" || n == "les-check" || n == "group" || n == "basis")
      s->add_option("--window", o.window, "half-width of the window")->capture_default_str();
    if (n == "group" || n == "basis") s->add_option("--max-dim", o.max_dim, "largest word dimension");
    if (n == "grid") {
      s->add_flag("--labels", o.labels, "print generator labels instead of functor types");
      s->add_option("--figure", o.figure, "one of the six reference windows (1..6)");
    }
    if (n == "mul" || n == "normalize" || n == "eta") s->add_option("expr", o.exprs, "expressions")->required();
    if (n == "run-suite") {
      std::vector<std::string> names = suite_names();
      names.push_back("all");
      s->add_option("name", o.suite, "suite name")->required()->check(CLI::IsMember(names));
    }
    s->callback([&chosen, run = v.run] { chosen = run; });
  }
  // run-suite defaults to all primes; everything else to p = 2
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "run-suite") o.p = 0;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return chosen(o);
  } catch (const ParseError& e) {
    std::cerr << "error " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
