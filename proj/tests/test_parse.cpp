#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eqc/grid.hpp"
#include "eqc/json_io.hpp"

using namespace eqc;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  if (sep == ' ') {
    while (is >> cur) out.push_back(cur);
    return out;
  }
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

// "_" marks an off-parity slot that the grid leaves blank
std::string unblank(const std::string& s) { return s == "_" ? "" : s; }

struct Table {
  int figure;
  std::vector<std::string> types;   // rows top to bottom, cells split on spaces
  std::vector<std::string> labels;  // cells split on '|'
};

// Hand transcriptions of the six reference windows, in this library's notation.
const std::vector<Table>& tables() {
  static const std::vector<Table> t{
      {1,
       {"<Z/2> . <Z/2> . <Z> . . . . .", "<Z/2> . <Z/2> . <Z> . . . . .", "<Z/2> . <Z/2> . <Z> . . . . .",
        "<Z/2> . <Z/2> . <Z> . . . . .", "RZ RZ- RZ RZ- A_G/G RZ- LZ LZ- LZ LZ-", ". . . . <Z> . . <Z/2> . <Z/2>",
        ". . . . <Z> . . <Z/2> . <Z/2>", ". . . . <Z> . . <Z/2> . <Z/2>", ". . . . <Z> . . <Z/2> . <Z/2>"},
       {"e^4 xi^2|.|e^4 xi|.|e^4|.|.|.|.|.", "e^3 xi^2|.|e^3 xi|.|e^3|.|.|.|.|.", "e^2 xi^2|.|e^2 xi|.|e^2|.|.|.|.|.",
        "e xi^2|.|e xi|.|e|.|.|.|.|.",
        "xi^2|(iota^3)|xi|(iota)|1|(iota^-1)|(iota^-2)|(iota^-3)|(iota^-4)|(iota^-5)",
        ".|.|.|.|e^-1 kappa|.|.|e^-2 delta xi^-1|.|e^-2 delta xi^-2",
        ".|.|.|.|e^-2 kappa|.|.|e^-3 delta xi^-1|.|e^-3 delta xi^-2",
        ".|.|.|.|e^-3 kappa|.|.|e^-4 delta xi^-1|.|e^-4 delta xi^-2",
        ".|.|.|.|e^-4 kappa|.|.|e^-5 delta xi^-1|.|e^-5 delta xi^-2"}},
      {2,
       {"<Z/2> . <Z/2> . <Z/2> . <Z/2> . <Z/2>", "<Z/2> . <Z/2> . <Z/2> . <Z/2> . <Z/2>",
        "<Z/2> . <Z/2> . <Z/2> . <Z/2> . <Z/2>", "<Z/2> . <Z/2> . <Z/2> . <Z/2> . <Z/2>",
        "<Z/2> . <Z/2> . <Z/2> . <Z/2> . <Z/2>", "RZ RZ- RZ RZ- RZ RZ- RZ RZ- RZ"},
       {"e^5 xi^2|.|e^5 xi|.|e^5|.|e^5 xi^-1|.|e^5 xi^-2", "e^4 xi^2|.|e^4 xi|.|e^4|.|e^4 xi^-1|.|e^4 xi^-2",
        "e^3 xi^2|.|e^3 xi|.|e^3|.|e^3 xi^-1|.|e^3 xi^-2", "e^2 xi^2|.|e^2 xi|.|e^2|.|e^2 xi^-1|.|e^2 xi^-2",
        "e xi^2|.|e xi|.|e|.|e xi^-1|.|e xi^-2", "xi^2|(iota^3)|xi|(iota)|1|(iota^-1)|xi^-1|(iota^-3)|xi^-2"}},
      {3,
       {"<Z> . . <Z/2> . <Z/2> . <Z/2>", "<Z> . . <Z/2> . <Z/2> . <Z/2>", "<Z> . . <Z/2> . <Z/2> . <Z/2>",
        "<Z> . . <Z/2> . <Z/2> . <Z/2>", "<Z> . . <Z/2> . <Z/2> . <Z/2>", "<Z> . . <Z/2> . <Z/2> . <Z/2>",
        "<Z> . . <Z/2> . <Z/2> . <Z/2>"},
       {"e^3 kappa|.|.|e^2 delta xi^-1|.|e^2 delta xi^-2|.|e^2 delta xi^-3",
        "e^2 kappa|.|.|e delta xi^-1|.|e delta xi^-2|.|e delta xi^-3",
        "e kappa|.|.|delta xi^-1|.|delta xi^-2|.|delta xi^-3",
        "kappa|.|.|e^-1 delta xi^-1|.|e^-1 delta xi^-2|.|e^-1 delta xi^-3",
        "e^-1 kappa|.|.|e^-2 delta xi^-1|.|e^-2 delta xi^-2|.|e^-2 delta xi^-3",
        "e^-2 kappa|.|.|e^-3 delta xi^-1|.|e^-3 delta xi^-2|.|e^-3 delta xi^-3",
        "e^-3 kappa|.|.|e^-4 delta xi^-1|.|e^-4 delta xi^-2|.|e^-4 delta xi^-3"}},
      {4,
       {"<Z/p> _ <Z/p> _ <Z> _ . _ . _", "_ . _ . _ . _ . _ .", "<Z/p> _ <Z/p> _ <Z> _ . _ . _",
        "_ . _ . _ . _ . _ .", "RZ _ RZ _ A[nu(alpha)] _ LZ _ LZ _", "_ . _ . _ . _ <Z/p> _ <Z/p>",
        ". _ . _ <Z> _ . _ . _", "_ . _ . _ . _ <Z/p> _ <Z/p>", ". _ . _ <Z> _ . _ . _"},
       {"lambda^{alpha,a^-1} e1^2 xi1^2|_|lambda^{alpha,a^-1} e1^2 xi1|_|mu^{alpha,a} e1^2|_|.|_|.|_",
        "_|.|_|.|_|.|_|.|_|.",
        "lambda^{alpha,a^-1} e1 xi1^2|_|lambda^{alpha,a^-1} e1 xi1|_|mu^{alpha,a} e1|_|.|_|.|_",
        "_|.|_|.|_|.|_|.|_|.",
        "lambda^{alpha,a^-1} xi1^2|_|lambda^{alpha,a^-1} xi1|_|{mu^{alpha,a}, iota^alpha}|_|(iota^alpha iota1^-1)|_|(iota^alpha iota1^-2)|_",
        "_|.|_|.|_|.|_|mu^{alpha,a} e1^-1 delta xi1^-1|_|mu^{alpha,a} e1^-1 delta xi1^-2",
        ".|_|.|_|mu^{alpha,a} e1^-1 kappa|_|.|_|.|_",
        "_|.|_|.|_|.|_|mu^{alpha,a} e1^-2 delta xi1^-1|_|mu^{alpha,a} e1^-2 delta xi1^-2",
        ".|_|.|_|mu^{alpha,a} e1^-2 kappa|_|.|_|.|_"}},
      {5,
       {"<Z/p> _ <Z/p> _ <Z/p> _ <Z/p> _ <Z/p>", "_ . _ . _ . _ . _", "<Z/p> _ <Z/p> _ <Z/p> _ <Z/p> _ <Z/p>",
        "_ . _ . _ . _ . _", "<Z/p> _ <Z/p> _ <Z/p> _ <Z/p> _ <Z/p>", "_ . _ . _ . _ . _",
        "RZ _ RZ _ RZ _ RZ _ RZ"},
       {"e1^3 xi^alpha xi1^2|_|e1^3 xi^alpha xi1|_|e1^3 xi^alpha|_|e1^3 xi^alpha xi1^-1|_|e1^3 xi^alpha xi1^-2",
        "_|.|_|.|_|.|_|.|_",
        "e1^2 xi^alpha xi1^2|_|e1^2 xi^alpha xi1|_|e1^2 xi^alpha|_|e1^2 xi^alpha xi1^-1|_|e1^2 xi^alpha xi1^-2",
        "_|.|_|.|_|.|_|.|_",
        "e1 xi^alpha xi1^2|_|e1 xi^alpha xi1|_|e1 xi^alpha|_|e1 xi^alpha xi1^-1|_|e1 xi^alpha xi1^-2",
        "_|.|_|.|_|.|_|.|_",
        "xi^alpha xi1^2|_|xi^alpha xi1|_|xi^alpha|_|xi^alpha xi1^-1|_|xi^alpha xi1^-2"}},
      {6,
       {"<Z> _ . _ . _ . _", "_ . _ <Z/p> _ <Z/p> _ <Z/p>", "<Z> _ . _ . _ . _", "_ . _ <Z/p> _ <Z/p> _ <Z/p>",
        "<Z> _ . _ . _ . _", "_ . _ <Z/p> _ <Z/p> _ <Z/p>", "<Z> _ . _ . _ . _", "_ . _ <Z/p> _ <Z/p> _ <Z/p>",
        "<Z> _ . _ . _ . _"},
       {"e^alpha e1^2 kappa|_|.|_|.|_|.|_",
        "_|.|_|e^alpha e1 delta xi1^-1|_|e^alpha e1 delta xi1^-2|_|e^alpha e1 delta xi1^-3",
        "e^alpha e1 kappa|_|.|_|.|_|.|_",
        "_|.|_|e^alpha delta xi1^-1|_|e^alpha delta xi1^-2|_|e^alpha delta xi1^-3",
        "e^alpha kappa|_|.|_|.|_|.|_",
        "_|.|_|e^alpha e1^-1 delta xi1^-1|_|e^alpha e1^-1 delta xi1^-2|_|e^alpha e1^-1 delta xi1^-3",
        "e^alpha e1^-1 kappa|_|.|_|.|_|.|_",
        // the first exponent here follows the column (xi1^-1), as in every other row
        "_|.|_|e^alpha e1^-2 delta xi1^-1|_|e^alpha e1^-2 delta xi1^-2|_|e^alpha e1^-2 delta xi1^-3",
        "e^alpha e1^-2 kappa|_|.|_|.|_|.|_"}},
  };
  return t;
}

void compare(const Table& t, const Grid& g) {
  ASSERT_EQ(static_cast<Int>(t.types.size()), g.rows()) << "figure " << t.figure;
  ASSERT_EQ(t.labels.size(), t.types.size());
  for (Int r = 0; r < g.rows(); ++r) {
    auto ty = split(t.types[r], ' ');
    auto lb = split(t.labels[r], '|');
    ASSERT_EQ(static_cast<Int>(ty.size()), g.cols()) << "figure " << t.figure << " row " << r;
    ASSERT_EQ(static_cast<Int>(lb.size()), g.cols()) << "figure " << t.figure << " row " << r;
    for (Int c = 0; c < g.cols(); ++c) {
      Int d = g.row_hi - r, f = g.col_lo + c;
      EXPECT_EQ(unblank(ty[c]), g.type_at(d, f)) << "figure " << t.figure << " at |a|=" << d << " a^G=" << f;
      EXPECT_EQ(unblank(lb[c]), g.label_at(d, f)) << "figure " << t.figure << " at |a|=" << d << " a^G=" << f;
    }
  }
}

GradingROPi random_ropi(int p, std::mt19937& rng, int box = 2) {
  GradingROPi a(p);
  std::uniform_int_distribution<int> d(-box, box);
  for (int i = 0; i < p; ++i)
    for (Int j = 1; j <= half(p); ++j) a = a + Omega(p, i, j) * d(rng);
  return a + GradingROG::trivial(p, d(rng));
}

}  // namespace

TEST(Figures, TranscribedWindowsMatchP2) {
  for (int n = 1; n <= 3; ++n) compare(tables()[n - 1], figure_grid(n));
}

TEST(Figures, TranscribedWindowsMatchOddPrimes) {
  for (int p : {3, 5, 7, 11})
    for (int n = 4; n <= 6; ++n) {
      SCOPED_TRACE("p = " + std::to_string(p));
      compare(tables()[n - 1], figure_grid(n, p));
    }
}

TEST(Figures, OracleAgreesWithTables) {
  for (auto& t : tables()) {
    Grid g = figure_grid(t.figure);
    for (Int d = g.row_lo; d <= g.row_hi; ++d)
      for (Int f = g.col_lo; f <= g.col_hi; ++f) {
        if (g.type_at(d, f).empty()) continue;
        auto [ty, lb] = figure_oracle(t.figure, g.p, d, f);
        EXPECT_EQ(ty, g.type_at(d, f));
        EXPECT_EQ(lb, g.label_at(d, f));
      }
  }
}

TEST(Figures, JsonAndSvgCarryTheSameCells) {
  Grid g = figure_grid(1);
  auto j = grid_json(g);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["ring"], "S0");
  size_t n = 0;
  for (auto& c : j["cells"]) {
    EXPECT_EQ(c["type"], g.type_at(c["dim"], c["fixed"]));
    EXPECT_EQ(c["label"], g.label_at(c["dim"], c["fixed"]));
    ++n;
  }
  EXPECT_EQ(static_cast<Int>(n), g.rows() * g.cols());
  std::string svg = grid_svg(g);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("A_G/G"), std::string::npos);
  EXPECT_NE(svg.find("&lt;Z/2&gt;"), std::string::npos);
  EXPECT_EQ(svg.find("<Z/2>"), std::string::npos);
}

TEST(Figures, OddGridsLeaveOffParityBlank) {
  Grid g = make_grid(Ring::S0, 3, 4);
  for (Int d = -4; d <= 4; ++d)
    for (Int f = -4; f <= 4; ++f) EXPECT_EQ(g.type_at(d, f).empty(), mod(d - f, 2) != 0);
}

TEST(Grammar, GradingLiterals) {
  GradingROG a = parse_grading(5, "p=5; 2 + 3*M1 - M2");
  EXPECT_EQ(a, GradingROG(5, 2, {3, -1}));
  EXPECT_EQ(to_json(a), json::parse(R"({"p":5,"n0":2,"m":[3,-1]})"));
  EXPECT_EQ(parse_grading(2, "3L-1"), GradingROG(2, -1, {3}));
  EXPECT_EQ(parse_grading(2, "3*L - 1"), GradingROG(2, -1, {3}));
  EXPECT_EQ(parse_grading(7, "M9"), GradingROG::M(7, 2));
  EXPECT_EQ(parse_grading_pi(5, "Omega(1,2)"), Omega(5, 1, 2));
  EXPECT_EQ(parse_grading_pi(3, "omega*"), omega_star(3));
  EXPECT_EQ(parse_grading_pi(3, "chi^1(omega*) + Omega(0,1)"), chi_omega(3, 1) + Omega(3, 0, 1));
  EXPECT_EQ(parse_grading_pi(2, "Omega"), Omega2());
  GradingROPi t = parse_grading_pi(3, "(2 + 2*M1, 4 + M1, 6)");
  EXPECT_EQ(t[0], GradingROG(3, 2, {2}));
  EXPECT_EQ(t[2], GradingROG(3, 6, {0}));
  // printed forms parse back
  for (auto& g : {a, GradingROG(5, -3, {0, 2}), GradingROG::M(5, 1) * 4}) EXPECT_EQ(parse_grading(5, g.str()), g);
  EXPECT_EQ(parse_grading_pi(3, t.str()), t);
}

TEST(Grammar, SpecExpressions) {
  BClass x = parse_b(3, "chic(0)*xi(0,1)"), y = parse_b(3, "chic(1)*xi(1,1)");
  BClass m = bmul(x, y);
  EXPECT_EQ(parse_b(3, expr(m)), m);
  EXPECT_EQ(parse_b(3, "(chic(0)*xi(0,1))*(chic(1)*xi(1,1))"), m);
  EXPECT_EQ(parse_b(2, "c"), bgen::c(2));
  EXPECT_EQ(parse_b(3, "chic(2)"), bgen::chic(3, 2));
  EXPECT_EQ(parse_point(2, "e^2*xi"), parse_point(2, "e*e*xi"));
  EXPECT_EQ(parse_point(2, "2*kappa - kappa"), parse_point(2, "kappa"));
}

TEST(Grammar, ErrorsCarrySpans) {
  auto span = [](int p, const std::string& s) -> std::pair<size_t, size_t> {
    try {
      parse_point(p, s);
    } catch (const ParseError& e) {
      return {e.begin, e.end};
    }
    return {0, 0};
  };
  EXPECT_EQ(span(5, "e*foo"), std::make_pair(size_t{2}, size_t{5}));
  EXPECT_THROW(parse_point(5, "p=3; M1"), ParseError);
  EXPECT_THROW(parse_point(5, "chic(0)*"), ParseError);
  EXPECT_THROW(parse_point(5, "e^2 +* xi"), ParseError);
  try {
    parse_grading(5, "p=3; M1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("grading mismatch"), std::string::npos);
  }
  try {
    parse_point(2, "kappa*zork");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown symbol"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("^^^^"), std::string::npos);
  }
}

TEST(RoundTrip, PointBasisClasses) {
  int n = 0;
  for (int p : {2, 3, 5}) {
    GradingROG a0 = p == 5 ? GradingROG::M(5, 2) - GradingROG::M(5, 1) : GradingROG(p);
    for (Int d = -5; d <= 5; ++d)
      for (Int f = -5; f <= 5; ++f) {
        if (p != 2 && mod(d - f, 2) != 0) continue;
        GradingROG a = grading_from(a0, d, f);
        for (Coeff co : {Coeff::A, Coeff::RZ})
          for (Level lv : {Level::GG, Level::Ge}) {
            PointClass z = zero_class(Ring::S0, a, lv, co);
            for (size_t i = 0; i < z.c.size(); ++i) {
              PointClass x = basis_class(Ring::S0, a, lv, i, co);
              std::string s = expr(x);
              EXPECT_EQ(parse_point(p, s, co), x) << s;
              ++n;
            }
          }
      }
  }
  EXPECT_GT(n, 150);
}

TEST(RoundTrip, BAndFixedRingClasses) {
  std::mt19937 rng(3);
  int n = 0;
  for (int p : {2, 3, 5})
    for (Coeff co : {Coeff::A, Coeff::RZ})
      for (int t = 0; t < 20; ++t) {
        auto ws = enumerate_admissible(random_ropi(p, rng), 6);
        BClass x = normalize(named::one(p), ws[rng() % ws.size()]);
        BClass y = normalize(named::invkappa(p, 1), ws[rng() % ws.size()]);
        BClass z = bmul(x, y) * 3;
        if (co == Coeff::RZ) z = to_rz(z);
        if (z.is_zero()) continue;
        EXPECT_EQ(parse_b(p, expr(z), co), z) << expr(z);
        ++n;
        if (co == Coeff::A) {
          FixedRingClass f = eta(z);
          EXPECT_EQ(parse_fixed(p, expr(f)), f) << expr(f);
        }
      }
  EXPECT_GT(n, 40);
}

TEST(Json, BClassListsMonomialCoefficientPairs) {
  BClass x = parse_b(3, "2*chic(0)*xi(0,1)*chic(1)*xi(1,1) + chic(0)*chic(1)*xi(0,1)*xi(1,1)");
  auto j = to_json(x);
  ASSERT_TRUE(j["terms"].is_array());
  EXPECT_EQ(j["terms"].size(), x.terms.size());
  for (auto& t : j["terms"]) {
    EXPECT_TRUE(t.contains("monomial"));
    EXPECT_TRUE(t.contains("coefficient"));
  }
  EXPECT_EQ(parse_b(3, j["text"].get<std::string>()), x);
}

TEST(Json, CellCarriesGeneratorsAndMatrices) {
  Cell c = group_at(Ring::S0, GradingROG(2, 0, {0}));
  auto j = to_json(c);
  EXPECT_EQ(j["type"], "A_G/G");
  EXPECT_EQ(j["generators"]["GG"].size(), c.gg.size());
  EXPECT_EQ(j["functor"]["rho"].size(), static_cast<size_t>(c.functor.rho.rows));
}
