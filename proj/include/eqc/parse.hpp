#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqc/bgu1.hpp"

namespace eqc {

/** \brief Syntax or evaluation error carrying the byte range [begin, end) of the offending input. */
struct ParseError : Error {
  size_t begin, end;
  std::string input;
  ParseError(const std::string& msg, std::string in, size_t b, size_t e)
      : Error(render(msg, in, b, e)), begin(b), end(e), input(std::move(in)) {}

  static std::string render(const std::string& msg, const std::string& in, size_t b, size_t e) {
    if (e <= b) e = b + 1;
    std::string s = "at " + std::to_string(b + 1) + "-" + std::to_string(e) + ": " + msg + "\n  " + in + "\n  ";
    s += std::string(b, ' ') + std::string(std::min(e, in.size() + 1) - b, '^');
    return s;
  }
};

namespace parse_detail {

enum class Tok { Int, Ident, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  Int value = 0;
  size_t begin = 0, end = 0;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    size_t b = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      Token t{Tok::Int, s.substr(b, i - b), 0, b, i};
      try {
        t.value = std::stoll(t.text);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal too large", s, b, i);
      }
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string id = s.substr(b, i - b);
      // omega* is one symbol
      if (id == "omega" && i < s.size() && s[i] == '*') ++i, id = "omega*";
      out.push_back({Tok::Ident, id, 0, b, i});
      continue;
    }
    if (std::string("+-*^(),;=[]").find(ch) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, ch), 0, b, b + 1});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", s, b, b + 1);
  }
  out.push_back({Tok::End, "", 0, s.size(), s.size()});
  return out;
}

using GVal = std::variant<Int, GradingROG, GradingROPi>;
using CVal = std::variant<Int, PointClass, BClass, FixedRingClass>;

}  // namespace parse_detail

/** \brief Recursive-descent evaluator for grading literals and class expressions at a fixed prime. */
class Parser {
 public:
  Parser(int p, std::string text, Coeff coeff = Coeff::A) : p_(p), coeff_(coeff), src_(std::move(text)) {
    require_prime(p_);
    toks_ = parse_detail::lex(src_);
    strip_prime_prefix();
  }

  GradingROG grading() {
    auto v = gsum();
    expect_end();
    return as_rog(v, 0, src_.size());
  }

  GradingROPi grading_pi() {
    auto v = gsum();
    expect_end();
    return as_ropi(v, 0, src_.size());
  }

  // Any class expression; the caller inspects the alternative.
  parse_detail::CVal value() {
    auto v = csum();
    expect_end();
    return v;
  }

  PointClass point() {
    size_t b = peek().begin;
    auto v = value();
    return as_point(v, b, src_.size());
  }

  BClass bclass() {
    size_t b = peek().begin;
    auto v = value();
    return as_b(v, b, src_.size());
  }

  FixedRingClass fixed() {
    size_t b = peek().begin;
    auto v = value();
    return as_fixed(v, b, src_.size());
  }

 private:
  using Token = parse_detail::Token;
  using Tok = parse_detail::Tok;
  using GVal = parse_detail::GVal;
  using CVal = parse_detail::CVal;

  int p_;
  Coeff coeff_;
  std::string src_;
  std::vector<Token> toks_;
  size_t pos_ = 0;

  // ---- token helpers ----

  const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool is_sym(const char* s, size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  bool accept(const char* s) {
    if (!is_sym(s)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, size_t b, size_t e) const { throw ParseError(msg, src_, b, e); }
  [[noreturn]] void fail_at(const std::string& msg, const Token& t) const { fail(msg, t.begin, t.end); }
  const Token& expect(const char* s) {
    if (!is_sym(s)) fail_at(std::string("expected '") + s + "'" + found(), peek());
    return next();
  }
  std::string found() const {
    return peek().kind == Tok::End ? ", found end of input" : ", found '" + peek().text + "'";
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail_at("unexpected '" + peek().text + "'", peek());
  }
  size_t last_end() const { return pos_ == 0 ? 0 : toks_[pos_ - 1].end; }

  Int integer() {
    bool neg = accept("-");
    if (peek().kind != Tok::Int) fail_at("expected an integer" + found(), peek());
    Int v = next().value;
    return neg ? -v : v;
  }

  // "p=5;" prefix, checked against the prime in force
  void strip_prime_prefix() {
    if (peek().kind == Tok::Ident && peek().text == "p" && is_sym("=", 1)) {
      const Token& pt = peek(2);
      if (pt.kind != Tok::Int) fail_at("expected the prime after 'p='", pt);
      if (pt.value != p_)
        fail("grading mismatch: literal is for p = " + pt.text + " but p = " + std::to_string(p_), peek().begin, pt.end);
      pos_ += 3;
      expect(";");
    }
  }

  // Run f, turning library errors into span errors over [b, end of what f consumed).
  template <class F>
  auto guarded(size_t b, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), b, std::max(last_end(), b + 1));
    }
  }

  // ---- gradings ----

  GradingROG as_rog(const GVal& v, size_t b, size_t e) const {
    if (auto i = std::get_if<Int>(&v)) return GradingROG::trivial(p_, *i);
    if (auto g = std::get_if<GradingROG>(&v)) return *g;
    fail("expected an RO(G) grading, got an RO(Pi) grading", b, e);
  }

  GradingROPi as_ropi(const GVal& v, size_t b, size_t e) const {
    if (auto t = std::get_if<GradingROPi>(&v)) {
      try {
        t->validate();
      } catch (const Error& x) {
        fail(x.what(), b, e);
      }
      return *t;
    }
    return GradingROPi::constant(as_rog(v, b, e));
  }

  GVal gadd(const GVal& x, const GVal& y, Int sign, size_t b) {
    if (std::holds_alternative<Int>(x) && std::holds_alternative<Int>(y))
      return std::get<Int>(x) + sign * std::get<Int>(y);
    if (std::holds_alternative<GradingROPi>(x) || std::holds_alternative<GradingROPi>(y))
      return as_ropi(x, b, last_end()) + as_ropi(y, b, last_end()) * sign;
    return as_rog(x, b, last_end()) + as_rog(y, b, last_end()) * sign;
  }

  GVal gscale(const GVal& x, const GVal& y, size_t b) {
    const GVal* k = std::holds_alternative<Int>(x) ? &x : std::holds_alternative<Int>(y) ? &y : nullptr;
    if (!k) fail("gradings can only be multiplied by integers", b, last_end());
    const GVal& o = k == &x ? y : x;
    Int n = std::get<Int>(*k);
    if (auto i = std::get_if<Int>(&o)) return *i * n;
    if (auto g = std::get_if<GradingROG>(&o)) return *g * n;
    return std::get<GradingROPi>(o) * n;
  }

  GVal gsum() {
    size_t b = peek().begin;
    GVal v = gterm();
    while (is_sym("+") || is_sym("-")) {
      Int s = next().text == "+" ? 1 : -1;
      GVal r = gterm();
      v = gadd(v, r, s, b);
    }
    return v;
  }

  GVal gterm() {
    size_t b = peek().begin;
    if (accept("-")) return gscale(gterm(), Int{-1}, b);
    GVal v = gfactor();
    for (;;) {
      if (accept("*")) {
        v = gscale(v, gfactor(), b);
      } else if (std::holds_alternative<Int>(v) && (peek().kind == Tok::Ident || is_sym("("))) {
        v = gscale(v, gfactor(), b);  // 3L
      } else {
        return v;
      }
    }
  }

  GVal gfactor() {
    const Token& t = peek();
    if (t.kind == Tok::Int) return next().value;
    if (accept("(")) {
      size_t b = t.begin;
      GVal first = gsum();
      if (!is_sym(",")) {
        expect(")");
        return first;
      }
      std::vector<GradingROG> comps{as_rog(first, b, last_end())};
      while (accept(",")) {
        size_t cb = peek().begin;
        comps.push_back(as_rog(gsum(), cb, last_end()));
      }
      expect(")");
      if (static_cast<int>(comps.size()) != p_)
        fail("an RO(Pi) tuple needs " + std::to_string(p_) + " components", b, last_end());
      GradingROPi r(p_);
      r.c = comps;
      return r;
    }
    if (t.kind != Tok::Ident) fail_at("expected a grading" + found(), t);
    next();
    const std::string& id = t.text;
    if (id == "L") {
      if (p_ != 2) fail_at("L (the sign representation) exists only for p = 2", t);
      return GradingROG::Lambda();
    }
    if (id.size() > 1 && id[0] == 'M' && std::all_of(id.begin() + 1, id.end(), ::isdigit))
      return GradingROG::M(p_, std::stoll(id.substr(1)));
    if (id == "omega*") return omega_star(p_);
    if (id == "Omega") {
      if (p_ == 2 && !is_sym("(")) return Omega2();
      expect("(");
      Int i = integer();
      expect(",");
      Int j = integer();
      expect(")");
      return guarded(t.begin, [&] { return GVal(Omega(p_, i, j)); });
    }
    if (id == "chi") {
      Int i = 1;
      if (accept("^")) i = integer();
      expect("(");
      size_t b = peek().begin;
      GVal inner = gsum();
      expect(")");
      return chi(as_ropi(inner, b, last_end()), i);
    }
    fail_at("unknown symbol '" + id + "' in a grading", t);
  }

  // grading argument inside a class expression
  GradingROG arg_rog() {
    size_t b = peek().begin;
    return as_rog(gsum(), b, last_end());
  }
  GradingROPi arg_ropi() {
    size_t b = peek().begin;
    return as_ropi(gsum(), b, last_end());
  }

  // ---- class values ----

  PointClass in_coeff(const PointClass& x) const {
    if (x.coeff == coeff_) return x;
    if (x.coeff == Coeff::A && coeff_ == Coeff::RZ && x.ring == Ring::S0) return quotient_map(x);
    throw Error("cannot move a " + coeff_name(x.coeff) + " class to " + coeff_name(coeff_) + " coefficients");
  }

  PointClass unit() const { return bgen::unit(p_, coeff_); }

  PointClass as_point(const CVal& v, size_t b, size_t e) {
    if (auto i = std::get_if<Int>(&v)) return unit() * *i;
    if (auto x = std::get_if<PointClass>(&v)) return *x;
    fail("expected a class of the point", b, e);
  }
  BClass as_b(const CVal& v, size_t b, size_t e) {
    if (auto x = std::get_if<BClass>(&v)) return *x;
    if (std::holds_alternative<FixedRingClass>(v)) fail("expected a class of B, got a fixed-ring class", b, e);
    return guarded(b, [&] { return bgen::scalar(p_, as_point(v, b, e)); });
  }
  FixedRingClass as_fixed(const CVal& v, size_t b, size_t e) {
    if (auto x = std::get_if<FixedRingClass>(&v)) return *x;
    if (std::holds_alternative<BClass>(v)) fail("expected a fixed-ring class; use eta(...) to map B there", b, e);
    return guarded(b, [&] { return fixed_scalar(as_point(v, b, e)); });
  }

  // 0 Int, 1 point, 2 B, 3 fixed
  static int rank(const CVal& v) { return static_cast<int>(v.index()); }

  CVal cadd(const CVal& x, const CVal& y, Int sign, size_t b) {
    size_t e = last_end();
    int r = std::max(rank(x), rank(y));
    if (r == 3 && std::min(rank(x), rank(y)) == 2) fail("cannot add a B class and a fixed-ring class", b, e);
    return guarded(b, [&]() -> CVal {
      switch (r) {
        case 0: return std::get<Int>(x) + sign * std::get<Int>(y);
        case 1: return as_point(x, b, e) + as_point(y, b, e) * sign;
        case 2: return as_b(x, b, e) + as_b(y, b, e) * sign;
        default: return as_fixed(x, b, e) + as_fixed(y, b, e) * sign;
      }
    });
  }

  CVal cmul(const CVal& x, const CVal& y, size_t b) {
    size_t e = last_end();
    if (rank(x) == 0 || rank(y) == 0) {
      const CVal& o = rank(x) == 0 ? y : x;
      Int k = std::get<Int>(rank(x) == 0 ? x : y);
      return guarded(b, [&]() -> CVal {
        switch (rank(o)) {
          case 0: return checked_mul(std::get<Int>(o), k);
          case 1: return std::get<PointClass>(o) * k;
          case 2: return std::get<BClass>(o) * k;
          default: return std::get<FixedRingClass>(o) * k;
        }
      });
    }
    int hi = std::max(rank(x), rank(y)), lo = std::min(rank(x), rank(y));
    if (hi == 3 && lo == 2) fail("cannot multiply a B class and a fixed-ring class", b, e);
    return guarded(b, [&]() -> CVal {
      if (hi == 1) return mul(std::get<PointClass>(x), std::get<PointClass>(y));
      if (hi == 2) {
        if (lo == 1) {
          const auto& pc = std::get<PointClass>(rank(x) == 1 ? x : y);
          return bscale(pc, std::get<BClass>(rank(x) == 2 ? x : y));
        }
        return bmul(std::get<BClass>(x), std::get<BClass>(y));
      }
      return fixed_mul(as_fixed(x, b, e), as_fixed(y, b, e));
    });
  }

  CVal cpow(const CVal& x, Int n, size_t b) {
    if (n < 0) fail("negative powers exist only for iota", b, last_end());
    return guarded(b, [&]() -> CVal {
      switch (rank(x)) {
        case 0: {
          Int r = 1;
          for (Int i = 0; i < n; ++i) r = checked_mul(r, std::get<Int>(x));
          return r;
        }
        case 1: {
          // named::power starts from the A-coefficient unit
          const auto& px = std::get<PointClass>(x);
          if (n == 0) return unit();
          PointClass r = px;
          for (Int i = 1; i < n; ++i) r = mul(r, px);
          return r;
        }
        case 2: return bpow(std::get<BClass>(x), n);
        default: return fixed_pow(std::get<FixedRingClass>(x), n);
      }
    });
  }

  CVal csum() {
    size_t b = peek().begin;
    CVal v = cterm();
    while (is_sym("+") || is_sym("-")) {
      Int s = next().text == "+" ? 1 : -1;
      CVal r = cterm();
      v = cadd(v, r, s, b);
    }
    return v;
  }

  CVal cterm() {
    size_t b = peek().begin;
    if (accept("-")) return cmul(cterm(), Int{-1}, b);
    CVal v = cpower();
    while (accept("*")) v = cmul(v, cpower(), b);
    return v;
  }

  CVal cpower() {
    size_t b = peek().begin;
    bool iota_atom = peek().kind == Tok::Ident && is_iota(peek().text) && !is_sym("(", 1);
    if (iota_atom) return iota_power();
    CVal v = cprimary();
    if (accept("^")) {
      Int n;
      if (accept("(")) {
        n = integer();
        expect(")");
      } else {
        n = integer();
      }
      v = cpow(v, n, b);
    }
    return v;
  }

  static bool is_iota(const std::string& id) {
    if (id.rfind("iota", 0) != 0) return false;
    return std::all_of(id.begin() + 4, id.end(), ::isdigit);
  }

  // iota, iota^n, iota_k^n, iota^(alpha)
  CVal iota_power() {
    const Token& t = next();
    size_t b = t.begin;
    GradingROG base;
    if (t.text == "iota") base = p_ == 2 ? GradingROG::Lambda() - GradingROG::trivial(2, 1) : named::xi_grading(p_);
    else base = GradingROG::M(p_, std::stoll(t.text.substr(4))) - GradingROG::trivial(p_, 2);
    GradingROG a = base;
    if (accept("^")) {
      if (accept("(")) {
        if (t.text != "iota") fail("iota_k^(...) takes an integer; use iota^(alpha) for a grading", b, last_end());
        a = arg_rog();
        expect(")");
      } else {
        a = base * integer();
      }
    }
    return guarded(b, [&]() -> CVal { return in_coeff(named::iota(a)); });
  }

  CVal cprimary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) return next().value;
    if (accept("(")) {
      CVal v = csum();
      expect(")");
      return v;
    }
    if (t.kind != Tok::Ident) fail_at("expected an expression" + found(), t);
    next();
    return guarded(t.begin, [&] { return atom(t); });
  }

  bool call() { return accept("("); }
  void close() { expect(")"); }

  CVal atom(const Token& t) {
    const std::string& id = t.text;
    const int p = p_;
    auto pt = [&](const PointClass& x) -> CVal { return in_coeff(x); };
    auto digits = [&](size_t from) {
      return id.size() > from && std::all_of(id.begin() + from, id.end(), ::isdigit);
    };

    // classes of the point
    if (id == "kappa") {
      if (call()) {
        GradingROG a = arg_rog();
        close();
        return pt(named::kappa_beta(a));
      }
      return pt(named::kappa(p));
    }
    if (id == "e") return pt(named::e(p));
    if (id[0] == 'e' && digits(1)) {
      if (p == 2) fail_at("e_k is written e for p = 2", t);
      return pt(named::euler(p, std::stoll(id.substr(1))));
    }
    if (id == "xi" && !is_sym("(")) return pt(named::xi(p));
    if (id.rfind("xi", 0) == 0 && digits(2)) return pt(named::xi_k(p, std::stoll(id.substr(2))));
    if (id == "mu" || id == "lam") {
      expect("(");
      GradingROG a = arg_rog();
      std::optional<Int> v;
      if (accept(";")) v = integer();
      close();
      if (id == "mu") return pt(named::mu(a, v ? *v : nu(a)));
      return pt(named::lam(a, v ? *v : nu_inv(a)));
    }
    if (id == "tau" || id == "rho") {
      expect("(");
      size_t b = peek().begin;
      CVal inner = csum();
      close();
      PointClass x = as_point(inner, b, last_end());
      return id == "tau" ? tau(x) : rho(x);
    }
    if (id == "invkappa") {
      expect("(");
      Int m = integer();
      close();
      return pt(named::invkappa(p, m));
    }
    if (id == "dxi") {
      expect("(");
      Int m = integer();
      expect(",");
      Int n = integer();
      close();
      return pt(named::dxi(p, m, n));
    }
    if (id == "ekappa") {
      expect("(");
      GradingROG a = arg_rog();
      close();
      return pt(named::ekappa(a));
    }

    // classes of B
    if (id == "c") return bgen::c(p, coeff_);
    if (id == "chic") {
      expect("(");
      Int i = integer();
      close();
      return bgen::chic(p, i, coeff_);
    }
    if (id == "xi") {
      expect("(");
      Int i = integer();
      Int j = 1;
      if (accept(",")) j = integer();
      close();
      return bgen::xi(p, i, j, coeff_);
    }
    if (id == "xibar") {
      expect("(");
      GradingROPi a = arg_ropi();
      close();
      return bgen::xibar(a, coeff_);
    }
    if (id == "lambar") {
      expect("(");
      GradingROPi beta = arg_ropi();
      if (!accept(";")) {
        close();
        return bgen::lambar(beta, coeff_);
      }
      std::vector<Int> b{integer()};
      while (accept(",")) b.push_back(integer());
      close();
      if (static_cast<int>(b.size()) != p) throw Error("lambar needs " + std::to_string(p) + " entries b_k");
      return bgen::lambar(beta, b, coeff_);
    }
    if (id == "kapbar" || id == "ekapbar") {
      expect("(");
      Int m = 0;
      if (id == "ekapbar") {
        m = integer();
        expect(",");
      }
      Int k = integer();
      expect(";");
      GradingROPi beta = arg_ropi();
      close();
      if (coeff_ != Coeff::A) throw Error("kappabar lives in the A-coefficient theory");
      return id == "kapbar" ? bgen::kapbar(static_cast<int>(k), beta) : bgen::ekapbar(m, static_cast<int>(k), beta);
    }
    if (id == "Gamma") return bgen::Gamma(p, coeff_);
    if (id == "Delta") {
      expect("(");
      Int k = integer();
      close();
      return bgen::Delta(p, static_cast<int>(k), coeff_);
    }
    if (id == "gamma") {
      if (p != 2) throw Error("gamma is the p = 2 class c*xi(0,1)");
      return bgen::gamma2(coeff_);
    }

    // fixed-point ring
    if (id == "sigma") {
      expect("(");
      Int k = integer();
      close();
      auto s = fixed::sigma(p, static_cast<int>(k));
      return coeff_ == Coeff::A ? s : fixed_mul(s, fixed_scalar(unit()));
    }
    if (id == "zeta") {
      expect("(");
      Int k = integer();
      expect(";");
      GradingROPi d = arg_ropi();
      close();
      auto z = fixed::zeta(static_cast<int>(k), d);
      return coeff_ == Coeff::A ? z : fixed_mul(z, fixed_scalar(unit()));
    }
    if (id == "eta") {
      expect("(");
      size_t b = peek().begin;
      CVal inner = csum();
      close();
      return eta(as_b(inner, b, last_end()));
    }
    fail_at("unknown symbol '" + id + "'", t);
  }
};

inline GradingROG parse_grading(int p, const std::string& s) { return Parser(p, s).grading(); }
inline GradingROPi parse_grading_pi(int p, const std::string& s) { return Parser(p, s).grading_pi(); }
inline PointClass parse_point(int p, const std::string& s, Coeff coeff = Coeff::A) { return Parser(p, s, coeff).point(); }
inline BClass parse_b(int p, const std::string& s, Coeff coeff = Coeff::A) { return Parser(p, s, coeff).bclass(); }
inline FixedRingClass parse_fixed(int p, const std::string& s, Coeff coeff = Coeff::A) {
  return Parser(p, s, coeff).fixed();
}

// ---------- printing in the input grammar ----------

namespace parse_detail {

inline std::string factors(std::initializer_list<std::string> fs) {
  std::string s;
  for (auto& f : fs)
    if (!f.empty()) s += (s.empty() ? "" : "*") + f;
  return s.empty() ? "1" : s;
}

inline std::string pw(const std::string& s, Int k) {
  if (k == 0) return "";
  return k == 1 ? s : s + "^" + std::to_string(k);
}

inline std::string g(const GradingROG& a) { return detail::compact(a); }

}  // namespace parse_detail

// Expression for one basis element of the point in grading alpha.
inline std::string gen_expr(const Gen& x, const GradingROG& alpha, Coeff coeff = Coeff::A) {
  using parse_detail::factors;
  using parse_detail::pw;
  const auto& A = x.a0part;
  const bool plain = x.p == 2 || A.is_zero();
  const std::string mu = plain ? "" : "mu(" + parse_detail::g(A) + "; " + std::to_string(nu(A)) + ")";
  switch (x.kind) {
    case Kind::LamXi:
    case Kind::RLam: {
      std::string lam = plain ? "" : "lam(" + parse_detail::g(A) + "; " + std::to_string(x.a0) + ")";
      if (coeff == Coeff::RZ && !plain) lam = "lam(" + parse_detail::g(A) + ")";
      return factors({lam, pw("e", x.m), pw("xi", x.n)});
    }
    case Kind::Kap: return plain ? "kappa" : "kappa(" + parse_detail::g(A) + ")";
    case Kind::MuE: return factors({mu, pw("e", x.m)});
    case Kind::EKap: return factors({mu, "invkappa(" + std::to_string(x.m) + ")"});
    case Kind::Delta: return factors({mu, "dxi(" + std::to_string(x.m) + "," + std::to_string(x.n) + ")"});
    case Kind::Iota: return "iota^(" + parse_detail::g(alpha) + ")";
    case Kind::Tau: return "tau(iota^(" + parse_detail::g(alpha) + "))";
    case Kind::CKap: return "ekappa(" + parse_detail::g(alpha) + ")";
    default: throw Error("no expression form for classes outside the point");
  }
}

inline std::string linear_expr(const std::vector<std::pair<Int, std::string>>& terms) {
  std::string s;
  for (auto& [k, nm] : terms) {
    if (k == 0) continue;
    if (s.empty()) s += k < 0 ? "-" : "";
    else s += k < 0 ? " - " : " + ";
    Int a = k < 0 ? -k : k;
    if (a == 1) s += nm;
    else s += std::to_string(a) + (nm == "1" ? "" : "*" + nm);
  }
  return s.empty() ? "0" : s;
}

inline std::string expr(const PointClass& x) {
  if (x.ring != Ring::S0) throw Error("only classes of the point have an expression form");
  Cell cl = x.cell();
  const auto& b = x.basis(cl);
  std::vector<std::pair<Int, std::string>> t;
  for (size_t i = 0; i < x.c.size(); ++i) t.emplace_back(x.c[i], gen_expr(b[i], x.alpha, x.coeff));
  return linear_expr(t);
}

inline std::string expr(const BClass& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  for (auto& [w, c] : x.terms) {
    std::string cs = expr(c), ws = w.str();
    bool compound = cs.find(' ') != std::string::npos || cs[0] == '-';
    std::string t = ws == "1" ? cs : cs == "1" ? ws : (compound ? "(" + cs + ")" : cs) + "*" + ws;
    if (s.empty()) s = t;
    else if (t[0] == '-' && !compound) s += " - " + t.substr(1);
    else s += " + " + (compound && ws == "1" ? "(" + t + ")" : t);
  }
  return s;
}

inline std::string expr(const FixedRingClass& x) {
  std::string s;
  for (int k = 0; k < x.p; ++k)
    for (auto& [e, c] : x.comp[k]) {
      std::string cs = expr(c);
      if (cs.find(' ') != std::string::npos || cs[0] == '-') cs = "(" + cs + ")";
      std::string z = "zeta(" + std::to_string(k) + "; " + x.zeta_grading(k).str() + ")";
      std::string t = parse_detail::factors({cs == "1" ? "" : cs, parse_detail::pw("sigma(" + std::to_string(k) + ")", e), z});
      s += (s.empty() ? "" : " + ") + t;
    }
  return s.empty() ? "0" : s;
}

}  // namespace eqc
