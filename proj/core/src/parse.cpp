#include "derham/parse.hpp"

#include <cctype>
#include <sstream>

#include "derham/form_io.hpp"

namespace derham {
namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen,
                 Wedge, Div, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::Plus, "+", i}); break;
      case '-': out.push_back({Tok::Minus, "-", i}); break;
      case '*': out.push_back({Tok::Star, "*", i}); break;
      case '^': out.push_back({Tok::Caret, "^", i}); break;
      case '(': out.push_back({Tok::LParen, "(", i}); break;
      case ')': out.push_back({Tok::RParen, ")", i}); break;
      case '/':
        if (i + 1 < s.size() && s[i + 1] == '\\') {
          out.push_back({Tok::Wedge, "/\\", i});
          ++i;
        } else {
          out.push_back({Tok::Div, "/", i});
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Recursive-descent parser producing AForms; a polynomial is the p == 0
// case. Juxtaposition acts as multiplication, `/\` as the wedge product.
class Parser {
 public:
  Parser(std::vector<Token> toks, int nvars, bool allow_forms)
      : toks_(std::move(toks)), nvars_(nvars), allow_forms_(allow_forms) {}

  AForm parse_expr() {
    AForm acc = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      AForm t = parse_term();
      require_same_p(acc, t);
      acc = minus ? aform_sub(acc, t) : aform_add(acc, t);
    }
    return acc;
  }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw ParseError("unexpected trailing input", peek().pos);
  }

  std::size_t position() const { return toks_[idx_].pos; }

 private:
  AForm parse_term() {
    AForm acc = parse_factor();
    for (;;) {
      Tok k = peek().kind;
      if (k == Tok::Star || k == Tok::Wedge) {
        next();
        acc = wedge(acc, parse_factor());
      } else if (k == Tok::Int || k == Tok::Ident || k == Tok::LParen) {
        acc = wedge(acc, parse_factor()); // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  AForm parse_factor() {
    AForm base = parse_atom();
    while (peek().kind == Tok::Caret) {
      next();
      Token t = next();
      if (t.kind != Tok::Int)
        throw ParseError("expected integer exponent", t.pos);
      if (base.p != 0)
        throw ParseError("cannot raise a differential to a power", t.pos);
      int e = std::stoi(t.text);
      Poly c = scalar_of(base);
      base = scalar_form(c.pow(e));
    }
    return base;
  }

  AForm parse_atom() {
    Token t = next();
    switch (t.kind) {
      case Tok::Minus: {
        AForm w = parse_factor();
        for (auto& [J, c] : w.terms) c = -c;
        return w;
      }
      case Tok::Int: {
        Integer num(t.text);
        if (peek().kind == Tok::Div && toks_[idx_ + 1].kind == Tok::Int) {
          next();
          Token den = next();
          Integer dz(den.text);
          if (dz == 0)
            throw ParseError("zero denominator in rational literal", den.pos);
          Rational q(num, dz);
          q.canonicalize();
          return scalar_form(Poly::constant(nvars_, q));
        }
        return scalar_form(Poly::constant(nvars_, Rational(num)));
      }
      case Tok::LParen: {
        AForm w = parse_expr();
        Token close = next();
        if (close.kind != Tok::RParen)
          throw ParseError("expected ')'", close.pos);
        return w;
      }
      case Tok::Ident: {
        if (t.text == "d" && peek().kind == Tok::LParen) {
          if (!allow_forms_)
            throw ParseError("differentials not allowed here", t.pos);
          next();
          Token v = next();
          if (v.kind != Tok::Ident)
            throw ParseError("expected variable inside d(...)", v.pos);
          int i = var_index(v.text, v.pos);
          Token close = next();
          if (close.kind != Tok::RParen)
            throw ParseError("expected ')'", close.pos);
          AForm w = aform_zero(nvars_, 1);
          aform_add_term(w, {i}, Poly::constant(nvars_, 1));
          return w;
        }
        int i = var_index(t.text, t.pos);
        return scalar_form(Poly::variable(nvars_, i));
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  int var_index(const std::string& name, std::size_t pos) const {
    if (nvars_ <= 3) {
      if (name == "x" && nvars_ >= 1) return 0;
      if (name == "y" && nvars_ >= 2) return 1;
      if (name == "z" && nvars_ >= 3) return 2;
    }
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9') {
      int i = name[1] - '1';
      if (i < nvars_) return i;
    }
    throw ParseError("unknown variable '" + name + "'", pos);
  }

  AForm scalar_form(const Poly& c) const {
    AForm w = aform_zero(nvars_, 0);
    aform_add_term(w, {}, c);
    return w;
  }

  Poly scalar_of(const AForm& w) const {
    if (w.is_zero()) return Poly::zero(nvars_);
    return w.terms.begin()->second;
  }

  void require_same_p(const AForm& a, const AForm& b) const {
    if (!a.is_zero() && !b.is_zero() && a.p != b.p)
      throw ParseError("mixed form degrees in a sum", position());
  }

  const Token& peek() const { return toks_[idx_]; }
  const Token& next() { return toks_[idx_++]; }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  int nvars_;
  bool allow_forms_;
};

} // namespace

Poly parse_poly(const std::string& text, int nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be positive");
  Parser p(lex(text), nvars, /*allow_forms=*/false);
  AForm w = p.parse_expr();
  p.expect_end();
  if (w.is_zero()) return Poly::zero(nvars);
  return w.terms.begin()->second;
}

LocForm parse_loc_form(const std::string& text, int nvars,
                       int default_pole_order) {
  if (nvars < 1) throw std::invalid_argument("nvars must be positive");
  auto toks = lex(text);
  // split off an optional trailing `/ f` or `/ f^s`
  int pole = default_pole_order;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].kind == Tok::Div && toks[i + 1].kind == Tok::Ident &&
        toks[i + 1].text == "f") {
      std::size_t j = i + 2;
      int s = 1;
      if (toks[j].kind == Tok::Caret) {
        if (toks[j + 1].kind != Tok::Int)
          throw ParseError("expected integer pole order", toks[j + 1].pos);
        s = std::stoi(toks[j + 1].text);
        j += 2;
      }
      if (toks[j].kind != Tok::End)
        throw ParseError("localization `/ f^s` must end the form",
                         toks[j].pos);
      pole = s;
      toks.erase(toks.begin() + i, toks.end() - 1);
      break;
    }
  }
  Parser p(std::move(toks), nvars, /*allow_forms=*/true);
  AForm w = p.parse_expr();
  p.expect_end();
  return LocForm{w, pole};
}

std::string var_name(int nvars, int i) {
  if (nvars <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return names[i];
  }
  return "x" + std::to_string(i + 1);
}

namespace {

std::string monomial_string(int nvars, const Monomial& m) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    int e = m.exponents[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(nvars, i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

} // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) { out += "-"; a = -a; }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono = monomial_string(p.nvars(), m);
    if (mono.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

} // namespace derham
