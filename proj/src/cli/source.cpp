#include "cmalg/source.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "cmalg/homalg.hpp"

namespace cma {

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col),
      msg_(msg) {}

const Ideal& IdealSource::get(const std::string& name) const {
  for (auto& [n, I] : ideals)
    if (n == name) return I;
  throw std::invalid_argument("unknown ideal: " + name);
}

bool IdealSource::has(const std::string& name) const {
  for (auto& [n, I] : ideals)
    if (n == name) return true;
  return false;
}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t k) {
    for (size_t a = 0; a < k; ++a) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::string("[],=+-*^()/").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  const Token& peek() const { return t_[pos_]; }
  Token next() { return t_[pos_ == t_.size() - 1 ? pos_ : pos_++]; }
  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool is_word(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
  [[noreturn]] void fail(const Token& at, const std::string& msg) const { throw ParseError(at.line, at.col, msg); }
  [[noreturn]] void fail(const std::string& msg) const { fail(peek(), msg); }
  std::string describe(const Token& k) const { return k.kind == Tok::End ? "end of input" : "'" + k.text + "'"; }

  Token expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "' but found " + describe(peek()));
    return next();
  }
  Token expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what + " but found " + describe(peek()));
    return next();
  }

  // Value of a decimal literal reduced mod p.
  uint32_t int_mod(const Token& k, uint32_t p) const {
    uint64_t v = 0;
    for (char c : k.text) v = (v * 10 + static_cast<uint64_t>(c - '0')) % p;
    return static_cast<uint32_t>(v);
  }

  long long small_int(const Token& k, long long limit, const char* what) const {
    long long v = 0;
    for (char c : k.text) {
      v = v * 10 + (c - '0');
      if (v > limit) fail(k, std::string(what) + " too large");
    }
    return v;
  }

  IdealSource file() {
    if (!is_word("ring")) fail("expected 'ring' declaration");
    next();
    if (peek().kind != Tok::Int) fail("expected a prime after 'ring'");
    Token pt = next();
    long long p = small_int(pt, 4294967295LL, "characteristic");
    if (!Field::is_prime(static_cast<uint64_t>(p))) fail(pt, "characteristic " + pt.text + " is not prime");
    expect_sym("[");
    std::vector<std::string> names;
    std::map<std::string, int> seen;
    for (;;) {
      Token v = expect_ident("a variable name");
      if (v.text == "ring" || v.text == "ideal") fail(v, "reserved word used as variable");
      if (seen.count(v.text)) fail(v, "duplicate variable '" + v.text + "'");
      seen[v.text] = static_cast<int>(names.size());
      names.push_back(v.text);
      if (is_sym(",")) {
        next();
        continue;
      }
      break;
    }
    expect_sym("]");
    if (static_cast<int>(names.size()) > kMaxVars) fail(pt, "at most " + std::to_string(kMaxVars) + " variables");
    IdealSource src{RingContext(names, static_cast<uint32_t>(p)), {}};
    vars_ = seen;
    R_ = &src.ring;
    while (peek().kind != Tok::End) {
      if (!is_word("ideal")) fail("expected 'ideal' declaration but found " + describe(peek()));
      next();
      Token name = expect_ident("an ideal name");
      if (src.has(name.text)) fail(name, "duplicate ideal '" + name.text + "'");
      if (vars_.count(name.text)) fail(name, "ideal name '" + name.text + "' clashes with a variable");
      expect_sym("=");
      std::vector<Poly> gens;
      for (;;) {
        Token start = peek();
        Poly f = expr();
        if (f.is_zero()) fail(start, "zero generator");
        gens.push_back(std::move(f));
        if (is_sym(",")) {
          next();
          continue;
        }
        break;
      }
      src.ideals.emplace_back(name.text, Ideal(src.ring, gens));
    }
    return src;
  }

  Poly expr() {
    const RingContext& R = *R_;
    Poly acc;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (is_sym("+") || is_sym("-")) {
        neg = next().text == "-";
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = neg ? R.sub(acc, t) : R.add(acc, t);
      first = false;
      if (!is_sym("+") && !is_sym("-")) break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (is_sym("*")) {
      next();
      acc = R_->mul(acc, power());
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (is_sym("^")) {
      next();
      if (peek().kind != Tok::Int) fail("expected an exponent");
      Token e = next();
      base = R_->pow(base, static_cast<int>(small_int(e, 1000, "exponent")));
    }
    return base;
  }

  Poly atom() {
    const RingContext& R = *R_;
    const Token& k = peek();
    if (k.kind == Tok::Int) {
      Token v = next();
      return R.constant(int_mod(v, R.F().p));
    }
    if (k.kind == Tok::Ident) {
      Token v = next();
      auto it = vars_.find(v.text);
      if (it == vars_.end()) fail(v, "unknown variable '" + v.text + "'");
      return R.var(it->second);
    }
    if (is_sym("(")) {
      next();
      Poly p = expr();
      expect_sym(")");
      return p;
    }
    if (is_sym("-")) {
      next();
      return R.neg(power());
    }
    fail("expected a term but found " + describe(k));
  }

  // Module expressions.
  Ideal ideal_expr(const IdealSource& src) {
    Ideal acc = ideal_term(src);
    while (is_sym("+")) {
      next();
      acc = ideal_sum(acc, ideal_term(src));
    }
    return acc;
  }
  Ideal ideal_term(const IdealSource& src) {
    Ideal acc = ideal_power_expr(src);
    while (is_sym("*")) {
      next();
      acc = ideal_product(acc, ideal_power_expr(src));
    }
    return acc;
  }
  Ideal ideal_power_expr(const IdealSource& src) {
    Ideal base = ideal_atom(src);
    if (is_sym("^")) {
      next();
      if (peek().kind != Tok::Int) fail("expected an exponent");
      Token e = next();
      long long k = small_int(e, 64, "exponent");
      if (k < 1) fail(e, "exponent must be positive");
      base = ideal_power(base, static_cast<int>(k));
    }
    return base;
  }
  Ideal ideal_atom(const IdealSource& src) {
    if (is_sym("(")) {
      next();
      Ideal I = ideal_expr(src);
      expect_sym(")");
      return I;
    }
    Token name = expect_ident("an ideal name");
    if (name.text == "intersect") {
      expect_sym("(");
      Ideal a = ideal_expr(src);
      expect_sym(",");
      Ideal b = ideal_expr(src);
      expect_sym(")");
      return ideal_intersect(a, b);
    }
    if (!src.has(name.text)) fail(name, "unknown ideal '" + name.text + "'");
    return src.get(name.text);
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()));
  }

 private:
  std::vector<Token> t_;
  size_t pos_ = 0;
  std::map<std::string, int> vars_;
  const RingContext* R_ = nullptr;
};

}  // namespace

IdealSource parse_source(const std::string& text) {
  Parser P(lex(text));
  return P.file();
}

std::string print_source(const RingContext& R, const std::vector<std::pair<std::string, Ideal>>& ideals) {
  std::string out = "ring " + std::to_string(R.F().p) + " [";
  for (int i = 0; i < R.n; ++i) out += (i ? "," : "") + R.names[i];
  out += "]\n";
  for (auto& [name, I] : ideals) {
    out += "ideal " + name + " = ";
    for (size_t k = 0; k < I.gens().size(); ++k) out += (k ? ", " : "") + R.to_string(I.gens()[k]);
    out += "\n";
  }
  return out;
}

std::string print_source(const IdealSource& src) { return print_source(src.ring, src.ideals); }

ModuleExpr parse_module_expr(const IdealSource& src, const std::string& text) {
  Parser P(lex(text));
  bool quotient = false;
  if (P.is_word("S") && !src.has("S")) {
    P.next();
    P.expect_sym("/");
    quotient = true;
  }
  Ideal I = P.ideal_expr(src);
  P.expect_end();
  ModuleExpr out{quotient ? ModulePresentation::cyclic(I) : ideal_module(I), I, quotient, text};
  return out;
}

}  // namespace cma
