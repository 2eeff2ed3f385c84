#include "lgtt/parse.hpp"

#include <cctype>

namespace lgtt {

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& vars;
  size_t pos = 0;
  int n;

  Parser(const std::string& text, const std::vector<std::string>& variables)
      : s(text), vars(variables), n(static_cast<int>(variables.size())) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool number_ahead() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c));
  }

  std::string read_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", start);
    return s.substr(start, pos - start);
  }

  std::string read_identifier() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    }
    return s.substr(start, pos - start);
  }

  int read_exponent() {
    if (!accept('^')) return 1;
    std::string d = read_integer();
    long e = std::stol(d);
    if (e < 0 || e > 1000) throw ParseError("exponent out of range", pos);
    return static_cast<int>(e);
  }

  GPoly pow(const GPoly& base, int e) {
    GPoly r(Monomial(n), GQ(1));
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  }

  GPoly parse_factor() {
    skip_ws();
    size_t here = pos;
    if (accept('(')) {
      GPoly inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos);
      return pow(inner, read_exponent());
    }
    if (number_ahead()) {
      std::string num = read_integer();
      GQ c;
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        // rational only when followed by digits; keeps "1/2" one token
        size_t save = pos;
        ++pos;
        if (number_ahead()) {
          std::string den = read_integer();
          if (Rat(den) == Rat(0)) throw ParseError("zero denominator", save);
          c = GQ(Rat(num) / Rat(den));
        } else {
          pos = save;
          c = GQ(Rat(num));
        }
      } else {
        c = GQ(Rat(num));
      }
      GPoly p(Monomial(n), c);
      return pow(p, read_exponent());
    }
    std::string id = read_identifier();
    if (id.empty()) throw ParseError("expected coefficient or variable", here);
    if (id == "i") {
      GPoly p(Monomial(n), GQ::i_unit());
      return pow(p, read_exponent());
    }
    for (int v = 0; v < n; ++v) {
      if (vars[v] == id) {
        Monomial m(n);
        m.e[v] = 1;
        GPoly p(m, GQ(1));
        return pow(p, read_exponent());
      }
    }
    throw ParseError("unknown variable '" + id + "'", here);
  }

  bool factor_ahead() {
    char c = peek();
    if (c == '(' || c == 'i') return true;
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  GPoly parse_term() {
    GPoly acc = parse_factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc *= parse_factor();
      } else if (factor_ahead()) {
        acc *= parse_factor();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  GPoly parse_expr() {
    GPoly acc(n);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    GPoly t = parse_term();
    acc = neg ? -t : t;
    for (;;) {
      skip_ws();
      if (accept('+')) acc += parse_term();
      else if (accept('-')) acc -= parse_term();
      else break;
    }
    return acc;
  }
};

}  // namespace

GPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  if (variables.empty() || variables.size() > kMaxVars)
    throw ParseError("variable list must have 1.." + std::to_string(kMaxVars) + " names", 0);
  Parser p(text, variables);
  if (p.eof()) throw ParseError("empty input", 0);
  GPoly r = p.parse_expr();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  if (r.nvars() == 0) return GPoly(static_cast<int>(variables.size()));
  return r;
}

}  // namespace lgtt
