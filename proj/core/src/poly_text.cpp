#include "resinv/poly_text.hpp"

#include <cctype>

#include "resinv/errors.hpp"

namespace resinv {

int VariableTable::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableTable& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(vars_.size());
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('-'))
        neg = true;
      else if (accept('+'))
        neg = false;
      else if (!first)
        break;
      Polynomial t = term();
      acc += neg ? -t : t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    std::string num = digits();
    if (num.empty()) fail("expected a number");
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::string den = digits();
      if (den.empty()) {
        pos_ = save;
        fail("expected a denominator");
      }
      return parse_rational(num + "/" + den);
    }
    pos_ = save;
    return parse_rational(num);
  }

  Rational exponent() {
    skip_ws();
    if (accept('(')) {
      skip_ws();
      bool neg = accept('-');
      skip_ws();
      Rational q = number();
      if (!accept(')')) fail("expected ')'");
      return neg ? Rational(-q) : q;
    }
    skip_ws();
    return number();
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_.size(), number());
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        Rational k = exponent();
        if (!is_integer(k) || k < 0) fail("a parenthesised expression needs a nonnegative integer exponent");
        return inner.pow(static_cast<unsigned>(k.get_num().get_ui()));
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = vars_.index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      Rational k = 1;
      if (accept('^')) k = exponent();
      if (k < 0) fail("negative exponent");
      if (!is_integer(k) && !vars_.fractional_ok[idx])
        fail("fractional exponent on non-exceptional variable '" + name + "'");
      Exponents e(vars_.size(), 0);
      e[idx] = k;
      return Polynomial::monomial(e);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const VariableTable& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableTable& vars) {
  if (static_cast<int>(vars.fractional_ok.size()) != vars.size()) throw InternalError("variable table is inconsistent");
  return Parser(text, vars).parse();
}

std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] == 1) continue;
      mono += is_integer(e[i]) ? "^" + to_string(e[i]) : "^(" + to_string(e[i]) + ")";
    }
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace resinv
