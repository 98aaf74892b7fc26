#include "cnkit/parser.hpp"

#include <cctype>
#include <optional>

namespace cnkit {
namespace {

bool valid_variable_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& variables,
         const FieldSpec& spec)
      : text_(text), variables_(variables), spec_(spec) {}

  Polynomial parse() {
    Polynomial result = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return result;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " +
                         what,
                     pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  // expr := '-'? term (('+'|'-') term)*
  Polynomial expr() {
    bool negate = consume('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (consume('+')) {
        acc = acc + term();
      } else if (consume('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (consume('*')) acc = acc * factor();
    return acc;
  }

  // factor := NUMBER | RATIONAL | VAR ('^' NAT)? | '(' expr ')'
  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a factor");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number_literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable_factor();
    fail("expected a number, variable or '('");
  }

  Polynomial number_literal() {
    std::size_t literal_start = pos_;
    mpz_class num(read_digits(), 10);
    if (peek_is('/')) {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a denominator");
      }
      mpz_class den(read_digits(), 10);
      try {
        return Polynomial::constant(spec_, variables_,
                                    FieldValue::ratio(spec_, num, den));
      } catch (const Error& e) {
        pos_ = literal_start;
        fail(e.what());
      }
    }
    return Polynomial::constant(spec_, variables_,
                                FieldValue::integer(spec_, num));
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial variable_factor() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    std::size_t index = variables_.size();
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i] == name) {
        index = i;
        break;
      }
    }
    if (index == variables_.size()) {
      pos_ = start;
      fail("unknown variable \"" + name + "\"");
    }
    std::uint32_t exponent = 1;
    if (peek_is('^')) {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a natural number");
      }
      std::string digits = read_digits();
      if (digits.size() > 9) fail("exponent too large");
      exponent = static_cast<std::uint32_t>(std::stoul(digits));
    }
    return Polynomial::variable(spec_, variables_, index, exponent);
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  FieldSpec spec_;
  std::size_t pos_ = 0;
};

std::string render_magnitude(const FieldValue& c) {
  if (c.spec().kind() == FieldKind::Rationals && c.sign() < 0) {
    return (-c).str();
  }
  return c.str();
}

bool magnitude_is_one(const FieldValue& c) {
  if (c.spec().kind() == FieldKind::Rationals) {
    return c.is_one() || (-c).is_one();
  }
  return c.is_one();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variables,
                            const FieldSpec& spec) {
  for (const auto& name : variables) {
    if (!valid_variable_name(name)) {
      throw Error(Errc::precondition, "invalid variable name \"" + name + "\"");
    }
  }
  return Parser(text, variables, spec).parse();
}

Polynomial parse_polynomial(const ExprSource& src) {
  return parse_polynomial(src.text, src.variables, src.spec);
}

std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Descending graded-lex order.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative =
        c.spec().kind() == FieldKind::Rationals && c.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_constant()) {
      out += render_magnitude(c);
      continue;
    }
    if (!magnitude_is_one(c)) {
      out += render_magnitude(c) + "*";
    }
    out += format_monomial(m, f.variables());
  }
  return out;
}

}  // namespace cnkit
