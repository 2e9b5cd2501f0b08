#include "orbisev/cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "orbisev/error.hpp"
#include "orbisev/exactalg/number_field.hpp"

namespace orbisev::cli {

using exactalg::FieldElement;
using exactalg::Integer;
using exactalg::NumberField;
using exactalg::Rational;

namespace {

constexpr long kMaxExponent = 4096;

class Parser {
 public:
  Parser(const std::string& text, std::map<std::string, BiPoly> symbols)
      : s_(text), symbols_(std::move(symbols)) {}

  BiPoly parse() {
    skip();
    if (pos_ == s_.size()) fail(pos_, "empty expression");
    BiPoly r = expr();
    if (pos_ != s_.size()) fail(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(size_t at, const std::string& msg) const {
    throw SyntaxError(ErrorKind::SyntaxError, at, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      skip();
      return true;
    }
    return false;
  }

  Integer integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(start, "expected an integer");
    Integer r(s_.substr(start, pos_ - start));
    skip();
    return r;
  }

  BiPoly expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    BiPoly r = term();
    if (neg) r = -r;
    while (true) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  BiPoly term() {
    BiPoly r = power();
    while (true) {
      if (accept('*')) {
        r = r * power();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        size_t at = pos_;
        accept('/');
        Integer d = integer();
        if (d == 0) fail(at, "division by zero");
        r = r * BiPoly(FieldElement(Rational(1) / Rational(d)));
      } else {
        return r;
      }
    }
  }

  BiPoly power() {
    BiPoly base = atom();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      size_t at = pos_;
      accept('^');
      Integer e = integer();
      if (e > kMaxExponent) fail(at, "exponent too large");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  BiPoly atom() {
    if (pos_ == s_.size()) fail(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly(FieldElement(Rational(integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = symbols_.find(name);
      if (it == symbols_.end())
        throw SyntaxError(ErrorKind::UnknownSymbol, start, "unknown symbol '" + name + "'");
      skip();
      return it->second;
    }
    if (c == '(') {
      size_t open = pos_;
      accept('(');
      BiPoly r = expr();
      if (!accept(')')) fail(pos_ == s_.size() ? open : pos_, "unbalanced parenthesis");
      return r;
    }
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::map<std::string, BiPoly> symbols_;
  size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

FieldRef field_from_minpoly(const std::string& text, size_t offset) {
  BiPoly p;
  try {
    p = Parser(text, {{"z", BiPoly::u()}}).parse();
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.kind(), e.position() + offset, "in minimal polynomial");
  }
  std::vector<Integer> c(std::max(p.total_degree() + 1, 0), Integer(0));
  for (const auto& [m, x] : p.terms()) {
    Rational r = x.rational_value();
    if (r.get_den() != 1)
      throw Error(ErrorKind::InvalidArgument, "minimal polynomial must have integer coefficients");
    c[m.a] = r.get_num();
  }
  return NumberField::create(c, "z");
}

}  // namespace

FieldRef parse_field(const std::string& text_in) {
  const std::string text = trim(text_in);
  if (text.empty() || text == "Q" || text == "QQ") return nullptr;
  if (text == "Q(i)" || text == "Q(I)") return NumberField::cyclotomic(4, "I");
  if (text.rfind("cyclo:", 0) == 0) {
    const std::string n = text.substr(6);
    if (n.empty() || n.size() > 4 || n.find_first_not_of("0123456789") != std::string::npos)
      throw SyntaxError(ErrorKind::SyntaxError, 6, "expected a cyclotomic order");
    const int order = std::stoi(n);
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
    if (order > 200) throw Error(ErrorKind::UnsupportedField, "cyclotomic order too large");
    return NumberField::cyclotomic(order);
  }
  if (text.rfind("min:", 0) == 0) return field_from_minpoly(text.substr(4), 4);
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + text + "'");
}

std::string field_name(const FieldRef& k) {
  if (!k) return "Q";
  if (k->cyclotomic_order() == 4 && k->generator_name() == "I") return "Q(i)";
  if (k->cyclotomic_order() > 0) return "cyclo:" + std::to_string(k->cyclotomic_order());
  const auto& c = k->integer_modulus();
  BiPoly p;
  for (size_t i = 0; i < c.size(); ++i) p.add_term({static_cast<int>(i), 0}, FieldElement(Rational(c[i])));
  std::string m = to_string(p);
  for (auto& ch : m)
    if (ch == 'u') ch = 'z';
  return "min:" + m;
}

BiPoly parse_poly(const std::string& text, const FieldRef& field) {
  std::map<std::string, BiPoly> symbols{{"u", BiPoly::u()}, {"v", BiPoly::v()}};
  if (field) {
    const std::string& gen = field->generator_name();
    if (gen != "u" && gen != "v") symbols[gen] = BiPoly(FieldElement::generator(field));
    if (auto i = exactalg::imaginary_unit(field)) symbols.emplace("I", BiPoly(*i));
  }
  return Parser(text, std::move(symbols)).parse();
}

}  // namespace orbisev::cli
