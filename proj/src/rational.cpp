#include <narayana/error.hpp>
#include <narayana/rational.hpp>

#include <cctype>

namespace narayana {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw ParseError("not an exact rational: '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational Rational::make(const BigInt& p, const BigInt& q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den.get_str().front() == '-') throw ParseError("negative denominator: '" + std::string(text) + "'");
  return make(parse_integer(text.substr(0, slash), text), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace narayana
