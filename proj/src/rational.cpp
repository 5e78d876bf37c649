#include "arrpair/rational.hpp"

#include <cctype>

#include "arrpair/errors.hpp"

namespace arrpair {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer p{std::string(num)};
  Integer q = den.empty() ? Integer(1) : Integer(std::string(den));
  if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  const Integer& q = boost::multiprecision::denominator(value);
  std::string out = boost::multiprecision::numerator(value).str();
  if (q != 1) out += "/" + q.str();
  return out;
}

int sign(const Rational& value) { return value.sign(); }

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Integer lcm_of_denominators(const QVector& values) {
  Integer l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
  return l;
}

}  // namespace arrpair
