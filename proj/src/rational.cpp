#include "sagbi/rational.hpp"

#include <cctype>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) fail(ErrorKind::Domain, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!isDigits(num) || !isDigits(den)) {
    fail(ErrorKind::Parse, "malformed rational literal '" + std::string(text) + "'");
  }
  Rational r{mpz_class(std::string(num)), mpz_class(std::string(den))};
  return negative ? -r : r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) fail(ErrorKind::Domain, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (isZero()) fail(ErrorKind::Domain, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::toString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace sagbi
