#include "tfp/rational.hpp"

#include <cmath>
#include <ostream>

#include "tfp/error.hpp"

namespace tfp {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no portable int64 constructor on every platform.
  mpz_class z;
  const bool negative = v < 0;
  const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(magnitude), 0, 0, &magnitude);
  if (negative) z = -z;
  return z;
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot represent a non-finite double exactly");
  return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("rational literal with zero denominator '" + s + "'");
  return Rational(std::move(q));
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }
std::string Rational::str() const { return value_.get_str(); }
bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tfp
