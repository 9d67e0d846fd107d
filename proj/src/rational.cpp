#include "exchg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace exchg {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace {

mpq_class& scratch() {
  thread_local mpq_class t;
  return t;
}

}  // namespace

Rational& Rational::add_product(const Rational& a, const Rational& b) {
  mpq_class& t = scratch();
  mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
  return *this;
}

Rational& Rational::sub_product(const Rational& a, const Rational& b) {
  mpq_class& t = scratch();
  mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
  return *this;
}

}  // namespace exchg
