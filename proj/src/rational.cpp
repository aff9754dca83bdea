#include "nilgeom/rational.hpp"

#include <cctype>

namespace nilgeom {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

}  // namespace

std::optional<Rational> Rational::try_parse(std::string_view text)
{
  std::string s(text);
  // U+2212 MINUS SIGN in UTF-8.
  static const std::string unicode_minus = "\xE2\x88\x92";
  if (s.rfind(unicode_minus, 0) == 0)
    s = "-" + s.substr(unicode_minus.size());

  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    return std::nullopt;
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0)
    return std::nullopt;
  if (negative)
    n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::parse(std::string_view text)
{
  auto r = try_parse(text);
  if (!r)
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  return *r;
}

std::optional<Rational> exact_sqrt(const Rational& r)
{
  if (r.sign() < 0)
    return std::nullopt;
  const mpz_class num = r.numerator(), den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

}  // namespace nilgeom
