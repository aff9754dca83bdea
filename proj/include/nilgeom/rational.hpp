#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace nilgeom {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational
{
public:
  Rational() = default;
  Rational(long v) : m_value(v) {}  // NOLINT: implicit from integer literals
  Rational(int v) : m_value(v) {}   // NOLINT
  Rational(long num, long den)
  {
    if (den == 0)
      throw std::domain_error("Rational: zero denominator");
    m_value = mpq_class(num, den);
    m_value.canonicalize();
  }
  explicit Rational(mpq_class v) : m_value(std::move(v)) { m_value.canonicalize(); }

  /// Parses "p", "p/q", "-p/q". Accepts U+2212 as a minus sign.
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  std::string str() const { return m_value.get_str(); }
  const mpq_class& value() const { return m_value; }
  mpz_class numerator() const { return m_value.get_num(); }
  mpz_class denominator() const { return m_value.get_den(); }

  int sign() const { return sgn(m_value); }
  bool is_zero() const { return sign() == 0; }

  Rational& operator+=(const Rational& o) { m_value += o.m_value; return *this; }
  Rational& operator-=(const Rational& o) { m_value -= o.m_value; return *this; }
  Rational& operator*=(const Rational& o) { m_value *= o.m_value; return *this; }
  Rational& operator/=(const Rational& o)
  {
    if (o.is_zero())
      throw std::domain_error("Rational: division by zero");
    m_value /= o.m_value;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.m_value)); }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.m_value == b.m_value; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
  {
    const int c = cmp(a.m_value, b.m_value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class m_value;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, unsigned exp)
{
  Rational out(1);
  for (; exp > 0; --exp)
    out *= base;
  return out;
}

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Zero test usable for any scalar the templates are instantiated with.
template<typename Scalar>
  requires(!std::is_base_of_v<Eigen::EigenBase<Scalar>, Scalar>)
bool is_zero(const Scalar& s)
{
  return s == Scalar(0);
}

}  // namespace nilgeom

namespace Eigen {

template<>
struct NumTraits<nilgeom::Rational> : GenericNumTraits<nilgeom::Rational>
{
  using Real = nilgeom::Rational;
  using NonInteger = nilgeom::Rational;
  using Nested = nilgeom::Rational;
  using Literal = nilgeom::Rational;

  enum
  {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
