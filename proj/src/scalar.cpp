#include "toric/scalar.hpp"

#include <sstream>

namespace toric {

Integer floor_div(const Integer& a, const Integer& b)
{
  Integer q = a / b;  // truncates toward zero
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer gcd(const Integer& a, const Integer& b)
{
  Integer x = abs(a), y = abs(b);
  while (!y.is_zero()) {
    Integer r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b)
{
  if (a.is_zero() || b.is_zero()) return 0;
  return abs(a / gcd(a, b) * b);
}

IntegerVector primitive(const IntegerVector& v)
{
  const Integer g = content(v);
  if (g.is_zero() || g == 1) return v;
  IntegerVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

IntegerVector primitive(const RationalVector& v)
{
  Integer den = 1;
  for (Index i = 0; i < v.size(); ++i)
    den = lcm(den, boost::multiprecision::denominator(v(i)));
  IntegerVector out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out(i) = boost::multiprecision::numerator(v(i)) * (den / boost::multiprecision::denominator(v(i)));
  return primitive(out);
}

std::string to_string(const Integer& x) { return x.str(); }
std::string to_string(const Rational& x) { return x.str(); }

std::string to_string(const IntegerVector& v)
{
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i).str();
  os << ')';
  return os.str();
}

IntegerVector make_vector(std::initializer_list<long> entries)
{
  IntegerVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

}  // namespace toric
