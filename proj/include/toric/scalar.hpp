#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using IntegerVector = Vector<Integer>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

using Index = Eigen::Index;

inline bool is_zero(const Integer& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

template <typename Scalar>
Matrix<Rational> to_rational(const Eigen::MatrixBase<Scalar>& m)
{
  Matrix<Rational> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Floor of a/b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// gcd of all entries (0 for the zero vector).
template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& v)
{
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

/// Divides by the content. The zero vector is returned unchanged.
IntegerVector primitive(const IntegerVector& v);

/// Smallest integer multiple of a rational vector, made primitive.
IntegerVector primitive(const RationalVector& v);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const IntegerVector& v);

IntegerVector make_vector(std::initializer_list<long> entries);

}  // namespace toric
