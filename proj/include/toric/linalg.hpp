#pragma once

// Exact linear algebra over Z and Q: echelon forms, ranks, kernels, Smith and
// Hermite normal forms, lattice indices, exterior powers of subspaces.

#include "toric/error.hpp"
#include "toric/scalar.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace toric {

// ---------------------------------------------------------------------------
// Echelon forms over a field

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;      // reduced row echelon form
  std::vector<Index> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form. Elimination skips zero entries, so block sparse
/// inputs stay cheap.
template <typename Scalar>
Echelon<Scalar> rref(Matrix<Scalar> m)
{
  Echelon<Scalar> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  std::vector<Index> support;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    support.clear();
    for (Index j = c; j < cols; ++j) {
      if (!is_zero(m(r, j))) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Index j : support) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Rank by forward elimination only.
template <typename Scalar>
Index rank(Matrix<Scalar> m)
{
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  std::vector<Index> support;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    support.clear();
    for (Index j = c + 1; j < cols; ++j)
      if (!is_zero(m(r, j))) support.push_back(j);
    for (Index i = r + 1; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      const Scalar f = m(i, c) / m(r, c);
      m(i, c) = 0;
      for (Index j : support) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline Index rank(const IntegerMatrix& m) { return rank<Rational>(to_rational(m)); }

template <typename Scalar>
struct RankKernel {
  Index rank = 0;
  Matrix<Scalar> kernel;  // columns span ker M, one per free column of the echelon form
};

/// Rank and a canonical kernel basis (the echelon-form basis: each kernel
/// vector has a single 1 among the free coordinates).
template <typename Scalar>
RankKernel<Scalar> rank_and_kernel(const Matrix<Scalar>& m)
{
  const auto e = rref<Scalar>(m);
  const Index cols = m.cols();
  std::vector<Index> free;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  RankKernel<Scalar> out;
  out.rank = static_cast<Index>(e.pivots.size());
  out.kernel = Matrix<Scalar>::Zero(cols, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    out.kernel(f, static_cast<Index>(k)) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      out.kernel(e.pivots[i], static_cast<Index>(k)) = -e.reduced(static_cast<Index>(i), f);
  }
  return out;
}

/// A particular solution X of A X = B, or nullopt when inconsistent.
template <typename Scalar>
std::optional<Matrix<Scalar>> solve(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
  Matrix<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const auto e = rref<Scalar>(aug);
  Matrix<Scalar> x = Matrix<Scalar>::Zero(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Index p = e.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    x.row(p) = e.reduced.row(static_cast<Index>(i)).tail(b.cols());
  }
  return x;
}

/// Product that skips zero entries; used on block sparse differentials.
RationalMatrix sparse_product(const RationalMatrix& a, const RationalMatrix& b);

// ---------------------------------------------------------------------------
// Integer normal forms and lattices

struct SmithForm {
  IntegerMatrix U, D, V;  // U * A * V == D, U and V unimodular
};

/// Smith normal form by elementary operations, pivoting on the smallest
/// nonzero entry. Diagonal entries are nonnegative with d1 | d2 | ...
SmithForm smith_normal_form(const IntegerMatrix& a);

/// Hermite normal form of the row lattice: upper echelon, positive pivots,
/// entries above a pivot reduced into [0, pivot). Zero rows are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& rows);

/// Inverse of a unimodular integer matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix& u);

Integer determinant(const IntegerMatrix& m);

/// Columns: canonical Z-basis of span_Q(columns of g) ∩ Z^n.
IntegerMatrix saturation_basis(const IntegerMatrix& g);

/// Columns: canonical Z-basis of {x in Z^n : a x = 0}.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Columns of g as a list.
std::vector<IntegerVector> columns(const IntegerMatrix& g);
IntegerMatrix from_columns(const std::vector<IntegerVector>& vs, Index dim);

/// Index of the group generated by `sub` inside the group generated by
/// `super`. nullopt stands for an infinite index (rank drop). Throws
/// SpanViolation when some generator of `sub` is not in the group of `super`.
std::optional<Integer> lattice_index(const std::vector<IntegerVector>& sub,
                                     const std::vector<IntegerVector>& super, Index dim);

/// Canonical representative of v modulo the lattice generated by the columns
/// of g (reduction against its Hermite normal form).
IntegerVector reduce_modulo(const IntegerVector& v, const IntegerMatrix& g);

struct ExtendedGcd {
  Integer g, x, y;  // g = x a + y b, g >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Some x with <coeffs, x> = gcd(coeffs).
IntegerVector bezout_vector(const IntegerVector& coeffs);

// ---------------------------------------------------------------------------
// Subspaces and exterior powers

/// Basis of a subspace W of Q^n in echelon form: the rows `unit_rows` of
/// `vectors` form an identity matrix, so the coordinates of w in W are
/// w(unit_rows).
struct SubspaceBasis {
  RationalMatrix vectors;            // n x dim
  std::vector<Index> unit_rows;      // size dim

  Index ambient_dim() const { return vectors.rows(); }
  Index dim() const { return vectors.cols(); }
  RationalVector coordinates(const RationalVector& w) const;
  bool contains(const RationalVector& w) const;
};

/// {u in Q^n : <u, g_j> = 0 for every column g_j}, in the canonical echelon
/// basis of the kernel of g^T.
SubspaceBasis orthogonal_complement(const RationalMatrix& g);
SubspaceBasis orthogonal_complement(const IntegerMatrix& g);

/// Subspace spanned by the columns of g, with echelon basis.
SubspaceBasis span_of(const RationalMatrix& g);

using SubsetMask = std::uint32_t;

/// Size-k subsets of {0..n-1} in lexicographic order of their sorted lists.
class ExteriorBasis {
 public:
  ExteriorBasis(int n, int k);

  int dim_parent() const { return n_; }
  int degree() const { return k_; }
  Index size() const { return static_cast<Index>(subsets_.size()); }
  SubsetMask subset(Index i) const { return subsets_[static_cast<std::size_t>(i)]; }
  Index index_of(SubsetMask s) const;

 private:
  int n_, k_;
  std::vector<SubsetMask> subsets_;
  std::vector<Index> lookup_;
};

Index binomial(Index n, Index k);

/// k-th compound matrix: entry (I, J) is the minor det(b[I, J]), with I and J
/// running over size-k subsets in lexicographic order.
RationalMatrix compound(const RationalMatrix& b, int k);

/// Matrix of the restriction of the interior product by n,
///   i_n(a1 ^ ... ^ ak) = sum_i (-1)^(i+1) <n, ai> a1 ^ .. ^ ai-hat ^ .. ^ ak,
/// from the degree-k wedges of `source` to the degree-(k-1) wedges of
/// `target`. Throws NotContained if the image leaves the target.
RationalMatrix contraction_matrix(const RationalVector& n, const SubspaceBasis& source,
                                  const SubspaceBasis& target, int k, bool verify = true);

RationalMatrix contraction_matrix(const IntegerVector& n, const SubspaceBasis& source,
                                  const SubspaceBasis& target, int k, bool verify = true);

/// Matrix of the map on degree-k wedges induced by the inclusion source ⊆ target.
RationalMatrix wedge_inclusion(const SubspaceBasis& source, const SubspaceBasis& target, int k);

}  // namespace toric
