#include "toric/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace toric {

RationalMatrix sparse_product(const RationalMatrix& a, const RationalMatrix& b)
{
  RationalMatrix out = RationalMatrix::Zero(a.rows(), b.cols());
  // Row support of b, computed once.
  std::vector<std::vector<Index>> support(static_cast<std::size_t>(b.rows()));
  for (Index k = 0; k < b.rows(); ++k)
    for (Index j = 0; j < b.cols(); ++j)
      if (!is_zero(b(k, j))) support[static_cast<std::size_t>(k)].push_back(j);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Index j : support[static_cast<std::size_t>(k)]) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// ---------------------------------------------------------------------------

ExtendedGcd extended_gcd(const Integer& a, const Integer& b)
{
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

IntegerVector bezout_vector(const IntegerVector& coeffs)
{
  IntegerVector x = IntegerVector::Zero(coeffs.size());
  Integer g = 0;
  for (Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs(i).is_zero()) continue;
    const auto e = extended_gcd(g, coeffs(i));
    // new g = e.x * g + e.y * c_i : scale previous solution by e.x
    for (Index j = 0; j < i; ++j) x(j) *= e.x;
    x(i) = e.y;
    g = e.g;
  }
  return x;
}

namespace {

void swap_rows(IntegerMatrix& m, Index a, Index b)
{
  if (a != b) m.row(a).swap(m.row(b));
}

void swap_cols(IntegerMatrix& m, Index a, Index b)
{
  if (a != b) m.col(a).swap(m.col(b));
}

// row_a -= q * row_b
void axpy_row(IntegerMatrix& m, Index a, Index b, const Integer& q)
{
  if (q.is_zero()) return;
  for (Index j = 0; j < m.cols(); ++j)
    if (!m(b, j).is_zero()) m(a, j) -= q * m(b, j);
}

void axpy_col(IntegerMatrix& m, Index a, Index b, const Integer& q)
{
  if (q.is_zero()) return;
  for (Index i = 0; i < m.rows(); ++i)
    if (!m(i, b).is_zero()) m(i, a) -= q * m(i, b);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a)
{
  const Index m = a.rows(), n = a.cols();
  SmithForm s{IntegerMatrix::Identity(m, m), a, IntegerMatrix::Identity(n, n)};
  IntegerMatrix& D = s.D;
  for (Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Index pi = -1, pj = -1;
      Integer best;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j)
          if (!D(i, j).is_zero() && (pi < 0 || abs(D(i, j)) < best)) {
            best = abs(D(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      swap_rows(D, t, pi);
      swap_rows(s.U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(s.V, t, pj);

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (D(i, t).is_zero()) continue;
        const Integer q = floor_div(D(i, t), D(t, t));
        axpy_row(D, i, t, q);
        axpy_row(s.U, i, t, q);
        if (!D(i, t).is_zero()) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (D(t, j).is_zero()) continue;
        const Integer q = floor_div(D(t, j), D(t, t));
        axpy_col(D, j, t, q);
        axpy_col(s.V, j, t, q);
        if (!D(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (Index i = t + 1; i < m && divides; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (!Integer(D(i, j) % D(t, t)).is_zero()) {
            axpy_row(D, t, i, Integer(-1));
            axpy_row(s.U, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.row(t) *= Integer(-1);
      s.U.row(t) *= Integer(-1);
    }
  }
  return s;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& rows)
{
  IntegerMatrix h = rows;
  const Index m = h.rows(), n = h.cols();
  Index r = 0;
  std::vector<Index> pivots;
  for (Index c = 0; c < n && r < m; ++c) {
    // gcd-combine all rows below r into row r on column c
    for (Index i = r + 1; i < m; ++i) {
      if (h(i, c).is_zero()) continue;
      if (h(r, c).is_zero()) {
        h.row(r).swap(h.row(i));
        continue;
      }
      const Integer a = h(r, c), b = h(i, c);
      const auto e = extended_gcd(a, b);
      const Integer ag = a / e.g, bg = b / e.g;
      for (Index j = 0; j < n; ++j) {
        const Integer x = h(r, j), y = h(i, j);
        h(r, j) = e.x * x + e.y * y;
        h(i, j) = -bg * x + ag * y;
      }
    }
    if (h(r, c).is_zero()) continue;
    if (h(r, c) < 0) h.row(r) *= Integer(-1);
    for (Index i = 0; i < r; ++i) axpy_row(h, i, r, floor_div(h(i, c), h(r, c)));
    pivots.push_back(c);
    ++r;
  }
  return h.topRows(r);
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& u)
{
  const Index n = u.rows();
  const auto x = solve<Rational>(to_rational(u), RationalMatrix::Identity(n, n));
  if (!x) fail(ErrorCode::Internal, "matrix is not invertible");
  IntegerMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Rational& q = (*x)(i, j);
      if (boost::multiprecision::denominator(q) != 1)
        fail(ErrorCode::Internal, "matrix is not unimodular");
      out(i, j) = boost::multiprecision::numerator(q);
    }
  return out;
}

Integer determinant(const IntegerMatrix& m)
{
  if (m.rows() != m.cols()) fail(ErrorCode::WrongDimension, "determinant of a non-square matrix");
  RationalMatrix a = to_rational(m);
  const Index n = a.rows();
  Rational det = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Rational f = a(i, c) / a(c, c);
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return boost::multiprecision::numerator(det);
}

IntegerMatrix saturation_basis(const IntegerMatrix& g)
{
  const Index n = g.rows();
  if (g.cols() == 0) return IntegerMatrix(n, 0);
  const IntegerMatrix a = g.transpose();
  const auto s = smith_normal_form(a);
  Index r = 0;
  while (r < std::min(s.D.rows(), s.D.cols()) && !s.D(r, r).is_zero()) ++r;
  // rows(a) = U^-1 D V^-1, so the first r rows of V^-1 span the saturation
  const IntegerMatrix vinv = unimodular_inverse(s.V);
  return hermite_normal_form(vinv.topRows(r)).transpose();
}

IntegerMatrix integer_kernel(const IntegerMatrix& a)
{
  const Index n = a.cols();
  const auto s = smith_normal_form(a);
  Index r = 0;
  while (r < std::min(s.D.rows(), s.D.cols()) && !s.D(r, r).is_zero()) ++r;
  if (r == n) return IntegerMatrix(n, 0);
  const IntegerMatrix k = s.V.rightCols(n - r);
  return hermite_normal_form(k.transpose()).transpose();
}

std::vector<IntegerVector> columns(const IntegerMatrix& g)
{
  std::vector<IntegerVector> out;
  out.reserve(static_cast<std::size_t>(g.cols()));
  for (Index j = 0; j < g.cols(); ++j) out.emplace_back(g.col(j));
  return out;
}

IntegerMatrix from_columns(const std::vector<IntegerVector>& vs, Index dim)
{
  IntegerMatrix m(dim, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != dim) fail(ErrorCode::WrongDimension, "vector of wrong length");
    m.col(static_cast<Index>(j)) = vs[j];
  }
  return m;
}

std::optional<Integer> lattice_index(const std::vector<IntegerVector>& sub,
                                     const std::vector<IntegerVector>& super, Index dim)
{
  const IntegerMatrix basis = hermite_normal_form(from_columns(super, dim).transpose());
  const Index r = basis.rows();
  const IntegerMatrix subm = from_columns(sub, dim);
  // express each generator of sub in the basis of the super group
  const auto coeff = solve<Rational>(to_rational(basis.transpose()), to_rational(subm));
  if (!coeff) fail(ErrorCode::SpanViolation, "generator outside the rational span");
  IntegerMatrix c(r, subm.cols());
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < subm.cols(); ++j) {
      const Rational& q = (*coeff)(i, j);
      if (boost::multiprecision::denominator(q) != 1)
        fail(ErrorCode::SpanViolation, "generator outside the lattice " + to_string(IntegerVector(subm.col(j))));
      c(i, j) = boost::multiprecision::numerator(q);
    }
  if (r == 0) return Integer(1);
  if (rank(c) < r) return std::nullopt;
  const auto s = smith_normal_form(c);
  Integer idx = 1;
  for (Index i = 0; i < r; ++i) idx *= s.D(i, i);
  return idx;
}

IntegerVector reduce_modulo(const IntegerVector& v, const IntegerMatrix& g)
{
  IntegerVector out = v;
  if (g.cols() == 0) return out;
  const IntegerMatrix h = hermite_normal_form(g.transpose());
  for (Index i = 0; i < h.rows(); ++i) {
    Index c = 0;
    while (h(i, c).is_zero()) ++c;
    const Integer q = floor_div(out(c), h(i, c));
    if (!q.is_zero())
      for (Index j = c; j < h.cols(); ++j) out(j) -= q * h(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------

RationalVector SubspaceBasis::coordinates(const RationalVector& w) const
{
  RationalVector c(dim());
  for (Index i = 0; i < dim(); ++i) c(i) = w(unit_rows[static_cast<std::size_t>(i)]);
  return c;
}

bool SubspaceBasis::contains(const RationalVector& w) const
{
  const RationalVector back = vectors * coordinates(w);
  return back == w;
}

SubspaceBasis orthogonal_complement(const RationalMatrix& g)
{
  const RationalMatrix gt = g.transpose();
  const auto e = rref<Rational>(gt);
  const Index n = g.rows();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  SubspaceBasis out;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) out.unit_rows.push_back(c);
  const Index d = static_cast<Index>(out.unit_rows.size());
  out.vectors = RationalMatrix::Zero(n, d);
  for (Index k = 0; k < d; ++k) {
    const Index f = out.unit_rows[static_cast<std::size_t>(k)];
    out.vectors(f, k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      out.vectors(e.pivots[i], k) = -e.reduced(static_cast<Index>(i), f);
  }
  return out;
}

SubspaceBasis orthogonal_complement(const IntegerMatrix& g) { return orthogonal_complement(to_rational(g)); }

SubspaceBasis span_of(const RationalMatrix& g)
{
  // Reduced echelon form of the row space of g^T: the pivot columns carry the identity.
  const auto e = rref<Rational>(RationalMatrix(g.transpose()));
  SubspaceBasis out;
  const Index d = static_cast<Index>(e.pivots.size());
  out.vectors = e.reduced.topRows(d).transpose();
  out.unit_rows = e.pivots;
  return out;
}

// ---------------------------------------------------------------------------

Index binomial(Index n, Index k)
{
  if (k < 0 || k > n) return 0;
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExteriorBasis::ExteriorBasis(int n, int k) : n_(n), k_(k)
{
  if (n < 0 || n > 24) fail(ErrorCode::WrongDimension, "exterior basis of unsupported dimension");
  if (k >= 0 && k <= n) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      SubsetMask m = 0;
      for (int i : idx) m |= SubsetMask(1) << i;
      subsets_.push_back(m);
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  if (n <= 16) {
    lookup_.assign(std::size_t(1) << n, -1);
    for (std::size_t i = 0; i < subsets_.size(); ++i) lookup_[subsets_[i]] = static_cast<Index>(i);
  }
}

Index ExteriorBasis::index_of(SubsetMask s) const
{
  if (!lookup_.empty()) return s < lookup_.size() ? lookup_[s] : -1;
  const auto it = std::lower_bound(subsets_.begin(), subsets_.end(), s, [](SubsetMask a, SubsetMask b) {
    // lexicographic order of sorted index lists == colex order reversed; compare directly
    while (a && b) {
      const int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  return (it != subsets_.end() && *it == s) ? static_cast<Index>(it - subsets_.begin()) : -1;
}

RationalMatrix compound(const RationalMatrix& b, int k)
{
  const int p = static_cast<int>(b.rows()), q = static_cast<int>(b.cols());
  if (k == 0) return RationalMatrix::Constant(1, 1, Rational(1));
  if (k > p || k > q) return RationalMatrix(binomial(p, k), binomial(q, k));
  // minors of size s built from size s-1 by Laplace expansion along the first row
  ExteriorBasis rows1(p, 1), cols1(q, 1);
  RationalMatrix prev = b;  // size-1 minors in lexicographic order are the entries
  for (int s = 2; s <= k; ++s) {
    ExteriorBasis rs(p, s), cs(q, s), rp(p, s - 1), cp(q, s - 1);
    RationalMatrix cur(rs.size(), cs.size());
    for (Index i = 0; i < rs.size(); ++i) {
      const SubsetMask I = rs.subset(i);
      const int r0 = std::countr_zero(I);
      const Index rest = rp.index_of(I & (I - 1));
      for (Index j = 0; j < cs.size(); ++j) {
        const SubsetMask J = cs.subset(j);
        Rational acc = 0;
        int sign = 1;
        for (SubsetMask m = J; m; m &= m - 1, sign = -sign) {
          const int c = std::countr_zero(m);
          if (is_zero(b(r0, c))) continue;
          const Rational& minor = prev(rest, cp.index_of(J & ~(SubsetMask(1) << c)));
          if (is_zero(minor)) continue;
          if (sign > 0) acc += b(r0, c) * minor;
          else acc -= b(r0, c) * minor;
        }
        cur(i, j) = acc;
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

namespace {

// Contraction by the functional with values `vals` on the basis vectors of a
// dim-n space: degree-k wedges -> degree-(k-1) wedges, in the same space.
RationalMatrix internal_contraction(const RationalVector& vals, int k)
{
  const int n = static_cast<int>(vals.size());
  ExteriorBasis src(n, k), dst(n, k - 1);
  RationalMatrix m = RationalMatrix::Zero(dst.size(), src.size());
  for (Index j = 0; j < src.size(); ++j) {
    const SubsetMask S = src.subset(j);
    int pos = 0;
    for (SubsetMask t = S; t; t &= t - 1, ++pos) {
      const int i = std::countr_zero(t);
      if (is_zero(vals(i))) continue;
      const Index row = dst.index_of(S & ~(SubsetMask(1) << i));
      if (pos % 2 == 0) m(row, j) += vals(i);
      else m(row, j) -= vals(i);
    }
  }
  return m;
}

RationalMatrix rows_of(const RationalMatrix& m, const std::vector<Index>& rows)
{
  RationalMatrix out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(rows[i]);
  return out;
}

}  // namespace

RationalMatrix contraction_matrix(const RationalVector& n, const SubspaceBasis& source,
                                  const SubspaceBasis& target, int k, bool verify)
{
  if (n.size() != source.ambient_dim() || source.ambient_dim() != target.ambient_dim())
    fail(ErrorCode::WrongDimension, "contraction between spaces of different ambient dimension");
  const Index ds = source.dim(), dt = target.dim();
  if (k < 1 || k > ds) return RationalMatrix(binomial(dt, k - 1), binomial(ds, k));
  const RationalVector vals = source.vectors.transpose() * n;
  const RationalMatrix ctr = internal_contraction(vals, k);
  // The image lies in the (k-1)-wedges of the source; express it in the target
  // by the compound of the coordinate matrix of source vectors in the target.
  const RationalMatrix coords = rows_of(source.vectors, target.unit_rows);
  const RationalMatrix out = compound(coords, k - 1) * ctr;
  if (verify) {
    const RationalMatrix lhs = compound(target.vectors, k - 1) * out;
    const RationalMatrix rhs = compound(source.vectors, k - 1) * ctr;
    if (lhs != rhs) fail(ErrorCode::NotContained, "contracted wedges leave the target subspace");
  }
  return out;
}

RationalMatrix contraction_matrix(const IntegerVector& n, const SubspaceBasis& source,
                                  const SubspaceBasis& target, int k, bool verify)
{
  return contraction_matrix(RationalVector(to_rational(n)), source, target, k, verify);
}

RationalMatrix wedge_inclusion(const SubspaceBasis& source, const SubspaceBasis& target, int k)
{
  if (source.ambient_dim() != target.ambient_dim())
    fail(ErrorCode::WrongDimension, "inclusion between spaces of different ambient dimension");
  for (Index j = 0; j < source.dim(); ++j)
    if (!target.contains(source.vectors.col(j)))
      fail(ErrorCode::NotContained, "source subspace is not contained in the target");
  return compound(rows_of(source.vectors, target.unit_rows), k);
}

}  // namespace toric
