#include "toric/ishida.hpp"

#include <algorithm>
#include <map>

namespace toric {

const Block* LabeledComplex::find(Index i, Index face) const
{
  if (i < 0 || i >= degrees()) return nullptr;
  for (const auto& b : terms[static_cast<std::size_t>(i)])
    if (b.face == face) return &b;
  return nullptr;
}

void push_term(LabeledComplex& cx, std::vector<Block> blocks)
{
  Index offset = 0;
  for (auto& b : blocks) {
    b.offset = offset;
    offset += b.size;
  }
  cx.terms.push_back(std::move(blocks));
  cx.dims.push_back(offset);
}

LabeledComplex ishida_complex(const FaceLattice& L, int l, const std::vector<IntegerVector>& normals)
{
  if (!normals.empty() && normals.size() != L.coverings.size())
    fail(ErrorCode::ValidationError, "one normal per covering expected");
  LabeledComplex cx;
  for (int m = 0; m <= l; ++m) {
    std::vector<Block> blocks;
    if (static_cast<std::size_t>(m) < L.by_dim.size())
      for (Index f : L.by_dim[static_cast<std::size_t>(m)]) {
        const Index size = binomial(L.faces[static_cast<std::size_t>(f)].perp.dim(), l - m);
        if (size > 0) blocks.push_back({f, l - m, 0, size});
      }
    push_term(cx, std::move(blocks));
  }
  for (int m = 0; m < l; ++m) {
    RationalMatrix d = RationalMatrix::Zero(cx.dim(m + 1), cx.dim(m));
    for (const Block& src : cx.terms[static_cast<std::size_t>(m)])
      for (Index c : L.up[static_cast<std::size_t>(src.face)]) {
        const Covering& cov = L.coverings[static_cast<std::size_t>(c)];
        const Block* dst = cx.find(m + 1, cov.tau);
        if (!dst) continue;
        const IntegerVector& n = normals.empty() ? cov.normal : normals[static_cast<std::size_t>(c)];
        d.block(dst->offset, src.offset, dst->size, src.size) =
            contraction_matrix(n, L.faces[static_cast<std::size_t>(src.face)].perp,
                               L.faces[static_cast<std::size_t>(cov.tau)].perp, src.wedge);
      }
    cx.differentials.push_back(std::move(d));
  }
  check_complex(cx);
  return cx;
}

LabeledComplex ishida_cone(const Cone& sigma, int l) { return ishida_complex(face_lattice(sigma.intrinsic()), l); }

LabeledComplex ishida_fan(const Fan& fan, int l) { return ishida_complex(fan.lattice, l); }

void check_complex(const LabeledComplex& cx)
{
  for (std::size_t i = 0; i + 1 < cx.differentials.size(); ++i) {
    const auto& a = cx.differentials[i];
    const auto& b = cx.differentials[i + 1];
    if (a.size() == 0 || b.size() == 0) continue;
    if (!sparse_product(b, a).isZero())
      fail(ErrorCode::NotAComplex, "d_" + std::to_string(i + 1) + " d_" + std::to_string(i) + " is not zero");
  }
}

std::vector<Index> cohomology(const LabeledComplex& cx)
{
  check_complex(cx);
  const auto n = static_cast<std::size_t>(cx.degrees());
  std::vector<Index> ranks(n, 0);
  for (std::size_t i = 0; i < cx.differentials.size() && i < n; ++i)
    if (cx.differentials[i].size() > 0) ranks[i] = rank<Rational>(cx.differentials[i]);
  std::vector<Index> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = cx.dims[i] - ranks[i] - (i > 0 ? ranks[i - 1] : 0);
  return h;
}

namespace {

// columns of m forming a basis of its column space
RationalMatrix independent_columns(const RationalMatrix& m)
{
  const auto e = rref<Rational>(m);
  RationalMatrix out(m.rows(), static_cast<Index>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.col(static_cast<Index>(k)) = m.col(e.pivots[k]);
  return out;
}

}  // namespace

CohomologyBasis cohomology_basis(const LabeledComplex& cx, Index i)
{
  const Index n = cx.dim(i);
  CohomologyBasis out;
  out.boundaries = i > 0 && cx.differentials.size() >= static_cast<std::size_t>(i)
                       ? independent_columns(cx.differentials[static_cast<std::size_t>(i - 1)])
                       : RationalMatrix(n, 0);
  RationalMatrix kernel = RationalMatrix::Identity(n, n);
  if (static_cast<std::size_t>(i) < cx.differentials.size() && cx.differentials[static_cast<std::size_t>(i)].rows() > 0)
    kernel = rank_and_kernel<Rational>(cx.differentials[static_cast<std::size_t>(i)]).kernel;
  RationalMatrix both(n, out.boundaries.cols() + kernel.cols());
  both << out.boundaries, kernel;
  const auto e = rref<Rational>(both);
  std::vector<Index> picked;
  for (Index p : e.pivots)
    if (p >= out.boundaries.cols()) picked.push_back(p);
  out.representatives = RationalMatrix(n, static_cast<Index>(picked.size()));
  for (std::size_t k = 0; k < picked.size(); ++k) out.representatives.col(static_cast<Index>(k)) = both.col(picked[k]);
  return out;
}

RationalVector CohomologyBasis::coordinates(const RationalVector& x) const
{
  RationalMatrix a(boundaries.rows(), boundaries.cols() + representatives.cols());
  a << boundaries, representatives;
  const auto c = solve<Rational>(a, RationalMatrix(x));
  if (!c) fail(ErrorCode::Internal, "vector is not a cocycle");
  return c->col(0).tail(representatives.cols());
}

Index CohomologyTable::at(Index l, Index i) const
{
  if (l < 0 || static_cast<std::size_t>(l) >= dims.size()) return 0;
  const auto& row = dims[static_cast<std::size_t>(l)];
  return i < 0 || static_cast<std::size_t>(i) >= row.size() ? 0 : row[static_cast<std::size_t>(i)];
}

CohomologyTable ishida_table(const Cone& sigma)
{
  const FaceLattice L = face_lattice(sigma.intrinsic());
  CohomologyTable t;
  for (int l = 0; l <= sigma.dim; ++l) t.dims.push_back(cohomology(ishida_complex(L, l)));
  return t;
}

LcdefReport lcdef_from_table(const CohomologyTable& table, Index d)
{
  LcdefReport r;
  r.dim = d;
  r.table = table;
  bool any = false;
  for (Index l = 0; l <= d; ++l)
    for (Index i = 0; i <= l; ++i)
      if (table.at(l, i) > 0) {
        const Index c = i - (d - l);
        r.raw = any ? std::max(r.raw, c) : c;
        any = true;
      }
  if (!any) fail(ErrorCode::Internal, "all Ishida complexes are exact");
  r.value = std::max<Index>(0, r.raw);
  if (r.raw < 0)
    r.diagnostic = "highest nonvanishing pattern gives c = " + std::to_string(r.raw) + "; lcdef is reported as 0";
  return r;
}

LcdefReport lcdef_cone_report(const Cone& sigma) { return lcdef_from_table(ishida_table(sigma), sigma.dim); }

Index lcdef_cone(const Cone& sigma) { return lcdef_cone_report(sigma).value; }

Index lcdef_variety(const Cone& sigma)
{
  // rays and 2-dim faces are simplicial, hence 0; everything else is computed
  Index best = 0;
  for (const auto& s : cone_faces(sigma)) {
    if (s.count() <= 2) continue;
    std::vector<IntegerVector> gens;
    for (Index r : indices(s)) gens.push_back(sigma.rays[static_cast<std::size_t>(r)]);
    best = std::max(best, lcdef_cone(cone_from_rays(gens)));
  }
  return best;
}

LabeledComplex graded_piece(const Cone& sigma, int l, const RaySet& tau)
{
  if (!sigma.full_dimensional()) fail(ErrorCode::NotFullDim, "graded pieces need a full-dimensional cone");
  const FaceLattice L = face_lattice(sigma);
  const Index t = L.find(tau);
  if (t < 0) fail(ErrorCode::ValidationError, "not a face of the cone");
  return ishida_complex(L.restrict_to(t), l);
}

std::vector<Index> graded_piece_prediction(const Cone& sigma, int l, const RaySet& tau)
{
  std::vector<IntegerVector> gens;
  for (Index r : indices(tau)) gens.push_back(sigma.rays[static_cast<std::size_t>(r)]);
  const Index dt = static_cast<Index>(gens.empty() ? 0 : cone_from_rays(gens).dim);
  const Index perp = sigma.lattice_rank - dt;
  std::vector<Index> out(static_cast<std::size_t>(l + 1), 0);
  for (int j = 0; j <= l; ++j) {
    const Index mult = binomial(perp, j);
    if (mult == 0 || l - j > dt) continue;
    std::vector<Index> h;
    if (gens.empty())
      h = {1};  // Ish^0 of the zero cone
    else
      h = cohomology(ishida_cone(cone_from_rays(gens), l - j));
    for (std::size_t i = 0; i < h.size(); ++i) out[i] += mult * h[i];
  }
  return out;
}

}  // namespace toric
