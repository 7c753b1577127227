#include "toric/lefschetz.hpp"

#include <algorithm>

namespace toric {

namespace {

SubspaceBasis embed(const SubspaceBasis& s)
{
  SubspaceBasis out;
  out.vectors = RationalMatrix::Zero(s.ambient_dim() + 1, s.dim());
  out.vectors.topRows(s.ambient_dim()) = s.vectors;
  out.unit_rows = s.unit_rows;
  return out;
}

RationalMatrix differential(const LabeledComplex& cx, Index i)
{
  if (i >= 0 && static_cast<std::size_t>(i) < cx.differentials.size()) return cx.differentials[static_cast<std::size_t>(i)];
  return RationalMatrix::Zero(cx.dim(i + 1), cx.dim(i));
}

RationalMatrix at_degree(const std::vector<RationalMatrix>& maps, Index i, Index rows, Index cols)
{
  if (i >= 0 && static_cast<std::size_t>(i) < maps.size()) return maps[static_cast<std::size_t>(i)];
  return RationalMatrix::Zero(rows, cols);
}

Index matrix_rank(const RationalMatrix& m) { return m.size() == 0 ? 0 : rank<Rational>(m); }

void require(bool ok, const std::string& what)
{
  if (!ok) fail(ErrorCode::Internal, what);
}

std::vector<RaySet> face_sets_of(const FaceLattice& L, std::size_t size, bool with_apex)
{
  std::vector<RaySet> out;
  for (const auto& f : L.faces) {
    RaySet s(size);
    for (Index r : indices(f.rays)) s.set(static_cast<std::size_t>(r));
    if (with_apex) s.set(size - 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

DivisorData support_data(const Fan& fan, const std::vector<Rational>& alpha)
{
  const Index n = fan.lattice_rank();
  const auto& rays = fan.rays();
  if (alpha.size() != rays.size()) fail(ErrorCode::ValidationError, "one coefficient per ray expected");
  DivisorData D;
  D.alpha = alpha;
  for (std::size_t k = 0; k < fan.cones.size(); ++k) {
    const auto& ids = fan.cone_rays[k];
    RationalMatrix A(static_cast<Index>(ids.size()), n);
    RationalMatrix b(static_cast<Index>(ids.size()), 1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      A.row(static_cast<Index>(i)) = to_rational(rays[static_cast<std::size_t>(ids[i])]).transpose();
      b(static_cast<Index>(i), 0) = alpha[static_cast<std::size_t>(ids[i])];
    }
    const auto x = solve<Rational>(A, b);
    if (!x) fail(ErrorCode::NotQCartier, "no linear function matches the coefficients on maximal cone " + std::to_string(k));
    D.u.push_back(x->col(0));
  }
  for (const auto& f : fan.lattice.faces) {
    RationalVector u = RationalVector::Zero(n);
    for (std::size_t k = 0; k < fan.maximal.size(); ++k)
      if (f.rays.is_subset_of(fan.lattice.faces[static_cast<std::size_t>(fan.maximal[k])].rays)) {
        u = D.u[k];
        break;
      }
    D.face_u.push_back(u);
  }
  Integer C = 1;
  for (const auto& u : D.u)
    for (Index i = 0; i < n; ++i) C = lcm(C, boost::multiprecision::denominator(u(i)));
  D.C = C;
  const Index faces = static_cast<Index>(fan.lattice.faces.size());
  D.a = lift_indices(lifted_faces(fan, alpha), faces);
  std::vector<Rational> scaled;
  for (const auto& x : alpha) scaled.push_back(x * Rational(C));
  D.b = lift_indices(lifted_faces(fan, scaled), faces);
  return D;
}

LiftedFaces lifted_faces(const Fan& fan, const std::vector<Rational>& alpha)
{
  const Index n = fan.lattice_rank();
  const auto& rays = fan.rays();
  std::vector<IntegerVector> lifted;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const Integer den = boost::multiprecision::denominator(alpha[r]);
    IntegerVector v(n + 1);
    v.head(n) = rays[r] * den;
    v(n) = boost::multiprecision::numerator(alpha[r]);
    lifted.push_back(primitive(v));
  }
  LiftedFaces out;
  out.graph = build_face_lattice(n + 1, lifted, face_sets_of(fan.lattice, rays.size(), false));
  for (std::size_t f = 0; f < fan.lattice.faces.size(); ++f)
    if (out.graph.faces[f].rays != fan.lattice.faces[f].rays || out.graph.faces[f].dim != fan.lattice.faces[f].dim)
      fail(ErrorCode::NotQCartier, "graph faces do not match the fan");

  IntegerVector e = IntegerVector::Zero(n + 1);
  e(n) = 1;
  std::vector<IntegerVector> total_rays = lifted;
  total_rays.push_back(e);
  auto sets = face_sets_of(fan.lattice, rays.size() + 1, false);
  const auto tildes = face_sets_of(fan.lattice, rays.size() + 1, true);
  sets.insert(sets.end(), tildes.begin(), tildes.end());
  out.total = build_face_lattice(n + 1, total_rays, sets);
  for (std::size_t f = 0; f < fan.lattice.faces.size(); ++f) {
    out.hat.push_back(out.total.find(sets[f]));
    out.tilde.push_back(out.total.find(tildes[f]));
  }
  return out;
}

std::vector<Integer> lift_indices(const LiftedFaces& lifted, Index faces)
{
  const Index n1 = lifted.total.lattice_rank;
  IntegerVector e = IntegerVector::Zero(n1);
  e(n1 - 1) = 1;
  std::vector<Integer> out;
  for (Index f = 0; f < faces; ++f) {
    const Face& hat = lifted.total.faces[static_cast<std::size_t>(lifted.hat[static_cast<std::size_t>(f)])];
    const Face& tilde = lifted.total.faces[static_cast<std::size_t>(lifted.tilde[static_cast<std::size_t>(f)])];
    std::vector<IntegerVector> sub = columns(hat.span_basis);
    sub.push_back(e);
    const auto idx = lattice_index(sub, columns(tilde.span_basis), n1);
    if (!idx) fail(ErrorCode::Internal, "lifted face index is infinite");
    out.push_back(*idx);
  }
  return out;
}

LiftedSequence lifted_complex(const Fan& fan, const DivisorData& D, int p)
{
  const FaceLattice& P = fan.lattice;
  const LiftedFaces lifted = lifted_faces(fan, D.alpha);
  LiftedSequence s;
  s.p = p;
  s.left = ishida_complex(P, p + 1);
  s.middle = ishida_complex(lifted.graph, p + 1);
  s.right = ishida_complex(P, p);

  for (Index l = 0; l < s.middle.degrees(); ++l) {
    RationalMatrix inc = RationalMatrix::Zero(s.middle.dim(l), s.left.dim(l));
    if (l < s.left.degrees())
      for (const Block& b : s.left.terms[static_cast<std::size_t>(l)]) {
        const Block* m = s.middle.find(l, b.face);
        require(m != nullptr, "graph face missing from the middle complex");
        const auto f = static_cast<std::size_t>(b.face);
        inc.block(m->offset, b.offset, m->size, b.size) =
            wedge_inclusion(embed(P.faces[f].perp), lifted.graph.faces[f].perp, b.wedge) * Rational(D.a[f]);
      }
    RationalMatrix proj = RationalMatrix::Zero(s.right.dim(l), s.middle.dim(l));
    if (l < s.right.degrees())
      for (const Block& m : s.middle.terms[static_cast<std::size_t>(l)]) {
        const Block* r = s.right.find(l, m.face);
        if (!r) continue;
        const auto f = static_cast<std::size_t>(m.face);
        const IntegerVector n = normal_generator(lifted.total, lifted.hat[f], lifted.tilde[f]);
        proj.block(r->offset, m.offset, r->size, m.size) =
            contraction_matrix(n, lifted.graph.faces[f].perp, embed(P.faces[f].perp), m.wedge) *
            Rational(l % 2 ? -1 : 1);
      }
    s.inclusion.push_back(std::move(inc));
    s.projection.push_back(std::move(proj));
  }

  const std::string tag = " (p = " + std::to_string(p) + ")";
  for (Index l = 0; l < s.middle.degrees(); ++l) {
    const auto& inc = s.inclusion[static_cast<std::size_t>(l)];
    const auto& proj = s.projection[static_cast<std::size_t>(l)];
    require(s.left.dim(l) + s.right.dim(l) == s.middle.dim(l), "term dimensions do not add up" + tag);
    require(matrix_rank(inc) == s.left.dim(l), "inclusion is not injective" + tag);
    require(matrix_rank(proj) == s.right.dim(l), "projection is not surjective" + tag);
    require(RationalMatrix(proj * inc).isZero(), "projection after inclusion is not zero" + tag);
    const auto inc1 = at_degree(s.inclusion, l + 1, s.middle.dim(l + 1), s.left.dim(l + 1));
    const auto proj1 = at_degree(s.projection, l + 1, s.right.dim(l + 1), s.middle.dim(l + 1));
    require(sparse_product(differential(s.middle, l), inc) == sparse_product(inc1, differential(s.left, l)),
            "inclusion is not a chain map" + tag);
    require(sparse_product(differential(s.right, l), proj) == sparse_product(proj1, differential(s.middle, l)),
            "projection is not a chain map" + tag);
  }
  return s;
}

RationalMatrix connecting_map(const LiftedSequence& s, int l)
{
  const CohomologyBasis src = cohomology_basis(s.right, l);
  const CohomologyBasis dst = cohomology_basis(s.left, l + 1);
  RationalMatrix out = RationalMatrix::Zero(dst.dim(), src.dim());
  if (src.dim() == 0 || dst.dim() == 0) return out;
  const auto& proj = s.projection[static_cast<std::size_t>(l)];
  const auto& inc1 = s.inclusion[static_cast<std::size_t>(l + 1)];
  const auto lifts = solve<Rational>(proj, src.representatives);
  require(lifts.has_value(), "projection does not reach a cocycle");
  const RationalMatrix image = sparse_product(differential(s.middle, l), *lifts);
  const auto pre = solve<Rational>(inc1, image);
  require(pre.has_value(), "boundary of the lift is not in the subcomplex");
  for (Index j = 0; j < src.dim(); ++j) out.col(j) = dst.coordinates(pre->col(j));
  return out;
}

RationalMatrix connecting_map(const Fan& fan, const DivisorData& D, int p, int l)
{
  return connecting_map(lifted_complex(fan, D, p), l);
}

RationalMatrix induced_map(const LabeledComplex& from, const LabeledComplex& to, const RationalMatrix& f, Index i)
{
  const CohomologyBasis src = cohomology_basis(from, i);
  const CohomologyBasis dst = cohomology_basis(to, i);
  RationalMatrix out = RationalMatrix::Zero(dst.dim(), src.dim());
  if (src.dim() == 0 || dst.dim() == 0) return out;
  const RationalMatrix image = f * src.representatives;
  for (Index j = 0; j < src.dim(); ++j) out.col(j) = dst.coordinates(image.col(j));
  return out;
}

HodgeTable hodge_table(const Fan& fan)
{
  if (!fan.is_complete()) fail(ErrorCode::NotComplete, "Hodge numbers need a complete fan");
  const Index n = fan.lattice_rank();
  HodgeTable h(static_cast<std::size_t>(n + 1), std::vector<Index>(static_cast<std::size_t>(n + 1), 0));
  for (Index p = 0; p <= n; ++p) {
    const auto H = cohomology(ishida_fan(fan, static_cast<int>(n - p)));
    for (Index q = 0; q <= n; ++q) {
      const Index i = n - q;
      h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = i < static_cast<Index>(H.size()) ? H[static_cast<std::size_t>(i)] : 0;
    }
  }
  return h;
}

std::vector<Index> h_vector_betti(const Fan& fan)
{
  const Index n = fan.lattice_rank();
  for (const auto& f : fan.lattice.faces)
    if (static_cast<Index>(f.rays.count()) != f.dim) fail(ErrorCode::ValidationError, "fan is not simplicial");
  auto f = fan.lattice.counts();
  f.resize(static_cast<std::size_t>(n + 1), 0);
  std::vector<Index> betti(static_cast<std::size_t>(2 * n + 1), 0);
  for (Index k = 0; k <= n; ++k) {
    Index h = 0;
    for (Index i = k; i <= n; ++i) h += ((i - k) % 2 ? -1 : 1) * binomial(i, k) * f[static_cast<std::size_t>(n - i)];
    betti[static_cast<std::size_t>(2 * k)] = h;
  }
  return betti;
}

EquivalenceReport lefschetz_equivalence_check(const Cone& sigma, const IntegerVector& rho, int p, int l)
{
  if (p < 0 || p >= sigma.dim - 1) fail(ErrorCode::ValidationError, "need 0 <= p < d - 1");
  const StarQuotient q = star_quotient(sigma, rho);
  const DivisorData D = support_data(q.fan, q.alpha);
  const LiftedSequence s = lifted_complex(q.fan, D, p);
  EquivalenceReport r;
  const auto h = cohomology(ishida_cone(sigma, p + 1));
  r.vanishes = l < 0 || l >= static_cast<int>(h.size()) || h[static_cast<std::size_t>(l)] == 0;
  const RationalMatrix inj = connecting_map(s, l);
  r.injective = matrix_rank(inj) == inj.cols();
  const RationalMatrix sur = connecting_map(s, l - 1);
  r.surjective = matrix_rank(sur) == sur.rows();
  return r;
}

std::vector<LesReport> les_theorem(const Cone& sigma, const IntegerVector& rho)
{
  const StarQuotient q = star_quotient(sigma, rho);
  const DivisorData D = support_data(q.fan, q.alpha);
  const CohomologyTable direct = ishida_table(sigma);
  std::vector<LesReport> out;
  for (int l = 0; l < sigma.dim; ++l) {
    const LiftedSequence s = lifted_complex(q.fan, D, l - 1);
    LesReport r;
    r.l = l;
    r.exact = true;
    auto note = [&](bool ok, const std::string& what) {
      if (!ok && r.exact) {
        r.exact = false;
        r.failure = what;
      }
    };
    const Index top = s.middle.degrees();
    std::vector<RationalMatrix> iota, pi, delta;
    for (Index i = 0; i <= top; ++i) {
      iota.push_back(induced_map(s.left, s.middle, at_degree(s.inclusion, i, s.middle.dim(i), s.left.dim(i)), i));
      pi.push_back(induced_map(s.middle, s.right, at_degree(s.projection, i, s.right.dim(i), s.middle.dim(i)), i));
      delta.push_back(connecting_map(s, static_cast<int>(i)));
    }
    for (Index i = 0; i <= top; ++i) {
      const auto si = static_cast<std::size_t>(i);
      const Index hl = cohomology_basis(s.left, i).dim();
      const Index hm = cohomology_basis(s.middle, i).dim();
      const Index hr = cohomology_basis(s.right, i).dim();
      r.exceptional_l.push_back(hl);
      r.middle.push_back(hm);
      r.exceptional_lm1.push_back(hr);
      r.cone.push_back(direct.at(l, i));
      r.connecting_rank.push_back(matrix_rank(delta[si]));
      const std::string at = " at i = " + std::to_string(i);
      // H^i(left): image of delta_{i-1} is the kernel of iota_i
      const Index rd = i > 0 ? matrix_rank(delta[si - 1]) : 0;
      if (i > 0 && hl > 0) note(RationalMatrix(iota[si] * delta[si - 1]).isZero(), "iota∘delta ≠ 0" + at);
      note(rd + matrix_rank(iota[si]) == hl, "not exact at H^i(Ish^l_E)" + at);
      // H^i(middle)
      if (hm > 0) note(RationalMatrix(pi[si] * iota[si]).isZero(), "pi∘iota ≠ 0" + at);
      note(matrix_rank(iota[si]) + matrix_rank(pi[si]) == hm, "not exact at the middle" + at);
      // H^i(right)
      if (hr > 0) note(RationalMatrix(delta[si] * pi[si]).isZero(), "delta∘pi ≠ 0" + at);
      note(matrix_rank(pi[si]) + matrix_rank(delta[si]) == hr, "not exact at H^i(Ish^{l-1}_E)" + at);
      note(hm == direct.at(l, i), "middle cohomology differs from Ish^l_sigma" + at);
    }
    out.push_back(std::move(r));
  }
  return out;
}

Lcdef4Report lcdef4_via_exceptional(const Cone& sigma, const IntegerVector& rho)
{
  if (sigma.lattice_rank != 4 || sigma.dim != 4) fail(ErrorCode::WrongDimension, "the criterion is for 4-dimensional cones");
  const StarQuotient q = star_quotient(sigma, rho);
  const auto h = cohomology(ishida_fan(q.fan, 2));
  Lcdef4Report r;
  r.h2 = h.size() > 2 ? h[2] : 0;
  r.lcdef_one = r.h2 >= 2;
  return r;
}

HardLefschetzReport hard_lefschetz_injectivity_check(const Fan& fan, const DivisorData& D)
{
  if (!is_strictly_convex(fan, D.u)) fail(ErrorCode::NotAmple, "support function is not strictly convex");
  const Index n = fan.lattice_rank();
  HardLefschetzReport r;
  for (Index p = 0; 2 * p <= n - 1; ++p) {
    const int k = static_cast<int>(n - p - 1);
    const RationalMatrix dual = connecting_map(fan, D, k, k);  // H^k(Ish^k) -> H^{k+1}(Ish^{k+1})
    const Index rk = matrix_rank(dual);
    r.degrees.push_back(p);
    r.source_dims.push_back(dual.rows());
    r.ranks.push_back(rk);
    if (rk != dual.rows()) r.ok = false;
  }
  return r;
}

}  // namespace toric
