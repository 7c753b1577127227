#include "toric/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace toric {

std::vector<Index> indices(const RaySet& s)
{
  std::vector<Index> out;
  for (auto i = s.find_first(); i != RaySet::npos; i = s.find_next(i)) out.push_back(static_cast<Index>(i));
  return out;
}

RaySet make_rayset(std::size_t size, const std::vector<Index>& members)
{
  RaySet s(size);
  for (Index i : members) s.set(static_cast<std::size_t>(i));
  return s;
}

bool lex_less(const RaySet& a, const RaySet& b)
{
  auto i = a.find_first(), j = b.find_first();
  while (i != RaySet::npos && j != RaySet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == RaySet::npos && j != RaySet::npos;
}

namespace {

struct LexLess {
  bool operator()(const RaySet& a, const RaySet& b) const { return lex_less(a, b); }
};

void for_each_combination(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

IntegerMatrix columns_of(const std::vector<IntegerVector>& rays, const RaySet& s, Index dim)
{
  const auto ids = indices(s);
  IntegerMatrix m(dim, static_cast<Index>(ids.size()));
  for (std::size_t j = 0; j < ids.size(); ++j) m.col(static_cast<Index>(j)) = rays[static_cast<std::size_t>(ids[j])];
  return m;
}

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct FacetData {
  std::vector<RaySet> facets;
  std::vector<IntegerVector> normals;
};

// Facets of the cone generated by `coords`, which span Q^d.
FacetData find_facets(const std::vector<IntegerVector>& coords, Index d)
{
  const std::size_t m = coords.size();
  std::map<RaySet, IntegerVector, LexLess> found;
  for_each_combination(m, static_cast<std::size_t>(d - 1), [&](const std::vector<std::size_t>& sub) {
    RationalMatrix a(d - 1, d);
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (Index j = 0; j < d; ++j) a(static_cast<Index>(i), j) = coords[sub[i]](j);
    const auto rk = rank_and_kernel<Rational>(a);
    if (rk.kernel.cols() != 1) return;
    IntegerVector phi = primitive(RationalVector(rk.kernel.col(0)));
    bool pos = false, neg = false;
    RaySet zero(m);
    for (std::size_t i = 0; i < m; ++i) {
      const int s = sign(phi.dot(coords[i]));
      if (s > 0) pos = true;
      else if (s < 0) neg = true;
      else zero.set(i);
    }
    if (pos && neg) return;
    if (neg) phi = -phi;
    found.emplace(zero, phi);
  });
  FacetData out;
  for (auto& [f, n] : found) {
    out.facets.push_back(f);
    out.normals.push_back(n);
  }
  return out;
}

}  // namespace

Cone cone_from_rays(const std::vector<IntegerVector>& vectors)
{
  if (vectors.empty()) fail(ErrorCode::ValidationError, "a cone needs at least one generator");
  const Index n = vectors.front().size();
  std::vector<IntegerVector> rays;
  for (const auto& v : vectors) {
    if (v.size() != n) fail(ErrorCode::WrongDimension, "generators of different lengths");
    if (v.isZero()) fail(ErrorCode::ZeroVector, "zero generator");
    IntegerVector p = primitive(v);
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(std::move(p));
  }

  for (;;) {
    Cone c;
    c.lattice_rank = n;
    c.rays = rays;
    const IntegerMatrix g = from_columns(rays, n);
    c.span_basis = saturation_basis(g);
    c.dim = c.span_basis.cols();
    const auto x = solve<Rational>(to_rational(c.span_basis), to_rational(g));
    if (!x) fail(ErrorCode::Internal, "generators outside their own span");
    for (Index j = 0; j < g.cols(); ++j) {
      IntegerVector cj(c.dim);
      for (Index i = 0; i < c.dim; ++i) cj(i) = boost::multiprecision::numerator((*x)(i, j));
      c.coords.push_back(std::move(cj));
    }

    auto fd = find_facets(c.coords, c.dim);
    if (rank(from_columns(fd.normals, c.dim)) < c.dim)
      fail(ErrorCode::NotStronglyConvex, "the generators span a cone containing a line");

    // a generator is extreme iff the facets through it meet only in it
    std::vector<IntegerVector> extreme;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      RaySet meet(rays.size());
      meet.set();
      for (const auto& f : fd.facets)
        if (f.test(i)) meet &= f;
      if (meet.count() == 1) extreme.push_back(rays[i]);
    }
    if (extreme.size() < rays.size()) {
      rays = std::move(extreme);
      continue;
    }
    c.facets = std::move(fd.facets);
    c.facet_normals = std::move(fd.normals);
    return c;
  }
}

Cone Cone::intrinsic() const { return cone_from_rays(coords); }

bool Cone::contains_in_interior(const IntegerVector& x) const
{
  if (!full_dimensional() || x.size() != lattice_rank) return false;
  for (const auto& m : facet_normals)
    if (m.dot(x) <= 0) return false;
  return true;
}

bool Cone::contains(const IntegerVector& x) const
{
  if (x.size() != lattice_rank) return false;
  const auto c = solve<Rational>(to_rational(span_basis), to_rational(x));
  if (!c) return false;
  const RationalVector cv = c->col(0);
  if (RationalVector(to_rational(span_basis) * cv) != RationalVector(to_rational(x))) return false;
  for (const auto& m : facet_normals)
    if (RationalVector(to_rational(m)).dot(cv) < 0) return false;
  return true;
}

std::vector<RaySet> cone_faces(const Cone& c)
{
  std::set<RaySet, LexLess> seen;
  std::vector<RaySet> out;
  RaySet all(c.rays.size());
  all.set();
  seen.insert(all);
  out.push_back(all);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& f : c.facets) {
      RaySet meet = out[k] & f;
      if (seen.insert(meet).second) out.push_back(std::move(meet));
    }
  return out;
}

// ---------------------------------------------------------------------------

Index FaceLattice::find(const RaySet& s) const
{
  const auto cnt = s.count();
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].rays.count() == cnt && faces[i].rays == s) return static_cast<Index>(i);
  return -1;
}

std::vector<Index> FaceLattice::counts() const
{
  std::vector<Index> out;
  for (const auto& d : by_dim) out.push_back(static_cast<Index>(d.size()));
  return out;
}

std::vector<Index> FaceLattice::facets_of(Index face) const
{
  std::vector<Index> out;
  for (Index c : down[static_cast<std::size_t>(face)]) out.push_back(coverings[static_cast<std::size_t>(c)].mu);
  return out;
}

FaceLattice FaceLattice::restrict_to(Index face) const
{
  const RaySet& top = faces[static_cast<std::size_t>(face)].rays;
  std::vector<RaySet> sets;
  for (const auto& f : faces)
    if (f.rays.is_subset_of(top)) sets.push_back(f.rays);
  return build_face_lattice(lattice_rank, rays, sets);
}

FaceLattice build_face_lattice(Index lattice_rank, const std::vector<IntegerVector>& rays,
                               const std::vector<RaySet>& face_sets)
{
  FaceLattice L;
  L.lattice_rank = lattice_rank;
  L.rays = rays;
  std::set<RaySet, LexLess> unique(face_sets.begin(), face_sets.end());
  for (const auto& s : unique) {
    Face f;
    f.rays = s;
    const IntegerMatrix g = columns_of(rays, s, lattice_rank);
    f.span_basis = saturation_basis(g);
    f.dim = f.span_basis.cols();
    f.perp = orthogonal_complement(g);
    L.faces.push_back(std::move(f));
  }
  std::stable_sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return lex_less(a.rays, b.rays);
  });
  Index top = -1;
  for (const auto& f : L.faces) top = std::max(top, f.dim);
  L.by_dim.assign(static_cast<std::size_t>(top + 1), {});
  for (std::size_t i = 0; i < L.faces.size(); ++i)
    L.by_dim[static_cast<std::size_t>(L.faces[i].dim)].push_back(static_cast<Index>(i));

  L.up.assign(L.faces.size(), {});
  L.down.assign(L.faces.size(), {});
  for (Index m = 1; m <= top; ++m)
    for (Index t : L.by_dim[static_cast<std::size_t>(m)])
      for (Index u : L.by_dim[static_cast<std::size_t>(m - 1)]) {
        const Face& tau = L.faces[static_cast<std::size_t>(t)];
        const Face& mu = L.faces[static_cast<std::size_t>(u)];
        if (!mu.rays.is_subset_of(tau.rays)) continue;
        L.coverings.push_back({u, t, normal_generator(rays, mu, tau)});
        const Index c = static_cast<Index>(L.coverings.size()) - 1;
        L.up[static_cast<std::size_t>(u)].push_back(c);
        L.down[static_cast<std::size_t>(t)].push_back(c);
      }
  return L;
}

FaceLattice face_lattice(const Cone& c) { return build_face_lattice(c.lattice_rank, c.rays, cone_faces(c)); }

IntegerVector normal_generator(const std::vector<IntegerVector>& rays, const Face& mu, const Face& tau)
{
  if (tau.dim != mu.dim + 1 || !mu.rays.is_subset_of(tau.rays))
    fail(ErrorCode::NotCovering, "faces do not form a covering pair");
  const RationalMatrix T = to_rational(tau.span_basis);
  const auto x = solve<Rational>(T, to_rational(mu.span_basis));
  if (!x) fail(ErrorCode::Internal, "face span outside the larger face");
  IntegerMatrix xi(x->rows(), x->cols());
  for (Index i = 0; i < xi.rows(); ++i)
    for (Index j = 0; j < xi.cols(); ++j) xi(i, j) = boost::multiprecision::numerator((*x)(i, j));
  const IntegerMatrix k = integer_kernel(IntegerMatrix(xi.transpose()));
  if (k.cols() != 1) fail(ErrorCode::Internal, "covering pair with wrong codimension");
  IntegerVector phi = k.col(0);

  const RaySet outside = tau.rays - mu.rays;
  const auto r = static_cast<std::size_t>(outside.find_first());
  const auto c = solve<Rational>(T, to_rational(rays[r]));
  Rational val = 0;
  for (Index i = 0; i < phi.size(); ++i) val += Rational(phi(i)) * (*c)(i, 0);
  if (val < 0) phi = -phi;

  const IntegerVector y = bezout_vector(phi);
  return reduce_modulo(IntegerVector(tau.span_basis * y), mu.span_basis);
}

IntegerVector normal_generator(const FaceLattice& lattice, Index mu, Index tau)
{
  return normal_generator(lattice.rays, lattice.faces[static_cast<std::size_t>(mu)],
                          lattice.faces[static_cast<std::size_t>(tau)]);
}

// ---------------------------------------------------------------------------

namespace {

// cones containing a face, by index into fan.cones
std::vector<std::size_t> cones_containing(const std::vector<RaySet>& cone_sets, const RaySet& face)
{
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cone_sets.size(); ++k)
    if (face.is_subset_of(cone_sets[k])) out.push_back(k);
  return out;
}

int side(const SubspaceBasis& wall_perp, const IntegerVector& r)
{
  const RationalVector phi = wall_perp.vectors.col(0);
  const Rational v = phi.dot(RationalVector(to_rational(r)));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

Fan make_fan(Index lattice_rank, const std::vector<IntegerVector>& input_rays,
             const std::vector<std::vector<Index>>& input_cones)
{
  std::vector<IntegerVector> rays;
  for (const auto& v : input_rays) {
    if (v.size() != lattice_rank) fail(ErrorCode::WrongDimension, "ray of wrong length");
    if (v.isZero()) fail(ErrorCode::ZeroVector, "zero ray");
    IntegerVector p = primitive(v);
    if (std::find(rays.begin(), rays.end(), p) != rays.end())
      fail(ErrorCode::InvalidFan, "duplicate ray " + to_string(p));
    rays.push_back(std::move(p));
  }
  const std::size_t nr = rays.size();

  struct Entry {
    std::vector<Index> ids;
    RaySet set;
    Cone cone;
    std::set<RaySet, LexLess> faces;  // global ray sets
  };
  std::vector<Entry> entries;
  for (auto ids : input_cones) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) continue;
    for (Index i : ids)
      if (i < 0 || static_cast<std::size_t>(i) >= nr) fail(ErrorCode::ValidationError, "ray index out of range");
    std::vector<IntegerVector> gens;
    for (Index i : ids) gens.push_back(rays[static_cast<std::size_t>(i)]);
    Entry e{ids, make_rayset(nr, ids), cone_from_rays(gens), {}};
    if (e.cone.rays.size() != ids.size()) fail(ErrorCode::InvalidFan, "a listed ray is not extreme in its cone");
    for (const auto& local : cone_faces(e.cone)) {
      RaySet global(nr);
      for (Index j : indices(local)) global.set(static_cast<std::size_t>(ids[static_cast<std::size_t>(j)]));
      e.faces.insert(global);
    }
    entries.push_back(std::move(e));
  }

  // drop cones listed as subsets of others; they must be faces there
  std::vector<bool> contained(entries.size(), false);
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = 0; b < entries.size() && !contained[a]; ++b) {
      if (a == b || !entries[a].set.is_subset_of(entries[b].set)) continue;
      if (entries[a].set == entries[b].set && a < b) continue;  // keep the first copy
      if (!entries[b].faces.count(entries[a].set)) fail(ErrorCode::InvalidFan, "a cone is not a face of a cone containing its rays");
      contained[a] = true;
    }
  std::vector<Entry> maximal;
  for (std::size_t a = 0; a < entries.size(); ++a)
    if (!contained[a]) maximal.push_back(std::move(entries[a]));

  for (std::size_t a = 0; a < maximal.size(); ++a)
    for (std::size_t b = a + 1; b < maximal.size(); ++b) {
      const RaySet common = maximal[a].set & maximal[b].set;
      if (!maximal[a].faces.count(common) || !maximal[b].faces.count(common))
        fail(ErrorCode::InvalidFan, "two cones do not meet in a common face");
    }

  std::set<RaySet, LexLess> all;
  all.insert(RaySet(nr));
  for (const auto& e : maximal) all.insert(e.faces.begin(), e.faces.end());

  Fan fan;
  fan.lattice = build_face_lattice(lattice_rank, rays, std::vector<RaySet>(all.begin(), all.end()));
  std::vector<RaySet> cone_sets;
  for (auto& e : maximal) {
    cone_sets.push_back(e.set);
    fan.maximal.push_back(fan.lattice.find(e.set));
    fan.cone_rays.push_back(e.ids);
    fan.cones.push_back(std::move(e.cone));
  }

  // walls: at most two full-dimensional cones, on opposite sides
  if (lattice_rank >= 1 && static_cast<Index>(fan.lattice.by_dim.size()) > lattice_rank - 1)
    for (Index w : fan.lattice.by_dim[static_cast<std::size_t>(lattice_rank - 1)]) {
      const Face& wall = fan.lattice.faces[static_cast<std::size_t>(w)];
      std::vector<std::size_t> full;
      for (std::size_t k : cones_containing(cone_sets, wall.rays))
        if (fan.cones[k].full_dimensional()) full.push_back(k);
      if (full.size() > 2) fail(ErrorCode::InvalidFan, "a wall lies in more than two cones");
      if (full.size() == 2) {
        const auto r1 = (cone_sets[full[0]] - wall.rays).find_first();
        const auto r2 = (cone_sets[full[1]] - wall.rays).find_first();
        if (side(wall.perp, rays[r1]) * side(wall.perp, rays[r2]) != -1)
          fail(ErrorCode::InvalidFan, "two cones on the same side of a wall");
      }
    }
  return fan;
}

bool Fan::is_complete(std::uint64_t seed) const
{
  const Index n = lattice_rank();
  if (cones.empty()) return n == 0;
  for (const auto& c : cones)
    if (!c.full_dimensional()) return false;
  std::vector<RaySet> cone_sets;
  for (Index f : maximal) cone_sets.push_back(lattice.faces[static_cast<std::size_t>(f)].rays);
  if (n >= 1)
    for (Index w : lattice.by_dim[static_cast<std::size_t>(n - 1)])
      if (cones_containing(cone_sets, lattice.faces[static_cast<std::size_t>(w)].rays).size() != 2) return false;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-60, 60);
  int accepted = 0;
  for (int attempt = 0; attempt < 400 && accepted < 16; ++attempt) {
    IntegerVector x(n);
    for (Index i = 0; i < n; ++i) x(i) = coord(rng);
    if (x.isZero()) continue;
    int inside = 0;
    bool boundary = false;
    for (const auto& c : cones) {
      int minsign = 1;
      for (const auto& m : c.facet_normals) minsign = std::min(minsign, sign(m.dot(x)));
      if (minsign > 0) ++inside;
      else if (minsign == 0) {
        bool nonneg = true;
        for (const auto& m : c.facet_normals)
          if (m.dot(x) < 0) nonneg = false;
        if (nonneg) boundary = true;
      }
    }
    if (boundary) continue;
    if (inside != 1) return false;
    ++accepted;
  }
  return true;
}

Fan fan_of_cone(const Cone& c)
{
  std::vector<Index> all(c.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  return make_fan(c.lattice_rank, c.rays, {all});
}

Cone pyramid(const Cone& c, const IntegerVector& apex)
{
  const Index n = c.lattice_rank;
  if (apex.size() != n + 1) fail(ErrorCode::WrongDimension, "apex must lie in N ⊕ Z");
  if (apex(n).is_zero()) fail(ErrorCode::ApexInHyperplane, "apex lies in N × {0}");
  std::vector<IntegerVector> gens;
  for (const auto& r : c.rays) {
    IntegerVector v = IntegerVector::Zero(n + 1);
    v.head(n) = r;
    gens.push_back(std::move(v));
  }
  gens.push_back(apex);
  return cone_from_rays(gens);
}

IntegerVector default_interior_ray(const Cone& c)
{
  IntegerVector s = IntegerVector::Zero(c.lattice_rank);
  for (const auto& r : c.rays) s += r;
  return primitive(s);
}

bool is_strictly_convex(const Fan& fan, const std::vector<RationalVector>& u)
{
  const Index n = fan.lattice_rank();
  if (u.size() != fan.cones.size()) fail(ErrorCode::ValidationError, "one support vector per maximal cone expected");
  if (n < 1 || static_cast<Index>(fan.lattice.by_dim.size()) <= n - 1) return true;
  std::vector<RaySet> cone_sets;
  for (Index f : fan.maximal) cone_sets.push_back(fan.lattice.faces[static_cast<std::size_t>(f)].rays);
  for (Index w : fan.lattice.by_dim[static_cast<std::size_t>(n - 1)]) {
    const RaySet& wall = fan.lattice.faces[static_cast<std::size_t>(w)].rays;
    const auto ks = cones_containing(cone_sets, wall);
    if (ks.size() != 2) continue;
    const RationalVector d = u[ks[1]] - u[ks[0]];
    if (d.isZero()) return false;
    const auto r2 = (cone_sets[ks[1]] - wall).find_first();
    const auto r1 = (cone_sets[ks[0]] - wall).find_first();
    if (!(d.dot(RationalVector(to_rational(fan.rays()[r2]))) > 0)) return false;
    if (!(d.dot(RationalVector(to_rational(fan.rays()[r1]))) < 0)) return false;
  }
  return true;
}

StarQuotient star_quotient(const Cone& sigma, const IntegerVector& rho_in)
{
  const Index n = sigma.lattice_rank;
  if (!sigma.full_dimensional()) fail(ErrorCode::NotFullDim, "star quotient needs a full-dimensional cone");
  if (rho_in.size() != n) fail(ErrorCode::WrongDimension, "ray of wrong length");
  if (rho_in.isZero()) fail(ErrorCode::ZeroVector, "zero ray");
  StarQuotient q;
  q.ray = primitive(rho_in);
  if (!sigma.contains_in_interior(q.ray)) fail(ErrorCode::NotInterior, to_string(q.ray) + " is not interior");

  // U rho V = s e_1 with V = [s]; move the first row to the end
  IntegerMatrix col(n, 1);
  col.col(0) = q.ray;
  const auto snf = smith_normal_form(col);
  const Integer s = snf.V(0, 0);
  q.W.resize(n, n);
  for (Index i = 1; i < n; ++i) q.W.row(i - 1) = snf.U.row(i) * s;
  q.W.row(n - 1) = snf.U.row(0) * s;
  {
    const IntegerVector e = q.W * q.ray;
    for (Index i = 0; i < n; ++i)
      if (e(i) != (i == n - 1 ? 1 : 0)) fail(ErrorCode::Internal, "coordinate change does not send rho to e_n");
  }
  const IntegerMatrix Winv = unimodular_inverse(q.W);

  std::vector<IntegerVector> erays;
  std::vector<IntegerVector> lifted;
  for (const auto& v : sigma.rays) {
    const IntegerVector wv = q.W * v;
    lifted.push_back(wv);
    const IntegerVector z = wv.head(n - 1);
    const Integer g = content(z);
    erays.push_back(primitive(z));
    q.alpha.push_back(Rational(wv(n - 1)) / Rational(g));
  }

  std::vector<std::vector<Index>> cones;
  for (std::size_t f = 0; f < sigma.facets.size(); ++f) {
    cones.push_back(indices(sigma.facets[f]));
    const IntegerVector mp = (sigma.facet_normals[f].transpose() * Winv).transpose();
    const Rational last = Rational(mp(n - 1));
    RationalVector u(n - 1);
    for (Index i = 0; i < n - 1; ++i) u(i) = -Rational(mp(i)) / last;
    q.u.push_back(std::move(u));
  }
  q.fan = make_fan(n - 1, erays, cones);
  for (std::size_t f = 0; f < cones.size(); ++f)
    for (Index r : cones[f])
      if (q.u[f].dot(RationalVector(to_rational(erays[static_cast<std::size_t>(r)]))) != q.alpha[static_cast<std::size_t>(r)])
        fail(ErrorCode::Internal, "support vector disagrees with the divisor coefficients");
  if (!is_strictly_convex(q.fan, q.u)) fail(ErrorCode::NotAmple, "support function of the quotient is not strictly convex");
  q.graph_cone = cone_from_rays(lifted);
  return q;
}

}  // namespace toric
