#include "toric/criteria.hpp"

namespace toric {

namespace {

void require_dim4(const Cone& sigma)
{
  if (sigma.dim != 4) fail(ErrorCode::WrongDimension, "criterion stated for 4-dimensional cones, got dimension " + std::to_string(sigma.dim));
}

bool subset(const RaySet& a, const RaySet& b) { return a.is_subset_of(b); }

}  // namespace

std::string_view verdict_name(Verdict v)
{
  switch (v) {
    case Verdict::ForcesLcdef0: return "FORCES_LCDEF_0";
    case Verdict::ForcesLcdef1: return "FORCES_LCDEF_1";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CriterionVerdict euler_criterion(const Cone& sigma)
{
  require_dim4(sigma);
  const FaceLattice L = face_lattice(sigma.intrinsic());
  const auto n = L.counts();
  CriterionVerdict out;
  out.criterion = "euler";
  out.counts = {n[1], n[2], n[3]};
  const auto h = cohomology(ishida_complex(L, 3));
  if (h[2] - h[1] != n[3] - n[1])
    fail(ErrorCode::Internal, "dim H^2(Ish^3) - dim H^1(Ish^3) differs from f - v");
  if (n[3] > n[1]) out.verdict = Verdict::ForcesLcdef1;
  return out;
}

bool brings_new_rays(const Cone& sigma, const Shelling& order)
{
  RaySet covered(sigma.rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const RaySet& f = sigma.facets[static_cast<std::size_t>(order[i])];
    if (i + 2 < order.size() && subset(f, covered)) return false;
    covered |= f;
  }
  return true;
}

CriterionVerdict shelling_ray_criterion(const Cone& sigma, std::uint64_t budget, std::uint64_t seed)
{
  require_dim4(sigma);
  const Cone c = sigma.intrinsic();
  CriterionVerdict out;
  out.criterion = "shelling_ray";
  constexpr int lines = 16;
  for (int k = 0; k < lines; ++k) {
    const Shelling s = line_shelling(c, seed * lines + static_cast<std::uint64_t>(k));
    if (brings_new_rays(c, s)) {
      out.verdict = Verdict::ForcesLcdef0;
      out.shelling = s;
      return out;
    }
  }
  ShellingQuery q;
  q.budget = budget;
  q.step = [&c](const RaySet& covered, Index facet, std::size_t pos, std::size_t total) {
    return pos + 2 >= total || !subset(c.facets[static_cast<std::size_t>(facet)], covered);
  };
  const auto found = search_shelling(c, q);
  if (found.status == SearchStatus::Found) {
    if (!is_shelling(c, found.order) || !brings_new_rays(c, found.order))
      fail(ErrorCode::Internal, "search returned an invalid witness");
    out.verdict = Verdict::ForcesLcdef0;
    out.shelling = found.order;
  }
  return out;
}

CriterionVerdict simplicial_star_criterion(const Cone& sigma)
{
  require_dim4(sigma);
  CriterionVerdict out;
  out.criterion = "simplicial_star";
  for (std::size_t r = 0; r < sigma.rays.size(); ++r) {
    bool simplicial = true;
    for (const auto& f : sigma.facets)
      if (f.test(r) && f.count() != 3) simplicial = false;
    if (!simplicial) continue;
    std::vector<IntegerVector> others;
    for (std::size_t s = 0; s < sigma.rays.size(); ++s)
      if (s != r) others.push_back(sigma.coords[s]);
    if (rank(from_columns(others, sigma.dim)) == sigma.dim) {
      out.verdict = Verdict::ForcesLcdef1;
      out.ray = static_cast<Index>(r);
      return out;
    }
  }
  return out;
}

LabeledComplex restrict_blocks(const LabeledComplex& cx, const std::vector<bool>& keep)
{
  LabeledComplex out;
  std::vector<std::vector<Block>> src;
  for (const auto& term : cx.terms) {
    std::vector<Block> blocks;
    for (const auto& b : term)
      if (keep[static_cast<std::size_t>(b.face)]) blocks.push_back(b);
    src.push_back(blocks);
    push_term(out, std::move(blocks));
  }
  for (std::size_t i = 0; i < cx.differentials.size(); ++i) {
    const RationalMatrix& d = cx.differentials[i];
    RationalMatrix r = RationalMatrix::Zero(out.dims[i + 1], out.dims[i]);
    const auto& from = src[i];
    const auto& to = src[i + 1];
    for (std::size_t a = 0; a < to.size(); ++a)
      for (std::size_t b = 0; b < from.size(); ++b)
        r.block(out.terms[i + 1][a].offset, out.terms[i][b].offset, to[a].size, from[b].size) =
            d.block(to[a].offset, from[b].offset, to[a].size, from[b].size);
    out.differentials.push_back(std::move(r));
  }
  return out;
}

LabeledComplex ShellingFiltration::sub(Index k) const { return restrict_blocks(full, kept[static_cast<std::size_t>(k)]); }

LabeledComplex ShellingFiltration::quotient(Index k) const
{
  std::vector<bool> rest(kept[static_cast<std::size_t>(k)].size());
  for (std::size_t f = 0; f < rest.size(); ++f) rest[f] = !kept[static_cast<std::size_t>(k)][f];
  return restrict_blocks(full, rest);
}

ShellingFiltration shelling_filtration(const Cone& sigma, const Shelling& order)
{
  require_dim4(sigma);
  const Cone c = sigma.intrinsic();
  bool valid = false;
  try {
    valid = is_shelling(c, order);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAPermutation) throw;
  }
  if (!valid) fail(ErrorCode::InvalidShelling, "order is not a shelling of the facets");

  ShellingFiltration F;
  F.order = order;
  F.lattice = face_lattice(c);
  F.full = ishida_complex(F.lattice, 3);
  const std::size_t nf = F.lattice.faces.size();
  std::vector<bool> keep(nf, true);
  F.kept.push_back(keep);
  for (Index facet : order) {
    const RaySet& f = c.facets[static_cast<std::size_t>(facet)];
    for (std::size_t x = 0; x < nf; ++x)
      if (subset(F.lattice.faces[x].rays, f)) keep[x] = false;
    F.kept.push_back(keep);
  }
  // closure: no differential block leads from a kept face to a dropped one
  for (std::size_t k = 0; k < F.kept.size(); ++k)
    for (std::size_t i = 0; i < F.full.differentials.size(); ++i)
      for (const Block& s : F.full.terms[i])
        for (const Block& t : F.full.terms[i + 1])
          if (F.kept[k][static_cast<std::size_t>(s.face)] && !F.kept[k][static_cast<std::size_t>(t.face)] &&
              !F.full.differentials[i].block(t.offset, s.offset, t.size, s.size).isZero())
            fail(ErrorCode::Internal, "F^" + std::to_string(k) + " is not a subcomplex");
  for (Index d : F.sub(F.steps()).dims)
    if (d != 0) fail(ErrorCode::Internal, "F^r is not zero");
  return F;
}

}  // namespace toric
