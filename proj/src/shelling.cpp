#include "toric/shelling.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

namespace toric {

namespace {

using Mask = std::uint64_t;

struct BudgetExceeded {};

class Oracle {
 public:
  explicit Oracle(const FaceLattice& L, std::uint64_t budget = ~std::uint64_t(0)) : L_(L), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }

  std::vector<Index> sorted_facets(Index face) const
  {
    auto fl = L_.facets_of(face);
    std::sort(fl.begin(), fl.end());
    if (fl.size() > 63) fail(ErrorCode::ValidationError, "too many facets for the shelling search");
    return fl;
  }

  const RaySet& rays(Index face) const { return L_.faces[static_cast<std::size_t>(face)].rays; }

  // Facets of mu lying in one of the earlier facets, when mu ∩ (union of the
  // earlier facets) is exactly their union; nullopt otherwise.
  std::optional<std::vector<Index>> attach(Index mu, const std::vector<Index>& earlier)
  {
    std::vector<Index> lambda;
    const auto sub = sorted_facets(mu);
    for (Index l : sub)
      for (Index e : earlier)
        if (rays(l).is_subset_of(rays(e))) {
          lambda.push_back(l);
          break;
        }
    if (lambda.empty()) return std::nullopt;
    for (Index e : earlier) {
      const RaySet meet = rays(mu) & rays(e);
      bool covered = false;
      for (Index l : lambda)
        if (meet.is_subset_of(rays(l))) {
          covered = true;
          break;
        }
      if (!covered) return std::nullopt;
    }
    return lambda;
  }

  // Some shelling of the facets of `face` starts with exactly the set `prefix`.
  bool exists(Index face, const std::vector<Index>& prefix)
  {
    if (L_.faces[static_cast<std::size_t>(face)].dim <= 1) return true;
    const auto fl = sorted_facets(face);
    Mask required = 0;
    for (Index p : prefix) {
      const auto it = std::find(fl.begin(), fl.end(), p);
      if (it == fl.end()) return false;
      required |= Mask(1) << (it - fl.begin());
    }
    const auto key = std::make_pair(face, required);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<Mask> failed;
    std::vector<Index> order;
    const bool ok = dfs(fl, required, 0, order, failed, nullptr);
    memo_[key] = ok;
    return ok;
  }

  // Whether facet k of `fl` may follow the facets in `placed`.
  bool step_valid(const std::vector<Index>& fl, Mask placed, std::size_t k)
  {
    if (placed == 0) return exists(fl[k], {});
    std::vector<Index> earlier;
    for (std::size_t i = 0; i < fl.size(); ++i)
      if (placed >> i & 1) earlier.push_back(fl[i]);
    const auto lambda = attach(fl[k], earlier);
    return lambda && exists(fl[k], *lambda);
  }

  bool dfs(const std::vector<Index>& fl, Mask required, Mask placed, std::vector<Index>& order,
           std::set<Mask>& failed, const ShellingStep* step)
  {
    const Mask full = (fl.size() == 64) ? ~Mask(0) : ((Mask(1) << fl.size()) - 1);
    if (placed == full) return true;
    if (failed.count(placed)) return false;
    if (++nodes_ > budget_) throw BudgetExceeded{};
    const bool in_prefix = std::popcount(placed) < std::popcount(required);
    RaySet covered(L_.rays.size());
    if (step)
      for (std::size_t i = 0; i < fl.size(); ++i)
        if (placed >> i & 1) covered |= rays(fl[i]);
    for (std::size_t k = 0; k < fl.size(); ++k) {
      if (placed >> k & 1) continue;
      if (in_prefix && !(required >> k & 1)) continue;
      if (step && !(*step)(covered, fl[k], static_cast<std::size_t>(std::popcount(placed)), fl.size())) continue;
      if (!step_valid(fl, placed, k)) continue;
      order.push_back(static_cast<Index>(k));
      if (dfs(fl, required, placed | Mask(1) << k, order, failed, step)) return true;
      order.pop_back();
    }
    failed.insert(placed);
    return false;
  }

 private:
  const FaceLattice& L_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::map<std::pair<Index, Mask>, bool> memo_;
};

Index top_face(const FaceLattice& L) { return L.by_dim.back().front(); }

// Lattice face index of each facet of c, in Cone::facets order.
std::vector<Index> facet_faces(const Cone& c, const FaceLattice& L)
{
  std::vector<Index> out;
  for (const auto& f : c.facets) out.push_back(L.find(f));
  return out;
}

}  // namespace

bool is_shelling(const Cone& c, const Shelling& order)
{
  const std::size_t r = c.facets.size();
  {
    std::vector<Index> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == r;
    for (std::size_t i = 0; perm && i < r; ++i) perm = sorted[i] == static_cast<Index>(i);
    if (!perm) fail(ErrorCode::NotAPermutation, "not an ordering of the facets");
  }
  if (c.dim <= 1) return true;
  const FaceLattice L = face_lattice(c);
  const auto ff = facet_faces(c, L);
  Oracle oracle(L);
  std::vector<Index> earlier;
  for (std::size_t j = 0; j < r; ++j) {
    const Index mu = ff[static_cast<std::size_t>(order[j])];
    if (j == 0) {
      if (!oracle.exists(mu, {})) return false;
    } else {
      const auto lambda = oracle.attach(mu, earlier);
      if (!lambda || !oracle.exists(mu, *lambda)) return false;
    }
    earlier.push_back(mu);
  }
  return true;
}

Shelling line_shelling(const Cone& c, std::uint64_t seed)
{
  const Index d = c.dim;
  const std::size_t r = c.facets.size();
  Shelling identity(r);
  for (std::size_t i = 0; i < r; ++i) identity[i] = static_cast<Index>(i);
  if (d <= 2) return identity;

  IntegerVector w = IntegerVector::Zero(d), c0 = IntegerVector::Zero(d);
  for (const auto& m : c.facet_normals) w += m;
  for (const auto& x : c.coords) c0 += x;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (int attempt = 0; attempt < 200; ++attempt) {
    IntegerVector v(d);
    for (Index i = 0; i < d; ++i) v(i) = coord(rng);
    const IntegerVector dir = v * w.dot(w) - w * w.dot(v);  // orthogonal to w
    if (dir.isZero()) continue;
    std::vector<std::pair<Rational, Index>> pos, neg;
    bool degenerate = false;
    for (std::size_t f = 0; f < r && !degenerate; ++f) {
      const Integer den = c.facet_normals[f].dot(dir);
      if (den.is_zero()) {
        degenerate = true;
        break;
      }
      const Rational t = -Rational(c.facet_normals[f].dot(c0)) / Rational(den);
      (t > 0 ? pos : neg).emplace_back(t, static_cast<Index>(f));
    }
    if (degenerate) continue;
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    auto tie = [](const std::vector<std::pair<Rational, Index>>& v) {
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].first == v[i - 1].first) return true;
      return false;
    };
    if (tie(pos) || tie(neg)) continue;
    Shelling order;
    for (const auto& p : pos) order.push_back(p.second);
    for (const auto& p : neg) order.push_back(p.second);
    if (is_shelling(c, order)) return order;
  }
  fail(ErrorCode::Internal, "no line shelling found");
}

ShellingSearch search_shelling(const Cone& c, const ShellingQuery& query)
{
  ShellingSearch out;
  const FaceLattice L = face_lattice(c);
  const auto ff = facet_faces(c, L);
  Oracle oracle(L, query.budget);
  const Index top = top_face(L);
  const auto fl = oracle.sorted_facets(top);

  Mask required = 0;
  for (Index p : query.prefix) {
    if (p < 0 || static_cast<std::size_t>(p) >= ff.size()) fail(ErrorCode::ValidationError, "prefix facet out of range");
    const auto it = std::find(fl.begin(), fl.end(), ff[static_cast<std::size_t>(p)]);
    required |= Mask(1) << (it - fl.begin());
  }
  // translate the step predicate from lattice faces back to facet indices
  ShellingStep step;
  if (query.step) {
    step = [&](const RaySet& covered, Index face, std::size_t pos, std::size_t total) {
      const auto it = std::find(ff.begin(), ff.end(), face);
      return query.step(covered, static_cast<Index>(it - ff.begin()), pos, total);
    };
  }
  std::set<Mask> failed;
  std::vector<Index> order;
  try {
    const bool ok = oracle.dfs(fl, required, 0, order, failed, query.step ? &step : nullptr);
    out.status = ok ? SearchStatus::Found : SearchStatus::Exhausted;
  } catch (const BudgetExceeded&) {
    out.status = SearchStatus::BudgetExceeded;
  }
  out.nodes = oracle.nodes();
  if (out.status == SearchStatus::Found)
    for (Index k : order) {
      const auto it = std::find(ff.begin(), ff.end(), fl[static_cast<std::size_t>(k)]);
      out.order.push_back(static_cast<Index>(it - ff.begin()));
    }
  return out;
}

}  // namespace toric
