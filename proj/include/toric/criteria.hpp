#pragma once

// Combinatorial sufficient criteria for lcdef of 4-dimensional cones, and
// the shelling filtration of Ish^3 behind them.

#include "toric/ishida.hpp"
#include "toric/shelling.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class Verdict { ForcesLcdef0, ForcesLcdef1, Inconclusive };

std::string_view verdict_name(Verdict v);  // FORCES_LCDEF_0, ...

struct CriterionVerdict {
  std::string criterion;
  Verdict verdict = Verdict::Inconclusive;
  Shelling shelling;                 // shelling_ray witness
  Index ray = -1;                    // simplicial_star witness tau_0
  std::array<Index, 3> counts{};     // (v, e, f)
};

/// f > v forces lcdef = 1. Asserts dim H^2(Ish^3) - dim H^1(Ish^3) = f - v.
CriterionVerdict euler_criterion(const Cone& sigma);

/// Looks for a shelling in which every facet but the last two brings a new
/// ray. Line shellings first, then a bounded search; failure is INCONCLUSIVE.
CriterionVerdict shelling_ray_criterion(const Cone& sigma, std::uint64_t budget = 200'000, std::uint64_t seed = 0);

/// A ray whose facets are all simplicial while the other rays span N_R.
CriterionVerdict simplicial_star_criterion(const Cone& sigma);

/// Whether `order` meets the ray condition of shelling_ray_criterion
/// (it must also be a shelling for the criterion to apply).
bool brings_new_rays(const Cone& sigma, const Shelling& order);

/// F^0 ⊇ F^1 ⊇ ... ⊇ F^r = 0 inside Ish^3_sigma: F^k keeps the blocks of faces
/// not contained in f_1 ∪ ... ∪ f_k. Closure under d is verified on
/// construction.
struct ShellingFiltration {
  Shelling order;
  FaceLattice lattice;
  LabeledComplex full;                 // F^0 = Ish^3_sigma
  std::vector<std::vector<bool>> kept; // kept[k][face]

  Index steps() const { return static_cast<Index>(order.size()); }
  LabeledComplex sub(Index k) const;       // F^k
  LabeledComplex quotient(Index k) const;  // F^0 / F^k
};

/// Throws WrongDimension unless d = 4 and InvalidShelling unless `order` is a shelling.
ShellingFiltration shelling_filtration(const Cone& sigma, const Shelling& order);

/// The blocks of `cx` whose faces satisfy keep, with the induced differential
/// (a subcomplex or, dually, a quotient when the complement is closed).
LabeledComplex restrict_blocks(const LabeledComplex& cx, const std::vector<bool>& keep);

}  // namespace toric
