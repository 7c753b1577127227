#pragma once

// Ishida complexes of cones and fans, their cohomology, and lcdef.

#include "toric/polyhedral.hpp"

#include <string>
#include <vector>

namespace toric {

/// One summand ⋀^wedge mu^⊥ of a term, mu given as a face index.
struct Block {
  Index face = 0;
  int wedge = 0;
  Index offset = 0;
  Index size = 0;
};

/// Cochain complex of rational matrices in degrees 0..terms.size()-1.
/// differentials[i] maps term i to term i+1 (rows: target, cols: source).
struct LabeledComplex {
  std::vector<std::vector<Block>> terms;
  std::vector<Index> dims;
  std::vector<RationalMatrix> differentials;

  Index degrees() const { return static_cast<Index>(dims.size()); }
  Index dim(Index i) const { return i < 0 || i >= degrees() ? 0 : dims[static_cast<std::size_t>(i)]; }
  /// Block of `face` in term i, or nullptr.
  const Block* find(Index i, Index face) const;
};

/// Appends a degree whose blocks are laid out consecutively.
void push_term(LabeledComplex& cx, std::vector<Block> blocks);

/// Ish^l of a face complex: term m is ⊕_{mu ∈ P_m} ⋀^{l-m} mu^⊥, differential
/// blocks are contractions by n_{mu,tau}. `normals` overrides the lattice's
/// representatives (one per covering, same order). d² = 0 is checked.
LabeledComplex ishida_complex(const FaceLattice& lattice, int l, const std::vector<IntegerVector>& normals = {});

/// Ish^l_sigma, built inside <sigma> ∩ N.
LabeledComplex ishida_cone(const Cone& sigma, int l);
LabeledComplex ishida_fan(const Fan& fan, int l);

/// dim H^i for i = 0..degrees()-1. Throws NotAComplex if d² ≠ 0.
std::vector<Index> cohomology(const LabeledComplex& cx);

/// Throws NotAComplex unless every d_{i+1} d_i vanishes.
void check_complex(const LabeledComplex& cx);

/// Explicit H^i: independent coboundaries plus cocycle representatives
/// completing them to a basis of ker d_i (chosen from the echelon kernel basis).
struct CohomologyBasis {
  RationalMatrix boundaries;
  RationalMatrix representatives;

  Index dim() const { return representatives.cols(); }
  /// Class of a cocycle in the representative basis. Throws Internal if x is
  /// not a cocycle of this degree.
  RationalVector coordinates(const RationalVector& x) const;
};

CohomologyBasis cohomology_basis(const LabeledComplex& cx, Index i);

/// dims[l][i] = dim H^i(Ish^l), l = 0..d.
struct CohomologyTable {
  std::vector<std::vector<Index>> dims;

  Index at(Index l, Index i) const;
};

/// Table of Ish^l_sigma for l = 0..d_sigma (intrinsic).
CohomologyTable ishida_table(const Cone& sigma);

struct LcdefReport {
  Index value = 0;     // max(0, raw)
  Index raw = 0;       // max over nonzero H^i(Ish^l) of i - (d - l)
  Index dim = 0;
  CohomologyTable table;
  std::string diagnostic;  // set when raw < 0
};

LcdefReport lcdef_cone_report(const Cone& sigma);
Index lcdef_cone(const Cone& sigma);

/// Largest c with H^{j+c}(Ish^{d-j}) ≠ 0 for some j and H^{j+c+1} = 0 for all j.
LcdefReport lcdef_from_table(const CohomologyTable& table, Index d);

/// max over the faces tau of sigma of lcdef_cone(tau).
Index lcdef_variety(const Cone& sigma);

/// Degree-u part of Ish^l_X for u in the relative interior of tau^* (tau a
/// face of the full-dimensional sigma): faces contained in tau, perps in M.
LabeledComplex graded_piece(const Cone& sigma, int l, const RaySet& tau);

/// Cohomology predicted by ⊕_j ⋀^j tau^⊥ ⊗ Ish^{l-j}_tau.
std::vector<Index> graded_piece_prediction(const Cone& sigma, int l, const RaySet& tau);

}  // namespace toric
