#pragma once

// Q-Cartier divisors on fans, the lifted short exact sequence
//   0 -> Ish^{p+1} -> Ish^{p+1}_D -> Ish^p -> 0,
// its connecting (dual Lefschetz) map, Hodge tables, and the long exact
// sequence relating a cone to the exceptional divisor of a star subdivision.

#include "toric/ishida.hpp"

#include <string>
#include <vector>

namespace toric {

struct DivisorData {
  std::vector<Rational> alpha;          // per ray of the fan
  std::vector<RationalVector> u;        // per maximal cone
  std::vector<RationalVector> face_u;   // per face of fan.lattice (any valid restriction)
  Integer C = 1;                        // least C with C u_sigma integral for all sigma
  std::vector<Integer> a;               // per face
  std::vector<Integer> b;               // per face, for the lift of C·D
};

/// Solves <u_sigma, rho> = alpha_rho on every maximal cone. Throws
/// NotQCartier when some cone has no solution.
DivisorData support_data(const Fan& fan, const std::vector<Rational>& alpha);

/// Graph faces tau^ and epigraph faces tau~ in N ⊕ Z e_{n+1}. The total
/// lattice has the lifted rays (rho, alpha_rho), made primitive, followed by e_{n+1}.
struct LiftedFaces {
  FaceLattice total;
  FaceLattice graph;           // the tau^ alone; face indices agree with fan.lattice
  std::vector<Index> hat;      // per face of fan.lattice, index into total
  std::vector<Index> tilde;
};

LiftedFaces lifted_faces(const Fan& fan, const std::vector<Rational>& alpha);

/// # (<tau~> ∩ Ñ) / (Z e_{n+1} + <tau^> ∩ Ñ) for every face.
std::vector<Integer> lift_indices(const LiftedFaces& lifted, Index faces);

struct LiftedSequence {
  int p = 0;
  LabeledComplex left;    // Ish^{p+1}
  LabeledComplex middle;  // Ish^{p+1}_D
  LabeledComplex right;   // Ish^p
  std::vector<RationalMatrix> inclusion;   // per degree, left -> middle
  std::vector<RationalMatrix> projection;  // per degree, middle -> right
};

/// Builds the sequence and verifies termwise exactness and both chain-map
/// squares; a failure throws Internal.
LiftedSequence lifted_complex(const Fan& fan, const DivisorData& divisor, int p);

/// Snake-lemma map H^l(right) -> H^{l+1}(left) in the cohomology_basis bases.
RationalMatrix connecting_map(const LiftedSequence& ses, int l);
RationalMatrix connecting_map(const Fan& fan, const DivisorData& divisor, int p, int l);

/// Map on H^i induced by a termwise chain map f between complexes.
RationalMatrix induced_map(const LabeledComplex& from, const LabeledComplex& to, const RationalMatrix& f, Index i);

/// h[p][q] = dim H^{n-q}(Ish^{n-p}) for a complete fan. Throws NotComplete.
using HodgeTable = std::vector<std::vector<Index>>;
HodgeTable hodge_table(const Fan& fan);

/// Betti numbers of a complete simplicial fan from its face counts:
/// b_{2k} = h_k = sum_i (-1)^{i-k} C(i,k) f_{n-i}, odd ones 0.
std::vector<Index> h_vector_betti(const Fan& fan);

struct EquivalenceReport {
  bool vanishes = false;     // H^l(Ish^{p+1}_sigma) = 0
  bool injective = false;    // delta: H^l(Ish^p_E) -> H^{l+1}(Ish^{p+1}_E)
  bool surjective = false;   // delta: H^{l-1}(Ish^p_E) -> H^l(Ish^{p+1}_E)
  bool agree() const { return vanishes == (injective && surjective); }
};

/// Both sides of: H^l(Ish^{p+1}_sigma) = 0 iff the adjacent dual Lefschetz maps
/// on E are injective and surjective (requires p < d - 1).
EquivalenceReport lefschetz_equivalence_check(const Cone& sigma, const IntegerVector& rho, int p, int l);

/// One node group of the long exact sequence for a fixed l.
struct LesReport {
  int l = 0;
  // dims along  ... -> H^{i-1}(Ish^{l-1}_E) -> H^i(Ish^l_E) -> H^i(Ish^l_sigma) -> H^i(Ish^{l-1}_E) -> ...
  std::vector<Index> exceptional_l;        // H^i(Ish^l_E)
  std::vector<Index> exceptional_lm1;      // H^i(Ish^{l-1}_E)
  std::vector<Index> cone;                 // H^i(Ish^l_sigma) computed directly
  std::vector<Index> middle;               // H^i of the lifted middle complex
  std::vector<Index> connecting_rank;      // rank of H^i(Ish^{l-1}_E) -> H^{i+1}(Ish^l_E)
  bool exact = false;
  std::string failure;
};

/// The long exact sequence for l = 0..d-1; exactness is checked node by node
/// with explicit maps, and the middle terms against Ish^l_sigma.
std::vector<LesReport> les_theorem(const Cone& sigma, const IntegerVector& rho);

/// dim H^2(E) >= 2 for the exceptional fan of a 4-dimensional cone.
struct Lcdef4Report {
  Index h2 = 0;
  bool lcdef_one = false;
};
Lcdef4Report lcdef4_via_exceptional(const Cone& sigma, const IntegerVector& rho);

struct HardLefschetzReport {
  std::vector<Index> degrees;           // p checked
  std::vector<Index> source_dims;       // dim H^p(Omega^p)
  std::vector<Index> ranks;             // rank of c_1 there
  bool ok = true;
};

/// c_1(D): H^p(Omega^p) -> H^{p+1}(Omega^{p+1}) injective for p <= (n-1)/2,
/// checked as surjectivity of the dual connecting map. Throws NotAmple.
HardLefschetzReport hard_lefschetz_injectivity_check(const Fan& fan, const DivisorData& divisor);

}  // namespace toric
