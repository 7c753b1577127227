#pragma once

// Rational polyhedral cones, their face lattices, fans, and the constructions
// built on them: normal generators n_{mu,tau}, pyramids and star quotients.

#include "toric/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace toric {

/// A set of ray indices.
using RaySet = boost::dynamic_bitset<>;

std::vector<Index> indices(const RaySet& s);
RaySet make_rayset(std::size_t size, const std::vector<Index>& members);

/// Order on ray sets by their sorted index lists (lexicographic).
bool lex_less(const RaySet& a, const RaySet& b);

struct Cone {
  Index lattice_rank = 0;
  std::vector<IntegerVector> rays;        // primitive, duplicate free, all extreme
  Index dim = 0;
  IntegerMatrix span_basis;               // lattice_rank x dim, Z-basis of <sigma> ∩ N
  std::vector<IntegerVector> coords;      // rays in the coordinates of span_basis
  std::vector<RaySet> facets;             // sorted by lex_less
  std::vector<IntegerVector> facet_normals;  // primitive inner normals, intrinsic coordinates

  bool full_dimensional() const { return dim == lattice_rank; }

  /// The same cone inside <sigma> ∩ N ≅ Z^dim.
  Cone intrinsic() const;

  /// Strictly positive against every facet normal (full-dimensional cones).
  bool contains_in_interior(const IntegerVector& x) const;
  bool contains(const IntegerVector& x) const;
};

/// Primitivizes, deduplicates, drops redundant generators, checks strong
/// convexity. Ray order follows first occurrence in the input.
Cone cone_from_rays(const std::vector<IntegerVector>& vectors);

/// Ray sets of all faces of c (local ray indices), including 0 and c itself.
std::vector<RaySet> cone_faces(const Cone& c);

struct Face {
  RaySet rays;
  Index dim = 0;
  IntegerMatrix span_basis;  // lattice_rank x dim, saturated, Hermite-canonical
  SubspaceBasis perp;        // tau^⊥ ⊆ M_Q
};

/// A covering mu ⊂ tau with d_tau = d_mu + 1 and the canonical n_{mu,tau}.
struct Covering {
  Index mu = 0;
  Index tau = 0;
  IntegerVector normal;
};

/// A cone complex: every face, sorted by (dim, ray set), with coverings.
struct FaceLattice {
  Index lattice_rank = 0;
  std::vector<IntegerVector> rays;
  std::vector<Face> faces;
  std::vector<std::vector<Index>> by_dim;
  std::vector<Covering> coverings;
  std::vector<std::vector<Index>> up;    // coverings in which the face is mu
  std::vector<std::vector<Index>> down;  // coverings in which the face is tau

  Index find(const RaySet& s) const;  // -1 if absent
  Index top_dim() const { return static_cast<Index>(by_dim.size()) - 1; }
  std::vector<Index> counts() const;

  /// Facets of a face (faces of one dimension less contained in it).
  std::vector<Index> facets_of(Index face) const;

  /// The subcomplex of faces contained in `face`.
  FaceLattice restrict_to(Index face) const;
};

/// Builds the complex from a family of ray sets closed under taking faces.
FaceLattice build_face_lattice(Index lattice_rank, const std::vector<IntegerVector>& rays,
                               const std::vector<RaySet>& face_sets);

FaceLattice face_lattice(const Cone& c);

/// n_{mu,tau}: vanishes on tau^⊥, maps tau^∨ ∩ mu^⊥ ∩ M onto Z_{>=0};
/// reduced modulo <mu> ∩ N to a canonical representative.
IntegerVector normal_generator(const std::vector<IntegerVector>& rays, const Face& mu, const Face& tau);
IntegerVector normal_generator(const FaceLattice& lattice, Index mu, Index tau);

struct Fan {
  FaceLattice lattice;
  std::vector<Cone> cones;                    // maximal cones
  std::vector<std::vector<Index>> cone_rays;  // global ray indices of each maximal cone
  std::vector<Index> maximal;                 // face index of each maximal cone

  Index lattice_rank() const { return lattice.lattice_rank; }
  const std::vector<IntegerVector>& rays() const { return lattice.rays; }

  /// Every wall in exactly two full-dimensional cones, and random directions
  /// each covered by exactly one cone interior.
  bool is_complete(std::uint64_t seed = 1) const;
};

/// Fan from a ray list and maximal cones given by ray indices. Throws
/// InvalidFan when cones do not meet in common faces or overlap across walls.
Fan make_fan(Index lattice_rank, const std::vector<IntegerVector>& rays,
             const std::vector<std::vector<Index>>& cones);

/// The fan of all faces of a cone.
Fan fan_of_cone(const Cone& c);

/// Cone over c and an apex off the hyperplane N × {0}.
Cone pyramid(const Cone& c, const IntegerVector& apex);

/// Primitive generator of the sum of the rays (interior for full-dim cones).
IntegerVector default_interior_ray(const Cone& c);

/// Strict convexity across every wall for support vectors u (one per maximal cone).
bool is_strictly_convex(const Fan& fan, const std::vector<RationalVector>& u);

struct StarQuotient {
  IntegerVector ray;                  // primitive rho
  IntegerMatrix W;                    // unimodular, W rho = e_n
  Fan fan;                            // E, on N / <rho> of rank n - 1
  std::vector<Rational> alpha;        // divisor coefficients per ray of E
  std::vector<RationalVector> u;      // support vectors per maximal cone of E
  Cone graph_cone;                    // W sigma = {(x, t) : t >= psi(x)}
};

/// Quotient by an interior ray: E has the images of the facets as maximal
/// cones, and psi = max_F u_F has the boundary of sigma as its graph.
StarQuotient star_quotient(const Cone& sigma, const IntegerVector& rho);

}  // namespace toric
