#pragma once

// Fixtures and random generators shared by the unit tests and the acceptance run.

#include "toric/document.hpp"
#include "toric/polyhedral.hpp"

#include <random>
#include <string>

#ifndef TORIC_FIXTURE_DIR
#define TORIC_FIXTURE_DIR "fixtures"
#endif

namespace toric::testing {

inline std::string fixture_path(const std::string& name) { return std::string(TORIC_FIXTURE_DIR) + "/" + name; }

inline Cone fixture_cone(const std::string& name) { return document_cone(read_document(fixture_path(name))); }

inline Cone cone_A() { return fixture_cone("paper_cone_A.txt"); }
inline Cone cone_B() { return fixture_cone("paper_cone_B.txt"); }
inline Cone cone_13() { return fixture_cone("paper_cone_13.txt"); }

inline Cone cone_of(std::initializer_list<std::initializer_list<long>> rays)
{
  std::vector<IntegerVector> v;
  for (const auto& r : rays) v.push_back(make_vector(r));
  return cone_from_rays(v);
}

inline Cone orthant(Index n)
{
  std::vector<IntegerVector> v;
  for (Index i = 0; i < n; ++i) {
    IntegerVector e = IntegerVector::Zero(n);
    e(i) = 1;
    v.push_back(e);
  }
  return cone_from_rays(v);
}

/// Cone over the unit square at height 1.
inline Cone square_cone() { return cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}); }

/// Cone over a square pyramid with a tetrahedron glued on one triangle; the
/// glued vertex (1,0,1) is ray 5.
inline Cone glued_pyramid_cone()
{
  return cone_of({{1, 1, 0, 1}, {1, -1, 0, 1}, {-1, -1, 0, 1}, {-1, 1, 0, 1}, {0, 0, 2, 1}, {1, 0, 1, 1}});
}

/// Cone over the cube [-1,1]^3 at height 1.
inline Cone cube_cone()
{
  return cone_of({{1, 1, 1, 1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, -1, -1, 1},
                  {-1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, 1}});
}

/// Full-dimensional cone in Z^d generated by k vectors (v, h) with h >= 1.
inline Cone random_cone(std::mt19937_64& rng, Index d, Index k, long spread = 3)
{
  std::uniform_int_distribution<long> coord(-spread, spread), height(1, 3);
  for (;;) {
    std::vector<IntegerVector> gens;
    for (Index i = 0; i < k; ++i) {
      IntegerVector v(d);
      for (Index j = 0; j + 1 < d; ++j) v(j) = coord(rng);
      v(d - 1) = height(rng);
      gens.push_back(v);
    }
    Cone c = cone_from_rays(gens);
    if (c.full_dimensional()) return c;
  }
}

struct FanWithDivisor {
  Fan fan;
  std::vector<Rational> alpha;
};

inline Fan fan_of(Index n, std::initializer_list<std::initializer_list<long>> rays,
                  std::vector<std::vector<Index>> cones)
{
  std::vector<IntegerVector> v;
  for (const auto& r : rays) v.push_back(make_vector(r));
  return make_fan(n, v, cones);
}

inline Fan p1_fan() { return fan_of(1, {{1}, {-1}}, {{0}, {1}}); }
inline Fan p2_fan() { return fan_of(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }
inline Fan p1xp1_fan() { return fan_of(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
/// Weighted projective plane P(1,1,2): rays e1, -e1-2e2 (weight 1) and e2 (weight 2).
inline Fan p112_fan() { return fan_of(2, {{1, 0}, {-1, -2}, {0, 1}}, {{0, 2}, {2, 1}, {1, 0}}); }

/// Face fan of a random simplicial polytope with primitive vertices and the
/// origin in its interior; alpha = 1 on every ray is ample (psi is the gauge).
inline FanWithDivisor random_complete_simplicial_fan(std::mt19937_64& rng, Index n, Index points = 0)
{
  std::uniform_int_distribution<long> coord(-3, 3);
  if (points == 0) points = n + 2 + static_cast<Index>(rng() % 4);
  for (;;) {
    std::vector<IntegerVector> lifted;
    for (Index i = 0; i < points; ++i) {
      IntegerVector p(n);
      for (Index j = 0; j < n; ++j) p(j) = coord(rng);
      if (p.isZero() || content(p) != 1) {
        --i;
        continue;
      }
      IntegerVector q(n + 1);
      q.head(n) = p;
      q(n) = 1;
      lifted.push_back(q);
    }
    Cone hull;
    try {
      hull = cone_from_rays(lifted);
    } catch (const Error&) {
      continue;
    }
    if (!hull.full_dimensional()) continue;
    IntegerVector apex = IntegerVector::Zero(n + 1);
    apex(n) = 1;
    if (!hull.contains_in_interior(apex)) continue;
    bool simplicial = true;
    for (const auto& f : hull.facets)
      if (static_cast<Index>(f.count()) != n) simplicial = false;
    if (!simplicial) continue;
    std::vector<IntegerVector> rays;
    for (const auto& r : hull.rays) rays.push_back(IntegerVector(r.head(n)));
    std::vector<std::vector<Index>> cones;
    for (const auto& f : hull.facets) cones.push_back(indices(f));
    FanWithDivisor out{make_fan(n, rays, cones), std::vector<Rational>(rays.size(), Rational(1))};
    return out;
  }
}

}  // namespace toric::testing
