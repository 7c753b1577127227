#pragma once

// Structural identities checked by both the unit tests and the acceptance run.

#include "toric/lefschetz.hpp"

namespace toric::testing {

/// v ∈ <face> ∩ N (the span is saturated and v integral).
inline bool in_span(const IntegerVector& v, const Face& f)
{
  if (f.dim == 0) return v.isZero();
  IntegerMatrix m(v.size(), f.dim + 1);
  m << f.span_basis, v;
  return rank(m) == f.dim;
}

/// For mu ⊂ tau of codimension 2 there are exactly two faces lambda in
/// between, and the two composite contractions cancel in every wedge degree.
inline bool diamonds_anticommute(const FaceLattice& L)
{
  for (std::size_t t = 0; t < L.faces.size(); ++t)
    for (Index c1 : L.down[t]) {
      const Covering& top1 = L.coverings[static_cast<std::size_t>(c1)];
      for (Index c0 : L.down[static_cast<std::size_t>(top1.mu)]) {
        const auto mu = static_cast<std::size_t>(L.coverings[static_cast<std::size_t>(c0)].mu);
        std::vector<std::pair<Index, Index>> paths;  // (mu -> lambda, lambda -> tau) coverings
        for (Index a : L.up[mu])
          for (Index b : L.down[t])
            if (L.coverings[static_cast<std::size_t>(a)].tau == L.coverings[static_cast<std::size_t>(b)].mu) paths.emplace_back(a, b);
        if (paths.size() != 2) return false;
        for (int k = 2; k <= L.faces[mu].perp.dim(); ++k) {
          RationalMatrix sum;
          for (const auto& [a, b] : paths) {
            const Covering& ca = L.coverings[static_cast<std::size_t>(a)];
            const Covering& cb = L.coverings[static_cast<std::size_t>(b)];
            const auto lam = static_cast<std::size_t>(ca.tau);
            const RationalMatrix m = contraction_matrix(cb.normal, L.faces[lam].perp, L.faces[t].perp, k - 1) *
                                     contraction_matrix(ca.normal, L.faces[mu].perp, L.faces[lam].perp, k);
            sum = sum.size() == 0 ? m : RationalMatrix(sum + m);
          }
          if (!sum.isZero()) return false;
        }
      }
    }
  return true;
}

/// a_tau n_{tau^,tau~} ≡ e, n_{mu,tau} ≡ n_{mu~,tau~} and
/// a_mu n_{mu^,tau^} ≡ a_tau n_{mu~,tau~}, all modulo <mu~> (resp. <tau^>).
inline bool lift_identities_hold(const Fan& f, const std::vector<Rational>& alpha)
{
  const DivisorData D = support_data(f, alpha);
  const LiftedFaces L = lifted_faces(f, alpha);
  const Index n1 = f.lattice_rank() + 1;
  IntegerVector e = IntegerVector::Zero(n1);
  e(n1 - 1) = 1;
  auto face = [&](Index i) -> const Face& { return L.total.faces[static_cast<std::size_t>(i)]; };
  for (std::size_t t = 0; t < f.lattice.faces.size(); ++t) {
    if (D.a[t] < 1) return false;
    const IntegerVector n = normal_generator(L.total, L.hat[t], L.tilde[t]);
    if (!in_span(IntegerVector(n * D.a[t] - e), face(L.hat[t]))) return false;
  }
  for (const auto& cov : f.lattice.coverings) {
    const auto mu = static_cast<std::size_t>(cov.mu), tau = static_cast<std::size_t>(cov.tau);
    IntegerVector lifted = IntegerVector::Zero(n1);
    lifted.head(n1 - 1) = cov.normal;
    const IntegerVector tilde = normal_generator(L.total, L.tilde[mu], L.tilde[tau]);
    const IntegerVector hat = normal_generator(L.total, L.hat[mu], L.hat[tau]);
    if (!in_span(IntegerVector(lifted - tilde), face(L.tilde[mu]))) return false;
    if (!in_span(IntegerVector(hat * D.a[mu] - tilde * D.a[tau]), face(L.tilde[mu]))) return false;
  }
  return true;
}

}  // namespace toric::testing
