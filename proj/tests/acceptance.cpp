// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "properties.hpp"
#include "support.hpp"
#include "toric/criteria.hpp"
#include "toric/lefschetz.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace toric;
using namespace toric::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  // records a failed expectation without stopping the criterion
  void expect(bool cond, const std::string& what)
  {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body)
{
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  failures += !out.ok;
  std::cout << (out.ok ? "PASS" : "FAIL") << "  " << id << "  " << title << " — " << out.detail.str() << " ("
            << std::fixed << std::setprecision(1) << seconds_since(start) << " s)" << std::endl;
}

std::vector<Rational> ones(std::size_t n, long v = 1) { return std::vector<Rational>(n, Rational(v)); }

struct FanCase {
  std::string name;
  Fan fan;
  std::vector<Rational> alpha;
};

std::vector<FanCase> fan_fixtures()
{
  std::vector<FanCase> out{{"P1", p1_fan(), {Rational(1), Rational(0)}},
                           {"P2", p2_fan(), ones(3)},
                           {"P1xP1", p1xp1_fan(), {Rational(1, 2), Rational(1, 3), Rational(0), Rational(1)}},
                           {"P(1,1,2)", p112_fan(), ones(3)}};
  for (const auto& [name, c] : std::vector<std::pair<std::string, Cone>>{{"E(A)", cone_A()}, {"E(B)", cone_B()}, {"E(13)", cone_13()}}) {
    const StarQuotient q = star_quotient(c, default_interior_ray(c));
    out.push_back({name, q.fan, q.alpha});
  }
  return out;
}

std::vector<std::pair<std::string, Cone>> cone_fixtures()
{
  return {{"A", cone_A()},          {"B", cone_B()},       {"13-ray", cone_13()},  {"glued pyramid", glued_pyramid_cone()},
          {"cube", cube_cone()},    {"orthant4", orthant(4)}, {"square", square_cone()}};
}

IntegerVector second_interior_ray(const Cone& c)
{
  IntegerVector s = IntegerVector::Zero(c.lattice_rank);
  for (const auto& r : c.rays) s += r;
  for (Integer k = 2;; ++k) {
    const IntegerVector v = primitive(IntegerVector(s + c.rays[0] * k));
    if (v != default_interior_ray(c)) return v;
  }
}

}  // namespace

int main()
{
  criterion(1, "14-ray pair: lcdef_variety(A) = 1, lcdef_variety(B) = 0", [](Outcome& o) {
    for (const auto& [c, want] : {std::pair{cone_A(), Index(1)}, std::pair{cone_B(), Index(0)}}) {
      const auto t = Clock::now();
      const Index got = lcdef_variety(c);
      const double s = seconds_since(t);
      o.expect(got == want, "lcdef_variety " + std::to_string(got) + " != " + std::to_string(want));
      o.expect(s < 120, "over 2 minutes");
      o.detail << (want ? "A = " : ", B = ") << got << " in " << std::setprecision(2) << s << " s";
    }
  });

  criterion(2, "13-ray cone: counts (13,24,13), H^1 = H^2 = 1 for Ish^3, lcdef 1, two criteria inconclusive", [](Outcome& o) {
    const Cone c = cone_13();
    const FaceLattice L = face_lattice(c);
    const auto n = L.counts();
    o.expect(n[1] == 13 && n[2] == 24 && n[3] == 13, "face counts");
    const auto h = cohomology(ishida_complex(L, 3));
    o.expect(h[1] == 1 && h[2] == 1, "Ish^3 cohomology");
    o.expect(lcdef_cone(c) == 1, "lcdef");
    o.expect(euler_criterion(c).verdict == Verdict::Inconclusive, "euler criterion applies");
    o.expect(simplicial_star_criterion(c).verdict == Verdict::Inconclusive, "simplicial-star criterion applies");
    o.detail << "counts (" << n[1] << "," << n[2] << "," << n[3] << "), H^1 = " << h[1] << ", H^2 = " << h[2];
  });

  criterion(3, "lcdef4 via the exceptional divisor agrees with lcdef_variety, for two interior rays", [](Outcome& o) {
    std::vector<Cone> cones{cone_A(), cone_B(), cone_13()};
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 20; ++t) cones.push_back(random_cone(rng, 4, 5 + t % 4));
    int ones = 0;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const Cone& c = cones[i];
      const Index lv = lcdef_variety(c);
      ones += lv == 1;
      for (const IntegerVector& rho : {default_interior_ray(c), second_interior_ray(c)}) {
        const auto r = lcdef4_via_exceptional(c, rho);
        o.expect((r.lcdef_one ? 1 : 0) == lv, "cone " + std::to_string(i) + " ray " + to_string(rho));
      }
    }
    o.detail << cones.size() << " cones (" << ones << " with lcdef 1), 2 rays each";
  });

  criterion(4, "LES for cone A, rho = (0,0,0,1): exact; H^2(Ish^3) = 1 = kernel on a 2-dim H^2(Ish^2_E)", [](Outcome& o) {
    const auto les = les_theorem(cone_A(), make_vector({0, 0, 0, 1}));
    for (const auto& r : les) o.expect(r.exact, "node l = " + std::to_string(r.l) + ": " + r.failure);
    const auto& r3 = les.at(3);
    const Index src = r3.exceptional_lm1.at(2), rk = r3.connecting_rank.at(2);
    o.expect(src == 2, "dim H^2(Ish^2_E) = " + std::to_string(src));
    o.expect(rk < src, "connecting map has full rank");
    o.expect(r3.exceptional_l.at(2) == 0 && r3.cone.at(2) == src - rk && r3.cone.at(2) == 1, "H^2(Ish^3_sigma)");
    o.detail << les.size() << " exact rows; H^2(Ish^2_E) = " << src << ", rank " << rk << ", H^2(Ish^3) = " << r3.cone.at(2);
  });

  criterion(5, "pyramid invariance on 50 random cones of dimension 3-5", [](Outcome& o) {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> coord(-3, 3), height(1, 3);
    int ones = 0;
    const auto start = Clock::now();
    for (int t = 0; t < 50; ++t) {
      const Index d = 3 + t % 3;
      const Cone c = random_cone(rng, d, d + 1 + t % 2);
      IntegerVector apex(d + 1);
      for (Index j = 0; j < d; ++j) apex(j) = coord(rng);
      apex(d) = height(rng);
      const Index a = lcdef_variety(c), b = lcdef_variety(pyramid(c, apex));
      ones += a > 0;
      o.expect(a == b, "cone " + std::to_string(t));
    }
    o.expect(seconds_since(start) < 600, "over 10 minutes");
    o.detail << "50 pairs equal (" << ones << " with positive lcdef)";
  });

  criterion(6, "structural identities on every fixture", [](Outcome& o) {
    int checks = 0;
    for (const auto& [name, c0] : cone_fixtures()) {
      const Cone c = c0.intrinsic();
      const FaceLattice L = face_lattice(c);
      for (int l = 0; l <= c.dim; ++l) ishida_complex(L, l);  // d² = 0 is checked on construction
      o.expect(diamonds_anticommute(L), name + ": diamond");
      std::mt19937_64 rng(6);
      std::uniform_int_distribution<long> shift(-4, 4);
      std::vector<IntegerVector> shifted;
      for (const auto& cov : L.coverings) {
        IntegerVector n = cov.normal;
        for (Index r : indices(L.faces[static_cast<std::size_t>(cov.mu)].rays))
          n += L.rays[static_cast<std::size_t>(r)] * Integer(shift(rng));
        shifted.push_back(n);
      }
      for (int l = 1; l <= c.dim; ++l)
        o.expect(ishida_complex(L, l).differentials == ishida_complex(L, l, shifted).differentials, name + ": representatives");
      for (const auto& f : L.faces)
        for (int l = 0; l <= c.dim; ++l)
          o.expect(cohomology(graded_piece(c, l, f.rays)) == graded_piece_prediction(c, l, f.rays), name + ": graded piece");
      checks += 4;
    }
    for (const auto& fc : fan_fixtures()) {
      const int n = static_cast<int>(fc.fan.lattice_rank());
      for (int l = 0; l <= n; ++l) ishida_fan(fc.fan, l);
      o.expect(diamonds_anticommute(fc.fan.lattice), fc.name + ": diamond");
      const DivisorData D = support_data(fc.fan, fc.alpha);
      for (int p = 0; p < n; ++p) lifted_complex(fc.fan, D, p);  // termwise exactness and chain squares
      o.expect(lift_identities_hold(fc.fan, fc.alpha), fc.name + ": lift identities");
      std::vector<Rational> scaled;
      for (const auto& a : fc.alpha) scaled.push_back(a * Rational(D.C));
      const DivisorData CD = support_data(fc.fan, scaled);
      for (int p = 0; p < n; ++p)
        for (int l = 0; l <= p; ++l)
          o.expect(connecting_map(fc.fan, CD, p, l) == connecting_map(fc.fan, D, p, l) * Rational(D.C), fc.name + ": scaling");
      checks += 5;
    }
    o.detail << checks << " identity groups over " << cone_fixtures().size() << " cones and " << fan_fixtures().size() << " fans";
  });

  criterion(7, "vanishing H^p(Ish^p) = 0 for p >= d/2 and 0 <= lcdef <= max(0, d-3)", [](Outcome& o) {
    std::vector<Cone> cones;
    for (const auto& [name, c] : cone_fixtures()) cones.push_back(c);
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) {
      const Index d = 2 + t % 4;
      cones.push_back(random_cone(rng, d, d + t % 4));
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const LcdefReport r = lcdef_cone_report(cones[i]);
      const Index d = r.dim;
      for (Index p = (d + 1) / 2; p <= d; ++p) o.expect(r.table.at(p, p) == 0, "cone " + std::to_string(i) + " vanishing");
      o.expect(r.value >= 0 && r.value <= std::max<Index>(0, d - 3), "cone " + std::to_string(i) + " bounds");
    }
    o.detail << cones.size() << " cones";
  });

  criterion(8, "Hodge tables match the face-count Betti oracle", [](Outcome& o) {
    std::vector<Fan> fans{p2_fan(), p1xp1_fan(), p112_fan()};
    std::mt19937_64 rng(88);
    for (int t = 0; t < 10; ++t) fans.push_back(random_complete_simplicial_fan(rng, 2 + t % 2).fan);
    for (std::size_t i = 0; i < fans.size(); ++i) {
      const HodgeTable h = hodge_table(fans[i]);
      const auto betti = h_vector_betti(fans[i]);
      const auto n = static_cast<std::size_t>(fans[i].lattice_rank());
      for (std::size_t k = 0; k <= 2 * n; ++k) {
        Index sum = 0;
        for (std::size_t p = 0; p <= n; ++p)
          if (k >= p && k - p <= n) sum += h[p][k - p];
        o.expect(sum == betti[k], "fan " + std::to_string(i) + " b_" + std::to_string(k));
      }
    }
    o.detail << fans.size() << " fans";
  });

  criterion(9, "hard Lefschetz injectivity for strictly convex divisors", [](Outcome& o) {
    std::vector<FanCase> cases = fan_fixtures();
    cases.push_back({"P1xP1 ample", p1xp1_fan(), ones(4)});
    std::mt19937_64 rng(99);
    for (int t = 0; t < 6; ++t) {
      auto r = random_complete_simplicial_fan(rng, 2 + t % 2);
      cases.push_back({"random " + std::to_string(t), r.fan, r.alpha});
    }
    int checked = 0;
    for (const auto& fc : cases) {
      if (!fc.fan.is_complete()) continue;
      const DivisorData D = support_data(fc.fan, fc.alpha);
      if (!is_strictly_convex(fc.fan, D.u)) continue;
      ++checked;
      o.expect(hard_lefschetz_injectivity_check(fc.fan, D).ok, fc.name);
    }
    o.expect(checked >= 8, "too few ample cases");
    o.detail << checked << " ample fan/divisor pairs";
  });

  criterion(10, "Euler identity dim H^2(Ish^3) - dim H^1(Ish^3) = f - v in dimension 4", [](Outcome& o) {
    std::vector<Cone> cones;
    for (const auto& [name, c] : cone_fixtures())
      if (c.dim == 4) cones.push_back(c);
    std::mt19937_64 rng(1010);
    for (int t = 0; t < 50; ++t) cones.push_back(random_cone(rng, 4, 5 + t % 5));
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const FaceLattice L = face_lattice(cones[i].intrinsic());
      const auto n = L.counts();
      const auto h = cohomology(ishida_complex(L, 3));
      o.expect(h[2] - h[1] == n[3] - n[1], "cone " + std::to_string(i));
    }
    o.detail << cones.size() << " cones";
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
