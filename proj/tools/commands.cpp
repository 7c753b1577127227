#include "commands.hpp"

#include "toric/criteria.hpp"
#include "toric/lefschetz.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace toric::cli {

namespace {

Json number(const Integer& x)
{
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return to_string(x);
}

Json vec(const IntegerVector& v)
{
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

Json rationals(const std::vector<Rational>& xs)
{
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

void guard(const InputDocument& doc, const Flags& flags)
{
  if (flags.force) return;
  if (doc.lattice_rank > 8 || doc.rays.size() > 64)
    fail(ErrorCode::ValidationError, "input exceeds lattice rank 8 or 64 rays; pass --force to run anyway");
}

Cone require_cone(const InputDocument& doc, const std::string& command)
{
  if (doc.cones) fail(ErrorCode::ValidationError, "'" + command + "' expects a single cone, not a fan");
  return document_cone(doc);
}

const std::vector<Rational>& require_divisor(const InputDocument& doc)
{
  if (!doc.divisor) fail(ErrorCode::ValidationError, "a divisor is required");
  return *doc.divisor;
}

Json lcdef_command(const InputDocument& doc, const Flags&)
{
  const Cone sigma = require_cone(doc, "lcdef");
  const LcdefReport top = lcdef_cone_report(sigma);
  Json faces = Json::array();
  Index variety = 0;
  for (const auto& s : cone_faces(sigma)) {
    if (s.count() <= 2) continue;  // simplicial
    std::vector<IntegerVector> gens;
    for (Index r : indices(s)) gens.push_back(sigma.rays[static_cast<std::size_t>(r)]);
    const LcdefReport r = lcdef_cone_report(cone_from_rays(gens));
    variety = std::max(variety, r.value);
    faces.push_back({{"rays", indices(s)}, {"dim", r.dim}, {"lcdef", r.value}, {"raw", r.raw}});
  }
  Json out{{"dim", sigma.dim},
           {"lcdef_cone", top.value},
           {"raw", top.raw},
           {"lcdef_variety", variety},
           {"faces", faces}};
  if (!top.diagnostic.empty()) out["diagnostic"] = top.diagnostic;
  return out;
}

Json ishida_command(const InputDocument& doc, const Flags& flags)
{
  std::vector<int> ls;
  Json out;
  if (doc.cones) {
    const Fan fan = document_fan(doc);
    const int n = static_cast<int>(fan.lattice_rank());
    if (flags.l) ls = {*flags.l};
    else for (int l = 0; l <= n; ++l) ls.push_back(l);
    out["kind"] = "fan";
    Json rows = Json::object();
    for (int l : ls) rows[std::to_string(l)] = cohomology(ishida_fan(fan, l));
    out["cohomology"] = rows;
    return out;
  }
  const Cone sigma = document_cone(doc);
  if (flags.l) ls = {*flags.l};
  else for (int l = 0; l <= sigma.dim; ++l) ls.push_back(l);
  const FaceLattice L = face_lattice(sigma.intrinsic());
  out["kind"] = "cone";
  out["dim"] = sigma.dim;
  Json rows = Json::object();
  for (int l : ls) {
    if (l < 0 || l > sigma.dim) fail(ErrorCode::ValidationError, "--l must lie in 0..dim");
    rows[std::to_string(l)] = cohomology(ishida_complex(L, l));
  }
  out["cohomology"] = rows;
  return out;
}

Json hodge_command(const InputDocument& doc, const Flags&)
{
  const Fan fan = document_fan(doc);
  Json out{{"rank", fan.lattice_rank()}, {"h", hodge_table(fan)}};
  bool simplicial = true;
  for (const auto& c : fan.cones) simplicial = simplicial && static_cast<Index>(c.rays.size()) == c.dim;
  if (simplicial) out["betti_from_face_counts"] = h_vector_betti(fan);
  return out;
}

Json lefschetz_command(const InputDocument& doc, const Flags& flags)
{
  const Fan fan = document_fan(doc);
  const DivisorData D = support_data(fan, require_divisor(doc));
  const int n = static_cast<int>(fan.lattice_rank());
  Json maps = Json::array();
  for (int p = 0; p < n; ++p) {
    if (flags.p && *flags.p != p) continue;
    const LiftedSequence ses = lifted_complex(fan, D, p);
    for (int l = 0; l <= p; ++l) {
      if (flags.l && *flags.l != l) continue;
      const RationalMatrix delta = connecting_map(ses, l);
      maps.push_back({{"p", p},
                      {"l", l},
                      {"source_dim", delta.cols()},
                      {"target_dim", delta.rows()},
                      {"rank", delta.size() == 0 ? 0 : rank<Rational>(delta)}});
    }
  }
  if (maps.empty()) fail(ErrorCode::ValidationError, "need 0 <= l <= p < rank");
  Json u = Json::array();
  for (const auto& v : D.u) {
    Json row = Json::array();
    for (Index i = 0; i < v.size(); ++i) row.push_back(to_string(v(i)));
    u.push_back(row);
  }
  return {{"C", number(D.C)},
          {"support", u},
          {"strictly_convex", is_strictly_convex(fan, D.u)},
          {"connecting_maps", maps}};
}

Json subdivide_command(const InputDocument& doc, const Flags&)
{
  const Cone sigma = require_cone(doc, "subdivide");
  const IntegerVector rho = doc.interior_ray ? *doc.interior_ray : default_interior_ray(sigma);
  const StarQuotient q = star_quotient(sigma, rho);
  Json rays = Json::array();
  for (const auto& r : q.fan.rays()) rays.push_back(vec(r));
  Json les = Json::array();
  bool exact = true;
  for (const auto& r : les_theorem(sigma, rho)) {
    exact = exact && r.exact;
    Json node{{"l", r.l},
              {"exceptional_l", r.exceptional_l},
              {"exceptional_l_minus_1", r.exceptional_lm1},
              {"cone", r.cone},
              {"connecting_rank", r.connecting_rank},
              {"exact", r.exact}};
    if (!r.failure.empty()) node["failure"] = r.failure;
    les.push_back(node);
  }
  Json out{{"ray", vec(q.ray)},
           {"exceptional_fan", {{"rank", q.fan.lattice_rank()}, {"rays", rays}, {"cones", q.fan.cone_rays}}},
           {"divisor", rationals(q.alpha)},
           {"les", les},
           {"les_exact", exact}};
  if (sigma.dim == 4 && sigma.full_dimensional()) {
    const auto r = lcdef4_via_exceptional(sigma, rho);
    out["lcdef4"] = {{"h2_exceptional", r.h2}, {"lcdef", r.lcdef_one ? 1 : 0}};
  }
  return out;
}

Json pyramid_command(const InputDocument& doc, const Flags&)
{
  const Cone sigma = require_cone(doc, "pyramid");
  if (!doc.apex) fail(ErrorCode::ValidationError, "an apex is required");
  const Cone p = pyramid(sigma, *doc.apex);
  Json rays = Json::array();
  for (const auto& r : p.rays) rays.push_back(vec(r));
  const Index a = lcdef_variety(sigma), b = lcdef_variety(p);
  return {{"pyramid_rays", rays}, {"lcdef_variety", a}, {"lcdef_variety_pyramid", b}, {"equal", a == b}};
}

Json verdict_json(const CriterionVerdict& v)
{
  Json out{{"criterion", v.criterion}, {"verdict", verdict_name(v.verdict)}};
  if (v.criterion == "euler") out["counts"] = v.counts;
  if (!v.shelling.empty()) out["shelling"] = v.shelling;
  if (v.ray >= 0) out["ray"] = v.ray;
  return out;
}

Json criteria_command(const InputDocument& doc, const Flags& flags)
{
  const Cone sigma = require_cone(doc, "criteria");
  return {{"verdicts",
           {verdict_json(euler_criterion(sigma)), verdict_json(shelling_ray_criterion(sigma, flags.budget, flags.seed)),
            verdict_json(simplicial_star_criterion(sigma))}}};
}

// -- verify ------------------------------------------------------------------

struct Checks {
  Json list = Json::array();
  Json facts = Json::object();
  bool ok = true;

  void add(const std::string& name, bool passed, const std::string& detail = "")
  {
    Json c{{"check", name}, {"ok", passed}};
    if (!detail.empty()) c["detail"] = detail;
    list.push_back(c);
    ok = ok && passed;
  }

  // runs f, turning a thrown Error into a failed check
  void guarded(const std::string& name, const std::function<bool()>& f)
  {
    try {
      add(name, f());
    } catch (const Error& e) {
      add(name, false, e.what());
    }
  }
};

void verify_cone(const Cone& sigma, const Flags& flags, Checks& checks)
{
  const Cone c = sigma.intrinsic();
  const FaceLattice L = face_lattice(c);
  const Index d = c.dim;
  checks.guarded("d_squared_zero", [&] {
    for (int l = 0; l <= d; ++l) ishida_complex(L, l);
    return true;
  });
  checks.guarded("representative_independence", [&] {
    std::mt19937_64 rng(flags.seed);
    std::uniform_int_distribution<long> shift(-3, 3);
    std::vector<IntegerVector> shifted;
    for (const auto& cov : L.coverings) {
      IntegerVector n = cov.normal;
      for (Index r : indices(L.faces[static_cast<std::size_t>(cov.mu)].rays))
        n += L.rays[static_cast<std::size_t>(r)] * Integer(shift(rng));
      shifted.push_back(n);
    }
    for (int l = 1; l <= d; ++l)
      if (ishida_complex(L, l).differentials != ishida_complex(L, l, shifted).differentials) return false;
    return true;
  });
  checks.guarded("graded_pieces", [&] {
    for (const auto& f : L.faces)
      for (int l = 0; l <= d; ++l)
        if (cohomology(graded_piece(c, l, f.rays)) != graded_piece_prediction(c, l, f.rays)) return false;
    return true;
  });
  const LcdefReport r = lcdef_cone_report(c);
  checks.add("vanishing_band", [&] {
    for (Index p = (d + 1) / 2; p <= d; ++p)
      if (r.table.at(p, p) != 0) return false;
    return true;
  }());
  checks.add("lcdef_bounds", r.value >= 0 && r.value <= std::max<Index>(0, d - 3));
  checks.guarded("line_shelling", [&] { return is_shelling(c, line_shelling(c, flags.seed)); });
  if (d == 4) {
    checks.guarded("euler_identity", [&] {
      euler_criterion(c);
      return true;
    });
    checks.guarded("criteria_sound", [&] {
      const Index lv = lcdef_variety(c);
      for (const auto& v : {euler_criterion(c), shelling_ray_criterion(c, flags.budget, flags.seed), simplicial_star_criterion(c)}) {
        if (v.verdict == Verdict::ForcesLcdef0 && lv != 0) return false;
        if (v.verdict == Verdict::ForcesLcdef1 && lv != 1) return false;
      }
      return true;
    });
  }
  if (d >= 2) {
    checks.guarded("les_exact", [&] {
      for (const auto& node : les_theorem(c, default_interior_ray(c)))
        if (!node.exact) return false;
      return true;
    });
  }
}

void verify_fan(const InputDocument& doc, const Fan& fan, const Flags& flags, Checks& checks)
{
  const int n = static_cast<int>(fan.lattice_rank());
  checks.guarded("d_squared_zero", [&] {
    for (int l = 0; l <= n; ++l) ishida_fan(fan, l);
    return true;
  });
  const bool complete = fan.is_complete(flags.seed + 1);
  bool simplicial = true;
  for (const auto& c : fan.cones) simplicial = simplicial && static_cast<Index>(c.rays.size()) == c.dim;
  checks.facts["complete"] = complete;
  checks.facts["simplicial"] = simplicial;
  if (complete && simplicial)
    checks.guarded("hodge_oracle", [&] {
      const HodgeTable h = hodge_table(fan);
      const auto betti = h_vector_betti(fan);
      for (int k = 0; k <= 2 * n; ++k) {
        Index sum = 0;
        for (int p = 0; p <= n; ++p)
          if (k - p >= 0 && k - p <= n) sum += h[static_cast<std::size_t>(p)][static_cast<std::size_t>(k - p)];
        if (sum != betti[static_cast<std::size_t>(k)]) return false;
      }
      return true;
    });
  if (!doc.divisor) return;
  const DivisorData D = support_data(fan, *doc.divisor);
  checks.guarded("lifted_sequences", [&] {
    for (int p = 0; p < n; ++p) lifted_complex(fan, D, p);
    return true;
  });
  checks.guarded("scaling", [&] {
    std::vector<Rational> scaled;
    for (const auto& a : D.alpha) scaled.push_back(a * Rational(D.C));
    const DivisorData CD = support_data(fan, scaled);
    for (int p = 0; p < n; ++p)
      for (int l = 0; l <= p; ++l)
        if (connecting_map(fan, CD, p, l) != connecting_map(fan, D, p, l) * Rational(D.C)) return false;
    return true;
  });
  const bool ample = complete && is_strictly_convex(fan, D.u);
  checks.facts["ample"] = ample;
  if (ample)
    checks.guarded("hard_lefschetz", [&] { return hard_lefschetz_injectivity_check(fan, D).ok; });
}

Json verify_command(const InputDocument& doc, const Flags& flags)
{
  Checks checks;
  if (doc.cones || doc.divisor) verify_fan(doc, document_fan(doc), flags, checks);
  else verify_cone(document_cone(doc), flags, checks);
  Json out = checks.facts;
  out["checks"] = checks.list;
  out["ok"] = checks.ok;
  return out;
}

using Handler = Json (*)(const InputDocument&, const Flags&);

const std::map<std::string, Handler>& handlers()
{
  static const std::map<std::string, Handler> table{
      {"lcdef", lcdef_command},   {"ishida", ishida_command},       {"hodge", hodge_command},
      {"lefschetz", lefschetz_command}, {"subdivide", subdivide_command}, {"pyramid", pyramid_command},
      {"criteria", criteria_command}, {"verify", verify_command}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names()
{
  static const std::vector<std::string> names{"lcdef", "ishida", "hodge", "lefschetz", "subdivide", "pyramid", "criteria", "verify"};
  return names;
}

Json run(const std::string& command, const InputDocument& doc, const Flags& flags)
{
  const auto it = handlers().find(command);
  if (it == handlers().end()) fail(ErrorCode::ValidationError, "unknown command '" + command + "'");
  guard(doc, flags);
  const auto start = std::chrono::steady_clock::now();
  Json body = it->second(doc, flags);
  Json report{{"command", command}, {"seed", flags.seed}, {"input", Json::parse(serialize(normalize(doc)))}};
  if (!body.contains("ok")) report["ok"] = true;
  for (auto& [k, v] : body.items()) report[k] = v;
  if (flags.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// -- tables ------------------------------------------------------------------

namespace {

std::string cell(const Json& v)
{
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_grid(const Json& v)
{
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& r) {
    return r.is_array() && std::all_of(r.begin(), r.end(), [](const Json& x) { return x.is_primitive(); });
  });
}

bool is_records(const Json& v)
{
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& r) { return r.is_object(); });
}

void print_rows(std::ostringstream& os, const std::vector<std::vector<std::string>>& rows)
{
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    os << "  ";
    for (std::size_t i = 0; i < r.size(); ++i) os << std::string(width[i] - r[i].size(), ' ') << r[i] << (i + 1 < r.size() ? "  " : "");
    os << '\n';
  }
}

void render(std::ostringstream& os, const std::string& name, const Json& v)
{
  if (is_grid(v)) {
    os << name << ":\n";
    std::vector<std::vector<std::string>> rows;
    std::size_t i = 0;
    for (const auto& r : v) {
      std::vector<std::string> row{std::to_string(i++) + " |"};
      for (const auto& x : r) row.push_back(cell(x));
      rows.push_back(row);
    }
    print_rows(os, rows);
  } else if (is_records(v)) {
    os << name << ":\n";
    std::vector<std::string> keys;
    for (const auto& r : v)
      for (const auto& [k, x] : r.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    std::vector<std::vector<std::string>> rows{keys};
    for (const auto& r : v) {
      std::vector<std::string> row;
      for (const auto& k : keys) row.push_back(r.contains(k) ? cell(r[k]) : "");
      rows.push_back(row);
    }
    print_rows(os, rows);
  } else if (v.is_object() && name != "input") {
    for (const auto& [k, x] : v.items()) render(os, name + "." + k, x);
  } else {
    os << name << ": " << cell(v) << '\n';
  }
}

}  // namespace

std::string render_table(const Json& report)
{
  std::ostringstream os;
  for (const auto& [k, v] : report.items())
    if (k != "input") render(os, k, v);
  return os.str();
}

}  // namespace toric::cli
