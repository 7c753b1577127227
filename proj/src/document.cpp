#include "toric/document.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace toric {

using nlohmann::json;

namespace {

Integer parse_integer(std::string_view s)
{
  std::string t(s);
  const auto b = t.find_first_not_of(" \t");
  const auto e = t.find_last_not_of(" \t");
  if (b == std::string::npos) fail(ErrorCode::ParseError, "empty number");
  t = t.substr(b, e - b + 1);
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) fail(ErrorCode::ParseError, "malformed integer '" + t + "'");
  for (std::size_t k = i; k < t.size(); ++k)
    if (t[k] < '0' || t[k] > '9') fail(ErrorCode::ParseError, "malformed integer '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t);
}

Integer integer_of(const json& j)
{
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  fail(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Rational rational_of(const json& j)
{
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorCode::ParseError, "expected a rational (integer or \"p/q\" string), got " + j.dump());
}

IntegerVector vector_of(const json& j)
{
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array of integers, got " + j.dump());
  IntegerVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integer_of(j[i]);
  return v;
}

json json_of(const Integer& x)
{
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return json(x.convert_to<long long>());
  return json(x.str());
}

json json_of(const IntegerVector& v)
{
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(json_of(v(i)));
  return a;
}

json json_of(const Rational& q)
{
  if (boost::multiprecision::denominator(q) == 1) return json_of(Integer(boost::multiprecision::numerator(q)));
  return json(q.str());
}

void validate(const InputDocument& d)
{
  for (const auto& r : d.rays)
    if (r.size() != d.lattice_rank) fail(ErrorCode::ValidationError, "ray " + to_string(r) + " does not have length lattice_rank");
  if (d.cones)
    for (const auto& c : *d.cones)
      for (Index i : c)
        if (i < 0 || static_cast<std::size_t>(i) >= d.rays.size())
          fail(ErrorCode::ValidationError, "cone index " + std::to_string(i) + " out of range");
  if (d.divisor && d.divisor->size() != d.rays.size())
    fail(ErrorCode::ValidationError, "divisor needs one coefficient per ray");
  if (d.interior_ray && d.interior_ray->size() != d.lattice_rank)
    fail(ErrorCode::ValidationError, "interior_ray does not have length lattice_rank");
  if (d.apex && d.apex->size() != d.lattice_rank + 1)
    fail(ErrorCode::ValidationError, "apex must have length lattice_rank + 1");
}

InputDocument parse_plain(std::string_view text)
{
  InputDocument d;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<Integer> entries;
    std::string tok;
    while (ls >> tok) {
      // tolerate "(1, 0, 2)" style punctuation
      std::string clean;
      for (char ch : tok)
        if (ch != '(' && ch != ')' && ch != ',') clean += ch;
      if (!clean.empty()) entries.push_back(parse_integer(clean));
    }
    if (entries.empty()) continue;
    IntegerVector v(static_cast<Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Index>(i)) = entries[i];
    if (first) d.lattice_rank = v.size();
    first = false;
    d.rays.push_back(std::move(v));
  }
  if (d.rays.empty()) fail(ErrorCode::ParseError, "no rays found");
  return d;
}

InputDocument parse_json(std::string_view text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) fail(ErrorCode::ParseError, "document must be a JSON object");
  static const std::vector<std::string> known{"lattice_rank", "rays", "cones", "divisor", "interior_ray", "apex"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      fail(ErrorCode::ParseError, "unknown key '" + it.key() + "'");
  if (!j.contains("rays")) fail(ErrorCode::ParseError, "missing key 'rays'");

  InputDocument d;
  for (const auto& r : j["rays"]) d.rays.push_back(vector_of(r));
  if (j.contains("lattice_rank")) {
    if (!j["lattice_rank"].is_number_integer() || j["lattice_rank"].get<long long>() < 0)
      fail(ErrorCode::ParseError, "lattice_rank must be a nonnegative integer");
    d.lattice_rank = j["lattice_rank"].get<Index>();
  } else if (!d.rays.empty()) {
    d.lattice_rank = d.rays.front().size();
  } else {
    fail(ErrorCode::ParseError, "lattice_rank is required when there are no rays");
  }
  if (j.contains("cones")) {
    std::vector<std::vector<Index>> cones;
    for (const auto& c : j["cones"]) {
      if (!c.is_array()) fail(ErrorCode::ParseError, "each cone is a list of ray indices");
      std::vector<Index> ids;
      for (const auto& i : c) {
        if (!i.is_number_integer()) fail(ErrorCode::ParseError, "ray index must be an integer");
        ids.push_back(i.get<Index>());
      }
      cones.push_back(std::move(ids));
    }
    d.cones = std::move(cones);
  }
  if (j.contains("divisor")) {
    std::vector<Rational> a;
    for (const auto& x : j["divisor"]) a.push_back(rational_of(x));
    d.divisor = std::move(a);
  }
  if (j.contains("interior_ray")) d.interior_ray = vector_of(j["interior_ray"]);
  if (j.contains("apex")) d.apex = vector_of(j["apex"]);
  return d;
}

}  // namespace

Rational parse_rational(std::string_view s)
{
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const Integer num = parse_integer(s.substr(0, slash)), den = parse_integer(s.substr(slash + 1));
  if (den.is_zero()) fail(ErrorCode::ParseError, "zero denominator");
  return Rational(num, den);
}

InputDocument parse_document(std::string_view text)
{
  const auto b = text.find_first_not_of(" \t\r\n");
  InputDocument d = (b != std::string_view::npos && text[b] == '{') ? parse_json(text) : parse_plain(text);
  validate(d);
  return d;
}

InputDocument read_document(const std::string& path)
{
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

InputDocument normalize(InputDocument doc)
{
  if (doc.cones)
    for (auto& c : *doc.cones) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
  return doc;
}

std::string serialize(const InputDocument& raw)
{
  const InputDocument doc = normalize(raw);
  json j;
  j["lattice_rank"] = doc.lattice_rank;
  j["rays"] = json::array();
  for (const auto& r : doc.rays) j["rays"].push_back(json_of(r));
  if (doc.cones) j["cones"] = *doc.cones;
  if (doc.divisor) {
    j["divisor"] = json::array();
    for (const auto& a : *doc.divisor) j["divisor"].push_back(json_of(a));
  }
  if (doc.interior_ray) j["interior_ray"] = json_of(*doc.interior_ray);
  if (doc.apex) j["apex"] = json_of(*doc.apex);
  return j.dump();
}

Cone document_cone(const InputDocument& doc)
{
  if (doc.cones && doc.cones->size() > 1) fail(ErrorCode::ValidationError, "expected a single cone, got a fan");
  if (doc.cones && doc.cones->size() == 1) {
    std::vector<IntegerVector> gens;
    for (Index i : doc.cones->front()) gens.push_back(doc.rays[static_cast<std::size_t>(i)]);
    return cone_from_rays(gens);
  }
  return cone_from_rays(doc.rays);
}

Fan document_fan(const InputDocument& doc)
{
  if (!doc.cones) return fan_of_cone(cone_from_rays(doc.rays));
  return make_fan(doc.lattice_rank, doc.rays, *doc.cones);
}

}  // namespace toric
