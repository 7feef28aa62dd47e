#include "polyprod/json_io.hpp"

#include <stdexcept>

namespace polyprod {

namespace {

const char* op_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Point: return "point";
    case SpaceKind::Sphere: return "sphere";
    case SpaceKind::Atom: return "atom";
    case SpaceKind::Wedge: return "wedge";
    case SpaceKind::Prod: return "prod";
    case SpaceKind::Smash: return "smash";
    case SpaceKind::Susp: return "susp";
    case SpaceKind::Loop: return "loop";
    case SpaceKind::Join: return "join";
    case SpaceKind::RHalfSmash: return "rhalfsmash";
    case SpaceKind::Cone: return "cone";
  }
  return "?";
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const SimplicialComplex& K) { return {{"m", K.ground_size()}, {"facets", K.facets()}}; }

SimplicialComplex complex_from_json(const Json& j) {
  try {
    return SimplicialComplex::from_facets(field(j, "m").get<int>(), field(j, "facets").get<std::vector<Face>>());
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json to_json(const BettiTable& t) {
  Json betti = Json::object();
  for (const auto& [d, r] : t.ranks) betti[std::to_string(d)] = r;
  return {{"betti", betti}, {"m", t.ground_size}};
}

Json to_json(const Series& s) { return {{"N", s.degree()}, {"coeffs", s.coeffs()}}; }

Json to_json(const SphereMultiset& m) {
  Json out = Json::object();
  for (const auto& [d, c] : m.counts) out[std::to_string(d)] = c;
  return out;
}

Json to_json(const Space& e) {
  Json out{{"op", op_name(e.kind())}};
  switch (e.kind()) {
    case SpaceKind::Point:
      break;
    case SpaceKind::Sphere:
      out["dim"] = e.dim();
      break;
    case SpaceKind::Atom:
      out["name"] = e.atom().name;
      if (e.atom().reduced_series) out["series"] = *e.atom().reduced_series;
      if (e.atom().loop_series) out["loop_series"] = *e.atom().loop_series;
      break;
    default: {
      Json args = Json::array();
      for (const auto& f : e.factors()) {
        if (f.count == 1) args.push_back(to_json(f.term));
        else args.push_back({{"op", "rep"}, {"count", f.count}, {"args", Json::array({to_json(f.term)})}});
      }
      out["args"] = std::move(args);
    }
  }
  return out;
}

Space space_from_json(const Json& j) {
  try {
    const auto op = field(j, "op").get<std::string>();
    if (op == "point") return point();
    if (op == "sphere") return sphere(field(j, "dim").get<int>());
    if (op == "atom") {
      Space::AtomData a;
      a.name = field(j, "name").get<std::string>();
      if (j.contains("series")) a.reduced_series = j.at("series").get<std::vector<long long>>();
      if (j.contains("loop_series")) a.loop_series = j.at("loop_series").get<std::vector<long long>>();
      return Space::make_atom(std::move(a));
    }
    const Json& args = field(j, "args");
    if (!args.is_array()) bad("\"args\" must be an array");
    if (op == "wedge" || op == "prod" || op == "smash") {
      std::vector<Factor> fs;
      for (const auto& a : args) {
        if (a.value("op", "") == "rep") {
          const Json& inner = field(a, "args");
          if (inner.size() != 1) bad("rep takes one argument");
          fs.push_back({space_from_json(inner[0]), field(a, "count").get<long long>()});
        } else {
          fs.push_back({space_from_json(a), 1});
        }
      }
      const auto k = op == "wedge" ? SpaceKind::Wedge : op == "prod" ? SpaceKind::Prod : SpaceKind::Smash;
      return Space::make_nary(k, std::move(fs));
    }
    if (op == "susp" || op == "loop" || op == "cone") {
      if (args.size() != 1) bad(op + " takes one argument");
      const auto k = op == "susp" ? SpaceKind::Susp : op == "loop" ? SpaceKind::Loop : SpaceKind::Cone;
      return Space::make_unary(k, space_from_json(args[0]));
    }
    if (op == "join" || op == "rhalfsmash") {
      if (args.size() != 2) bad(op + " takes two arguments");
      return Space::make_binary(op == "join" ? SpaceKind::Join : SpaceKind::RHalfSmash, space_from_json(args[0]),
                                space_from_json(args[1]));
    }
    bad("unknown op \"" + op + "\"");
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json to_json(const DecompResult& r) {
  Json out{{"family", r.family}};
  for (const auto& [k, v] : r.params) out[k] = v;
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back({{"name", f.name}, {"term", to_json(f.term)}, {"text", to_sexpr(f.term)}});
  out["factors"] = std::move(factors);
  out["total"] = to_sexpr(r.total);
  Json spheres = Json::object();
  Json ceilings = Json::object();
  for (const auto& [name, m] : r.spheres) {
    spheres[name] = to_json(m);
    if (m.ceiling) ceilings[name] = *m.ceiling;
  }
  out["spheres"] = std::move(spheres);
  if (!ceilings.empty()) out["truncated_at"] = std::move(ceilings);
  if (r.series) out["series"] = to_json(*r.series);
  if (r.circles) out["circle_witness"] = {{"m", r.circles->m}, {"quotient", r.circles->quotient.coeffs()}};
  out["provenance"] = r.provenance;
  return out;
}

GluingSpec gluing_from_json(const Json& j) {
  try {
    GluingSpec s;
    s.base = complex_from_json(field(j, "base"));
    s.sub_a = field(j, "sub_a").get<std::vector<Vertex>>();
    s.sub_b = field(j, "sub_b").get<std::vector<Vertex>>();
    s.copies = field(j, "copies").get<int>();
    if (j.contains("psi")) s.psi = j.at("psi").get<Permutation>();
    if (j.contains("phi")) s.phi = j.at("phi").get<std::vector<Permutation>>();
    return s;
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json to_json(const GluingSpec& spec) {
  Json out{{"base", to_json(spec.base)}, {"sub_a", spec.sub_a}, {"sub_b", spec.sub_b}, {"copies", spec.copies}};
  if (!spec.psi.empty()) out["psi"] = spec.psi;
  if (!spec.phi.empty()) out["phi"] = spec.phi;
  return out;
}

}  // namespace polyprod
