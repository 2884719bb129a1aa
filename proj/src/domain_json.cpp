#include "confbound/domain_json.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "confbound/errors.hpp"

namespace confbound {

using nlohmann::json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SpecError(std::string(where) + ": unknown key \"" + key + "\"");
  }
}

double number(const json& j, const char* key, const char* where) {
  if (!j.contains(key)) throw SpecError(std::string(where) + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) throw SpecError(std::string(where) + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

Complex complex_value(const json& v, const char* where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw SpecError(std::string(where) + ": complex values are a number or [re, im]");
}

Complex complex_field(const json& j, const char* key, const char* where) {
  if (!j.contains(key)) throw SpecError(std::string(where) + ": missing \"" + key + "\"");
  return complex_value(j.at(key), where);
}

json complex_json(Complex c) {
  if (c.imag() == 0.0) return c.real();
  return json::array({c.real(), c.imag()});
}

AnalyticMap parse_map(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw SpecError("map: expected an object with a string \"type\"");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "identity") {
    require_keys(j, {"type"}, "map");
    return AnalyticMap::identity();
  }
  if (type == "exp") {
    require_keys(j, {"type"}, "map");
    return AnalyticMap::exp();
  }
  if (type == "sin") {
    require_keys(j, {"type"}, "map");
    return AnalyticMap::sin();
  }
  if (type == "affine") {
    require_keys(j, {"type", "a", "b"}, "map");
    return AnalyticMap::affine(complex_field(j, "a", "affine"),
                               j.contains("b") ? complex_field(j, "b", "affine") : Complex(0.0));
  }
  if (type == "power") {
    require_keys(j, {"type", "n"}, "map");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw SpecError("power: \"n\" must be an integer");
    return AnalyticMap::power(j["n"].get<int>());
  }
  if (type == "mobius") {
    require_keys(j, {"type", "a", "b", "c", "d"}, "map");
    return AnalyticMap::mobius(complex_field(j, "a", "mobius"), complex_field(j, "b", "mobius"),
                               complex_field(j, "c", "mobius"), complex_field(j, "d", "mobius"));
  }
  if (type == "compose") {
    require_keys(j, {"type", "maps"}, "map");
    if (!j.contains("maps") || !j["maps"].is_array() || j["maps"].empty()) {
      throw SpecError("compose: \"maps\" must be a non-empty array");
    }
    const json& maps = j["maps"];
    AnalyticMap acc = parse_map(maps.back());
    for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) acc = compose(parse_map(*it), acc);
    return acc;
  }
  throw SpecError("map: unknown type \"" + type + "\"");
}

void flatten(const AnalyticMap& m, std::vector<AnalyticMap>& out) {
  if (m.kind() == AnalyticMap::Kind::Compose) {
    const auto& c = std::get<AnalyticMap::Compose>(m.node().v);
    flatten(c.outer, out);
    flatten(c.inner, out);
  } else {
    out.push_back(m);
  }
}

json map_json(const AnalyticMap& m) {
  const auto& v = m.node().v;
  switch (m.kind()) {
    case AnalyticMap::Kind::Identity:
      return {{"type", "identity"}};
    case AnalyticMap::Kind::Exp:
      return {{"type", "exp"}};
    case AnalyticMap::Kind::Sin:
      return {{"type", "sin"}};
    case AnalyticMap::Kind::Affine: {
      const auto& a = std::get<AnalyticMap::Affine>(v);
      return {{"type", "affine"}, {"a", complex_json(a.a)}, {"b", complex_json(a.b)}};
    }
    case AnalyticMap::Kind::Power:
      return {{"type", "power"}, {"n", std::get<AnalyticMap::Power>(v).n}};
    case AnalyticMap::Kind::Mobius: {
      const auto& mb = std::get<AnalyticMap::Mobius>(v);
      return {{"type", "mobius"},
              {"a", complex_json(mb.a)},
              {"b", complex_json(mb.b)},
              {"c", complex_json(mb.c)},
              {"d", complex_json(mb.d)}};
    }
    case AnalyticMap::Kind::Compose: {
      std::vector<AnalyticMap> parts;
      flatten(m, parts);
      json arr = json::array();
      for (const auto& p : parts) arr.push_back(map_json(p));
      return {{"type", "compose"}, {"maps", arr}};
    }
  }
  return {};
}

}  // namespace

NamedSpec parse_domain_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("domain spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("domain spec must be a JSON object");
  require_keys(j, {"base", "map", "inradius", "convex_radii", "area", "image_in_base", "name"}, "domain spec");
  if (!j.contains("base") || !j.contains("map")) throw SpecError("domain spec needs \"base\" and \"map\"");

  NamedSpec out;
  try {
    const json& b = j["base"];
    if (!b.is_object() || !b.contains("type") || !b["type"].is_string()) throw SpecError("base: missing \"type\"");
    const std::string bt = b["type"].get<std::string>();
    if (bt == "rectangle") {
      require_keys(b, {"type", "x0", "x1", "y0", "y1"}, "base");
      out.spec.base = BaseDomain::rectangle(number(b, "x0", "base"), number(b, "x1", "base"), number(b, "y0", "base"),
                                            number(b, "y1", "base"));
    } else if (bt == "disc") {
      require_keys(b, {"type", "center", "radius"}, "base");
      out.spec.base = BaseDomain::disc(b.contains("center") ? complex_field(b, "center", "base") : Complex(0.0),
                                       number(b, "radius", "base"));
    } else {
      throw SpecError("base: unknown type \"" + bt + "\"");
    }
    out.spec.map = parse_map(j["map"]);
    if (j.contains("inradius")) out.spec.inradius_override = number(j, "inradius", "domain spec");
    if (j.contains("area")) out.spec.area_override = number(j, "area", "domain spec");
    if (j.contains("convex_radii")) {
      const json& c = j["convex_radii"];
      if (!c.is_object()) throw SpecError("convex_radii must be an object");
      require_keys(c, {"ro", "ri", "rc"}, "convex_radii");
      out.spec.convex_radii =
          ConvexRadii{number(c, "ro", "convex_radii"), number(c, "ri", "convex_radii"), number(c, "rc", "convex_radii")};
    }
    if (j.contains("image_in_base")) {
      if (!j["image_in_base"].is_boolean()) throw SpecError("image_in_base must be a boolean");
      out.spec.image_in_base = j["image_in_base"].get<bool>();
    }
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw SpecError("name must be a string");
      out.name = j["name"].get<std::string>();
    }
    out.spec.validate();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(std::string("domain spec: ") + e.what());
  }
  return out;
}

NamedSpec load_domain_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read domain spec file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_domain_spec(ss.str());
}

std::string dump_domain_spec(const NamedSpec& ns) {
  const DomainSpec& s = ns.spec;
  json j;
  if (s.base.is_rectangle()) {
    const Rectangle& r = s.base.as_rectangle();
    j["base"] = {{"type", "rectangle"}, {"x0", r.x0}, {"x1", r.x1}, {"y0", r.y0}, {"y1", r.y1}};
  } else {
    const Disc& d = s.base.as_disc();
    j["base"] = {{"type", "disc"}, {"center", complex_json(d.center)}, {"radius", d.radius}};
  }
  j["map"] = map_json(s.map);
  if (s.inradius_override) j["inradius"] = *s.inradius_override;
  if (s.area_override) j["area"] = *s.area_override;
  if (s.convex_radii) j["convex_radii"] = {{"ro", s.convex_radii->ro}, {"ri", s.convex_radii->ri}, {"rc", s.convex_radii->rc}};
  if (s.image_in_base) j["image_in_base"] = true;
  if (!ns.name.empty()) j["name"] = ns.name;
  return j.dump(2) + "\n";
}

}  // namespace confbound
