#include "supertopo/json_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "supertopo/error.hpp"

namespace supertopo::io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

const json& array_field(const json& j, const char* key, const char* what) {
  const json& a = field(j, key, what);
  if (!a.is_array()) throw InputError(std::string(what) + ": \"" + key + "\" must be an array");
  return a;
}

std::string string_value(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> token_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const json& t : j) out.push_back(token_from_json(t));
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + source + ": " + e.what());
  }
}

json load_json(const std::string& flag_value) {
  const auto start = flag_value.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && (flag_value[start] == '[' || flag_value[start] == '{')) {
    return parse_json(flag_value, "inline argument");
  }
  std::ifstream in(flag_value);
  if (!in) throw InputError("cannot read file \"" + flag_value + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), "\"" + flag_value + "\"");
}

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(string_value(j, "rational"));
}

json to_json(const Simplex& s) {
  json out = json::array();
  for (const VertexId& v : s.vertices()) out.push_back(v.str());
  return out;
}

Simplex simplex_from_json(const json& j) {
  if (!j.is_array()) throw InputError("simplex must be an array of vertex names");
  std::vector<VertexId> vs;
  for (const json& v : j) vs.emplace_back(string_value(v, "vertex"));
  if (vs.empty()) throw InputError("simplex must not be empty");
  return Simplex(std::move(vs));
}

json to_json(const SimplicialComplex& k) {
  json out;
  out["vertices"] = json::array();
  for (const VertexId& v : k.vertices()) out["vertices"].push_back(v.str());
  out["maximal_simplices"] = json::array();
  for (const Simplex& s : k.maximal_simplexes()) out["maximal_simplices"].push_back(to_json(s));
  return out;
}

SimplicialComplex complex_from_json(const json& j) {
  std::vector<VertexId> vertices;
  if (j.is_object() && j.contains("vertices")) {
    for (const json& v : array_field(j, "vertices", "complex")) vertices.emplace_back(string_value(v, "vertex"));
  }
  std::vector<Simplex> gens;
  for (const json& s : array_field(j, "maximal_simplices", "complex")) gens.push_back(simplex_from_json(s));
  std::set<VertexId> listed(vertices.begin(), vertices.end());
  if (listed.size() != vertices.size()) throw InputError("complex lists a vertex twice");
  for (const Simplex& s : gens) {
    for (const VertexId& v : s.vertices()) {
      if (!vertices.empty() && !listed.count(v)) {
        throw InputError("simplex " + to_string(s) + " uses unlisted vertex " + v.str());
      }
    }
  }
  return SimplicialComplex::closure_of(gens, vertices);
}

json to_json(const Point& p) {
  json coords = json::object();
  for (const auto& [v, x] : p.coords()) coords[v.str()] = to_string(x);
  return json{{"coords", coords}};
}

Point point_from_json(const json& j) {
  const json& coords = field(j, "coords", "point");
  if (!coords.is_object()) throw InputError("point: \"coords\" must be an object");
  std::vector<Point::Coord> cs;
  for (const auto& [v, x] : coords.items()) cs.emplace_back(VertexId(v), rational_from_json(x));
  return Point::from_coords(std::move(cs));
}

json to_json(const Chain& c) {
  json out = json::array();
  for (const Simplex& s : c.members()) out.push_back(to_json(s));
  return json{{"chain", out}};
}

Chain chain_from_json(const json& j) {
  const json& a = j.is_array() ? j : array_field(j, "chain", "chain");
  std::vector<Simplex> members;
  for (const json& s : a) members.push_back(simplex_from_json(s));
  return Chain(std::move(members));
}

std::vector<Point> points_from_json(const json& j) {
  const json& a = j.is_array() ? j : array_field(j, "points", "point set");
  std::vector<Point> out;
  for (const json& p : a) out.push_back(point_from_json(p));
  return out;
}

std::string token_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InputError("ground element must be a string or an integer, got " + j.dump());
}

json members_json(const std::vector<std::string>& ground, const ElementSet& s) {
  json out = json::array();
  for (std::size_t i : positions(s)) out.push_back(ground[i]);
  return out;
}

json named_set_json(const std::vector<std::string>& ground, const NamedSet& s) {
  return json{{"name", s.name}, {"members", members_json(ground, s.members)}};
}

json to_json(const SetSystem& s) {
  json families = json::array();
  for (const auto& g : s.groups()) {
    json group = json::array();
    for (const NamedSet& n : g) group.push_back(named_set_json(s.ground(), n));
    families.push_back(group);
  }
  return json{{"ground", s.ground()}, {"families", families}};
}

SetSystem system_from_json(const json& j) {
  const auto ground = token_list(field(j, "ground", "set system"), "ground");
  std::vector<std::vector<std::pair<std::string, std::vector<std::string>>>> groups;
  for (const json& g : array_field(j, "families", "set system")) {
    if (!g.is_array()) throw InputError("each family group must be an array of named sets");
    auto& out = groups.emplace_back();
    for (const json& s : g) {
      out.emplace_back(string_value(field(s, "name", "named set"), "set name"),
                       token_list(field(s, "members", "named set"), "members"));
    }
  }
  return SetSystem::make(ground, groups);
}

json to_json(const Family& f) {
  json sets = json::array();
  for (const NamedSet& s : f.sets) sets.push_back(named_set_json(f.ground, s));
  return json{{"ground", f.ground}, {"family", sets}};
}

Family family_from_json(const json& j) {
  if (j.is_object() && j.contains("families")) {
    const SetSystem s = system_from_json(j);
    return Family{s.ground(), s.flattened()};
  }
  Family f;
  std::map<std::string, std::size_t> index;
  const bool explicit_ground = j.is_object() && j.contains("ground");
  if (explicit_ground) {
    f.ground = token_list(j.at("ground"), "ground");
    for (std::size_t i = 0; i < f.ground.size(); ++i) {
      if (!index.emplace(f.ground[i], i).second) {
        throw InputError("ground lists element \"" + f.ground[i] + "\" twice");
      }
    }
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> raw;
  for (const json& s : array_field(j, "family", "family")) {
    raw.emplace_back(string_value(field(s, "name", "named set"), "set name"),
                     token_list(field(s, "members", "named set"), "members"));
    for (const std::string& t : raw.back().second) {
      if (index.count(t)) continue;
      if (explicit_ground) {
        throw ContractError("element \"" + t + "\" is not in the ground set", json(t).dump());
      }
      index.emplace(t, f.ground.size());
      f.ground.push_back(t);
    }
  }
  std::set<std::string> names;
  for (const auto& [name, members] : raw) {
    if (!names.insert(name).second) {
      throw ContractError("set name \"" + name + "\" is used twice", json(name).dump());
    }
    ElementSet s(f.ground.size());
    for (const std::string& t : members) s.set(index.at(t));
    f.sets.push_back(NamedSet{name, std::move(s)});
  }
  return f;
}

std::vector<std::string> order_from_json(const json& j) {
  const auto order = token_list(j.is_array() ? j : field(j, "order", "ordered ground"), "order");
  std::set<std::string> seen;
  for (const std::string& t : order) {
    if (!seen.insert(t).second) throw InputError("order lists element \"" + t + "\" twice");
  }
  return order;
}

Family go_sets_from_json(const json& j) {
  json as_family = {{"ground", field(j, "order", "go sets")}, {"family", field(j, "sets", "go sets")}};
  Family f = family_from_json(as_family);
  order_from_json(f.ground);
  return f;
}

json to_json(const ProductSpec& p) {
  json factors = json::array();
  for (const Factor& f : p.factors) {
    json family = json::array();
    for (const NamedSet& s : f.family) family.push_back(named_set_json(f.ground, s));
    factors.push_back({{"name", f.name}, {"ground", f.ground}, {"family", family}});
  }
  json out{{"factors", factors}};
  if (p.dense) {
    json rows = json::array();
    for (const auto& row : *p.dense) {
      json r = json::array();
      for (std::size_t f = 0; f < row.size(); ++f) r.push_back(p.factors[f].ground[row[f]]);
      rows.push_back(r);
    }
    out["dense"] = rows;
  } else {
    out["dense"] = "full";
  }
  if (p.depth) out["depth"] = *p.depth;
  return out;
}

ProductSpec product_from_json(const json& j) {
  ProductSpec p;
  std::set<std::string> names;
  for (const json& f : array_field(j, "factors", "product spec")) {
    Factor factor;
    factor.name = string_value(field(f, "name", "factor"), "factor name");
    if (!names.insert(factor.name).second) {
      throw ContractError("factor name \"" + factor.name + "\" is used twice", json(factor.name).dump());
    }
    const Family fam = family_from_json({{"ground", field(f, "ground", "factor")},
                                         {"family", field(f, "family", "factor")}});
    factor.ground = fam.ground;
    factor.family = fam.sets;
    if (factor.ground.empty()) throw ContractError("factor \"" + factor.name + "\" has an empty ground");
    for (const NamedSet& s : factor.family) {
      if (s.members.none()) throw ContractError("factor set \"" + s.name + "\" is empty", json(s.name).dump());
    }
    p.factors.push_back(std::move(factor));
  }
  if (j.contains("dense") && !(j.at("dense").is_string() && j.at("dense") == "full")) {
    const json& rows = j.at("dense");
    if (!rows.is_array()) throw InputError("\"dense\" must be \"full\" or an array of rows");
    std::vector<std::vector<std::size_t>> dense;
    std::set<std::vector<std::size_t>> seen;
    for (const json& row : rows) {
      const auto tokens = token_list(row, "dense row");
      if (tokens.size() != p.factors.size()) {
        throw InputError("dense row " + row.dump() + " does not have one entry per factor");
      }
      std::vector<std::size_t> r;
      for (std::size_t f = 0; f < tokens.size(); ++f) {
        const auto& g = p.factors[f].ground;
        auto it = std::find(g.begin(), g.end(), tokens[f]);
        if (it == g.end()) {
          throw ContractError("dense row " + row.dump() + " leaves factor \"" + p.factors[f].name + "\"",
                              row.dump());
        }
        r.push_back(static_cast<std::size_t>(it - g.begin()));
      }
      if (!seen.insert(r).second) throw InputError("dense row " + row.dump() + " is listed twice");
      dense.push_back(std::move(r));
    }
    p.dense = std::move(dense);
  }
  if (j.contains("depth")) {
    if (!j.at("depth").is_number_unsigned()) throw InputError("\"depth\" must be a positive integer");
    p.depth = j.at("depth").get<std::size_t>();
  }
  return p;
}

}  // namespace supertopo::io
