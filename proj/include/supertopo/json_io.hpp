#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "supertopo/classes.hpp"
#include "supertopo/complex.hpp"
#include "supertopo/setsystem.hpp"
#include "supertopo/star.hpp"

namespace supertopo::io {

using nlohmann::json;

/// A flag value is inline JSON if it starts with '[' or '{', else a file
/// path. Throws InputError (with the parser's position) on malformed JSON
/// or an unreadable file.
json load_json(const std::string& flag_value);
json parse_json(const std::string& text, const std::string& source);

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Simplex& s);
Simplex simplex_from_json(const json& j);

/// {"vertices": [...], "maximal_simplices": [[...]]}
json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

/// {"coords": {vertex: "p/q"}}
json to_json(const Point& p);
Point point_from_json(const json& j);

/// {"chain": [[...], ...]}
json to_json(const Chain& c);
Chain chain_from_json(const json& j);

/// {"points": [...]} or a bare array of points.
std::vector<Point> points_from_json(const json& j);

/// Ground tokens may be strings or integers; integers become their decimal text.
std::string token_from_json(const json& j);

/// {"ground": [...], "families": [[{"name", "members"}, ...], ...]}
json to_json(const SetSystem& s);
SetSystem system_from_json(const json& j);

json named_set_json(const std::vector<std::string>& ground, const NamedSet& s);

/// {"family": [{"name", "members"}...], "ground": [...]} (ground optional:
/// defaults to members in order of first appearance), or a SetSystem.
struct Family {
  std::vector<std::string> ground;
  std::vector<NamedSet> sets;
};
json to_json(const Family& f);
Family family_from_json(const json& j);

/// {"order": [...]}
std::vector<std::string> order_from_json(const json& j);

/// {"order": [...], "sets": [{"name", "members"}]}
Family go_sets_from_json(const json& j);

/// {"factors": [{"name", "ground", "family"}], "dense": [[...]] | "full", "depth": d}
json to_json(const ProductSpec& p);
ProductSpec product_from_json(const json& j);

/// Token list of a member set over the given ground.
json members_json(const std::vector<std::string>& ground, const ElementSet& s);

}  // namespace supertopo::io
