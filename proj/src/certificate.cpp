#include "supertopo/certificate.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "supertopo/cliques.hpp"
#include "supertopo/error.hpp"
#include "supertopo/knet.hpp"
#include "supertopo/lp.hpp"
#include "supertopo/realization.hpp"
#include "supertopo/sweep.hpp"

namespace supertopo::cert {

std::string digest(const json& inputs) {
  const std::string text = inputs.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

json make(const std::string& kind, const std::string& operation, json inputs, json payload) {
  json c;
  c["kind"] = kind;
  c["operation"] = operation;
  c["inputs_digest"] = digest(inputs);
  c["inputs"] = std::move(inputs);
  c["payload"] = std::move(payload);
  return c;
}

namespace {

using io::to_json;

json rationals(const std::vector<Rational>& qs) {
  json out = json::array();
  for (const Rational& q : qs) out.push_back(to_string(q));
  return out;
}

json vertex_names(const std::vector<VertexId>& vs) {
  json out = json::array();
  for (const VertexId& v : vs) out.push_back(v.str());
  return out;
}

json binary_fields(const BinaryReport& r) {
  return json{{"binary", r.binary},
              {"checked_subfamilies", r.checked_subfamilies},
              {"violations", r.violations}};
}

json star_member_payload(const StarMembership& d) {
  return json{{"member", d.member},
              {"ordering", vertex_names(d.ordering)},
              {"values", rationals(d.values)},
              {"gaps", rationals(d.gaps)}};
}

// Every top Sd^2 cell of the maximal simplexes of c, as vertex lists.
std::vector<std::vector<Point>> top_cells(const SimplicialComplex& c) {
  std::vector<std::vector<Point>> out;
  for (const Simplex& top : c.maximal_simplexes()) {
    for (const Chain& ch : sd_cells(top, c)) {
      std::vector<std::size_t> order(ch.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      do {
        out.push_back(Sd2Cell{ch, order}.vertices());
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return out;
}

json cover_payload(const StarFamily& f) {
  json groups = json::array();
  for (std::size_t g = 0; g < f.groups.size(); ++g) {
    json bases = json::array();
    for (const Simplex& s : f.groups[g]) bases.push_back(to_json(s));
    groups.push_back({{"cardinality", g + 1}, {"bases", bases}});
  }
  return json{{"n", f.n()}, {"members", f.member_count()}, {"groups", groups},
              {"cells", top_cells(f.ambient).size()}};
}

json certify_payload(const DiscretenessCertificate& d) {
  json groups = json::array();
  bool holds = true;
  for (const GroupSeparation& g : d.groups) {
    json pairs = json::array();
    for (const PairSeparation& p : g.pairs) {
      pairs.push_back({{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"distance", to_string(p.distance)},
                       {"x", to_json(p.x)}, {"y", to_json(p.y)}});
    }
    json min = g.min_distance ? json(to_string(*g.min_distance)) : json(nullptr);
    if (g.min_distance && *g.min_distance < d.bound) holds = false;
    groups.push_back({{"cardinality", g.cardinality}, {"size", g.size}, {"min_distance", min},
                      {"pairs", pairs}});
  }
  return json{{"n", d.n}, {"bound", to_string(d.bound)}, {"holds", holds}, {"groups", groups}};
}

json sweep_payload(const SimplicialComplex& l, const SweepResult& r) {
  json rounds = json::array();
  for (const auto& round : r.rounds()) {
    json rj = json::array();
    for (const Puncture& d : round) rj.push_back({{"simplex", to_json(d.simplex)}, {"puncture", to_json(d.point)}});
    rounds.push_back(rj);
  }
  json images = json::array();
  for (const Point& p : r.images()) images.push_back(to_json(p));
  return json{{"reduced", to_json(r.reduced())},
              {"rounds", rounds},
              {"images", images},
              {"round_bound", l.empty() ? 0 : dimension(l) + 1}};
}

}  // namespace

// Emitters

json star_member(const SimplicialComplex& k, const Point& p, const Simplex& tau) {
  json inputs{{"complex", to_json(k)}, {"point", to_json(p)}, {"simplex", to_json(tau)}};
  return make("witness", "star member", inputs, star_member_payload(st2_membership_detail(p, tau, k)));
}

json star_cover(const SimplicialComplex& k, const SimplicialComplex& c) {
  json inputs{{"complex", to_json(k)}, {"subcomplex", to_json(c)}};
  return make("discreteness", "star cover", inputs, cover_payload(supertopo::star_cover(c, k)));
}

json star_certify(const SimplicialComplex& k, const SimplicialComplex& c, Execution exec) {
  json inputs{{"complex", to_json(k)}, {"subcomplex", to_json(c)}};
  const StarFamily f = supertopo::star_cover(c, k);
  return make("discreteness", "star certify", inputs, certify_payload(discreteness_certificate(f, exec)));
}

json star_witness(const SimplicialComplex& k, const std::vector<Simplex>& stars,
                  const std::vector<SimplicialComplex>& subcomplexes) {
  json sj = json::array(), cj = json::array();
  for (const Simplex& s : stars) sj.push_back(to_json(s));
  for (const SimplicialComplex& c : subcomplexes) cj.push_back(to_json(c));
  json inputs{{"complex", to_json(k)}, {"stars", sj}, {"subcomplexes", cj}};
  const StarFamily f = supertopo::star_cover(k, k);
  const Point w = linked_intersection_witness(f, stars, subcomplexes);
  const Chain chain = *linked_stars_chain(stars, k).chain;
  return make("witness", "star witness", inputs,
              json{{"chain", to_json(chain).at("chain")}, {"point", to_json(w)}});
}

json star_chain_witness(const SimplicialComplex& k, const Chain& chain) {
  for (const Simplex& s : chain.members()) {
    if (!k.contains(s)) throw ContractError("chain member " + to_string(s) + " is not in the complex", to_json(s).dump());
  }
  const Point w = chain_witness(chain);
  for (const Simplex& s : chain.members()) {
    if (!st2_membership(w, s, k)) throw ContractError("chain witness left the star of " + to_string(s));
  }
  json inputs{{"complex", to_json(k)}, {"chain", to_json(chain).at("chain")}};
  return make("witness", "star witness", inputs,
              json{{"chain", to_json(chain).at("chain")}, {"point", to_json(w)}});
}

json sweep_run(const SimplicialComplex& l, const SimplicialComplex& k, const std::vector<Point>& a) {
  json pts = json::array();
  for (const Point& p : a) pts.push_back(to_json(p));
  json inputs{{"complex", to_json(l)}, {"subcomplex", to_json(k)}, {"points", pts}};
  return make("sweep-trace", "sweep run", inputs, sweep_payload(l, sweep_out(l, k, a)));
}

namespace {

json realization_payload(const Realization& r) {
  const auto& s = r.system;
  const auto& l = r.lattice;
  json elements = json::array();
  for (std::size_t i = 0; i < l.elements.size(); ++i) {
    elements.push_back({{"vertex", element_vertex(s, l.elements[i]).str()},
                        {"members", io::members_json(s.ground(), l.elements[i])},
                        {"labels", l.labels[i]},
                        {"rank", r.strata.rank[i]}});
  }
  json layers = json::array();
  for (const auto& layer : r.strata.layers) {
    json lj = json::array();
    for (std::size_t i : layer) lj.push_back(element_vertex(s, l.elements[i]).str());
    layers.push_back(lj);
  }
  json assignment = json::object();
  for (std::size_t g = 0; g < l.elements.size(); ++g) {
    json vs = json::array();
    const SimplicialComplex down = r.assign(g);
    for (const VertexId& v : down.vertices()) vs.push_back(v.str());
    assignment[element_vertex(s, l.elements[g]).str()] = vs;
  }
  json point_map = json::object();
  for (std::size_t x = 0; x < s.ground().size(); ++x) {
    point_map[s.ground()[x]] = r.point_map(x).coords().front().first.str();
  }
  return json{{"top_included", r.top_included},
              {"elements", elements},
              {"layers", layers},
              {"complex", to_json(r.complex)},
              {"dimension", r.complex.empty() ? -1 : dimension(r.complex)},
              {"assignment", assignment},
              {"point_map", point_map}};
}

json synthesis_payload(const SynthesisReport& r, const SetSystem& n) {
  json steps = json::array();
  for (const SynthesisStep& s : r.steps) {
    steps.push_back({{"level", s.level}, {"input", s.input}, {"blocks", s.blocks},
                     {"checked_subfamilies", s.checked_subfamilies}, {"violations", s.violations}});
  }
  json p = binary_fields(r.global);
  p["family"] = to_json(r.family);
  p["refinement_table"] = r.refinement_table;
  p["steps"] = steps;
  p["discreteness_bound"] = r.discreteness_bound;
  p["achieved_groups"] = r.achieved_groups;
  p["refinement_verified"] = verify_refinement(r, n);
  return p;
}

}  // namespace

json realization(const SetSystem& s, bool include_top) {
  json inputs{{"system", to_json(s)}, {"include_top", include_top}};
  return make("realization", "realize", inputs, realization_payload(realize(s, include_top)));
}

json knet_synthesize(const SetSystem& n, Execution exec) {
  return make("binarity", "knet synthesize", json{{"system", to_json(n)}},
              synthesis_payload(synthesize(n, exec), n));
}

json knet_verify(const io::Family& f, Execution exec) {
  return make("binarity", "knet verify", json{{"family", to_json(f)}},
              binary_fields(verify_binary(f.sets, exec)));
}

json knet_refine(const SetSystem& f, const std::vector<std::string>& c) {
  const ElementSet cs = f.subset(c);
  const KeyRefinement kr = key_refinement(f, cs);
  json inputs{{"system", to_json(f)}, {"set", io::members_json(f.ground(), cs)}};
  json blocks = json::array();
  std::vector<NamedSet> named;
  for (std::size_t i = 0; i < kr.blocks.size(); ++i) {
    named.push_back(NamedSet{"C#" + std::to_string(i + 1), kr.blocks[i]});
    blocks.push_back({{"name", named.back().name},
                      {"members", io::members_json(f.ground(), kr.blocks[i])},
                      {"base", to_json(kr.bases[i])}});
  }
  std::size_t checked = 0;
  const auto violations = refinement_violations(f.flattened(), named, &checked);
  return make("refinement", "knet refine", inputs,
              json{{"blocks", blocks}, {"stars", kr.stars}, {"checked_subfamilies", checked},
                   {"violations", violations}});
}

json go_witness(const io::Family& sets) {
  const GoWitness w = supertopo::go_witness(sets.sets);
  const auto& g = sets.ground;
  json x = json::array();
  for (const auto& row : w.x) {
    json r = json::array();
    for (std::size_t p : row) r.push_back(g[p]);
    x.push_back(r);
  }
  json al = json::array(), bl = json::array();
  for (std::size_t p : w.a_l) al.push_back(g[p]);
  for (std::size_t p : w.b_l) bl.push_back(g[p]);
  json sj = json::array();
  for (const NamedSet& s : sets.sets) sj.push_back(io::named_set_json(g, s));
  return make("witness", "go witness", json{{"order", g}, {"sets", sj}},
              json{{"a", g[w.a]}, {"b", g[w.b]}, {"x", x}, {"a_L", al}, {"b_L", bl}});
}

json go_family(const std::vector<std::string>& order, std::size_t bound, Execution exec) {
  const GoFamily f = go_binary_family(order, bound, exec);
  json family = json::array();
  for (const NamedSet& s : f.family) family.push_back(io::named_set_json(order, s));
  json witnesses = json::array();
  for (std::size_t i = 0; i < f.cliques.size(); ++i) {
    witnesses.push_back({{"clique", f.cliques[i]}, {"a", order[f.witnesses[i].first]},
                         {"b", order[f.witnesses[i].second]}});
  }
  json p = binary_fields(f.report);
  p["family"] = family;
  p["witnesses"] = witnesses;
  return make("binarity", "go family", json{{"order", order}, {"bound", bound}}, p);
}

namespace {

json product_payload(const ProductResult& r) {
  json factors = json::array();
  for (std::size_t f = 0; f < r.factors.size(); ++f) {
    json fam = json::array();
    for (const NamedSet& s : r.factors[f].family) fam.push_back(io::named_set_json(r.factors[f].ground, s));
    factors.push_back({{"name", r.factors[f].name}, {"whole", r.factors[f].family[r.whole[f]].name},
                       {"family", fam}});
  }
  json dense = json::array();
  for (const auto& row : r.dense) {
    json rj = json::array();
    for (std::size_t f = 0; f < row.size(); ++f) rj.push_back(r.factors[f].ground[row[f]]);
    dense.push_back(rj);
  }
  json cylinders = json::array();
  for (const Cylinder& c : r.cylinders) {
    json box = json::object();
    for (std::size_t f = 0; f < c.box.size(); ++f) {
      if (c.box[f] != r.whole[f]) box[r.factors[f].name] = r.factors[f].family[c.box[f]].name;
    }
    cylinders.push_back({{"name", c.name}, {"box", box}, {"rows", positions(c.rows)}});
  }
  json witnesses = json::array();
  for (const CliqueWitness& w : r.witnesses) {
    json point = json::object();
    for (std::size_t f = 0; f < w.point.size(); ++f) {
      if (w.point[f]) point[r.factors[f].name] = r.factors[f].ground[*w.point[f]];
    }
    witnesses.push_back({{"clique", w.names}, {"point", point},
                         {"row", w.row ? json(*w.row) : json(nullptr)}, {"by_pattern", w.by_pattern}});
  }
  json p = binary_fields(r.report);
  p["factors"] = factors;
  p["dense"] = dense;
  p["depth"] = r.depth;
  p["cylinders"] = cylinders;
  p["witnesses"] = witnesses;
  return p;
}

}  // namespace

json product_build(const ProductSpec& spec, Execution exec) {
  return make("binarity", "product build", json{{"spec", to_json(spec)}},
              product_payload(product_knetwork(spec, exec)));
}

// Verification

namespace {

struct Reject {
  std::string reason;
};

void expect(bool ok, const std::string& reason) {
  if (!ok) throw Reject{reason};
}

void expect_equal(const json& claimed, const json& expected, const std::string& what) {
  if (claimed != expected) throw Reject{what + " does not match its re-derivation"};
}

// Sorted maximal cliques with empty meet, by the serial reference.
BinaryReport recheck_binary(const std::vector<NamedSet>& family) {
  BinaryReport r;
  std::vector<ElementSet> sets;
  for (const NamedSet& s : family) sets.push_back(s.members);
  const Graph g = intersection_graph(sets);
  for (const auto& clique : maximal_cliques(g, Execution::serial)) {
    ++r.checked_subfamilies;
    ElementSet meet = family[clique.front()].members;
    for (std::size_t i : clique) meet &= family[i].members;
    if (meet.any()) continue;
    std::vector<std::string> names;
    for (std::size_t i : clique) names.push_back(family[i].name);
    std::sort(names.begin(), names.end());
    r.violations.push_back(std::move(names));
  }
  std::sort(r.violations.begin(), r.violations.end());
  r.binary = r.violations.empty();
  return r;
}

void check_violations_real(const json& violations, const std::vector<NamedSet>& family) {
  std::map<std::string, const ElementSet*> by_name;
  for (const NamedSet& s : family) by_name[s.name] = &s.members;
  for (const json& v : violations) {
    std::vector<const ElementSet*> members;
    for (const json& name : v) {
      auto it = by_name.find(name.get<std::string>());
      expect(it != by_name.end(), "violation names an unknown set");
      members.push_back(it->second);
    }
    expect(!members.empty(), "empty violation");
    ElementSet meet = *members.front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      meet &= *members[i];
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        expect(members[i]->intersects(*members[j]), "violation is not pairwise intersecting");
      }
    }
    expect(meet.none(), "violation has a nonempty intersection");
  }
}

void check_binary_fields(const json& p, const std::vector<NamedSet>& family) {
  check_violations_real(p.at("violations"), family);
  expect_equal(p.at("binary"), binary_fields(recheck_binary(family)).at("binary"), "binary flag");
  expect_equal(json{{"binary", p.at("binary")}, {"checked_subfamilies", p.at("checked_subfamilies")},
                    {"violations", p.at("violations")}},
               binary_fields(recheck_binary(family)), "binarity report");
}

// Membership re-checked by chain enumeration as well as the closed form.
bool in_star(const Point& p, const Simplex& tau, const SimplicialComplex& k) {
  const bool closed = st2_membership(p, tau, k);
  const bool oracle = st2_membership_oracle(p, tau, k);
  expect(closed == oracle, "membership tests disagree at " + to_string(p));
  return closed;
}

void verify_star_member(const json& in, const json& p) {
  const SimplicialComplex k = io::complex_from_json(in.at("complex"));
  const Point x = io::point_from_json(in.at("point"));
  const Simplex tau = io::simplex_from_json(in.at("simplex"));
  expect(k.contains(tau), "simplex is not in the complex");
  expect(k.contains(x.support()), "point is not in the complex");
  // Ordering: support by decreasing value, tau first among ties.
  std::vector<Point::Coord> cs = x.coords();
  std::stable_sort(cs.begin(), cs.end(), [&](const Point::Coord& a, const Point::Coord& b) {
    if (a.second != b.second) return a.second > b.second;
    return tau.contains(a.first) && !tau.contains(b.first);
  });
  json ordering = json::array(), values = json::array(), gaps = json::array();
  Rational best = 0;
  std::vector<Rational> g;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ordering.push_back(cs[i].first.str());
    values.push_back(to_string(cs[i].second));
    const Rational next = i + 1 < cs.size() ? cs[i + 1].second : Rational(0);
    g.push_back(Rational(static_cast<unsigned long>(i + 1)) * (cs[i].second - next));
    gaps.push_back(to_string(g.back()));
    best = std::max(best, g.back());
  }
  expect_equal(p.at("ordering"), ordering, "ordering");
  expect_equal(p.at("values"), values, "values");
  expect_equal(p.at("gaps"), gaps, "gaps");
  const bool member = in_star(x, tau, k);
  expect_equal(p.at("member"), member, "membership");
  expect_equal(p, json{{"member", member}, {"ordering", ordering}, {"values", values}, {"gaps", gaps}},
               "payload");
}

void verify_star_cover(const json& in, const json& p) {
  const SimplicialComplex k = io::complex_from_json(in.at("complex"));
  const SimplicialComplex c = io::complex_from_json(in.at("subcomplex"));
  expect(c.is_subcomplex_of(k), "subcomplex is not inside the complex");
  std::map<std::size_t, json> groups;
  for (const Simplex& s : c.simplexes()) groups[s.size()].push_back(to_json(s));
  json gj = json::array();
  std::size_t members = 0;
  for (auto& [card, bases] : groups) {
    members += bases.size();
    gj.push_back({{"cardinality", card}, {"bases", bases}});
  }
  // Cover property at the resolution of Sd^2 cells: each top cell lies in
  // the star of its first barycenter.
  const auto cells = top_cells(c);
  for (const auto& cell : cells) {
    const Simplex base = cell.front().support();
    for (const Point& v : cell) expect(in_star(v, base, c), "cell vertex " + to_string(v) + " escapes its star");
  }
  const int n = c.empty() ? 0 : dimension(c) + 1;
  expect_equal(p, json{{"n", n}, {"members", members}, {"groups", gj}, {"cells", cells.size()}}, "payload");
}

void verify_star_certify(const json& in, const json& p) {
  const SimplicialComplex k = io::complex_from_json(in.at("complex"));
  const SimplicialComplex c = io::complex_from_json(in.at("subcomplex"));
  expect(c.is_subcomplex_of(k), "subcomplex is not inside the complex");
  expect(!c.empty(), "empty subcomplex");
  const int n = dimension(c) + 1;
  const Rational bound(1, static_cast<unsigned long>(n * n));
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (const Simplex& s : c.simplexes()) groups[s.size()].push_back(s);
  expect(p.at("groups").size() == groups.size(), "group count");
  json gj = json::array();
  bool holds = true;
  std::size_t gi = 0;
  for (const auto& [card, bases] : groups) {
    const json& claimed = p.at("groups").at(gi++);
    const json& cpairs = claimed.at("pairs");
    json pairs = json::array();
    std::optional<Rational> min;
    std::size_t pi = 0;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      for (std::size_t j = i + 1; j < bases.size(); ++j) {
        expect(pi < cpairs.size(), "missing pair");
        const json& cp = cpairs.at(pi++);
        const Point x = io::point_from_json(cp.at("x"));
        const Point y = io::point_from_json(cp.at("y"));
        const Rational d = io::rational_from_json(cp.at("distance"));
        expect(c.contains(x.support()) && c.contains(y.support()), "separation points leave the complex");
        expect(in_star(x, bases[i], c), "x is not in its star");
        expect(in_star(y, bases[j], c), "y is not in its star");
        expect(l1_distance(x, y) == d, "distance is not the l1 distance of x and y");
        const PairSeparation ref = star_distance(bases[i], bases[j], c, Execution::serial);
        expect(ref.distance == d, "distance is not the exact minimum");
        if (!min || d < *min) min = d;
        pairs.push_back({{"a", to_json(bases[i])}, {"b", to_json(bases[j])}, {"distance", to_string(d)},
                         {"x", to_json(x)}, {"y", to_json(y)}});
      }
    }
    if (min && *min < bound) holds = false;
    gj.push_back({{"cardinality", card}, {"size", bases.size()},
                  {"min_distance", min ? json(to_string(*min)) : json(nullptr)}, {"pairs", pairs}});
  }
  expect_equal(p, json{{"n", n}, {"bound", to_string(bound)}, {"holds", holds}, {"groups", gj}}, "payload");
}

void verify_star_witness(const json& in, const json& p) {
  const SimplicialComplex k = io::complex_from_json(in.at("complex"));
  std::vector<Simplex> bases;
  std::vector<SimplicialComplex> subs;
  if (in.contains("chain")) {
    expect(in.size() == 2, "unexpected inputs");
    for (const json& s : in.at("chain")) bases.push_back(io::simplex_from_json(s));
    expect_equal(p.at("chain"), in.at("chain"), "chain");
  } else {
    expect(in.size() == 3, "unexpected inputs");
    for (const json& s : in.at("stars")) bases.push_back(io::simplex_from_json(s));
    for (const json& s : in.at("subcomplexes")) subs.push_back(io::complex_from_json(s));
  }
  expect(!bases.empty(), "no star member");
  // The chain: bases by cardinality, pairwise nested.
  std::vector<Simplex> chain;
  for (const json& s : p.at("chain")) chain.push_back(io::simplex_from_json(s));
  std::vector<Simplex> sorted = bases;
  std::sort(sorted.begin(), sorted.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  expect(chain == sorted, "chain is not the sorted list of bases");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    expect(chain[i].is_face_of(chain[i + 1]) && chain[i].size() < chain[i + 1].size(), "bases are not nested");
  }
  // sum_i (1/m) b_{chain_i}
  std::map<VertexId, Rational> acc;
  const Rational w(1, static_cast<unsigned long>(chain.size()));
  for (const Simplex& s : chain) {
    expect(k.contains(s), "chain member outside the complex");
    for (const VertexId& v : s.vertices()) acc[v] += w / static_cast<unsigned long>(s.size());
  }
  const Point point = io::point_from_json(p.at("point"));
  expect(point == Point::from_coords({acc.begin(), acc.end()}), "point is not the chain witness");
  for (const Simplex& s : chain) expect(in_star(point, s, k), "point is not in the star of " + to_string(s));
  for (const SimplicialComplex& f : subs) {
    expect(f.is_subcomplex_of(k), "subcomplex outside the complex");
    expect(f.contains(point.support()), "point is not in a subcomplex");
  }
  expect_equal(p, json{{"chain", p.at("chain")}, {"point", to_json(point)}}, "payload");
}

void verify_sweep(const json& in, const json& p) {
  const SimplicialComplex l = io::complex_from_json(in.at("complex"));
  const SimplicialComplex k = io::complex_from_json(in.at("subcomplex"));
  std::vector<Point> images = io::points_from_json(in.at("points"));
  expect(k.is_subcomplex_of(l), "K is not a subcomplex of L");
  for (const Point& a : images) expect(l.contains(a.support()), "a point of A is outside |L|");
  SimplicialComplex current = l;
  json rounds = json::array();
  for (const json& round : p.at("rounds")) {
    // Removed: maximal simplexes outside K, except vertices carrying an image.
    std::set<Simplex> expected;
    for (const Simplex& s : current.maximal_simplexes()) {
      if (k.contains(s)) continue;
      if (s.size() == 1 && std::find(images.begin(), images.end(), barycenter(s)) != images.end()) continue;
      expected.insert(s);
    }
    expect(!expected.empty(), "round removes nothing");
    json rj = json::array();
    std::set<Simplex> removed;
    std::vector<Puncture> punctures;
    for (const json& d : round) {
      const Simplex s = io::simplex_from_json(d.at("simplex"));
      const Point c = io::point_from_json(d.at("puncture"));
      expect(c.support() == s, "puncture is not interior");
      expect(std::find(images.begin(), images.end(), c) == images.end(), "puncture lies in A");
      expect(c == choose_puncture(s, images), "puncture does not follow the deterministic rule");
      removed.insert(s);
      punctures.push_back({s, c});
      rj.push_back({{"simplex", to_json(s)}, {"puncture", to_json(c)}});
    }
    expect(removed == expected, "round does not remove exactly the collapsible maximal simplexes");
    for (Point& x : images) {
      for (const Puncture& d : punctures) {
        if (x.support() != d.simplex) continue;
        const Point y = radial_retraction(d.simplex, d.point, x);
        // y is on the boundary and on the ray from the puncture through x.
        expect(y.support().size() < d.simplex.size(), "image is not on the boundary");
        std::optional<Rational> t;
        for (const VertexId& v : d.simplex.vertices()) {
          const Rational dx = x[v] - d.point[v];
          const Rational dy = y[v] - d.point[v];
          if (sgn(dx) == 0) {
            expect(sgn(dy) == 0, "image leaves the ray");
            continue;
          }
          const Rational ratio = dy / dx;
          expect(!t || *t == ratio, "image leaves the ray");
          t = ratio;
        }
        expect(t && *t >= 1, "image is not beyond the point");
        x = y;
        break;
      }
    }
    std::vector<Simplex> kept;
    for (const Simplex& s : current.simplexes()) {
      if (!removed.count(s)) kept.push_back(s);
    }
    current = SimplicialComplex::closure_of(kept);
    rounds.push_back(rj);
  }
  // Stable: nothing left to remove.
  for (const Simplex& s : current.maximal_simplexes()) {
    expect(k.contains(s) || (s.size() == 1 && std::find(images.begin(), images.end(), barycenter(s)) != images.end()),
           "reduction stopped early");
  }
  expect(k.is_subcomplex_of(current), "K is not inside the reduced complex");
  json ij = json::array();
  for (const Point& x : images) {
    expect(current.contains(x.support()), "an image is outside the reduced complex");
    ij.push_back(to_json(x));
  }
  const int bound = l.empty() ? 0 : dimension(l) + 1;
  expect(static_cast<int>(rounds.size()) <= bound, "more rounds than 1 + dim L");
  expect_equal(p, json{{"reduced", to_json(current)}, {"rounds", rounds}, {"images", ij}, {"round_bound", bound}},
               "payload");
}

void verify_realization(const json& in, const json& p) {
  const SetSystem s = io::system_from_json(in.at("system"));
  const bool include_top = in.at("include_top").get<bool>();
  const auto flat = s.flattened();
  const std::size_t ng = s.ground().size();
  // Semilattice by direct enumeration of subfamilies (or closure when large).
  std::set<std::vector<std::size_t>> seen;
  std::vector<ElementSet> elems{s.full_set()};
  seen.insert(positions(elems.front()));
  std::function<void(std::size_t, const ElementSet&)> rec = [&](std::size_t from, const ElementSet& meet) {
    for (std::size_t i = from; i < flat.size(); ++i) {
      const ElementSet next = meet & flat[i].members;
      if (next.none()) continue;
      if (seen.insert(positions(next)).second) elems.push_back(next);
      rec(i + 1, next);
    }
  };
  rec(0, s.full_set());
  std::sort(elems.begin(), elems.end(), canonical_less);
  const std::size_t top = elems.size() - 1;
  auto vertex = [&](std::size_t i) { return element_vertex(s, elems[i]).str(); };
  // Ranks: length of the longest strictly decreasing chain below.
  std::vector<std::size_t> rank(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (elems[j].is_proper_subset_of(elems[i])) rank[i] = std::max(rank[i], rank[j] + 1);
    }
  }
  const std::size_t layer_count = 1 + *std::max_element(rank.begin(), rank.end());
  expect(layer_count <= s.n() + 1, "more rank layers than n + 1");
  json elements = json::array();
  json layers = json::array();
  for (std::size_t r = 0; r < layer_count; ++r) layers.push_back(json::array());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<std::string> labels;
    for (const NamedSet& f : flat) {
      if (f.members == elems[i]) labels.push_back(f.name);
    }
    elements.push_back({{"vertex", vertex(i)}, {"members", io::members_json(s.ground(), elems[i])},
                        {"labels", labels}, {"rank", rank[i]}});
    layers[rank[i]].push_back(vertex(i));
    for (std::size_t j = 0; j < i; ++j) {
      const ElementSet meet = elems[i] & elems[j];
      if (rank[i] != rank[j] || meet.none()) continue;
      const auto it = std::find(elems.begin(), elems.end(), meet);
      expect(it != elems.end() && rank[static_cast<std::size_t>(it - elems.begin())] < rank[i],
             "same-layer meet is not in an earlier layer");
    }
  }
  ElementSet covered = s.empty_set();
  for (const NamedSet& f : flat) covered |= f.members;
  const bool top_in = include_top || !elements[top].at("labels").empty() || !covered.all();
  // Order complex: every chain of vertex elements.
  std::vector<std::size_t> verts;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i != top || top_in) verts.push_back(i);
  }
  std::vector<Simplex> chains;
  std::vector<VertexId> chain;
  std::function<void(std::size_t)> grow = [&](std::size_t last) {
    chains.emplace_back(chain);
    for (std::size_t v : verts) {
      if (elems[last].is_proper_subset_of(elems[v])) {
        chain.push_back(VertexId(vertex(v)));
        grow(v);
        chain.pop_back();
      }
    }
  };
  for (std::size_t v : verts) {
    chain = {VertexId(vertex(v))};
    grow(v);
  }
  const SimplicialComplex complex = SimplicialComplex::closure_of(chains);
  const int dim = complex.empty() ? -1 : dimension(complex);
  expect(dim <= static_cast<int>(s.n()), "dimension exceeds the group count");
  json assignment = json::object();
  std::vector<std::set<VertexId>> down(elems.size());
  for (std::size_t g = 0; g < elems.size(); ++g) {
    json vs = json::array();
    for (std::size_t v : verts) {
      if (elems[v].is_subset_of(elems[g])) down[g].insert(VertexId(vertex(v)));
    }
    for (const VertexId& v : down[g]) vs.push_back(v.str());
    assignment[vertex(g)] = vs;
  }
  for (std::size_t g = 0; g < elems.size(); ++g) {
    for (std::size_t h = 0; h < elems.size(); ++h) {
      const ElementSet meet = elems[g] & elems[h];
      const SimplicialComplex both = complex.induced(down[g]).intersection(complex.induced(down[h]));
      if (meet.none()) {
        expect(both.empty(), "disjoint elements get meeting subcomplexes");
      } else {
        const auto m = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), meet) - elems.begin());
        expect(both == complex.induced(down[m]), "assignment does not preserve an intersection");
      }
    }
  }
  json point_map = json::object();
  for (std::size_t x = 0; x < ng; ++x) {
    ElementSet m = s.full_set();
    for (const NamedSet& f : flat) {
      if (f.members.test(x)) m &= f.members;
    }
    point_map[s.ground()[x]] = element_vertex(s, m).str();
  }
  expect_equal(p, json{{"top_included", top_in}, {"elements", elements}, {"layers", layers},
                       {"complex", to_json(complex)}, {"dimension", dim}, {"assignment", assignment},
                       {"point_map", point_map}},
               "payload");
}

// Fibers of the minimal member of `earlier` u {c}, ordered by base vertex name.
std::vector<std::pair<std::string, ElementSet>> fibers(const SetSystem& s, const std::vector<NamedSet>& earlier,
                                                       const ElementSet& c) {
  std::map<std::string, ElementSet> by_vertex;
  for (std::size_t x : positions(c)) {
    ElementSet m = c;
    for (const NamedSet& f : earlier) {
      if (f.members.test(x)) m &= f.members;
    }
    auto [it, fresh] = by_vertex.try_emplace(element_vertex(s, m).str(), s.empty_set());
    it->second.set(x);
  }
  return {by_vertex.begin(), by_vertex.end()};
}

std::vector<std::vector<std::string>> recheck_refinement(const std::vector<NamedSet>& earlier,
                                                        const std::vector<NamedSet>& blocks, std::size_t& checked) {
  std::vector<NamedSet> all = earlier;
  all.insert(all.end(), blocks.begin(), blocks.end());
  std::vector<ElementSet> sets;
  for (const NamedSet& s : all) sets.push_back(s.members);
  std::vector<std::vector<std::string>> out;
  checked = 0;
  for (const auto& clique : maximal_cliques(intersection_graph(sets), Execution::serial)) {
    if (clique.back() < earlier.size()) continue;
    ++checked;
    ElementSet meet = all[clique.front()].members;
    for (std::size_t i : clique) meet &= all[i].members;
    if (meet.any()) continue;
    std::vector<std::string> names;
    for (std::size_t i : clique) names.push_back(all[i].name);
    std::sort(names.begin(), names.end());
    out.push_back(names);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void verify_synthesis(const json& in, const json& p) {
  const SetSystem n = io::system_from_json(in.at("system"));
  std::vector<std::vector<NamedSet>> levels;
  json table = json::object();
  json steps = json::array();
  std::vector<std::size_t> bound, achieved;
  for (std::size_t level = 0; level < n.n(); ++level) {
    bound.push_back(std::size_t{1} << (level + 1));
    achieved.push_back(1);
    if (level == 0) {
      levels.push_back(n.groups()[0]);
      for (const NamedSet& s : n.groups()[0]) table[s.name] = json::array({s.name});
      continue;
    }
    std::vector<NamedSet> earlier;
    for (const auto& l : levels) earlier.insert(earlier.end(), l.begin(), l.end());
    std::vector<NamedSet> produced;
    for (const NamedSet& s : n.groups()[level]) {
      std::vector<NamedSet> blocks;
      json names = json::array();
      for (const auto& [vertex, block] : fibers(n, earlier, s.members)) {
        blocks.push_back(NamedSet{s.name + "#" + std::to_string(blocks.size() + 1), block});
        names.push_back(blocks.back().name);
      }
      std::size_t checked = 0;
      const auto violations = recheck_refinement(earlier, blocks, checked);
      steps.push_back({{"level", level}, {"input", s.name}, {"blocks", names},
                       {"checked_subfamilies", checked}, {"violations", violations}});
      table[s.name] = names;
      produced.insert(produced.end(), blocks.begin(), blocks.end());
    }
    levels.push_back(std::move(produced));
  }
  const SetSystem family = SetSystem::from_sets(n.ground(), levels);
  // Every input set is the union of its blocks.
  bool refined = true;
  std::map<std::string, ElementSet> block_sets;
  for (const NamedSet& b : family.flattened()) block_sets.emplace(b.name, b.members);
  for (const NamedSet& s : n.flattened()) {
    ElementSet acc = n.empty_set();
    for (const json& b : table.at(s.name)) acc |= block_sets.at(b.get<std::string>());
    refined = refined && acc == s.members;
  }
  expect(refined, "a set is not the union of its blocks");
  const auto flat = family.flattened();
  check_violations_real(p.at("violations"), flat);
  json expected = binary_fields(recheck_binary(flat));
  expected["family"] = to_json(family);
  expected["refinement_table"] = table;
  expected["steps"] = steps;
  expected["discreteness_bound"] = bound;
  expected["achieved_groups"] = achieved;
  expected["refinement_verified"] = refined;
  expect_equal(p, expected, "payload");
}

void verify_knet_verify(const json& in, const json& p) {
  const io::Family f = io::family_from_json(in.at("family"));
  check_binary_fields(p, f.sets);
  expect(p.size() == 3, "unexpected payload fields");
}

void verify_refine(const json& in, const json& p) {
  const SetSystem s = io::system_from_json(in.at("system"));
  const ElementSet c = s.subset(io::order_from_json(in.at("set")));
  expect(c.any(), "empty set");
  const auto flat = s.flattened();
  json blocks = json::array();
  std::vector<NamedSet> named;
  for (const auto& [vertex, block] : fibers(s, flat, c)) {
    named.push_back(NamedSet{"C#" + std::to_string(named.size() + 1), block});
    blocks.push_back({{"name", named.back().name}, {"members", io::members_json(s.ground(), block)},
                      {"base", json::array({vertex})}});
  }
  std::size_t checked = 0;
  const auto violations = recheck_refinement(flat, named, checked);
  // Star count: simplexes of the full subcomplex on the elements inside C.
  auto groups = s.groups();
  groups.push_back({NamedSet{"@C", c}});
  const Realization r = realize(SetSystem::from_sets(s.ground(), groups));
  expect_equal(p, json{{"blocks", blocks}, {"stars", r.assign(*r.lattice.find(c)).size()},
                       {"checked_subfamilies", checked}, {"violations", violations}},
               "payload");
}

void verify_go_witness(const json& in, const json& p) {
  const io::Family f = io::go_sets_from_json(in);
  const auto& g = f.ground;
  const std::size_t n = f.sets.size();
  expect(n > 0, "no sets");
  json x = json::array(), al = json::array(), bl = json::array();
  std::size_t a = 0, b = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    std::size_t lo = g.size(), hi = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t m = 0;
      while (m < g.size() && !(f.sets[i].members.test(m) && f.sets[j].members.test(m))) ++m;
      expect(m < g.size(), "two sets are disjoint");
      row.push_back(g[m]);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    x.push_back(row);
    al.push_back(g[lo]);
    bl.push_back(g[hi]);
    a = std::max(a, lo);
    b = std::min(b, hi);
  }
  expect(a <= b, "empty witness interval");
  for (const NamedSet& s : f.sets) {
    for (std::size_t m = a; m <= b; ++m) expect(s.members.test(m), "witness interval leaves a set");
  }
  expect_equal(p, json{{"a", g[a]}, {"b", g[b]}, {"x", x}, {"a_L", al}, {"b_L", bl}}, "payload");
}

void verify_go_family(const json& in, const json& p) {
  const auto order = io::order_from_json(in.at("order"));
  const std::size_t bound = in.at("bound").get<std::size_t>();
  expect(order.size() <= bound, "ground exceeds the bound");
  std::vector<NamedSet> family;
  json fj = json::array();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i; j < order.size(); ++j) {
      ElementSet s(order.size());
      for (std::size_t k = i; k <= j; ++k) s.set(k);
      family.push_back(NamedSet{"[" + order[i] + "," + order[j] + "]", s});
      fj.push_back(io::named_set_json(order, family.back()));
    }
  }
  expect_equal(p.at("family"), fj, "family");
  const BinaryReport r = recheck_binary(family);
  std::map<std::string, const ElementSet*> by_name;
  for (const NamedSet& s : family) by_name[s.name] = &s.members;
  // Witness intervals lie in every member of their clique.
  std::vector<NamedSet> sets_only;
  std::vector<ElementSet> sets;
  for (const NamedSet& s : family) sets.push_back(s.members);
  json witnesses = json::array();
  const auto cliques = maximal_cliques(intersection_graph(sets), Execution::serial);
  expect(p.at("witnesses").size() == cliques.size(), "one witness per maximal clique");
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    std::vector<std::string> names;
    for (std::size_t i : cliques[c]) names.push_back(family[i].name);
    std::sort(names.begin(), names.end());
    const json& w = p.at("witnesses").at(c);
    const auto pa = std::find(order.begin(), order.end(), w.at("a").get<std::string>());
    const auto pb = std::find(order.begin(), order.end(), w.at("b").get<std::string>());
    expect(pa != order.end() && pb != order.end() && pa <= pb, "witness is not an interval");
    for (const std::string& name : names) {
      for (auto it = pa; it <= pb; ++it) {
        expect(by_name.at(name)->test(static_cast<std::size_t>(it - order.begin())), "witness leaves a clique member");
      }
    }
    witnesses.push_back({{"clique", names}, {"a", w.at("a")}, {"b", w.at("b")}});
  }
  json expected = binary_fields(r);
  expected["family"] = fj;
  expected["witnesses"] = witnesses;
  expect_equal(p, expected, "payload");
}

void verify_product(const json& in, const json& p) {
  const ProductSpec spec = io::product_from_json(in.at("spec"));
  const std::size_t k = spec.factors.size();
  expect(k > 0, "no factors");
  std::vector<Factor> factors = spec.factors;
  std::vector<std::size_t> whole;
  json fj = json::array();
  for (Factor& f : factors) {
    expect(recheck_binary(f.family).binary, "factor family is not binary");
    ElementSet all(f.ground.size());
    all.set();
    auto it = std::find_if(f.family.begin(), f.family.end(), [&](const NamedSet& s) { return s.members == all; });
    if (it == f.family.end()) {
      std::string name = "*";
      while (std::any_of(f.family.begin(), f.family.end(), [&](const NamedSet& s) { return s.name == name; })) name += "*";
      f.family.push_back(NamedSet{name, all});
      whole.push_back(f.family.size() - 1);
    } else {
      whole.push_back(static_cast<std::size_t>(it - f.family.begin()));
    }
    json fam = json::array();
    for (const NamedSet& s : f.family) fam.push_back(io::named_set_json(f.ground, s));
    fj.push_back({{"name", f.name}, {"whole", f.family[whole.back()].name}, {"family", fam}});
  }
  const std::size_t depth = spec.depth.value_or(k);
  expect(depth >= 1 && depth <= k, "depth out of range");
  std::vector<std::vector<std::size_t>> dense;
  if (spec.dense) {
    dense = *spec.dense;
  } else {
    std::vector<std::size_t> row(k, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t f) {
      if (f == k) {
        dense.push_back(row);
        return;
      }
      for (std::size_t v = 0; v < factors[f].ground.size(); ++v) {
        row[f] = v;
        fill(f + 1);
      }
    };
    fill(0);
  }
  // Density and cylinders over every coordinate subset of size <= depth.
  std::vector<std::vector<std::size_t>> boxes{whole};
  std::vector<std::vector<std::size_t>> coord_sets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> coords;
    for (std::size_t f = 0; f < k; ++f) {
      if (mask >> f & 1) coords.push_back(f);
    }
    if (coords.size() <= depth) coord_sets.push_back(coords);
  }
  std::sort(coord_sets.begin(), coord_sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& coords : coord_sets) {
    std::vector<std::size_t> pattern(coords.size(), 0);
    std::function<void(std::size_t)> pat = [&](std::size_t i) {
      if (i == coords.size()) {
        expect(std::any_of(dense.begin(), dense.end(), [&](const auto& row) {
                 for (std::size_t t = 0; t < coords.size(); ++t) {
                   if (row[coords[t]] != pattern[t]) return false;
                 }
                 return true;
               }),
               "dense set misses a pattern");
        return;
      }
      for (std::size_t v = 0; v < factors[coords[i]].ground.size(); ++v) {
        pattern[i] = v;
        pat(i + 1);
      }
    };
    pat(0);
    std::vector<std::size_t> box = whole;
    std::function<void(std::size_t)> choose = [&](std::size_t i) {
      if (i == coords.size()) {
        boxes.push_back(box);
        return;
      }
      for (std::size_t m = 0; m < factors[coords[i]].family.size(); ++m) {
        if (m == whole[coords[i]]) continue;
        box[coords[i]] = m;
        choose(i + 1);
      }
      box[coords[i]] = whole[coords[i]];
    };
    choose(0);
  }
  const json& cj = p.at("cylinders");
  expect(cj.size() == boxes.size(), "cylinder count");
  std::size_t ci = 0;
  std::vector<NamedSet> family;
  json cylinders = json::array();
  for (const json& c : cj) {
    std::vector<std::size_t> box = whole;
    for (const auto& [fname, sname] : c.at("box").items()) {
      auto fi = std::find_if(factors.begin(), factors.end(), [&](const Factor& f) { return f.name == fname; });
      expect(fi != factors.end(), "box names an unknown factor");
      const auto& fam = fi->family;
      auto si = std::find_if(fam.begin(), fam.end(), [&](const NamedSet& s) { return s.name == sname.get<std::string>(); });
      expect(si != fam.end(), "box names an unknown set");
      box[static_cast<std::size_t>(fi - factors.begin())] = static_cast<std::size_t>(si - fam.begin());
    }
    expect(box == boxes[ci++], "cylinders are not the canonical boxes");
    ElementSet rows(dense.size());
    json rj = json::array();
    for (std::size_t i = 0; i < dense.size(); ++i) {
      bool inside = true;
      for (std::size_t f = 0; f < k; ++f) inside = inside && factors[f].family[box[f]].members.test(dense[i][f]);
      if (inside) {
        rows.set(i);
        rj.push_back(i);
      }
    }
    std::string name;
    json bj = json::object();
    for (std::size_t f = 0; f < k; ++f) {
      if (box[f] == whole[f]) continue;
      if (!name.empty()) name += ",";
      name += factors[f].name + "=" + factors[f].family[box[f]].name;
      bj[factors[f].name] = factors[f].family[box[f]].name;
    }
    if (name.empty()) name = "*";
    family.push_back(NamedSet{name, rows});
    cylinders.push_back({{"name", name}, {"box", bj}, {"rows", rj}});
  }
  // Witness rows lie in every cylinder of their clique.
  std::vector<ElementSet> sets;
  for (const NamedSet& s : family) sets.push_back(s.members);
  const auto cliques = maximal_cliques(intersection_graph(sets), Execution::serial);
  const json& wj = p.at("witnesses");
  expect(wj.size() == cliques.size(), "one witness per maximal clique");
  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < family.size(); ++i) by_name[family[i].name] = i;
  json witnesses = json::array();
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    const json& w = wj.at(c);
    std::vector<std::string> names;
    for (std::size_t i : cliques[c]) names.push_back(family[i].name);
    std::sort(names.begin(), names.end());
    ElementSet meet(dense.size());
    meet.set();
    for (std::size_t i : cliques[c]) meet &= family[i].members;
    json point = json::object();
    bool broken = false;
    std::vector<std::optional<std::size_t>> x(k);
    for (std::size_t f = 0; f < k; ++f) {
      ElementSet fm(factors[f].ground.size());
      fm.set();
      bool constrained = false;
      for (std::size_t i : cliques[c]) {
        const json& box = cj.at(i).at("box");
        if (!box.contains(factors[f].name)) continue;
        constrained = true;
        const std::string sname = box.at(factors[f].name);
        for (const NamedSet& s : factors[f].family) {
          if (s.name == sname) fm &= s.members;
        }
      }
      if (!constrained) continue;
      if (fm.none()) {
        broken = true;
        continue;
      }
      x[f] = fm.find_first();
      point[factors[f].name] = factors[f].ground[*x[f]];
    }
    // The row at the coordinate pattern if one is dense, else the first row
    // in every cylinder of the clique.
    json row = nullptr;
    bool by_pattern = true;
    for (std::size_t i = 0; i < dense.size() && row.is_null() && !broken; ++i) {
      bool matches = true;
      for (std::size_t f = 0; f < k && matches; ++f) matches = !x[f] || dense[i][f] == *x[f];
      if (matches) row = i;
    }
    if (row.is_null()) {
      by_pattern = false;
      const auto first = meet.find_first();
      if (first != ElementSet::npos) row = first;
    }
    if (!row.is_null()) expect(meet.test(row.get<std::size_t>()), "witness row is not in every cylinder of its clique");
    expect_equal(w, json{{"clique", names}, {"point", point}, {"row", row}, {"by_pattern", by_pattern}}, "witness");
    witnesses.push_back(w);
  }
  json dj = json::array();
  for (const auto& row : dense) {
    json r = json::array();
    for (std::size_t f = 0; f < k; ++f) r.push_back(factors[f].ground[row[f]]);
    dj.push_back(r);
  }
  check_violations_real(p.at("violations"), family);
  json expected = binary_fields(recheck_binary(family));
  expected["factors"] = fj;
  expected["dense"] = dj;
  expected["depth"] = depth;
  expected["cylinders"] = cylinders;
  expected["witnesses"] = witnesses;
  expect_equal(p, expected, "payload");
}

const std::map<std::string, std::pair<std::string, void (*)(const json&, const json&)>>& operations() {
  static const std::map<std::string, std::pair<std::string, void (*)(const json&, const json&)>> ops{
      {"star member", {"witness", verify_star_member}},
      {"star cover", {"discreteness", verify_star_cover}},
      {"star certify", {"discreteness", verify_star_certify}},
      {"star witness", {"witness", verify_star_witness}},
      {"sweep run", {"sweep-trace", verify_sweep}},
      {"realize", {"realization", verify_realization}},
      {"knet synthesize", {"binarity", verify_synthesis}},
      {"knet verify", {"binarity", verify_knet_verify}},
      {"knet refine", {"refinement", verify_refine}},
      {"go witness", {"witness", verify_go_witness}},
      {"go family", {"binarity", verify_go_family}},
      {"product build", {"binarity", verify_product}},
  };
  return ops;
}

}  // namespace

Verdict verify(const json& c) {
  try {
    expect(c.is_object(), "certificate must be a JSON object");
    const std::set<std::string> keys{"kind", "operation", "inputs", "inputs_digest", "payload"};
    for (const auto& [key, value] : c.items()) expect(keys.count(key) == 1, "unexpected field \"" + key + "\"");
    for (const std::string& key : keys) expect(c.contains(key), "missing field \"" + key + "\"");
    expect(c.at("inputs_digest").is_string() && c.at("inputs_digest") == digest(c.at("inputs")),
           "inputs_digest does not match the inputs");
    expect(c.at("operation").is_string(), "operation must be a string");
    const auto& ops = operations();
    auto it = ops.find(c.at("operation").get<std::string>());
    expect(it != ops.end(), "unknown operation");
    expect(c.at("kind") == it->second.first, "kind does not match the operation");
    it->second.second(c.at("inputs"), c.at("payload"));
    return Verdict{true, {}};
  } catch (const Reject& r) {
    return Verdict{false, r.reason};
  } catch (const std::exception& e) {
    return Verdict{false, std::string("malformed certificate: ") + e.what()};
  }
}

}  // namespace supertopo::cert
