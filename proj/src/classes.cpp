#include "supertopo/classes.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"
#include "supertopo/cliques.hpp"
#include "supertopo/error.hpp"

namespace supertopo {

using nlohmann::json;

void require_convex(const NamedSet& s) {
  if (s.members.none()) throw ContractError("set \"" + s.name + "\" is empty", json(s.name).dump());
  const auto first = s.members.find_first();
  std::size_t last = first;
  for (auto i = first; i != ElementSet::npos; i = s.members.find_next(i)) last = i;
  if (s.members.count() != last - first + 1) {
    throw ContractError("set \"" + s.name + "\" is not order-convex", json(s.name).dump());
  }
}

GoWitness go_witness(const std::vector<NamedSet>& sets) {
  if (sets.empty()) throw ContractError("go witness needs at least one set");
  for (const NamedSet& s : sets) require_convex(s);
  const std::size_t n = sets.size();
  GoWitness w;
  w.x.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ElementSet meet = sets[i].members & sets[j].members;
      if (meet.none()) {
        throw ContractError("sets \"" + sets[i].name + "\" and \"" + sets[j].name + "\" are disjoint",
                            json::array({sets[i].name, sets[j].name}).dump());
      }
      w.x[i][j] = meet.find_first();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    w.a_l.push_back(*std::min_element(w.x[i].begin(), w.x[i].end()));
    w.b_l.push_back(*std::max_element(w.x[i].begin(), w.x[i].end()));
  }
  w.a = *std::max_element(w.a_l.begin(), w.a_l.end());
  w.b = *std::min_element(w.b_l.begin(), w.b_l.end());
  if (w.a > w.b) throw ContractError("go witness produced an empty interval");
  for (const NamedSet& s : sets) {
    for (std::size_t p = w.a; p <= w.b; ++p) {
      if (!s.members.test(p)) throw ContractError("go witness interval leaves \"" + s.name + "\"");
    }
  }
  return w;
}

GoFamily go_binary_family(const std::vector<std::string>& order, std::size_t bound, Execution exec) {
  if (order.size() > bound) {
    throw ContractError("ground has " + std::to_string(order.size()) + " elements, bound is " +
                        std::to_string(bound));
  }
  const std::size_t n = order.size();
  GoFamily out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ElementSet s(n);
      for (std::size_t k = i; k <= j; ++k) s.set(k);
      out.family.push_back(NamedSet{"[" + order[i] + "," + order[j] + "]", std::move(s)});
    }
  }
  out.report = verify_binary(out.family, exec);
  std::vector<ElementSet> sets;
  for (const NamedSet& s : out.family) sets.push_back(s.members);
  for (const auto& clique : maximal_cliques(intersection_graph(sets), exec)) {
    std::vector<NamedSet> members;
    std::vector<std::string> names;
    for (std::size_t i : clique) {
      members.push_back(out.family[i]);
      names.push_back(out.family[i].name);
    }
    std::sort(names.begin(), names.end());
    const GoWitness w = go_witness(members);
    out.cliques.push_back(std::move(names));
    out.witnesses.emplace_back(w.a, w.b);
  }
  return out;
}

namespace {

std::string cylinder_name(const ProductResult& r, const std::vector<std::size_t>& box) {
  std::string name;
  for (std::size_t f = 0; f < box.size(); ++f) {
    if (box[f] == r.whole[f]) continue;
    if (!name.empty()) name += ",";
    name += r.factors[f].name + "=" + r.factors[f].family[box[f]].name;
  }
  return name.empty() ? "*" : name;
}

// Calls visit(coords) for every coordinate set of size 1..depth, in order of
// size then lexicographic.
void for_each_coordinate_set(std::size_t k, std::size_t depth,
                             const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> coords;
  for (std::size_t size = 1; size <= std::min(k, depth); ++size) {
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (coords.size() == size) {
        visit(coords);
        return;
      }
      for (std::size_t f = from; f < k; ++f) {
        coords.push_back(f);
        rec(f + 1);
        coords.pop_back();
      }
    };
    rec(0);
  }
}

// Calls visit(choice) for every choice[i] in [0, sizes[i]).
void for_each_choice(const std::vector<std::size_t>& sizes,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> choice(sizes.size(), 0);
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; })) return;
  for (;;) {
    visit(choice);
    std::size_t i = sizes.size();
    while (i > 0) {
      --i;
      if (++choice[i] < sizes[i]) break;
      choice[i] = 0;
      if (i == 0) return;
    }
    if (sizes.empty()) return;
  }
}

}  // namespace

ProductResult product_knetwork(const ProductSpec& spec, Execution exec) {
  ProductResult r;
  const std::size_t k = spec.factors.size();
  if (k == 0) throw ContractError("product needs at least one factor");
  r.factors = spec.factors;
  for (Factor& f : r.factors) {
    const BinaryReport fr = verify_binary(f.family, exec);
    if (!fr.binary) {
      throw ContractError("factor \"" + f.name + "\" family is not binary",
                          json{{"factor", f.name}, {"violation", fr.violations.front()}}.dump());
    }
    ElementSet whole(f.ground.size());
    whole.set();
    auto it = std::find_if(f.family.begin(), f.family.end(),
                           [&](const NamedSet& s) { return s.members == whole; });
    if (it == f.family.end()) {
      std::string name = "*";
      while (std::any_of(f.family.begin(), f.family.end(),
                         [&](const NamedSet& s) { return s.name == name; })) {
        name += "*";
      }
      f.family.push_back(NamedSet{name, whole});
      r.whole.push_back(f.family.size() - 1);
    } else {
      r.whole.push_back(static_cast<std::size_t>(it - f.family.begin()));
    }
  }
  r.depth = spec.depth.value_or(k);
  if (r.depth == 0 || r.depth > k) {
    throw ContractError("depth must be between 1 and the number of factors");
  }
  if (spec.dense) {
    r.dense = *spec.dense;
  } else {
    std::vector<std::size_t> sizes;
    for (const Factor& f : r.factors) sizes.push_back(f.ground.size());
    for_each_choice(sizes, [&](const std::vector<std::size_t>& row) { r.dense.push_back(row); });
  }
  // Density: every pattern on at most `depth` coordinates is met.
  for_each_coordinate_set(k, r.depth, [&](const std::vector<std::size_t>& coords) {
    std::vector<std::size_t> sizes;
    for (std::size_t f : coords) sizes.push_back(r.factors[f].ground.size());
    for_each_choice(sizes, [&](const std::vector<std::size_t>& values) {
      const bool met = std::any_of(r.dense.begin(), r.dense.end(), [&](const auto& row) {
        for (std::size_t i = 0; i < coords.size(); ++i) {
          if (row[coords[i]] != values[i]) return false;
        }
        return true;
      });
      if (!met) {
        json pattern = json::object();
        for (std::size_t i = 0; i < coords.size(); ++i) {
          pattern[r.factors[coords[i]].name] = r.factors[coords[i]].ground[values[i]];
        }
        throw ContractError("dense set misses the pattern " + pattern.dump(), pattern.dump());
      }
    });
  });
  // Cylinders: boxes constraining at most `depth` coordinates, plus the whole product.
  auto add_cylinder = [&](std::vector<std::size_t> box) {
    ElementSet rows(r.dense.size());
    for (std::size_t i = 0; i < r.dense.size(); ++i) {
      bool in = true;
      for (std::size_t f = 0; f < k && in; ++f) {
        in = r.factors[f].family[box[f]].members.test(r.dense[i][f]);
      }
      rows[i] = in;
    }
    r.cylinders.push_back(Cylinder{cylinder_name(r, box), std::move(box), std::move(rows)});
  };
  add_cylinder(r.whole);
  for_each_coordinate_set(k, r.depth, [&](const std::vector<std::size_t>& coords) {
    std::vector<std::vector<std::size_t>> options(coords.size());
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const Factor& f = r.factors[coords[i]];
      for (std::size_t m = 0; m < f.family.size(); ++m) {
        if (m != r.whole[coords[i]]) options[i].push_back(m);
      }
      sizes.push_back(options[i].size());
    }
    for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::size_t> box = r.whole;
      for (std::size_t i = 0; i < coords.size(); ++i) box[coords[i]] = options[i][pick[i]];
      add_cylinder(std::move(box));
    });
  });
  std::vector<NamedSet> family;
  std::vector<ElementSet> sets;
  for (const Cylinder& c : r.cylinders) {
    family.push_back(NamedSet{c.name, c.rows});
    sets.push_back(c.rows);
  }
  r.report = verify_binary(family, exec);
  // The product argument: per coordinate the clique's factor sets are linked,
  // so the binary factor family gives a point x_alpha; a dense row through
  // the x_alpha lies in every cylinder of the clique.
  for (const auto& clique : maximal_cliques(intersection_graph(sets), exec)) {
    CliqueWitness w;
    for (std::size_t i : clique) w.names.push_back(r.cylinders[i].name);
    std::sort(w.names.begin(), w.names.end());
    w.point.resize(k);
    std::vector<ElementSet> meets;
    bool broken = false;
    for (std::size_t f = 0; f < k; ++f) {
      ElementSet meet(r.factors[f].ground.size());
      meet.set();
      bool constrained = false;
      for (std::size_t i : clique) {
        const std::size_t m = r.cylinders[i].box[f];
        if (m == r.whole[f]) continue;
        constrained = true;
        meet &= r.factors[f].family[m].members;
      }
      if (constrained && meet.any()) w.point[f] = meet.find_first();
      broken = broken || (constrained && meet.none());
      meets.push_back(std::move(meet));
    }
    for (std::size_t i = 0; i < r.dense.size() && !w.row && !broken; ++i) {
      bool match = true;
      for (std::size_t f = 0; f < k && match; ++f) {
        if (w.point[f]) match = r.dense[i][f] == *w.point[f];
      }
      if (match) w.row = i;
    }
    if (!w.row) {
      w.by_pattern = false;
      for (std::size_t i = 0; i < r.dense.size() && !w.row; ++i) {
        bool match = true;
        for (std::size_t f = 0; f < k && match; ++f) match = meets[f].test(r.dense[i][f]);
        if (match) w.row = i;
      }
    }
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

}  // namespace supertopo
