#include "supertopo/cli.hpp"

#include <algorithm>
#include <functional>

#include "CLI11.hpp"
#include "supertopo/certificate.hpp"
#include "supertopo/error.hpp"
#include "supertopo/json_io.hpp"

namespace supertopo::cli {

namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kContract = 2;
constexpr int kUsage = 64;

struct Flags {
  std::string complex, subcomplex, point, simplex, chain, stars, subcomplexes, points;
  std::string system, family, set, sets, ground, spec, certificate;
  bool include_top = false;
  bool serial = false;
  std::size_t bound = 32;
};

std::vector<SimplicialComplex> complexes_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of complexes");
  std::vector<SimplicialComplex> out;
  for (const json& c : j) out.push_back(io::complex_from_json(c));
  return out;
}

std::vector<Simplex> simplexes_from_json(const json& j) {
  const json& list = j.is_object() && j.contains("stars") ? j.at("stars") : j;
  if (!list.is_array()) throw InputError("expected an array of simplexes");
  std::vector<Simplex> out;
  for (const json& s : list) out.push_back(io::simplex_from_json(s));
  return out;
}

json object_json(const std::string& object) {
  if (object.empty()) return nullptr;
  try {
    return json::parse(object);
  } catch (const json::exception&) {
    return object;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact star calculus, sweeping-out, realization and binary k-network synthesis"};
  app.name("supertopo");
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--serial", f.serial, "Use the serial reference kernels");
  std::function<json()> action;
  const auto exec = [&] { return f.serial ? Execution::serial : Execution::parallel; };

  auto* star = app.add_subcommand("star", "St^2 star calculus")->require_subcommand(1);
  auto* member = star->add_subcommand("member", "Decide x in St^2(b_tau, K)");
  member->add_option("--complex", f.complex, "Complex K")->required();
  member->add_option("--point", f.point, "Point x")->required();
  member->add_option("--simplex", f.simplex, "Base simplex tau")->required();
  member->callback([&] {
    action = [&] {
      return cert::star_member(io::complex_from_json(io::load_json(f.complex)),
                               io::point_from_json(io::load_json(f.point)),
                               io::simplex_from_json(io::load_json(f.simplex)));
    };
  });
  for (const char* name : {"cover", "certify"}) {
    const bool certify = std::string(name) == "certify";
    auto* sub = star->add_subcommand(name, certify ? "Certify within-group star separation"
                                                   : "Star cover of a subcomplex, grouped by base size");
    sub->add_option("--complex", f.complex, "Complex K")->required();
    sub->add_option("--subcomplex", f.subcomplex, "Subcomplex C (default: K)");
    sub->callback([&, certify] {
      action = [&, certify] {
        const SimplicialComplex k = io::complex_from_json(io::load_json(f.complex));
        const SimplicialComplex c =
            f.subcomplex.empty() ? k : io::complex_from_json(io::load_json(f.subcomplex));
        return certify ? cert::star_certify(k, c, exec()) : cert::star_cover(k, c);
      };
    });
  }
  auto* witness = star->add_subcommand("witness", "Common point of a linked family of stars");
  witness->add_option("--complex", f.complex, "Complex K")->required();
  auto* chain_opt = witness->add_option("--chain", f.chain, "Chain {\"chain\": [[...], ...]}");
  auto* stars_opt = witness->add_option("--stars", f.stars, "Star base simplexes");
  witness->add_option("--subcomplexes", f.subcomplexes, "Subcomplexes of the family")->needs(stars_opt);
  chain_opt->excludes(stars_opt);
  witness->callback([&] {
    if (f.chain.empty() && f.stars.empty()) throw CLI::RequiredError("--chain or --stars");
    action = [&] {
      const SimplicialComplex k = io::complex_from_json(io::load_json(f.complex));
      if (!f.chain.empty()) return cert::star_chain_witness(k, io::chain_from_json(io::load_json(f.chain)));
      std::vector<SimplicialComplex> subs;
      if (!f.subcomplexes.empty()) subs = complexes_from_json(io::load_json(f.subcomplexes));
      return cert::star_witness(k, simplexes_from_json(io::load_json(f.stars)), subs);
    };
  });

  auto* sweep = app.add_subcommand("sweep", "Piecewise-linear sweeping-out")->require_subcommand(1);
  auto* sweep_run = sweep->add_subcommand("run", "Sweep L onto K while tracking the points A");
  sweep_run->add_option("--complex", f.complex, "Complex L")->required();
  sweep_run->add_option("--subcomplex", f.subcomplex, "Subcomplex K")->required();
  sweep_run->add_option("--points", f.points, "Finite point set A")->required();
  sweep_run->callback([&] {
    action = [&] {
      return cert::sweep_run(io::complex_from_json(io::load_json(f.complex)),
                             io::complex_from_json(io::load_json(f.subcomplex)),
                             io::points_from_json(io::load_json(f.points)));
    };
  });

  auto* realize = app.add_subcommand("realize", "Order-complex realization of a set system");
  realize->add_option("--system", f.system, "Set system")->required();
  realize->add_flag("--include-top", f.include_top, "Always include the whole ground as a vertex");
  realize->callback([&] {
    action = [&] { return cert::realization(io::system_from_json(io::load_json(f.system)), f.include_top); };
  });

  auto* knet = app.add_subcommand("knet", "Binary k-network synthesis")->require_subcommand(1);
  auto* synth = knet->add_subcommand("synthesize", "Refine a layered system into a binary family");
  synth->add_option("--system", f.system, "Layered set system")->required();
  synth->callback([&] {
    action = [&] { return cert::knet_synthesize(io::system_from_json(io::load_json(f.system)), exec()); };
  });
  auto* kverify = knet->add_subcommand("verify", "Check that a finite family is binary");
  kverify->add_option("--family", f.family, "Named family")->required();
  kverify->callback([&] {
    action = [&] { return cert::knet_verify(io::family_from_json(io::load_json(f.family)), exec()); };
  });
  auto* refine = knet->add_subcommand("refine", "Split one set against an existing family");
  refine->add_option("--system", f.system, "Existing family F")->required();
  refine->add_option("--set", f.set, "Member tokens of C")->required();
  refine->callback([&] {
    action = [&] {
      return cert::knet_refine(io::system_from_json(io::load_json(f.system)),
                               io::order_from_json(io::load_json(f.set)));
    };
  });

  auto* go = app.add_subcommand("go", "Order-convex families")->require_subcommand(1);
  auto* gwitness = go->add_subcommand("witness", "Common interval of a linked convex family");
  gwitness->add_option("--sets", f.sets, "Ordered ground and convex sets")->required();
  gwitness->callback([&] {
    action = [&] { return cert::go_witness(io::go_sets_from_json(io::load_json(f.sets))); };
  });
  auto* gfamily = go->add_subcommand("family", "All closed intervals of a finite order");
  gfamily->add_option("--ground", f.ground, "Ordered ground")->required();
  gfamily->add_option("--bound", f.bound, "Largest accepted ground size")->capture_default_str();
  gfamily->callback([&] {
    action = [&] { return cert::go_family(io::order_from_json(io::load_json(f.ground)), f.bound, exec()); };
  });

  auto* product = app.add_subcommand("product", "Cylinder families of finite products")->require_subcommand(1);
  auto* pbuild = product->add_subcommand("build", "Cylinders over a dense set of rows");
  pbuild->add_option("--spec", f.spec, "Factors, dense rows and depth")->required();
  pbuild->callback([&] {
    action = [&] { return cert::product_build(io::product_from_json(io::load_json(f.spec)), exec()); };
  });

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("--certificate", f.certificate, "Certificate")->required();
  verify->callback([&] {
    action = [&]() -> json {
      const json c = io::load_json(f.certificate);
      const cert::Verdict v = cert::verify(c);
      if (!v.valid) {
        json object = c.is_object() && c.contains("operation") ? c.at("operation") : json(nullptr);
        throw ContractError("certificate rejected: " + v.reason, object.dump());
      }
      return json{{"valid", true}, {"kind", c.at("kind")}, {"operation", c.at("operation")}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  if (!action) {
    err << app.help();
    return kUsage;
  }
  try {
    const json result = action();
    out << result.dump(2) << "\n";
    return kOk;
  } catch (const ContractError& e) {
    out << json{{"error", e.what()}, {"object", object_json(e.object())}}.dump(2) << "\n";
    return kContract;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace supertopo::cli
