#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "supertopo/classes.hpp"
#include "supertopo/complex.hpp"
#include "supertopo/json_io.hpp"
#include "supertopo/parallel.hpp"
#include "supertopo/setsystem.hpp"
#include "supertopo/star.hpp"

namespace supertopo::cert {

using nlohmann::json;

/// Lowercase hex SHA-256 of inputs.dump().
std::string digest(const json& inputs);

/// {"kind", "operation", "inputs", "inputs_digest", "payload"}
json make(const std::string& kind, const std::string& operation, json inputs, json payload);

json star_member(const SimplicialComplex& k, const Point& p, const Simplex& tau);
json star_cover(const SimplicialComplex& k, const SimplicialComplex& c);
json star_certify(const SimplicialComplex& k, const SimplicialComplex& c,
                  Execution exec = Execution::parallel);
json star_witness(const SimplicialComplex& k, const std::vector<Simplex>& stars,
                  const std::vector<SimplicialComplex>& subcomplexes);
json star_chain_witness(const SimplicialComplex& k, const Chain& chain);
json sweep_run(const SimplicialComplex& l, const SimplicialComplex& k, const std::vector<Point>& a);
json realization(const SetSystem& s, bool include_top);
json knet_synthesize(const SetSystem& n, Execution exec = Execution::parallel);
json knet_verify(const io::Family& f, Execution exec = Execution::parallel);
json knet_refine(const SetSystem& f, const std::vector<std::string>& c);
json go_witness(const io::Family& sets);
json go_family(const std::vector<std::string>& order, std::size_t bound,
               Execution exec = Execution::parallel);
json product_build(const ProductSpec& spec, Execution exec = Execution::parallel);

struct Verdict {
  bool valid = false;
  std::string reason;  // empty when valid
};

/// Re-checks a certificate from its inputs alone.
Verdict verify(const json& certificate);

}  // namespace supertopo::cert
