#pragma once

#include "hlat/config.hpp"
#include "hlat/hbounds.hpp"
#include "hlat/invariants.hpp"
#include "hlat/lattice.hpp"

#include "json.hpp"

#include <string>

namespace hlat {

// Exact integers serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.
nlohmann::json int_to_json(const Int& x);
nlohmann::json vec_to_json(const Vec& v);

// Lattice file format: {"name"?: string, "gram": [[int]], "sign": "negative"|"positive"}
// with gram the positive-definite matrix and sign the recorded convention.
nlohmann::json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const nlohmann::json& j);

// "e8" | "diag:N" | "gamma:N" | left-associative "+"-sums of those | inline
// JSON | path to a JSON file in the format above.
Lattice parse_lattice_spec(const std::string& spec);

nlohmann::json config_to_json(const RunConfig& config);
nlohmann::json polynomial_to_json(const EtaPolynomial& poly);
nlohmann::json certificate_to_json(const EInvariantCertificate& cert, bool include_table);

}  // namespace hlat
