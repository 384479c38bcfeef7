#pragma once

#include <string>

#include "json.hpp"
#include "mixedvol/bernstein.hpp"
#include "mixedvol/hilbert.hpp"
#include "mixedvol/lattice.hpp"

namespace mixedvol {

using Json = nlohmann::ordered_json;

// Wire formats.  All integers are arbitrary precision: values outside the
// double-safe range are written as decimal strings, and both plain numbers
// and strings are accepted on input.
//
//   polytope: {"dim": n, "points": [[int, ...], ...]}
//   tuple:    {"dim": n, "polytopes": [polytope, ...]}
//   config:   {"vars": v, "sets": [{"degree": d, "exponents": [[...], ...]}, ...]}
//             (set 0 may be omitted; it defaults to the unit vectors)
//   system:   {"vars": n, "polys": [{"terms": [{"coeff": c, "exp": [...]}, ...]}, ...]}

Int int_from_json(const Json& j);
Json int_to_json(const Int& v);

LatticePolytope polytope_from_json(const Json& j);
Json polytope_to_json(const LatticePolytope& p);

PolytopeTuple tuple_from_json(const Json& j);
Json tuple_to_json(const PolytopeTuple& t);

MonomialConfiguration configuration_from_json(const Json& j);
Json configuration_to_json(const MonomialConfiguration& c);

LaurentSystem system_from_json(const Json& j);
Json system_to_json(const LaurentSystem& s);

Json parse_json_text(const std::string& text);

}  // namespace mixedvol
