#ifndef HWB_JSON_IO_HPP
#define HWB_JSON_IO_HPP

#include "hwb/autos.hpp"
#include "hwb/verify.hpp"

namespace hwb {

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; both forms are accepted on input.
Json integer_to_json(const Integer& c);
Integer integer_from_json(const Json& j);

/// {"": 1, "1,2": 1, "2,1": -1}; keys in (degree, dictionary) order.
Json to_json(const ReducedPoly& p);
ReducedPoly poly_from_json(const Json& j, int rank);

Json to_json(const LyndonCoords& coords);
LyndonCoords coords_from_json(const Json& j);

/// {n, perm, conj}
Json to_json(const WeldedAuto& phi);
WeldedAuto auto_from_json(const Json& j);

/// {n, levels: [{m, residual, coords: [{i, vector}]}]}
Json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);

/// {name, params, passed, details}
Json to_json(const CheckReport& r);

} // namespace hwb

#endif
