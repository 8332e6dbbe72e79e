#pragma once

#include <json.hpp>

#include "monocert/certify.hpp"
#include "monocert/cyclotomic.hpp"
#include "monocert/linalg.hpp"
#include "monocert/pham.hpp"

namespace mono::jsonio {

using json = nlohmann::json;

// Field elements carry their conductor and exact power-basis coordinates as
// rational strings; every serialization below round-trips bit-for-bit.
json cyclo_to_json(const CycloNum& a);
CycloNum cyclo_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json pl_datum_to_json(const pham::PLDatum& d);
pham::PLDatum pl_datum_from_json(const json& j);

json params_to_json(const invariants::Params& p);
invariants::Params params_from_json(const json& j);

json certificate_to_json(const certify::DensityCertificate& c);
certify::DensityCertificate certificate_from_json(const json& j);

// Canonical text rendering (sorted keys, fixed indentation, trailing newline);
// byte-identical across runs for equal values.
std::string dump_canonical(const json& j);

}  // namespace mono::jsonio
