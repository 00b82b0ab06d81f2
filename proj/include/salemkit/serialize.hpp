#pragma once

// JSON documents: torus witnesses, Gram/isometry files and the pieces of the
// CLI report. Integers that do not fit in int64 are written as strings;
// rationals are always strings "p/q" (or "p").

#include <optional>
#include <string>

#include <json.hpp>

#include "salemkit/k3.hpp"
#include "salemkit/lattice.hpp"
#include "salemkit/matrix.hpp"
#include "salemkit/polycore.hpp"
#include "salemkit/salem.hpp"
#include "salemkit/torus.hpp"

namespace salemkit::serialize {

using Json = nlohmann::ordered_json;

inline constexpr const char* kWitnessSchema = "salemkit.torus-witness/1";

Json integer_json(const Integer& v);
Json rational_json(const Rational& v);
Json poly_json(const IntPoly& p);  // descending coefficients
Json matrix_json(const IntMatrix& m);
Json interval_json(const RatInterval& iv);

// Readers throw input errors on malformed documents.
Integer integer_from(const Json& j);
Rational rational_from(const Json& j);
IntPoly poly_from(const Json& j);
IntMatrix matrix_from(const Json& j);
RatInterval interval_from(const Json& j);

Json witness_json(const torus::TorusWitness& w);
torus::TorusWitness witness_from(const Json& j);

struct IsometryFile {
  std::optional<std::string> name;
  lattice::Gram gram;
  IntMatrix matrix;
};
Json isometry_json(const IsometryFile& f);
IsometryFile isometry_from(const Json& j);

Json classification_json(const salem::SalemClassification& c);
Json locations_json(const RootLocationReport& r);
Json verify_json(const torus::VerifyReport& r);
Json eigenspaces_json(const lattice::EigenspaceReport& r);
Json mechanics_json(const k3::MechanicsReport& r);
Json k3_json(const k3::K3Report& r);
Json decision_json(const torus::TorusDecision& d);

}  // namespace salemkit::serialize
