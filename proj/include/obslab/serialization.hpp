#pragma once

#include <json.hpp>

#include "obslab/diophantine.hpp"
#include "obslab/inequalities.hpp"
#include "obslab/observation.hpp"
#include "obslab/states.hpp"

namespace obslab {

using Json = nlohmann::json;

/// Number or arithmetic expression string ("pi/2").
double json_number(const Json& value, const char* what);
Interval json_interval(const Json& value, const char* what);

Json to_json(const RectangleGeometry& geometry);
Json to_json(const ObservationSpec& spec);
Json to_json(const EnergyWeight& weight);

/// {geometry, K1, K2, coefficients: [[k1, k2, Re a, Im a, Re b, Im b], ...]}.
/// Doubles are written in shortest round-trip form, so the round trip is exact.
Json to_json(const SpectralState& state);
SpectralState state_from_json(const Json& json);

/// Mode order header plus the matrix as [[re, im], ...] rows over the doubled index.
Json to_json(const GramForm& gram);
GramForm gram_from_json(const Json& json);
ObservationSpec spec_from_json(const Json& json);

Json to_json(const ConstantReport& report, bool include_argmin = false);
Json to_json(const Prediction& prediction);
Json to_json(const VerificationReport& report);
Json to_json(const MabResult& result);
Json to_json(const SymmetryConstants& constants);
Json to_json(const AlgebraicPointSet& points, const DiophantineReport& report);
Json to_json(const InequalityCheck& check);

/// NaN and infinities become null.
Json finite_or_null(double x);

}  // namespace obslab
