#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "polysect/cone.hpp"
#include "polysect/criteria.hpp"
#include "polysect/drift.hpp"
#include "polysect/epsilon.hpp"
#include "polysect/mirkil.hpp"
#include "polysect/polytope.hpp"
#include "polysect/silhouette.hpp"

namespace polysect {

using Json = nlohmann::ordered_json;

/// Shortest decimal that round-trips the double.
std::string decimal(double value);
/// Decimal rendering of a rational, 17 significant digits.
std::string decimal(const Scalar& value);

/// {"exact": "a/b", "decimal": "..."}
Json to_json(const Scalar& value);
/// {"exact": [...], "decimal": [...]}
Json to_json(const Vec& v);
/// Array of decimal strings.
Json to_json(const Eigen::VectorXd& v);
Json to_json(const AffineFlat& flat);
Json to_json(const VPolytope& polytope);
Json to_json(const Section& section);
Json to_json(const PolyCone& cone);
Json to_json(const ConeSection& section);
Json to_json(const CriterionReport& report);
Json to_json(const EpsilonCert& cert);
Json to_json(const DriftConfig& cfg);
Json to_json(const DriftEvaluation& eval);
Json to_json(const MirkilResult& result);
Json to_json(const ShadowWalk& walk);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& json);

}  // namespace polysect
