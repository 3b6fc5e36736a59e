#pragma once

#include <string>

#include <json.hpp>

#include "parityfactor/constructions.hpp"
#include "parityfactor/factor.hpp"
#include "parityfactor/spectral.hpp"
#include "parityfactor/theorem.hpp"

namespace pf {

nlohmann::json spectrum_json(const SpectrumResult& spec);
nlohmann::json certificate_json(const FactorCertificate& cert);
nlohmann::json report_json(const TheoremReport& rep);
nlohmann::json tightness_json(const TightnessReport& rep);
// Sidecar metadata for a family instance: {"U": [...], "copies": [[...]],
// "params": {"r":, "h":, "l":}}.
nlohmann::json family_json(const FamilyInstance& fam);

// Degree-constraint input, auto-detected:
//  - JSON object {"g": [...], "f": [...]}  (arrays of length n), or
//  - text lines:  "all <g> <f>"  |  "v <id> <g> <f>"  |  "# comment".
// Text rules: `all` assigns every vertex and may be overridden by later `v`
// lines; every vertex must end up assigned. Range/parity validation is left
// to DegreeConstraint::validate.
DegreeConstraint parse_constraints(const std::string& text, int n);

// Fixed-precision float formatting for text output (12 significant digits).
std::string format_number(double x);

}  // namespace pf
