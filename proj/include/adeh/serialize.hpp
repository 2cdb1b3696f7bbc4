#pragma once

#include "adeh/hirota.hpp"

#include <filesystem>
#include <json.hpp>
#include <string>

namespace adeh {

/// Insertion-ordered JSON so output is deterministic and follows the schemas.
using Json = nlohmann::ordered_json;

Json to_json(const CycloNum &a);
/// Throws UsageError on a malformed object.
CycloNum cyclo_from_json(const Json &j);

/// [[m, mult], ...] with an optional third entry for nonzero tags.
Json to_json(const Monomial &mono);
Monomial monomial_from_json(const Json &j);

Json roots_json(const RootSystem &rs, const CoxeterData &cd);
Json coeffs_json(const CoeffTable &ct, int digits);
Json hirota_json(const HirotaSystem &sys);
Json residuals_json(const ResidualReport &report);

/// {"truncation_weight": T, "coeffs": [{"monomial": [...], "hbar_poly": [["p/q", k], ...]}, ...]}.
TauSeries tau_from_json(const Json &j);
Json to_json(const TauSeries &tau);

/// Golden file: {"type": ..., "h": ..., "g": [CycloNum, ...]}.
Json golden_json(const AdeType &t, int h, const std::vector<CycloNum> &g);
std::vector<CycloNum> golden_values(const Json &j, const AdeType &expected);
std::filesystem::path golden_path(const std::filesystem::path &dir, const AdeType &t);

/// Reads and parses a JSON file; UsageError on I/O or syntax problems.
Json read_json_file(const std::filesystem::path &p);

/// Decimal rendering of the real part with the given significant digits.
std::string approx_string(const CycloNum &a, int digits);

} // namespace adeh
