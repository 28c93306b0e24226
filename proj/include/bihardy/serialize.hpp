#ifndef BIHARDY_SERIALIZE_HPP
#define BIHARDY_SERIALIZE_HPP

#include <cstdint>
#include <json.hpp>
#include <vector>

#include "bihardy/beurling.hpp"

namespace bihardy {

/// Coefficient list [[m, n, re, im], ...] in row-major order; entries with
/// both |re| and |im| below 1e-300 are omitted.
nlohmann::json element_to_json(const HardyElement& f);

/// Parse a coefficient list into `window`. Raises InvalidInput (naming the
/// offending entry) on malformed entries, out-of-window indices, non-finite
/// values, or duplicate (m,n) pairs.
HardyElement element_from_json(const nlohmann::json& entries, const DegreeWindow& window);

nlohmann::json window_to_json(const DegreeWindow& w);
DegreeWindow window_from_json(const nlohmann::json& j);

/// { "window": {"d1":..,"d2":..,"margin":..}, "generators": [[entry,...],...] }
struct GeneratorFile {
  DegreeWindow window;
  GeneratorSet gens;
};
GeneratorFile generator_set_from_json(const nlohmann::json& j);

/// The stable machine-readable analysis report.
nlohmann::json build_analysis_report(const BeurlingVerdict& verdict,
                                     const std::vector<IdentityRecord>& records,
                                     const Tolerances& tols, std::uint64_t seed);

}  // namespace bihardy

#endif  // BIHARDY_SERIALIZE_HPP
