#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "icnof/channel.hpp"
#include "icnof/fm_oracle.hpp"
#include "icnof/gap.hpp"
#include "icnof/region.hpp"

namespace icnof {

using nlohmann::json;

/**
 * Reads {"snr1","snr2","inr12","inr21","snr_fb1","snr_fb2"} in linear scale, or
 * the same keys with a "_db" suffix. Mixing the two forms, missing keys and
 * non-numeric values raise InputError naming the field.
 */
ChannelParams params_from_json(const json& j);
ChannelParams load_params(const std::string& path);

json to_json(const ChannelParams& p);
json to_json(const BoundSet& b);  // +inf fields become null
json to_json(const Region& r);
json to_json(const CodingScheme& s);
json to_json(const GapResult& g);
json to_json(const GapLedger& g);
json to_json(const Theorem3Report& r);
json to_json(const EquivalenceReport& r);
json to_json(const FmCheckSummary& s);

/// Number with 9 significant digits, as used in every CSV.
std::string format_sig9(double v);

void write_frontier_csv(std::ostream& os, std::span<const RatePair> points);
void write_surface_csv(std::ostream& os, std::span<const SurfaceCell> cells);

}  // namespace icnof
