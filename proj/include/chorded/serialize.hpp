#pragma once

#include <string>

#include <json.hpp>

#include "chorded/chordality.hpp"
#include "chorded/cycles.hpp"
#include "chorded/resolution.hpp"

namespace chorded {

using json = nlohmann::ordered_json;

json to_json(const Face& f, const std::vector<std::string>& labels);
json to_json(const SimplicialComplex& cx);
json to_json(const MonomialIdeal& ideal);
json to_json(const Chain& chain, const std::vector<std::string>& labels);
json to_json(const CycleCertificate& cert);
json to_json(const ChordSetCertificate& cert);
json to_json(const DChordedVerdict& v);
json to_json(const ChordedVerdict& v);
json to_json(const SpecialCycleScan& scan);
json to_json(const BettiTable& table);
json to_json(const ResolutionReport& report);

}  // namespace chorded
