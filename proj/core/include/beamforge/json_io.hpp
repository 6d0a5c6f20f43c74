#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "beamforge/bimodal.hpp"
#include "beamforge/convert.hpp"
#include "beamforge/ee_families.hpp"
#include "beamforge/inventory.hpp"
#include "beamforge/mode_sets.hpp"
#include "beamforge/oracle.hpp"
#include "beamforge/single_beam.hpp"
#include "beamforge/solution.hpp"
#include "beamforge/unimodal.hpp"

namespace beamforge {

using nlohmann::json;

/// Serializes with every float at 17 significant digits (%.17g). NaN and
/// infinities become null. indent < 0 gives a single line.
std::string dump(const json& j, int indent = 2);
void write(std::ostream& os, const json& j, int indent = 2);

json to_json(const Params& p);
json to_json(const ModalSolution& sol, const Params& p, const Spectrum& spec);
json to_json(const EEFamily& fam);
json to_json(const ModeSetPartition& part);
json to_json(const UAmplitudeSet& set);
json to_json(const BimodalInvariants& inv);
json to_json(const Inventory& inv, const Spectrum& spec);
json to_json(const OracleResult& res, const MatchReport& report, const Params& p,
             const Spectrum& spec);
json to_json(const SingleBeamSolutionSet& set);
json to_json(const ConversionResult& res);

/// Reads {"modes":[{"n","alpha","gamma"}], "tag"?}. Throws ValidationError on malformed input.
ModalSolution solution_from_json(const json& j);

}  // namespace beamforge
