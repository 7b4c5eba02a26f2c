#pragma once

// JSON file formats (state sets, protocol trees, reports) and the
// figure-style grid renderer (text / svg).

#include "hnl/certify.hpp"
#include "hnl/protocols.hpp"
#include "hnl/state.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace hnl {

using nlohmann::json;

// StateSetFile: {"schema":1,"field":"cyclo-rational","space":{...},"states":[...]}
// Each state is {"label":..., "kets":[one ket expression per party]}.
json state_set_to_json(const StateSet& set);
StateSet state_set_from_json(const json& j);

void write_state_set(const std::string& path, const StateSet& set);
StateSet read_state_set(const std::string& path);

// Protocol tree: {"party":"A","measure":"0-3;4-6","children":{"1":...}} or
// {"party":"B","project":["|0>-|1>",...],"children":{"1":...,"rest":...}};
// leaves are the string "leaf".  Projective kets need the set's space to fix
// dimensions, so reading takes the SpaceSpec.
json protocol_to_json(const ProtocolTree& tree);
ProtocolTree protocol_from_json(const json& j, const SpaceSpec& space);

void write_protocol(const std::string& path, const ProtocolTree& tree);
ProtocolTree read_protocol(const std::string& path, const SpaceSpec& space);

// report fragments
json to_json(const OrthogonalityReport& r);
json to_json(const CliqueWitness& w);
json to_json(const IrredundancyCertificate& c);
json to_json(const HermitianBasis& b);  // summary: no matrix entries
json to_json(const IrreducibilityCertificate& c);
json to_json(const IndistinguishabilityCertificate& c);
json to_json(const Classification& c);

// Grid rendering: bipartite sets only (throws otherwise).  States with at
// most four grid coordinates are drawn as labeled squares; broad-support
// states are listed in a legend.
std::string render_text(const StateSet& set);
std::string render_svg(const StateSet& set);

}  // namespace hnl
