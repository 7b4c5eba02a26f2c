#pragma once

// Shipped reproduction pipelines: family + measurement + builtin protocol +
// witness subsets for each example id, run through the classifier.

#include "hnl/certify.hpp"
#include "hnl/families.hpp"
#include "hnl/measurement.hpp"
#include "hnl/protocols.hpp"

#include <string>
#include <vector>

namespace hnl {

struct PipelineSpec {
    std::string id;
    FamilyId family;
    std::vector<LocalMeasurement> measurements;
    Verdict expected = Verdict::NotEstablished;
};

// ids: example1, example2, example3, example4, multiparty
PipelineSpec pipeline_spec(const std::string& id);

// Per-outcome witness subsets (tilde labels) for the spec's measurement
// outcomes; empty inner lists mean "use the full outcome set".
std::vector<std::vector<std::string>> pipeline_witnesses(const PipelineSpec& spec,
                                                         const StateSet& set);

struct PipelineReport {
    PipelineSpec spec;
    Classification classification;
    bool matches_expected = false;
};

PipelineReport run_pipeline(const std::string& id);

}  // namespace hnl
