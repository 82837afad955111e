#pragma once

#include <homoglab/homogeneity.hpp>
#include <homoglab/presentation.hpp>
#include <homoglab/rado.hpp>
#include <homoglab/structure.hpp>
#include <homoglab/verify.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace homoglab::cli
{
    using Json = nlohmann::ordered_json;

    auto to_json(const VertexSet & s) -> Json;
    auto to_json(const PartialMap & f) -> Json;
    auto to_json(const AnalysisReport & r) -> Json;
    auto to_json(const AgePartition & p) -> Json;
    auto to_json(const HomogReport & r) -> Json;
    auto to_json(const SuiteReport & r) -> Json;
    auto to_json(const RadoConstruction & c) -> Json;
    auto to_json(const Requirement & r) -> Json;
    auto to_json(const MbClassification & c) -> Json;
    auto to_json(const WitnessResult & w) -> Json;

    /// The fixed report envelope: tool, version, command echo, payload.
    auto envelope(const std::vector<std::string> & command, Json payload) -> Json;
}
