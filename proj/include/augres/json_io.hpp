#pragma once

#include "augres/augment.hpp"
#include "augres/braid.hpp"
#include "augres/category.hpp"
#include "augres/diagram.hpp"
#include "augres/disks.hpp"
#include "augres/dga.hpp"
#include "augres/fixtures.hpp"
#include "augres/resolution.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace augres {

using Json = nlohmann::json;

// All document builders emit objects whose keys serialize in sorted order
// (nlohmann::json's map backing), so dump_stable output is byte-stable.
std::string dump_stable(const Json& doc);

Json braid_json(const BraidSpec& spec);

Json dga_document(const BraidSpec& spec, const Dga& dga, bool d_squared_zero);

// Per-generator disk dump appended to a dga document under "disks".
Json disks_json(const ClosureDiagram& diagram, const GeneratorId& at,
                const DiskHarvest& harvest);

Json augs_document(const BraidSpec& spec, const Dga& dga,
                   const std::vector<Augmentation>& augs);

struct LchPairEntry {
    std::size_t eps1 = 0, eps2 = 0;
    LchData data;
};
Json lch_document(const BraidSpec& spec, const std::vector<LchPairEntry>& pairs);

Json resolve_document(const ResolutionData& r, const std::string& engine_name);

Json mu_document(const BraidSpec& spec, const std::vector<std::size_t>& aug_indices,
                 const std::vector<GeneratorId>& inputs,
                 const std::set<GeneratorId>& result);

struct VerifyAssertion {
    std::string name;
    bool passed = false;
    std::string detail;
    std::vector<std::string> counterexamples;
};
Json verify_document(const BraidSpec& spec, const GeneratorId& resolved,
                     std::size_t pairs,
                     const std::vector<VerifyAssertion>& assertions);

Json verify_paper_document(const std::vector<FixtureResult>& fixtures);

struct SweepRow {
    std::string braid;
    std::optional<std::string> resolved;
    bool d_squared_zero = false;
    std::optional<bool> chain_map;
    std::optional<bool> lemma31;
    std::optional<std::size_t> thm32_failures, cor33_failures;
    std::optional<std::size_t> pairs;
};
Json sweep_document(int p_max, int q_max, const std::string& engine_name,
                    const std::vector<SweepRow>& rows);

// Minimal JSON-Schema subset: type, properties, required, items, enum,
// additionalProperties (boolean or schema). Returns the first violation as
// "path: message", or nullopt when the document conforms.
std::optional<std::string> validate_against_schema(const Json& doc,
                                                   const Json& schema);

// Reads and parses a JSON file; throws std::runtime_error on I/O or parse
// failure.
Json load_json_file(const std::string& path);

}  // namespace augres
