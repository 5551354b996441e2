#pragma once

// nlohmann/json conversions for the persisted types. Kept out of the public
// headers so only translation units that serialize pay for json.hpp.

#include "json.hpp"

#include "vulnloc/corpus.hpp"
#include "vulnloc/probe.hpp"

namespace vulnloc {

using json = nlohmann::json;

namespace corpus {
json to_json(const Entry& entry);
Entry entry_from_json(const json& j);
}  // namespace corpus

namespace probe {
json to_json(const ProbeOutcome& outcome);
ProbeOutcome outcome_from_json(const json& j);
}  // namespace probe

}  // namespace vulnloc
