#pragma once

#include <string>

#include <json.hpp>

#include "hyperlab/propositions.hpp"

namespace hyperlab::io {

using json = nlohmann::ordered_json;

/// {"points": n, "opens": [[sorted point indices], ...]} in canonical order.
json space_to_json(const FiniteTopology& t);
FiniteTopology space_from_json(const json& doc);

/// {"sets": [[sorted point indices], ...]}; the empty set is rejected.
json family_to_json(const SetFamily& f);
SetFamily family_from_json(const json& doc, int ground_size);

json subset_to_json(const Subset& s);
Subset subset_from_json(const json& doc, int ground_size);

json report_to_json(const props::CheckReport& rep);
json witness_to_json(const props::Witness& w);

props::SearchConfig search_config_from_json(const json& doc);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& doc);

}  // namespace hyperlab::io
