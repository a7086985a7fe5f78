#pragma once

#include <json.hpp>
#include <string>

#include "strongedge/colouring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

// { "palette": k, "colours": { "u-v": c, ... } }, labels as vertex ids.
// Uncoloured edges are omitted.
nlohmann::json colouring_to_json(const Graph& g, const PartialColouring& c);

// Accepts "u-v" or "v-u" keys; extra top-level members are ignored.
PartialColouring colouring_from_json(const Graph& g, const nlohmann::json& doc);

// DOT graph; when a colouring is given, its colour index labels each edge.
std::string to_dot(const Graph& g, const PartialColouring* c = nullptr);

// FNV-1a, used to fingerprint input files in reports.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace strongedge
