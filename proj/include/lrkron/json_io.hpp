#pragma once

#include "lrkron/complement.hpp"
#include "lrkron/lr_engine.hpp"
#include "lrkron/tableau.hpp"

#include <json.hpp>

namespace lrkron {

using Json = nlohmann::ordered_json;

// Partition: array of integers, canonical (no trailing zeros).
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// GelfandPattern: array of arrays, top row first.
Json to_json(const GelfandPattern& g);
GelfandPattern gelfand_from_json(const Json& j);

// WeylTableau: { "shape": [...], "rows": [[symbols]...] }.
Json to_json(const WeylTableau& w);
WeylTableau weyl_from_json(const Json& j);

// Decomposition: { "lambda", "mu", "n", "terms": [{ "nu", "multiplicity",
// "eta_labels" }] }; eta_labels is null when labels are not attached.
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// ComplementaryPattern: rows top-down, null for unconstrained levels.
Json to_json(const ComplementaryPattern& p);

// ClassificationReport: context plus a map bound-name -> tag.
Json to_json(const ClassificationReport& r);

} // namespace lrkron
