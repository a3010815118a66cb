#pragma once

#include <iosfwd>
#include "json.hpp"

#include "chein/analysis.hpp"
#include "chein/classifier.hpp"
#include "chein/double_construction.hpp"
#include "chein/morphisms.hpp"

namespace chein {

using Json = nlohmann::ordered_json;

Json to_json(const PropertyReport& r);
Json to_json(const ElementMap& m);
Json to_json(const ClassificationReport& r);
// Sidecar describing where a constructed table came from.
Json sidecar_json(const DoubledMagma& d);

// One row per matrix: quoted matrix string, then the ten flags as 0/1.
void write_csv(std::ostream& out, const ClassificationReport& r);

}  // namespace chein
