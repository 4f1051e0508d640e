#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hologate/bargmann.hpp"
#include "hologate/holo_poly.hpp"
#include "hologate/upl.hpp"

namespace hologate {

// Keys are emitted in insertion order so that equal data always dumps to
// equal bytes.
using Json = nlohmann::ordered_json;

// Shortest round-trip rendering: "0", "-2.5", "i", "1-2i".
std::string format_complex(Complex value);

Json space_to_json(const BargmannSpace& space);
BargmannSpace space_from_json(const Json& source);

// {"dim":2,"max_degree":2,"terms":[{"idx":[1,1],"re":1.0,"im":0.0}]} with
// terms ascending in index. max_degree may be omitted on input; it then
// defaults to the highest total degree present.
Json poly_to_json(const HoloPoly& f);
HoloPoly poly_from_json(const Json& source);

Json record_to_json(const PatternRecord& record);
Json catalog_to_json(const std::vector<PatternRecord>& catalog);

Json program_to_json(const UplProgram& program);
UplProgram program_from_json(const Json& source);

Json schedule_to_json(const std::vector<Layer>& layers);
std::vector<Layer> schedule_from_json(const Json& source);

Json trace_to_json(const std::vector<TraceEntry>& trace);

}  // namespace hologate
