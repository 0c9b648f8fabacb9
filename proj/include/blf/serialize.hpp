#ifndef BLF_SERIALIZE_HPP
#define BLF_SERIALIZE_HPP

// Versioned JSON document for diagrams. Serialization always emits the
// canonical rendering: keys sorted, circles and ids in canonical_form
// order, UTF-8, newline-terminated. canonical_bytes additionally drops
// the history field, so byte equality there is exactly is_isomorphic.

#include <string>

#include "json.hpp"

#include "blf/chartforms.hpp"
#include "blf/diagram.hpp"

namespace blf {

inline constexpr int kDiagramFormatVersion = 1;
inline constexpr const char* kChartFrameTag = "logpolar-frame-v1";

nlohmann::json diagram_to_json(const FibrationDiagram& d, bool include_history = true);
FibrationDiagram diagram_from_json(const nlohmann::json& doc);

std::string serialize_diagram(const FibrationDiagram& d);
FibrationDiagram parse_diagram(const std::string& bytes);

std::string canonical_bytes(const FibrationDiagram& d);

// Chart forms travel as a frame tag plus six exact coefficients in the
// fixed frame order.
nlohmann::json form_to_json(const EllipticChartForm& w);
EllipticChartForm form_from_json(const nlohmann::json& doc);

}  // namespace blf

#endif
