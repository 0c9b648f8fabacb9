#ifndef BLF_RENDER_HPP
#define BLF_RENDER_HPP

#include <string>

#include "blf/diagram.hpp"

namespace blf {

// Static SVG 1.1 picture of a base diagram: boundary circles drawn as
// concentric curves in canonical order, corners as dots, the component
// kind and parity lettered next to each circle, Lefschetz points as
// crosses in the interior. Byte-stable for a fixed diagram.
std::string render_svg(const FibrationDiagram& d);

}  // namespace blf

#endif
