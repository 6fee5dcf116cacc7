#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "revivals/phase_geometry.hpp"

namespace revivals {

/// Parses a loop descriptor object:
///
///   {"primitive": "circle",  "center": [x, y], "radius": r, "samples": n, "orientation": "ccw"}
///   {"primitive": "ellipse", "center": [x, y], "semiaxes": [a, b], "rotation": rad, "samples": n}
///   {"primitive": "polygon", "vertices": [[x, y], ...], "orientation": "cw"}
///   {"points": [[x, y], ...]}
///
/// "orientation" defaults to "ccw" and is not accepted with "points".
/// Errors are ConfigErrors naming the field as `where.<field>`.
LoopDescriptor loop_descriptor_from_json(const nlohmann::json& j, const std::string& where);

/// Reads a loop descriptor file.
LoopDescriptor load_loop_descriptor(const std::filesystem::path& path);

}  // namespace revivals
