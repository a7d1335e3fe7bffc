#pragma once

#include <filesystem>
#include <string>

#include "fovregion/scene.hpp"

namespace fovregion {

// Scene file:
//   {"camera": {"theta", "phi", "width", "height", "h_c"},
//    "markers": [{"id", "points": [[x,y,z], ...], "normal": [x,y,z]}],
//    "reference_center": [x,y,z]}            (optional)
// Unknown keys are rejected. Normals are normalized on load. The result is
// validated; any problem throws ValidationError.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::filesystem::path& path);

std::string scene_to_json(const Scene& scene);

// Reads a whole file; throws ValidationError if it cannot be opened.
std::string read_text(const std::filesystem::path& path);

// Writes (and replaces) a file; throws IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace fovregion
