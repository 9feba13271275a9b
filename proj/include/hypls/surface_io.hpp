#pragma once

#include <string>

#include "hypls/surface.hpp"

// Surface specification documents: UTF-8 JSON with template, length and
// twist rules per curve family, and explicit cells for custom surfaces.
// parse(serialize(s)) is structurally equal to s.

namespace hypls {

std::string serialize_surface(const SurfaceSpec& spec);
SurfaceSpec parse_surface(const std::string& text);

Surface load_surface(const std::string& text);

} // namespace hypls
