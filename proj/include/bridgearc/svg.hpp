#pragma once

#include <optional>
#include <string>

#include "bridgearc/model.hpp"

namespace bridgearc {

// Standalone SVG picture of an arc system, drawn as two disks (upper and
// lower hemisphere) with straight chords. With `other` present, draws the
// reduced arrangement of the pair instead: both systems' chords, one marker
// per crossing (class "xing"), and a ring (class "witness") on each corner
// of every rectangle-witness face.
std::string render_svg_text(const ArcSystem& a,
                            const std::optional<ArcSystem>& other);

void render_svg(const ArcSystem& a, const std::optional<ArcSystem>& other,
                const std::string& path);

}  // namespace bridgearc
