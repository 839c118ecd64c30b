#pragma once
// System-level isotopy test: two systems are equivalent exactly when their
// arcs pair up by endpoints and, once the superposition is reduced, every
// matched pair of arcs cobounds an empty two-sided region (a lens face).

#include "bridgearc/arrangement.hpp"

namespace bridgearc {

bool are_isotopic(const ArcSystem& a, const ArcSystem& b);

// True when the face is an empty lens between arc `i` of the first system
// and arc `j` of the second (both 0-based).
bool face_is_lens_between(const Face& f, int i, int j);

}  // namespace bridgearc
