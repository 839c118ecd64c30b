#pragma once

#include <string>
#include <vector>

#include "bridgearc/model.hpp"

namespace bridgearc {

// A named built-in arc system, with a note on where its coordinates came
// from.
struct FixtureEntry {
  std::string name;  // addressable form, e.g. "@epsilon"
  ArcSystem system;
  std::string provenanceNote;
};

// All built-in fixtures, in a stable order.
const std::vector<FixtureEntry>& builtin_fixtures();

// The reference system: three upper chords over segments 1, 3, 5.
const ArcSystem& epsilon();

// The 3-bridge companion system of the knot 8_5 (pretzel P(3,3,2)), frozen
// in coordinates and re-derivable from a twist word on the reference system.
const ArcSystem& delta85();

// A frozen pair for which the rectangle condition holds (all nine tuples
// realized), found once by randomized twisting and kept as a positive
// control.
const ArcSystem& rc_positive_a();
const ArcSystem& rc_positive_b();

// Accepts "@name" for a builtin or a filesystem path; the result is parsed,
// validated, and canonicalized. Throws ParseError / std::invalid_argument.
ArcSystem load_system(const std::string& pathOrBuiltin);

}  // namespace bridgearc
