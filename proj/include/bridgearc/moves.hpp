#pragma once
// Sphere homeomorphisms (catalog half twists) and arc-rewiring enumeration.
//
// A half twist is supported in a small disk straddling the equator around two
// adjacent punctures; it exchanges the two punctures, flips the hemisphere of
// everything inside the disk, and drags every strand entering the disk
// halfway around its boundary collar. Twists are used for metamorphic
// invariance testing only.
//
// Rewiring replaces one arc of a system by another embedded arc with the same
// endpoints, disjoint from the two kept arcs; the result is again a system of
// bridge arcs for the same tangle. Enumeration walks all such replacements up
// to a crossing bound and dedups by isotopy class.

#include <cstdint>
#include <string>
#include <vector>

#include "bridgearc/model.hpp"

namespace bridgearc {

// One rewiring step: replace arc `arcIndex` (1..3) by `replacement`, which
// must have the same endpoints and be disjoint from the two kept arcs.
struct RewireMove {
  int arcIndex = 1;
  ArcCoord replacement;
};

// A multiple of a half twist around one of the nine catalog circles. Each
// circle encloses a pair of adjacent punctures {p_k, p_{k+1}}; the three
// "arcN-circle" names are the boundary circles of neighborhoods of the
// standard reference arcs and coincide with the matching pair circles.
struct TwistSpec {
  std::string circle = "pair12";
  int halfTurns = 1;  // positive = counterclockwise half turns
};

// The nine catalog circle identifiers.
const std::vector<std::string>& twist_circle_names();

// Left puncture k of the pair {p_k, p_{k+1}} a named circle encloses.
// Throws std::invalid_argument for unknown names.
int twist_circle_left_puncture(const std::string& name);

// Image of the system under the twist, canonicalized. Negative halfTurns
// twist clockwise; zero returns the canonicalized input.
ArcSystem apply_twist(const TwistSpec& t, const ArcSystem& a);

// Caps for the enumeration; generous defaults keep runs finite without
// truncating the scales the verification harness uses.
struct EnumerationLimits {
  std::uint64_t candidateBudget = 400'000'000;  // search steps examined
  std::size_t maxClasses = 1'000'000;           // classes kept
};

struct EnumerationResult {
  std::vector<ArcSystem> systems;  // one representative per isotopy class
  bool truncated = false;          // a cap was hit; the list is partial
};

// Every isotopy class of systems obtained from `a` by replacing arc
// `arcIndex` (1..3) with an embedded arc of at most maxCrossings equator
// crossings, keeping the other two arcs pointwise. Always contains a's own
// class. Deterministic order.
EnumerationResult enumerate_replacements(const ArcSystem& a, int arcIndex,
                                         int maxCrossings,
                                         const EnumerationLimits& lim = {});

// Breadth-first closure of enumerate_replacements over all three arc indices
// to depth `rewires`, globally deduplicated by isotopy class, sorted by
// coordinate key. `jobs` parallelizes the per-candidate classification work
// without affecting the result.
EnumerationResult enumerate_systems(const ArcSystem& base, int rewires,
                                    int maxCrossings,
                                    const EnumerationLimits& lim = {},
                                    int jobs = 1);

}  // namespace bridgearc
