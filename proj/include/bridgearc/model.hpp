#pragma once
// Core model: the 6-punctured sphere and equatorial chord coordinates for
// systems of bridge arcs.
//
// Fixed layout: punctures p1..p6 sit counterclockwise on a reference equator
// circle; segment s_k is the open equator arc from p_k to p_{k+1} (indices
// cyclic, s6 runs from p6 back to p1). An arc is recorded by its ordered
// transverse crossings with the equator ("events"); the chord between two
// consecutive events is embedded in one hemisphere, and the hemisphere
// alternates after every event starting from `startSide`. The Upper
// hemisphere is drawn as the inside of the equator disk, Lower as the
// outside; all cyclic orders below are counterclockwise in that picture.
//
// Within one segment, `rank` orders the crossing points of a single system
// from p_k toward p_{k+1}, densely numbered 1..m.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bridgearc {

enum class Hemisphere : std::uint8_t { Upper, Lower };

inline Hemisphere flip(Hemisphere h) {
  return h == Hemisphere::Upper ? Hemisphere::Lower : Hemisphere::Upper;
}
inline char hemisphere_tag(Hemisphere h) {
  return h == Hemisphere::Upper ? 'U' : 'L';
}

// One transverse crossing of an arc with the equator.
struct Event {
  int segment = 0;  // 1..6
  int rank = 0;     // 1..m from p_segment toward p_{segment+1}
  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;
};

// A single bridge arc in equatorial chord coordinates.
struct ArcCoord {
  int startPuncture = 0;                     // 1..6
  Hemisphere startSide = Hemisphere::Upper;  // hemisphere of the first chord
  std::vector<Event> events;                 // in order from startPuncture
  int endPuncture = 0;                       // 1..6

  int chordCount() const { return static_cast<int>(events.size()) + 1; }
  // Hemisphere of chord index c (0-based; chord 0 leaves startPuncture).
  Hemisphere chordSide(int c) const {
    return (c % 2 == 0) ? startSide : flip(startSide);
  }
  Hemisphere lastSide() const { return chordSide(chordCount() - 1); }
  friend bool operator==(const ArcCoord&, const ArcCoord&) = default;
};

// Three pairwise disjoint bridge arcs pairing up the six punctures.
struct ArcSystem {
  std::string name;
  std::array<ArcCoord, 3> arcs;
};

inline bool same_coords(const ArcSystem& a, const ArcSystem& b) {
  return a.arcs == b.arcs;
}

// ---------------------------------------------------------------------------
// Raw (pre-validation) descriptions, as produced by the parser.

struct RawArc {
  int startPuncture = 0;
  int endPuncture = 0;
  std::string side;  // expected "U" or "L"
  std::vector<Event> events;
};

struct RawSystem {
  std::string name;
  std::vector<RawArc> arcs;
};

RawSystem to_raw(const ArcSystem& a);

// ---------------------------------------------------------------------------
// Validation.

enum class ViolationKind {
  NonPerfectMatching,  // arc count, endpoint range, or endpoint matching broken
  RankGap,             // a segment's ranks are not 1..m
  RankClash,           // two events of the system share a segment rank
  SelfCrossing,        // two same-hemisphere chords of the system interleave
  HemisphereMismatch,  // hemisphere tag is not U/L
};

const char* violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string where;   // e.g. "arc 2", "segment 3"
  std::string detail;  // human-readable explanation
};

struct ValidationResult {
  std::optional<ArcSystem> system;  // engaged iff violations is empty
  std::vector<Violation> violations;
  bool ok() const { return system.has_value(); }
};

// Checks every type invariant and either returns the validated system or the
// full list of violated invariants with their locations.
ValidationResult validate_system(const RawSystem& raw);

// Convenience for fixtures and internally generated systems: validates and
// throws std::invalid_argument on any violation.
ArcSystem must_system(const RawSystem& raw);

// Re-checks an already-typed system (used to re-assert invariants after
// moves); returns the violations, empty when valid.
std::vector<Violation> check_invariants(const ArcSystem& a);

// ---------------------------------------------------------------------------
// Canonicalization: removes arc-equator bigons (a chord returning to the same
// segment at adjacent ranks cuts off an empty disk), renumbers ranks densely.
// Idempotent; the result is isotopic to the input.
ArcSystem canonicalize_system(const ArcSystem& a);

// ---------------------------------------------------------------------------
// Small utilities shared across modules.

// Endpoint pairing as three sorted pairs, sorted lexicographically.
std::array<std::pair<int, int>, 3> endpoint_pairing(const ArcSystem& a);

// Deterministic single-line encoding of the coordinates (used for hashing,
// dedup buckets and stable sort orders; not the file format).
std::string coordinate_key(const ArcSystem& a);

// Total number of equator crossings over all arcs.
int total_events(const ArcSystem& a);

// True iff two chords of one hemisphere disk, given by the word indices of
// their endpoints among n cyclic points, cross: all endpoints distinct and
// interleaving. Chords sharing an endpoint never cross.
bool chords_interleave(int n, int xa, int xb, int ya, int yb);

// The cyclic word of one system: every puncture and event in counterclockwise
// equator order starting at p1. Used by validation and by the superposition.
struct SystemWordPoint {
  bool isPuncture = false;
  int puncture = 0;  // when isPuncture
  int arc = 0;       // when event: arc index 0..2
  int eventIndex = 0;  // position in that arc's event list
  int segment = 0;   // segment the point lies on (punctures: the one they start)
  int rank = 0;      // events only
};
std::vector<SystemWordPoint> system_word(const ArcSystem& a);

}  // namespace bridgearc
