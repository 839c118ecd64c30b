#pragma once
// Position criteria on a pair of bridge-arc systems: the rectangle
// condition (via face census, plus an independent scanning check), waves,
// the adjacency normal form, classification of adjacent crossing pairs,
// connecting pairs along one arc, and the no-partner certificate.
//
// All arc indices in the public structures here are 1-based, matching the
// way systems name their arcs (arc 1..3 in the file format and CLI).

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bridgearc/arrangement.hpp"

namespace bridgearc {

// Unordered pair of arc indices, 1-based, lo <= hi.
struct IndexPair {
  int lo = 0, hi = 0;
  static IndexPair of(int a, int b) {
    return a <= b ? IndexPair{a, b} : IndexPair{b, a};
  }
  auto operator<=>(const IndexPair&) const = default;
};

// ({i,j} of the first system, {k,l} of the second), i != j, k != l.
struct RectangleTuple {
  IndexPair first;
  IndexPair second;
  auto operator<=>(const RectangleTuple&) const = default;
};

std::vector<RectangleTuple> all_rectangle_tuples();

enum class RectangleDiagnostic { None, IsotopicInput };

struct RectangleReport {
  bool holds = false;
  std::vector<RectangleTuple> realized;           // sorted, deduplicated
  std::vector<RectangleTuple> missing;            // sorted
  std::map<RectangleTuple, int> witnesses;        // tuple -> face id
  RectangleDiagnostic diagnostic = RectangleDiagnostic::None;
};

// The rectangle condition: every one of the nine tuples must be realized by
// an empty four-cornered face whose sides alternate between the two systems
// and use two distinct arcs of each. Isotopic inputs never satisfy it and
// are flagged.
RectangleReport rectangle_report(const ArcSystem& a, const ArcSystem& b);

// Independent check of the same predicate that never consults the face
// census: it walks the crossing sequence of each arc of the first system
// and closes candidate quadrilaterals locally, discarding regions that
// contain punctures. Returns the realized tuples, sorted.
std::vector<RectangleTuple> rectangle_tuples_by_scan(const ArcSystem& a,
                                                     const ArcSystem& b);

// A subarc of one arc, delimited by two of its stops: position 0..S-1 is a
// crossing (0-based in that arc's crossing sequence), -1 is the arc's own
// start puncture and S its end puncture.
struct SubarcRef {
  int owner = 0;        // 0 = first argument system, 1 = second
  int arc = 0;          // 1-based
  int fromCrossing = 0;
  int toCrossing = 0;
  auto operator<=>(const SubarcRef&) const = default;
};

// A wave: a subarc of a target-system arc between two consecutive stops on
// one reference arc, returning to it on the same side, essential in the
// complement of the reference system. A stop is a transverse crossing or
// the host arc's own endpoint (which lies on the reference arc ending at
// the same puncture); crossing endpoints carry their transverse signs and
// must be opposite, a puncture endpoint takes the opposite of its partner
// (or +1,-1 when both endpoints are punctures) by convention.
struct Wave {
  int hostArc = 0;  // 1-based arc of the target system carrying the wave
  int baseArc = 0;  // 1-based arc of the reference system it returns to
  SubarcRef subarc;
  int signFirst = 0, signSecond = 0;  // +1 / -1, in subarc order
  auto operator<=>(const Wave&) const = default;
};

std::vector<Wave> find_waves(const ArcSystem& ref, const ArcSystem& target);

struct NormalFormViolation {
  char alongSystem = 'A';  // 'A' = first argument, 'B' = second
  int arcIndex = 0;        // 1-based, within the system walked along
  int positionAlongArc = 0;  // stop position of the pair's first stop
                             // (-1 = the arc's start puncture)
  int offendingOtherArcIndex = 0;  // 1-based arc of the other system
  auto operator<=>(const NormalFormViolation&) const = default;
};

struct NormalFormReport {
  bool holds = false;
  std::vector<NormalFormViolation> violations;
};

// Two systems are in normal form when, along every arc of either one, no
// two adjacent stops (crossings or the walked arc's own endpoints) lie on
// the same arc of the other in an essential way: the run between the stops,
// closed up along that other arc, separates the other system's remaining
// two arcs. Inessential adjacent pairs (the closed curve bounds to one
// side) do not obstruct normal form.
NormalFormReport normal_form_report(const ArcSystem& a, const ArcSystem& b);

enum class AdjacentPairKind { WavePair, ParallelConnect, Mixed, Unclassified };

struct AdjacentPairClass {
  NormalFormViolation pair;  // alongSystem is always 'A' (the reference)
  AdjacentPairKind kind = AdjacentPairKind::Unclassified;
  int connectArc = 0;  // 1-based reference arc for ParallelConnect / Mixed
  auto operator<=>(const AdjacentPairClass&) const = default;
};

// Classifies every adjacent pair along the reference system whose two
// crossings lie on one target arc: the target subarc between them is a wave
// pair, a parallel connecting pair, or a mixed pair; anything else is
// reported unclassified.
std::vector<AdjacentPairClass> classify_adjacent_pairs(const ArcSystem& ref,
                                                       const ArcSystem& target);

// The pairs {i,j} of arcs of `b` joined by some subarc of the given arc of
// `gamma` (1-based arcIndex) with interior disjoint from b: read off from
// consecutive crossings along that arc in the reduced superposition.
std::set<IndexPair> connecting_pairs(const ArcSystem& gamma, int arcIndex,
                                     const ArcSystem& b);

struct NoPartnerCertificate {
  int witnessArc = 0;      // 1-based arc of the candidate system
  IndexPair missingPair;   // 1-based arcs of the base system
  auto operator<=>(const NoPartnerCertificate&) const = default;
};

struct CertifyResult {
  std::optional<NoPartnerCertificate> certificate;
  bool isotopicDegenerate = false;
};

// Searches the candidate system for an arc witnessing that the pair cannot
// satisfy the rectangle condition: a non-degenerate arc whose connecting
// pairs miss some {i,j}. Arcs that avoid the base system entirely and are
// isotopic to one of its arcs are degenerate and skipped; if all three are
// degenerate the systems coincide up to isotopy and the result says so.
CertifyResult certify_no_rc_partner(const ArcSystem& candidate,
                                    const ArcSystem& base);

// --- support used by the tests ---------------------------------------------

// Sign of a crossing with respect to the arcs' orientations (each arc runs
// from its lower-numbered puncture). `refOwner` says which system counts as
// the reference; flipping it flips nothing (only opposite/equal matters and
// the comparison is symmetric).
int crossing_sign(const Arrangement& reduced, int crossingVertex, int refOwner);

// Oracle for wave essentiality: the wave together with the reference subarc
// between its endpoints closes to a curve; the wave is essential exactly
// when that curve separates the other two reference arcs. Expects the
// reduced arrangement the wave was found in.
bool wave_separates(const Arrangement& reduced, const Wave& w);

}  // namespace bridgearc
