#include "bridgearc/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bridgearc/check.hpp"

namespace bridgearc {

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NonPerfectMatching: return "NonPerfectMatching";
    case ViolationKind::RankGap: return "RankGap";
    case ViolationKind::RankClash: return "RankClash";
    case ViolationKind::SelfCrossing: return "SelfCrossing";
    case ViolationKind::HemisphereMismatch: return "HemisphereMismatch";
  }
  return "?";
}

RawSystem to_raw(const ArcSystem& a) {
  RawSystem r;
  r.name = a.name;
  for (const ArcCoord& arc : a.arcs) {
    RawArc ra;
    ra.startPuncture = arc.startPuncture;
    ra.endPuncture = arc.endPuncture;
    ra.side = std::string(1, hemisphere_tag(arc.startSide));
    ra.events = arc.events;
    r.arcs.push_back(std::move(ra));
  }
  return r;
}

bool chords_interleave(int n, int xa, int xb, int ya, int yb) {
  if (xa == ya || xa == yb || xb == ya || xb == yb) return false;
  auto inside = [&](int lo, int hi, int v) {
    // v strictly inside the ccw interval (lo, hi)
    int span = (hi - lo + n) % n;
    int off = (v - lo + n) % n;
    return off > 0 && off < span;
  };
  return inside(xa, xb, ya) != inside(xa, xb, yb);
}

namespace {

// Sort key that realizes the counterclockwise equator order starting at p1:
// puncture p_k comes at the start of segment k, followed by that segment's
// crossing points in rank order.
std::pair<int, int> word_key_puncture(int p) { return {p, 0}; }
std::pair<int, int> word_key_event(const Event& e) { return {e.segment, e.rank}; }

struct ChordRef {
  int arc;        // 0..2
  int chord;      // chord index along the arc
  Hemisphere side;
  int a, b;       // word indices of the chord endpoints
};

void append_violation(std::vector<Violation>& out, ViolationKind kind,
                      std::string where, std::string detail) {
  out.push_back(Violation{kind, std::move(where), std::move(detail)});
}

}  // namespace

std::vector<SystemWordPoint> system_word(const ArcSystem& a) {
  std::vector<SystemWordPoint> pts;
  for (int p = 1; p <= 6; ++p) {
    SystemWordPoint w;
    w.isPuncture = true;
    w.puncture = p;
    w.segment = p;
    pts.push_back(w);
  }
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < static_cast<int>(a.arcs[k].events.size()); ++i) {
      const Event& e = a.arcs[k].events[i];
      SystemWordPoint w;
      w.isPuncture = false;
      w.arc = k;
      w.eventIndex = i;
      w.segment = e.segment;
      w.rank = e.rank;
      pts.push_back(w);
    }
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const SystemWordPoint& x, const SystemWordPoint& y) {
                     auto kx = x.isPuncture ? word_key_puncture(x.puncture)
                                            : word_key_event({x.segment, x.rank});
                     auto ky = y.isPuncture ? word_key_puncture(y.puncture)
                                            : word_key_event({y.segment, y.rank});
                     return kx < ky;
                   });
  return pts;
}

std::vector<Violation> check_invariants(const ArcSystem& a) {
  std::vector<Violation> out;

  // Endpoint matching.
  std::vector<int> ends;
  for (int k = 0; k < 3; ++k) {
    const ArcCoord& arc = a.arcs[k];
    std::string where = "arc " + std::to_string(k + 1);
    if (arc.startPuncture < 1 || arc.startPuncture > 6 || arc.endPuncture < 1 ||
        arc.endPuncture > 6) {
      append_violation(out, ViolationKind::NonPerfectMatching, where,
                       "puncture labels must lie in 1..6");
      continue;
    }
    if (arc.startPuncture == arc.endPuncture) {
      append_violation(out, ViolationKind::NonPerfectMatching, where,
                       "arc starts and ends at the same puncture");
      continue;
    }
    ends.push_back(arc.startPuncture);
    ends.push_back(arc.endPuncture);
  }
  if (ends.size() == 6) {
    std::vector<int> sorted = ends;
    std::sort(sorted.begin(), sorted.end());
    for (int p = 1; p <= 6; ++p) {
      if (sorted[p - 1] != p) {
        append_violation(out, ViolationKind::NonPerfectMatching, "system",
                         "arc endpoints do not pair up all six punctures");
        break;
      }
    }
  }

  // Segment ranks: per segment the union over arcs must be exactly 1..m.
  for (int s = 1; s <= 6; ++s) {
    std::map<int, int> users;  // rank -> count
    for (int k = 0; k < 3; ++k)
      for (const Event& e : a.arcs[k].events) {
        if (e.segment == s) users[e.rank]++;
      }
    if (users.empty()) continue;
    std::string where = "segment " + std::to_string(s);
    bool clash = false;
    for (auto& [rank, count] : users)
      if (count > 1) {
        append_violation(out, ViolationKind::RankClash, where,
                         "rank " + std::to_string(rank) + " used " +
                             std::to_string(count) + " times");
        clash = true;
      }
    if (!clash) {
      int m = static_cast<int>(users.size());
      if (users.begin()->first != 1 || users.rbegin()->first != m)
        append_violation(out, ViolationKind::RankGap, where,
                         "ranks must be exactly 1.." + std::to_string(m));
    }
  }

  // Event sanity: segment range.
  for (int k = 0; k < 3; ++k)
    for (const Event& e : a.arcs[k].events)
      if (e.segment < 1 || e.segment > 6 || e.rank < 1) {
        append_violation(out, ViolationKind::RankGap,
                         "arc " + std::to_string(k + 1),
                         "event outside segment/rank range");
        return out;  // word construction below would be meaningless
      }

  if (!out.empty()) return out;  // chord tests need a well-formed word

  // Self-crossing: same-hemisphere chords of one system must not interleave.
  std::vector<SystemWordPoint> word = system_word(a);
  int n = static_cast<int>(word.size());
  auto word_index = [&](bool isP, int p, int arc, int ei) {
    for (int i = 0; i < n; ++i) {
      const SystemWordPoint& w = word[i];
      if (w.isPuncture != isP) continue;
      if (isP && w.puncture == p) return i;
      if (!isP && w.arc == arc && w.eventIndex == ei) return i;
    }
    BA_CHECK_MSG(false, "word point not found");
    return -1;
  };

  std::vector<ChordRef> chords;
  for (int k = 0; k < 3; ++k) {
    const ArcCoord& arc = a.arcs[k];
    int m = static_cast<int>(arc.events.size());
    for (int c = 0; c <= m; ++c) {
      ChordRef ref;
      ref.arc = k;
      ref.chord = c;
      ref.side = arc.chordSide(c);
      ref.a = (c == 0) ? word_index(true, arc.startPuncture, 0, 0)
                       : word_index(false, 0, k, c - 1);
      ref.b = (c == m) ? word_index(true, arc.endPuncture, 0, 0)
                       : word_index(false, 0, k, c);
      chords.push_back(ref);
    }
  }
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      if (chords[i].side != chords[j].side) continue;
      if (chords_interleave(n, chords[i].a, chords[i].b, chords[j].a,
                            chords[j].b)) {
        append_violation(
            out, ViolationKind::SelfCrossing,
            "arc " + std::to_string(chords[i].arc + 1) + " / arc " +
                std::to_string(chords[j].arc + 1),
            "chords " + std::to_string(chords[i].chord) + " and " +
                std::to_string(chords[j].chord) +
                " interleave in one hemisphere");
      }
    }
  return out;
}

ValidationResult validate_system(const RawSystem& raw) {
  ValidationResult res;

  if (raw.arcs.size() != 3) {
    append_violation(res.violations, ViolationKind::NonPerfectMatching, "system",
                     "expected exactly 3 arcs, got " +
                         std::to_string(raw.arcs.size()));
    return res;
  }

  ArcSystem sys;
  sys.name = raw.name;
  bool sidesOk = true;
  for (int k = 0; k < 3; ++k) {
    const RawArc& r = raw.arcs[k];
    ArcCoord arc;
    arc.startPuncture = r.startPuncture;
    arc.endPuncture = r.endPuncture;
    arc.events = r.events;
    if (r.side == "U" || r.side == "Upper") {
      arc.startSide = Hemisphere::Upper;
    } else if (r.side == "L" || r.side == "Lower") {
      arc.startSide = Hemisphere::Lower;
    } else {
      append_violation(res.violations, ViolationKind::HemisphereMismatch,
                       "arc " + std::to_string(k + 1),
                       "hemisphere tag must be U or L, got '" + r.side + "'");
      sidesOk = false;
    }
    sys.arcs[k] = std::move(arc);
  }
  if (!sidesOk) return res;

  std::vector<Violation> more = check_invariants(sys);
  res.violations.insert(res.violations.end(), more.begin(), more.end());
  if (res.violations.empty()) res.system = std::move(sys);
  return res;
}

ArcSystem must_system(const RawSystem& raw) {
  ValidationResult res = validate_system(raw);
  if (!res.ok()) {
    std::ostringstream os;
    os << "invalid arc system '" << raw.name << "':";
    for (const Violation& v : res.violations)
      os << " [" << violation_name(v.kind) << " at " << v.where << ": "
         << v.detail << "]";
    throw std::invalid_argument(os.str());
  }
  return *res.system;
}

namespace {

// Renumber every segment's ranks densely (1..m) preserving relative order.
void rerank(ArcSystem& a) {
  for (int s = 1; s <= 6; ++s) {
    std::vector<std::pair<int, Event*>> pts;  // (old rank, event)
    for (ArcCoord& arc : a.arcs)
      for (Event& e : arc.events)
        if (e.segment == s) pts.emplace_back(e.rank, &e);
    std::sort(pts.begin(), pts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    int next = 1;
    for (auto& [oldRank, ev] : pts) ev->rank = next++;
  }
}

// Remove one trivial return if present: two consecutive events of an arc on
// the same segment at adjacent ranks bound an empty disk with the equator, so
// the detour can be erased. Returns true if a removal happened.
bool remove_one_trivial_return(ArcSystem& a) {
  for (ArcCoord& arc : a.arcs) {
    for (size_t i = 0; i + 1 < arc.events.size(); ++i) {
      const Event& e1 = arc.events[i];
      const Event& e2 = arc.events[i + 1];
      if (e1.segment == e2.segment && std::abs(e1.rank - e2.rank) == 1) {
        arc.events.erase(arc.events.begin() + i, arc.events.begin() + i + 2);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ArcSystem canonicalize_system(const ArcSystem& a) {
  ArcSystem out = a;
  // Ranks must be dense for "adjacent rank" to mean "nothing in between".
  rerank(out);
  while (remove_one_trivial_return(out)) rerank(out);
  BA_CHECK_MSG(check_invariants(out).empty(),
               "canonicalization must preserve validity");
  return out;
}

std::array<std::pair<int, int>, 3> endpoint_pairing(const ArcSystem& a) {
  std::array<std::pair<int, int>, 3> pairs;
  for (int k = 0; k < 3; ++k) {
    int u = a.arcs[k].startPuncture, v = a.arcs[k].endPuncture;
    pairs[k] = {std::min(u, v), std::max(u, v)};
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::string coordinate_key(const ArcSystem& a) {
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) {
    const ArcCoord& arc = a.arcs[k];
    if (k) os << ';';
    os << arc.startPuncture << hemisphere_tag(arc.startSide);
    for (const Event& e : arc.events) os << ',' << e.segment << '@' << e.rank;
    os << '>' << arc.endPuncture;
  }
  return os.str();
}

int total_events(const ArcSystem& a) {
  int n = 0;
  for (const ArcCoord& arc : a.arcs) n += static_cast<int>(arc.events.size());
  return n;
}

}  // namespace bridgearc
