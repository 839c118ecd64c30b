#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bridgearc/arrangement.hpp"
#include "bridgearc/check.hpp"
#include "bridgearc/isotopy.hpp"
#include "bridgearc/moves.hpp"
#include "bridgearc/parallel.hpp"

namespace bridgearc {

// ===========================================================================
// Catalog twists.

namespace {

const std::vector<std::pair<std::string, int>>& twist_table() {
  static const std::vector<std::pair<std::string, int>> table = {
      {"pair12", 1}, {"pair23", 2}, {"pair34", 3},      {"pair45", 4},
      {"pair56", 5}, {"pair61", 6}, {"arc1-circle", 1}, {"arc2-circle", 3},
      {"arc3-circle", 5},
  };
  return table;
}

ArcSystem flip_all(const ArcSystem& a) {
  ArcSystem out = a;
  for (ArcCoord& arc : out.arcs) arc.startSide = flip(arc.startSide);
  return out;
}

// One counterclockwise half turn of the disk around punctures p_k, p_{k+1}.
//
// The disk covers the two punctures and all of segment k, and cuts segments
// k-1 and k+1 just beyond their last events. Chords with both endpoints
// inside simply rotate: endpoints mirrored, hemisphere flipped. A chord
// entering from outside keeps its outside part, then is dragged halfway
// around the collar — crossing the equator once more on segment k-1 when it
// enters through the upper half, on segment k+1 through the lower half —
// and continues to the mirrored endpoint on the flipped hemisphere. Collar
// crossings stack by how far around the entry sits: descending
// counterclockwise distance of the outside endpoint from p_k.
ArcSystem half_turn_ccw(const ArcSystem& a0, int k) {
  ArcSystem a = canonicalize_system(a0);
  const int k1 = k % 6 + 1;          // right puncture of the pair
  const int segIn = k;               // segment between the pair
  const int segU = (k + 4) % 6 + 1;  // segment before p_k: upper collars
  const int segL = k % 6 + 1;        // segment after p_{k+1}: lower collars

  std::vector<SystemWordPoint> word = system_word(a);
  const int W = static_cast<int>(word.size());
  auto posOfPuncture = [&](int p) {
    for (int i = 0; i < W; ++i)
      if (word[i].isPuncture && word[i].puncture == p) return i;
    BA_CHECK(false);
    return -1;
  };
  auto posOfEvent = [&](int arc, int eventIndex) {
    for (int i = 0; i < W; ++i)
      if (!word[i].isPuncture && word[i].arc == arc &&
          word[i].eventIndex == eventIndex)
        return i;
    BA_CHECK(false);
    return -1;
  };
  const int posK = posOfPuncture(k);

  int mIn = 0, mU = 0;
  for (const ArcCoord& arc : a.arcs)
    for (const Event& e : arc.events) {
      if (e.segment == segIn) ++mIn;
      if (e.segment == segU) ++mU;
    }

  struct NewEv {
    int segment;
    int rank;      // resolved later for collars / shifted segments
    int collarId;  // >= 0 marks a collar crossing
  };
  struct Collar {
    int dist;  // ccw word distance from p_k to the outside endpoint
    int segment;
    int finalRank = -1;
  };
  std::vector<Collar> collars;

  struct ArcPlan {
    int start = 0, end = 0;
    std::vector<Hemisphere> chords;
    std::vector<NewEv> events;
  };
  std::array<ArcPlan, 3> plans;

  for (int ai = 0; ai < 3; ++ai) {
    const ArcCoord& arc = a.arcs[ai];
    const int t = static_cast<int>(arc.events.size());
    auto nodeIsInside = [&](int node) {
      if (node == 0) return arc.startPuncture == k || arc.startPuncture == k1;
      if (node == t + 1) return arc.endPuncture == k || arc.endPuncture == k1;
      return arc.events[node - 1].segment == segIn;
    };
    auto nodeWordPos = [&](int node) {
      if (node == 0) return posOfPuncture(arc.startPuncture);
      if (node == t + 1) return posOfPuncture(arc.endPuncture);
      return posOfEvent(ai, node - 1);
    };
    auto mapPuncture = [&](int p) { return p == k ? k1 : (p == k1 ? k : p); };

    ArcPlan& plan = plans[ai];
    plan.start =
        nodeIsInside(0) ? mapPuncture(arc.startPuncture) : arc.startPuncture;
    plan.end =
        nodeIsInside(t + 1) ? mapPuncture(arc.endPuncture) : arc.endPuncture;

    for (int c = 0; c < arc.chordCount(); ++c) {
      Hemisphere h = arc.chordSide(c);
      bool inA = nodeIsInside(c), inB = nodeIsInside(c + 1);
      if (!inA && !inB) {
        plan.chords.push_back(h);
      } else if (inA && inB) {
        plan.chords.push_back(flip(h));
      } else {
        int outsideNode = inA ? c + 1 : c;
        int dist = (nodeWordPos(outsideNode) - posK + W) % W;
        int cseg = (h == Hemisphere::Upper) ? segU : segL;
        int cid = static_cast<int>(collars.size());
        collars.push_back(Collar{dist, cseg, -1});
        if (!inA) {
          plan.chords.push_back(h);
          plan.events.push_back(NewEv{cseg, -1, cid});
          plan.chords.push_back(flip(h));
        } else {
          plan.chords.push_back(flip(h));
          plan.events.push_back(NewEv{cseg, -1, cid});
          plan.chords.push_back(h);
        }
      }
      if (c < t) {
        const Event& e = arc.events[c];
        if (e.segment == segIn)
          plan.events.push_back(NewEv{segIn, mIn + 1 - e.rank, -1});
        else
          plan.events.push_back(NewEv{e.segment, e.rank, -1});
      }
    }
  }

  // Resolve collar ranks: upper collars append after segU's old events,
  // lower collars slot in before segL's old ones; both stacks descend in the
  // distance key.
  {
    std::vector<int> uIds, lIds;
    for (int i = 0; i < static_cast<int>(collars.size()); ++i)
      (collars[i].segment == segU ? uIds : lIds).push_back(i);
    auto byDistDesc = [&](int x, int y) {
      BA_CHECK_MSG(collars[x].dist != collars[y].dist,
                   "collar entries must have distinct outside endpoints");
      return collars[x].dist > collars[y].dist;
    };
    std::sort(uIds.begin(), uIds.end(), byDistDesc);
    std::sort(lIds.begin(), lIds.end(), byDistDesc);
    for (int i = 0; i < static_cast<int>(uIds.size()); ++i)
      collars[uIds[i]].finalRank = mU + 1 + i;
    for (int i = 0; i < static_cast<int>(lIds.size()); ++i)
      collars[lIds[i]].finalRank = 1 + i;
    const int shiftL = static_cast<int>(lIds.size());
    for (ArcPlan& plan : plans)
      for (NewEv& e : plan.events) {
        if (e.collarId >= 0)
          e.rank = collars[e.collarId].finalRank;
        else if (e.segment == segL)
          e.rank += shiftL;
      }
  }

  RawSystem raw;
  raw.name = a.name;
  for (int ai = 0; ai < 3; ++ai) {
    const ArcPlan& plan = plans[ai];
    BA_CHECK(plan.chords.size() == plan.events.size() + 1);
    for (std::size_t c = 0; c + 1 < plan.chords.size(); ++c)
      BA_CHECK_MSG(plan.chords[c + 1] == flip(plan.chords[c]),
                   "hemisphere alternation must survive the twist surgery");
    RawArc r;
    r.startPuncture = plan.start;
    r.endPuncture = plan.end;
    r.side = (plan.chords[0] == Hemisphere::Upper) ? "U" : "L";
    for (const NewEv& e : plan.events)
      r.events.push_back(Event{e.segment, e.rank});
    raw.arcs.push_back(r);
  }
  return canonicalize_system(must_system(raw));
}

}  // namespace

const std::vector<std::string>& twist_circle_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& entry : twist_table()) v.push_back(entry.first);
    return v;
  }();
  return names;
}

int twist_circle_left_puncture(const std::string& name) {
  for (const auto& entry : twist_table())
    if (entry.first == name) return entry.second;
  throw std::invalid_argument("unknown twist circle '" + name + "'");
}

ArcSystem apply_twist(const TwistSpec& t, const ArcSystem& a) {
  const int k = twist_circle_left_puncture(t.circle);
  ArcSystem cur = canonicalize_system(a);
  for (int n = t.halfTurns; n > 0; --n) cur = half_turn_ccw(cur, k);
  for (int n = t.halfTurns; n < 0; ++n)
    cur = flip_all(half_turn_ccw(flip_all(cur), k));
  return cur;
}

// ===========================================================================
// Rewiring enumeration.

namespace {

// Cyclic word of punctures + kept events, growable by new-arc crossings.
struct TokenWorld {
  struct Tok {
    bool isPuncture = false;
    int puncture = 0;
    int segment = 0;  // segment of the equator interval starting at the token
    bool isNew = false;
  };
  std::vector<Tok> toks;
  std::vector<int> order;  // token ids in ccw equator order
  std::vector<int> pos;    // token id -> position in order

  int addTok(const Tok& t) {
    toks.push_back(t);
    pos.push_back(-1);
    return static_cast<int>(toks.size()) - 1;
  }
  void reindex() {
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  }
};

struct ChordRec {
  int a, b;
  Hemisphere h;
};

// Is x strictly inside the ccw-open interval (a, b) mod M?
bool strictly_between(int a, int x, int b, int M) {
  int dx = (x - a + M) % M;
  int db = (b - a + M) % M;
  return dx > 0 && dx < db;
}

bool chords_cross(int a, int b, int c, int d, int M) {
  return strictly_between(a, c, b, M) != strictly_between(a, d, b, M);
}

// DFS over embedded replacement arcs for one arc of a system: each step draws
// one more hemisphere chord into a gap of the current word (one new equator
// crossing), or closes up at the end puncture. Chords must not cross the kept
// arcs' chords nor the arc's own earlier chords in the same hemisphere.
// Crossings that would be immediately removable (a return into a gap adjacent
// to the current point) are pruned; the pruned class is found at a lower
// crossing count.
class ReplacementSearch {
 public:
  ReplacementSearch(const ArcSystem& a, int repIdx0, int maxCrossings,
                    std::uint64_t budget)
      : a_(a), rep_(repIdx0), maxEvents_(maxCrossings), budgetLeft_(budget) {
    for (int i = 0; i < 3; ++i)
      if (i != rep_) kept_.push_back(i);
    buildWorld();
  }

  void run(std::vector<ArcSystem>& out, std::set<std::string>& seenCoords) {
    out_ = &out;
    seen_ = &seenCoords;
    const ArcCoord& old = a_.arcs[rep_];
    startTok_ = punctureTok_[old.startPuncture - 1];
    endTok_ = punctureTok_[old.endPuncture - 1];
    for (Hemisphere h : {Hemisphere::Upper, Hemisphere::Lower}) {
      firstH_ = h;
      dfs(startTok_, h, maxEvents_);
    }
  }

  bool hitBudget() const { return hitBudget_; }
  std::uint64_t budgetLeft() const { return budgetLeft_; }

 private:
  void buildWorld() {
    // Kept events grouped by segment, ordered by rank.
    std::array<std::vector<std::pair<int, int>>, 7> bySeg;  // (rank, keptPos)
    std::array<std::vector<int>, 2> keptTokOf;
    for (int kk = 0; kk < 2; ++kk)
      keptTokOf[kk].resize(a_.arcs[kept_[kk]].events.size(), -1);
    for (int kk = 0; kk < 2; ++kk) {
      const ArcCoord& arc = a_.arcs[kept_[kk]];
      for (int e = 0; e < static_cast<int>(arc.events.size()); ++e)
        bySeg[arc.events[e].segment].push_back(
            {arc.events[e].rank, kk * 1000 + e});
    }
    for (int s = 1; s <= 6; ++s) std::sort(bySeg[s].begin(), bySeg[s].end());

    for (int p = 1; p <= 6; ++p) {
      TokenWorld::Tok pt;
      pt.isPuncture = true;
      pt.puncture = p;
      pt.segment = p;
      int pid = world_.addTok(pt);
      punctureTok_[p - 1] = pid;
      world_.order.push_back(pid);
      for (const auto& [rank, code] : bySeg[p]) {
        TokenWorld::Tok et;
        et.segment = p;
        int id = world_.addTok(et);
        keptTokOf[code / 1000][code % 1000] = id;
        world_.order.push_back(id);
      }
    }
    world_.reindex();
    keptEventTok_ = keptTokOf;

    for (int kk = 0; kk < 2; ++kk) {
      const ArcCoord& arc = a_.arcs[kept_[kk]];
      int prev = punctureTok_[arc.startPuncture - 1];
      for (int e = 0; e <= static_cast<int>(arc.events.size()); ++e) {
        int nxt = e < static_cast<int>(arc.events.size())
                      ? keptTokOf[kk][e]
                      : punctureTok_[arc.endPuncture - 1];
        chords_.push_back(ChordRec{prev, nxt, arc.chordSide(e)});
        prev = nxt;
      }
    }
  }

  // Doubled circular coordinates so a gap probe sits at an odd slot.
  bool clearChord(int fromTok, int toDoubled, Hemisphere h) const {
    const int M = 2 * static_cast<int>(world_.order.size());
    const int a2 = 2 * world_.pos[fromTok];
    for (const ChordRec& c : chords_) {
      if (c.h != h) continue;
      if (chords_cross(a2, toDoubled, 2 * world_.pos[c.a], 2 * world_.pos[c.b],
                       M))
        return false;
    }
    return true;
  }

  void dfs(int curTok, Hemisphere h, int eventsLeft) {
    if (budgetLeft_ == 0) {
      hitBudget_ = true;
      return;
    }
    --budgetLeft_;
    if (clearChord(curTok, 2 * world_.pos[endTok_], h)) emit();
    if (eventsLeft == 0) return;
    const int len = static_cast<int>(world_.order.size());
    const int curPos = world_.pos[curTok];
    const bool curIsEvent = !world_.toks[curTok].isPuncture;
    for (int g = 0; g < len; ++g) {
      if (curIsEvent && (g == curPos || (g + 1) % len == curPos))
        continue;  // immediately removable return
      if (!clearChord(curTok, 2 * g + 1, h)) continue;
      TokenWorld::Tok nt;
      nt.isNew = true;
      nt.segment = world_.toks[world_.order[g]].segment;
      int id = world_.addTok(nt);
      world_.order.insert(world_.order.begin() + g + 1, id);
      world_.reindex();
      chords_.push_back(ChordRec{curTok, id, h});
      path_.push_back(id);
      dfs(id, flip(h), eventsLeft - 1);
      path_.pop_back();
      chords_.pop_back();
      world_.order.erase(world_.order.begin() + g + 1);
      world_.toks.pop_back();
      world_.pos.pop_back();
      world_.reindex();
    }
  }

  void emit() {
    // Final dense ranks per segment, in word order over kept + new events.
    std::array<int, 7> nextRank;
    nextRank.fill(1);
    std::vector<Event> tokEvent(world_.toks.size());
    for (int id : world_.order) {
      const TokenWorld::Tok& t = world_.toks[id];
      if (t.isPuncture) continue;
      tokEvent[id] = Event{t.segment, nextRank[t.segment]++};
    }
    RawSystem raw;
    raw.name = a_.name;
    raw.arcs.resize(3);
    for (int kk = 0; kk < 2; ++kk) {
      const ArcCoord& src = a_.arcs[kept_[kk]];
      RawArc r;
      r.startPuncture = src.startPuncture;
      r.endPuncture = src.endPuncture;
      r.side = (src.startSide == Hemisphere::Upper) ? "U" : "L";
      for (int e = 0; e < static_cast<int>(src.events.size()); ++e)
        r.events.push_back(tokEvent[keptEventTok_[kk][e]]);
      raw.arcs[kept_[kk]] = r;
    }
    RawArc nr;
    nr.startPuncture = a_.arcs[rep_].startPuncture;
    nr.endPuncture = a_.arcs[rep_].endPuncture;
    nr.side = (firstH_ == Hemisphere::Upper) ? "U" : "L";
    for (int id : path_) nr.events.push_back(tokEvent[id]);
    raw.arcs[rep_] = nr;
    ArcSystem sys = canonicalize_system(must_system(raw));
    if (seen_->insert(coordinate_key(sys)).second) out_->push_back(sys);
  }

  ArcSystem a_;
  int rep_;
  int maxEvents_;
  std::uint64_t budgetLeft_;
  bool hitBudget_ = false;
  std::vector<int> kept_;
  TokenWorld world_;
  std::array<int, 6> punctureTok_{};
  std::array<std::vector<int>, 2> keptEventTok_;
  std::vector<ChordRec> chords_;
  std::vector<int> path_;
  int startTok_ = -1, endTok_ = -1;
  Hemisphere firstH_ = Hemisphere::Upper;
  std::vector<ArcSystem>* out_ = nullptr;
  std::set<std::string>* seen_ = nullptr;
};

// Isotopy-class bucket key: crossing matrix plus face signature of the
// reduced superposition against a fixed reference system. Equal for isotopic
// systems (minimal position is unique up to ambient isotopy), so buckets are
// complete; exactness within a bucket is settled by are_isotopic.
std::string class_key(const ArcSystem& cand, const ArcSystem& ref) {
  Arrangement arr = reduce_to_minimal(superpose(cand, ref));
  std::ostringstream os;
  Matrix3 m = arr.crossingMatrix();
  for (const auto& row : m)
    for (int v : row) os << v << ',';
  os << '|';
  for (const auto& [x, y] : face_signature(arr)) os << x << ':' << y << ',';
  return os.str();
}

}  // namespace

EnumerationResult enumerate_replacements(const ArcSystem& a0, int arcIndex,
                                         int maxCrossings,
                                         const EnumerationLimits& lim) {
  BA_CHECK(arcIndex >= 1 && arcIndex <= 3);
  BA_CHECK(maxCrossings >= 0);
  ArcSystem a = canonicalize_system(a0);
  EnumerationResult res;

  std::vector<ArcSystem> cands;
  std::set<std::string> seen;
  cands.push_back(a);  // the identity replacement's class
  seen.insert(coordinate_key(a));
  ReplacementSearch search(a, arcIndex - 1, maxCrossings, lim.candidateBudget);
  search.run(cands, seen);
  if (search.hitBudget()) res.truncated = true;

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (const ArcSystem& c : cands) {
    if (res.systems.size() >= lim.maxClasses) {
      res.truncated = true;
      break;
    }
    std::string key = class_key(c, a);
    std::vector<std::size_t>& reps = buckets[key];
    bool dup = false;
    for (std::size_t r : reps)
      if (are_isotopic(c, res.systems[r])) {
        dup = true;
        break;
      }
    if (!dup) {
      res.systems.push_back(c);
      reps.push_back(res.systems.size() - 1);
    }
  }
  return res;
}

EnumerationResult enumerate_systems(const ArcSystem& base0, int rewires,
                                    int maxCrossings,
                                    const EnumerationLimits& lim, int jobs) {
  BA_CHECK(rewires >= 0);
  BA_CHECK(maxCrossings >= 0);
  ArcSystem base = canonicalize_system(base0);
  EnumerationResult res;

  std::vector<ArcSystem> classes = {base};
  std::vector<std::string> classKeys = {class_key(base, base)};
  std::map<std::string, std::vector<std::size_t>> buckets;
  buckets[classKeys[0]].push_back(0);
  std::set<std::string> seenCoords = {coordinate_key(base)};
  std::vector<std::size_t> frontier = {0};
  std::uint64_t budget = lim.candidateBudget;

  for (int depth = 1; depth <= rewires && !frontier.empty() && !res.truncated;
       ++depth) {
    std::vector<ArcSystem> cands;
    for (std::size_t fi : frontier) {
      for (int k = 1; k <= 3; ++k) {
        ReplacementSearch search(classes[fi], k - 1, maxCrossings, budget);
        search.run(cands, seenCoords);
        budget = search.budgetLeft();
        if (search.hitBudget()) {
          res.truncated = true;
          break;
        }
      }
      if (res.truncated) break;
    }

    // Classify candidates against the base in parallel, then match them to
    // known classes (snapshot first, this batch's additions serially).
    std::vector<std::string> keys(cands.size());
    parallel_for_index(cands.size(), jobs,
                       [&](std::size_t i) { keys[i] = class_key(cands[i], base); });
    std::vector<char> matched(cands.size(), 0);
    parallel_for_index(cands.size(), jobs, [&](std::size_t i) {
      auto it = buckets.find(keys[i]);
      if (it == buckets.end()) return;
      for (std::size_t ci : it->second)
        if (are_isotopic(cands[i], classes[ci])) {
          matched[i] = 1;
          return;
        }
    });

    std::vector<std::size_t> nextFrontier;
    std::vector<std::size_t> addedThisBatch;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (matched[i]) continue;
      bool dup = false;
      for (std::size_t ci : addedThisBatch)
        if (keys[i] == classKeys[ci] && are_isotopic(cands[i], classes[ci])) {
          dup = true;
          break;
        }
      if (dup) continue;
      if (classes.size() >= lim.maxClasses) {
        res.truncated = true;
        break;
      }
      classes.push_back(cands[i]);
      classKeys.push_back(keys[i]);
      buckets[keys[i]].push_back(classes.size() - 1);
      addedThisBatch.push_back(classes.size() - 1);
      nextFrontier.push_back(classes.size() - 1);
    }
    frontier = nextFrontier;
  }

  std::sort(classes.begin(), classes.end(),
            [](const ArcSystem& x, const ArcSystem& y) {
              return coordinate_key(x) < coordinate_key(y);
            });
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::ostringstream os;
    os << "class-" << i;
    classes[i].name = os.str();
  }
  res.systems = std::move(classes);
  return res;
}

}  // namespace bridgearc
