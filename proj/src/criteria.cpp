#include <algorithm>
#include <array>
#include <deque>

#include "bridgearc/check.hpp"
#include "bridgearc/criteria.hpp"
#include "bridgearc/isotopy.hpp"

namespace bridgearc {

namespace {

// dart -> face id, for non-scaffold darts.
std::vector<int> dart_faces(const MapData& m) {
  std::vector<int> df(m.dartTail.size(), -1);
  for (const TrueCycle& c : m.cycles) {
    int fid = m.faceIdOfClass[c.faceClass];
    for (int d : c.darts) df[d] = fid;
  }
  return df;
}

// One arc's pieces in order, with its crossing vertices.
struct ArcWalk {
  std::vector<int> edges;          // piece edge ids, in arc order
  std::vector<int> crossingVerts;  // crossing vertices, in arc order
  std::vector<int> edgeBefore;     // index into edges of the piece ending at
                                   // the k-th crossing
};

ArcWalk walk_arc(const MapData& m, int owner, int arc) {
  ArcWalk w;
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e) {
    const MapEdge& me = m.edges[e];
    if (!me.scaffold && me.owner == owner && me.arc == arc) w.edges.push_back(e);
  }
  std::sort(w.edges.begin(), w.edges.end(),
            [&](int a, int b) { return m.edges[a].pos < m.edges[b].pos; });
  for (size_t k = 0; k < w.edges.size(); ++k) {
    int v = m.edges[w.edges[k]].v1;
    if (m.isCrossingVertex(v)) {
      w.crossingVerts.push_back(v);
      w.edgeBefore.push_back(static_cast<int>(k));
    }
  }
  return w;
}

// Pieces strictly between crossings k and k+1 of the walk (the open subarc).
std::vector<int> subarc_edges(const ArcWalk& w, int k, int k2) {
  BA_CHECK(k2 == k + 1);
  return std::vector<int>(w.edges.begin() + w.edgeBefore[k] + 1,
                          w.edges.begin() + w.edgeBefore[k2] + 1);
}

int walk_start_vertex(const MapData& m, const ArcWalk& w) {
  return m.edges[w.edges.front()].v0;
}

int walk_end_vertex(const MapData& m, const ArcWalk& w) {
  return m.edges[w.edges.back()].v1;
}

// Pieces of the walk between stop positions fromPos < toPos, where position
// -1 is the arc's start puncture, 0..S-1 its crossings in order, and S its
// end puncture.
std::vector<int> subarc_edges_ext(const ArcWalk& w, int fromPos, int toPos) {
  BA_CHECK(fromPos < toPos);
  int from = fromPos < 0 ? 0 : w.edgeBefore[fromPos] + 1;
  int to = toPos >= static_cast<int>(w.crossingVerts.size())
               ? static_cast<int>(w.edges.size()) - 1
               : w.edgeBefore[toPos];
  BA_CHECK(from <= to);
  return std::vector<int>(w.edges.begin() + from, w.edges.begin() + to + 1);
}

// Pieces of the walk between two of its stop vertices (crossings or the
// arc's own endpoints), in either order.
std::vector<int> between_vertices(const MapData& m, const ArcWalk& w, int va,
                                  int vb) {
  auto offsetOf = [&](int v) {  // number of pieces before the vertex
    if (!m.isCrossingVertex(v)) {
      if (v == walk_start_vertex(m, w)) return 0;
      BA_CHECK(v == walk_end_vertex(m, w));
      return static_cast<int>(w.edges.size());
    }
    for (size_t k = 0; k < w.crossingVerts.size(); ++k)
      if (w.crossingVerts[k] == v) return w.edgeBefore[k] + 1;
    BA_CHECK_MSG(false, "vertex not on this arc");
    return -1;
  };
  int a = offsetOf(va), b = offsetOf(vb);
  BA_CHECK(a != b);
  if (a > b) std::swap(a, b);
  return std::vector<int>(w.edges.begin() + a, w.edges.begin() + b);
}

// A stop along an arc against the other system: a transverse crossing, or
// one of the arc's own endpoints (which lies on the other-system arc ending
// at the same puncture).
struct ExtStop {
  int otherArc;   // 0-based other-system arc met at this stop
  int vert;       // map vertex id
  int pos;        // -1 start puncture, 0..S-1 crossings, S end puncture
  bool puncture;  // true at the arc's own endpoints
};

std::vector<ExtStop> extended_stops(const MapData& m, const ArcWalk& w,
                                    const std::vector<Arrangement::Stop>& stops,
                                    const std::map<int, int>& otherEnds) {
  BA_CHECK(stops.size() == w.crossingVerts.size());
  std::vector<ExtStop> out;
  int sv = walk_start_vertex(m, w), ev = walk_end_vertex(m, w);
  out.push_back(ExtStop{otherEnds.at(sv), sv, -1, true});
  for (size_t k = 0; k < stops.size(); ++k) {
    BA_CHECK(stops[k].crossing == w.crossingVerts[k]);
    out.push_back(
        ExtStop{stops[k].otherArc, stops[k].crossing, static_cast<int>(k),
                false});
  }
  out.push_back(
      ExtStop{otherEnds.at(ev), ev, static_cast<int>(stops.size()), true});
  return out;
}

// Map from puncture vertex to the arc of `owner` ending there.
std::map<int, int> endpoint_arcs(const MapData& m,
                                 const std::array<ArcWalk, 3>& walks) {
  std::map<int, int> out;
  for (int a = 0; a < 3; ++a) {
    out[walk_start_vertex(m, walks[a])] = a;
    out[walk_end_vertex(m, walks[a])] = a;
  }
  BA_CHECK(out.size() == 6);
  return out;
}

// Two-color the sphere's faces across the closed curve formed by the given
// piece edges, then report whether the two arcs of `owner` other than
// `baseArc` land on opposite sides. The curve must be disjoint from both
// sampled arcs, which makes their colors well defined.
bool separates_other_two(const MapData& m, const std::vector<int>& df,
                         const std::set<int>& curve, int owner, int baseArc) {
  std::vector<int> color(m.trueFaceCount, -1);
  std::deque<int> q;
  color[0] = 0;
  q.push_back(0);
  std::vector<std::vector<std::pair<int, int>>> adj(m.trueFaceCount);
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e) {
    if (m.edges[e].scaffold) continue;
    int f0 = df[2 * e], f1 = df[2 * e + 1];
    int flip = curve.count(e) ? 1 : 0;
    adj[f0].push_back({f1, flip});
    adj[f1].push_back({f0, flip});
  }
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (auto [g, flip] : adj[f]) {
      int want = color[f] ^ flip;
      if (color[g] == -1) {
        color[g] = want;
        q.push_back(g);
      } else {
        BA_CHECK_MSG(color[g] == want, "closed curve must two-color the sphere");
      }
    }
  }
  for (int f = 0; f < m.trueFaceCount; ++f) BA_CHECK(color[f] != -1);

  std::array<int, 2> otherColors{};
  int t = 0;
  for (int a = 0; a < 3; ++a) {
    if (a == baseArc) continue;
    ArcWalk aw = walk_arc(m, owner, a);
    BA_CHECK(!aw.edges.empty());
    otherColors[t++] = color[df[2 * aw.edges[0]]];
  }
  return otherColors[0] != otherColors[1];
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<RectangleTuple> all_rectangle_tuples() {
  std::vector<IndexPair> ps = {IndexPair::of(1, 2), IndexPair::of(1, 3),
                               IndexPair::of(2, 3)};
  std::vector<RectangleTuple> out;
  for (const IndexPair& a : ps)
    for (const IndexPair& b : ps) out.push_back(RectangleTuple{a, b});
  std::sort(out.begin(), out.end());
  return out;
}

int crossing_sign(const Arrangement& arr, int xv, int refOwner) {
  const MapData& m = arr.map();
  const Diagram& diag = arr.diagram();
  const std::vector<int>& r = m.rot[xv];
  BA_CHECK(m.isCrossingVertex(xv) && r.size() == 4);
  auto effForward = [&](int d) {
    const MapEdge& e = m.edges[d / 2];
    const DiagArc& da = diag.sys[e.owner][e.arc];
    bool lowerFirst = da.startPuncture < da.endPuncture;
    return (d % 2 == 0) == lowerFirst;
  };
  int refF = -1, tgtF = -1, refB = -1, tgtB = -1;
  for (int d : r) {
    bool isRef = (m.edges[d / 2].owner == refOwner);
    if (effForward(d))
      (isRef ? refF : tgtF) = d;
    else
      (isRef ? refB : tgtB) = d;
  }
  BA_CHECK(refF >= 0 && tgtF >= 0 && refB >= 0 && tgtB >= 0);
  auto rotNext = [&](int d) { return r[(m.rotPos[d] + 1) % 4]; };
  int s1 = (rotNext(refF) == tgtF) ? +1 : -1;
  int s2 = (rotNext(refB) == tgtB) ? +1 : -1;
  BA_CHECK_MSG(s1 == s2, "sign must not depend on the marker dart");
  return s1;
}

// ---------------------------------------------------------------------------
// Waves.

std::vector<Wave> find_waves(const ArcSystem& ref, const ArcSystem& target) {
  Arrangement red = reduce_to_minimal(superpose(ref, target));
  const MapData& m = red.map();
  std::vector<int> df = dart_faces(m);

  std::array<ArcWalk, 3> rwalk;
  for (int i = 0; i < 3; ++i) rwalk[i] = walk_arc(m, 0, i);
  std::map<int, int> refEnds = endpoint_arcs(m, rwalk);

  std::vector<Wave> out;
  for (int j = 0; j < 3; ++j) {
    ArcWalk tw = walk_arc(m, 1, j);
    std::vector<ExtStop> ext =
        extended_stops(m, tw, red.stopsAlong(1, j), refEnds);
    for (size_t k = 0; k + 1 < ext.size(); ++k) {
      const ExtStop& a = ext[k];
      const ExtStop& b = ext[k + 1];
      if (a.otherArc != b.otherArc) continue;
      int i = a.otherArc;
      // Same-side return: at a transverse crossing the two ends must carry
      // opposite signs; an end at the arc's own puncture can be pushed off
      // to either side, so it takes the opposite sign by convention.
      int s1, s2;
      if (!a.puncture && !b.puncture) {
        s1 = crossing_sign(red, a.vert, 0);
        s2 = crossing_sign(red, b.vert, 0);
        if (s1 == s2) continue;
      } else if (!a.puncture) {
        s1 = crossing_sign(red, a.vert, 0);
        s2 = -s1;
      } else if (!b.puncture) {
        s2 = crossing_sign(red, b.vert, 0);
        s1 = -s2;
      } else {
        s1 = +1;
        s2 = -1;
      }
      std::set<int> curve;
      for (int e : subarc_edges_ext(tw, a.pos, b.pos)) curve.insert(e);
      for (int e : between_vertices(m, rwalk[i], a.vert, b.vert))
        curve.insert(e);
      if (!separates_other_two(m, df, curve, 0, i)) continue;
      Wave w;
      w.hostArc = j + 1;
      w.baseArc = i + 1;
      w.subarc = SubarcRef{1, j + 1, a.pos, b.pos};
      w.signFirst = s1;
      w.signSecond = s2;
      out.push_back(w);
    }
  }
  return out;
}

bool wave_separates(const Arrangement& red, const Wave& w) {
  const MapData& m = red.map();
  std::vector<int> df = dart_faces(m);
  int j0 = w.hostArc - 1, i = w.baseArc - 1;
  ArcWalk tw = walk_arc(m, 1, j0);
  ArcWalk rw = walk_arc(m, 0, i);
  auto vertexAt = [&](int pos) {
    if (pos < 0) return walk_start_vertex(m, tw);
    if (pos >= static_cast<int>(tw.crossingVerts.size()))
      return walk_end_vertex(m, tw);
    return tw.crossingVerts[pos];
  };
  std::set<int> curve;
  for (int e : subarc_edges_ext(tw, w.subarc.fromCrossing, w.subarc.toCrossing))
    curve.insert(e);
  for (int e : between_vertices(m, rw, vertexAt(w.subarc.fromCrossing),
                                vertexAt(w.subarc.toCrossing)))
    curve.insert(e);
  return separates_other_two(m, df, curve, 0, i);
}

// ---------------------------------------------------------------------------
// Normal form and the classification of adjacent pairs.

NormalFormReport normal_form_report(const ArcSystem& a, const ArcSystem& b) {
  Arrangement red = reduce_to_minimal(superpose(a, b));
  const MapData& m = red.map();
  std::vector<int> df = dart_faces(m);

  std::array<std::array<ArcWalk, 3>, 2> walks;
  std::array<std::map<int, int>, 2> ends;
  for (int ow = 0; ow < 2; ++ow) {
    for (int arc = 0; arc < 3; ++arc) walks[ow][arc] = walk_arc(m, ow, arc);
    ends[ow] = endpoint_arcs(m, walks[ow]);
  }

  NormalFormReport rep;
  for (int ow = 0; ow < 2; ++ow) {
    const int other = 1 - ow;
    for (int arc = 0; arc < 3; ++arc) {
      const ArcWalk& w = walks[ow][arc];
      std::vector<ExtStop> ext =
          extended_stops(m, w, red.stopsAlong(ow, arc), ends[other]);
      for (size_t k = 0; k + 1 < ext.size(); ++k) {
        if (ext[k].otherArc != ext[k + 1].otherArc) continue;
        const int z = ext[k].otherArc;
        // The pair only obstructs normal form when it is essential: the
        // run between the stops, closed up along the other-system arc they
        // share, must separate that system's remaining two arcs.
        std::set<int> curve;
        for (int e : subarc_edges_ext(w, ext[k].pos, ext[k + 1].pos))
          curve.insert(e);
        for (int e : between_vertices(m, walks[other][z], ext[k].vert,
                                      ext[k + 1].vert))
          curve.insert(e);
        if (!separates_other_two(m, df, curve, other, z)) continue;
        rep.violations.push_back(NormalFormViolation{
            ow == 0 ? 'A' : 'B', arc + 1, ext[k].pos, z + 1});
      }
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

std::vector<AdjacentPairClass> classify_adjacent_pairs(const ArcSystem& ref,
                                                       const ArcSystem& target) {
  Arrangement red = reduce_to_minimal(superpose(ref, target));
  const MapData& m = red.map();
  const std::vector<Face>& faces = red.faces();
  std::vector<int> df = dart_faces(m);

  std::array<ArcWalk, 3> rwalk;
  for (int i = 0; i < 3; ++i) rwalk[i] = walk_arc(m, 0, i);
  std::map<int, int> refEnds = endpoint_arcs(m, rwalk);

  std::array<ArcWalk, 3> twalk;
  std::array<std::vector<ExtStop>, 3> text;
  std::map<int, std::pair<int, int>> tpos;  // crossing vertex -> (arc, index)
  for (int j = 0; j < 3; ++j) {
    twalk[j] = walk_arc(m, 1, j);
    text[j] = extended_stops(m, twalk[j], red.stopsAlong(1, j), refEnds);
    for (size_t k = 0; k < text[j].size(); ++k)
      if (!text[j][k].puncture)
        tpos[text[j][k].vert] = {j, static_cast<int>(k)};
  }

  // Is the subarc of target arc j between its stops a and b (both on the
  // base arc) an essential return, i.e. a wave?
  auto essentialReturn = [&](int j, const ExtStop& a, const ExtStop& b,
                             int base) {
    std::set<int> curve;
    for (int e : subarc_edges_ext(twalk[j], a.pos, b.pos)) curve.insert(e);
    for (int e : between_vertices(m, rwalk[base], a.vert, b.vert))
      curve.insert(e);
    return separates_other_two(m, df, curve, 0, base);
  };
  // Does the target arc double back onto the base arc at this crossing (an
  // incident wave end)? The far end of the returning subarc may be another
  // crossing with the base arc or the target arc's own endpoint on it.
  auto waveEndAt = [&](int xv, int base) {
    auto [j, p] = tpos.at(xv);
    int n = static_cast<int>(text[j].size());
    for (int q : {p - 1, p + 1}) {
      if (q < 0 || q >= n) continue;
      const ExtStop& far = text[j][q];
      if (far.otherArc != base) continue;
      if (!far.puncture &&
          crossing_sign(red, xv, 0) == crossing_sign(red, far.vert, 0))
        continue;
      const ExtStop& lo = text[j][std::min(p, q)];
      const ExtStop& hi = text[j][std::max(p, q)];
      if (essentialReturn(j, lo, hi, base)) return true;
    }
    return false;
  };
  // A neighbor stop along the target arc landing on a different reference
  // arc; returns that arc (0-based).
  auto connectsElsewhere = [&](int xv, int base) -> std::optional<int> {
    auto [j, p] = tpos.at(xv);
    int n = static_cast<int>(text[j].size());
    for (int q : {p - 1, p + 1}) {
      if (q < 0 || q >= n) continue;
      if (text[j][q].otherArc != base) return text[j][q].otherArc;
    }
    return std::nullopt;
  };

  std::vector<AdjacentPairClass> out;
  for (int i = 0; i < 3; ++i) {
    auto stops = red.stopsAlong(0, i);
    for (size_t k = 0; k + 1 < stops.size(); ++k) {
      if (stops[k].otherArc != stops[k + 1].otherArc) continue;
      const int j0 = stops[k].otherArc;
      AdjacentPairClass cls;
      cls.pair = NormalFormViolation{'A', i + 1, static_cast<int>(k), j0 + 1};
      const int xv = stops[k].crossing, yv = stops[k + 1].crossing;

      // Wave pair: the two crossings are also consecutive along the target
      // arc, with opposite signs, and the subarc between them is essential.
      auto [jx, px] = tpos.at(xv);
      auto [jy, py] = tpos.at(yv);
      BA_CHECK(jx == j0 && jy == j0);
      if (std::abs(px - py) == 1 &&
          crossing_sign(red, xv, 0) != crossing_sign(red, yv, 0) &&
          essentialReturn(j0, text[j0][std::min(px, py)],
                          text[j0][std::max(px, py)], i)) {
        cls.kind = AdjacentPairKind::WavePair;
        out.push_back(cls);
        continue;
      }

      // Parallel connecting pair: a face alongside the reference run between
      // the two crossings is a quadrilateral [run, target, other ref arc,
      // target] (the two ref arcs may coincide, and the far corners may sit
      // at punctures when the connecting subarcs end there).
      std::vector<int> eta = subarc_edges(rwalk[i], static_cast<int>(k),
                                          static_cast<int>(k) + 1);
      std::optional<int> parArc;
      for (int sideBit : {0, 1}) {
        const Face& f = faces[df[2 * eta[0] + sideBit]];
        if (!f.singleCycle()) continue;
        const auto& sides = f.cycles[0].sides;
        if (sides.size() != 4) continue;
        int etaSide = -1;
        for (int s = 0; s < 4; ++s) {
          if (sides[s].owner != 0 || sides[s].arc != i) continue;
          for (int d : sides[s].darts)
            if (d / 2 == eta[0]) etaSide = s;
        }
        if (etaSide < 0) continue;
        const FaceSide& opp = sides[(etaSide + 2) % 4];
        const FaceSide& b1 = sides[(etaSide + 1) % 4];
        const FaceSide& b2 = sides[(etaSide + 3) % 4];
        if (opp.owner == 0 && b1.owner == 1 && b1.arc == j0 &&
            b2.owner == 1 && b2.arc == j0)
          parArc = opp.arc;
      }
      if (parArc) {
        cls.kind = AdjacentPairKind::ParallelConnect;
        cls.connectArc = *parArc + 1;
        out.push_back(cls);
        continue;
      }

      // Mixed: one end is an incident wave end, the other connects onward to
      // a different reference arc.
      std::optional<int> mixedArc;
      if (waveEndAt(xv, i)) mixedArc = connectsElsewhere(yv, i);
      if (!mixedArc && waveEndAt(yv, i)) mixedArc = connectsElsewhere(xv, i);
      if (mixedArc) {
        cls.kind = AdjacentPairKind::Mixed;
        cls.connectArc = *mixedArc + 1;
      }
      out.push_back(cls);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rectangle condition.

RectangleReport rectangle_report(const ArcSystem& a, const ArcSystem& b) {
  RectangleReport rep;
  Arrangement red = reduce_to_minimal(superpose(a, b));
  const std::vector<Face>& faces = face_census(red);
  std::set<RectangleTuple> got;
  for (const Face& f : faces) {
    if (!f.singleCycle() || f.crossingCorners != 4 || f.punctureCorners != 0)
      continue;
    const auto& sides = f.cycles[0].sides;
    if (sides.size() != 4) continue;
    BA_CHECK(sides[0].owner != sides[1].owner &&
             sides[0].owner == sides[2].owner &&
             sides[1].owner == sides[3].owner);
    std::array<std::set<int>, 2> arcs;
    for (const FaceSide& s : sides) arcs[s.owner].insert(s.arc);
    if (arcs[0].size() != 2 || arcs[1].size() != 2) continue;
    auto two = [](const std::set<int>& s) {
      auto it = s.begin();
      int lo = *it + 1;
      int hi = *std::next(it) + 1;
      return IndexPair::of(lo, hi);
    };
    RectangleTuple t{two(arcs[0]), two(arcs[1])};
    got.insert(t);
    if (!rep.witnesses.count(t)) rep.witnesses[t] = f.id;
  }
  rep.realized.assign(got.begin(), got.end());
  for (const RectangleTuple& t : all_rectangle_tuples())
    if (!got.count(t)) rep.missing.push_back(t);
  if (are_isotopic(a, b)) rep.diagnostic = RectangleDiagnostic::IsotopicInput;
  rep.holds =
      rep.missing.empty() && rep.diagnostic == RectangleDiagnostic::None;
  return rep;
}

std::vector<RectangleTuple> rectangle_tuples_by_scan(const ArcSystem& a,
                                                     const ArcSystem& b) {
  Arrangement red = reduce_to_minimal(superpose(a, b));
  const MapData& m = red.map();
  const Diagram& diag = red.diagram();
  const int n = m.W;

  // Local face-boundary stepping (never consults the census).
  auto nextDart = [&](int d) {
    int v = m.dartTail[d ^ 1];
    int sz = static_cast<int>(m.rot[v].size());
    int pos = m.rotPos[d ^ 1];
    for (int step = 1; step <= sz; ++step) {
      int cand = m.rot[v][((pos - step) % sz + sz) % sz];
      if (!m.edges[cand / 2].scaffold) return cand;
    }
    BA_CHECK(false);
    return -1;
  };

  std::set<RectangleTuple> got;
  for (int i = 0; i < 3; ++i) {
    ArcWalk w = walk_arc(m, 0, i);
    auto stops = red.stopsAlong(0, i);
    for (size_t k = 0; k + 1 < stops.size(); ++k) {
      if (stops[k].otherArc == stops[k + 1].otherArc) continue;
      std::vector<int> eta = subarc_edges(w, static_cast<int>(k),
                                          static_cast<int>(k) + 1);
      for (int sideBit : {0, 1}) {
        int start = sideBit == 0 ? 2 * eta[0] : 2 * eta.back() + 1;
        // Trace the boundary; reject on puncture corners or over-long walks.
        std::vector<int> walk;
        bool bad = false;
        int cur = start;
        do {
          walk.push_back(cur);
          int v = m.dartTail[cur ^ 1];
          if (v < m.W && diag.word[v].isPuncture) {
            bad = true;
            break;
          }
          cur = nextDart(cur);
        } while (cur != start &&
                 walk.size() <= m.dartTail.size());
        if (bad || cur != start) continue;

        // Split into runs at crossing turns.
        std::vector<int> cornerAt;  // walk indices whose head is a crossing
        for (size_t t = 0; t < walk.size(); ++t)
          if (m.isCrossingVertex(m.dartTail[walk[t] ^ 1]))
            cornerAt.push_back(static_cast<int>(t));
        if (cornerAt.size() != 4) continue;
        struct Run {
          int owner, arc;
          std::vector<int> edgesUsed;
          std::vector<int> eventVerts;
        };
        std::array<Run, 4> runs;
        const int L = static_cast<int>(walk.size());
        for (int r = 0; r < 4; ++r) {
          int from = (cornerAt[r] + 1) % L;
          int len = ((cornerAt[(r + 1) % 4] - from + L) % L) + 1;
          Run& run = runs[r];
          run.owner = -1;
          for (int s = 0; s < len; ++s) {
            int d = walk[(from + s) % L];
            const MapEdge& e = m.edges[d / 2];
            if (run.owner == -1) {
              run.owner = e.owner;
              run.arc = e.arc;
            } else if (run.owner != e.owner || run.arc != e.arc) {
              run.owner = -2;  // mixed ownership: not a quad side
            }
            run.edgesUsed.push_back(d / 2);
            if (s + 1 < len) run.eventVerts.push_back(m.dartTail[d ^ 1]);
          }
        }
        // Identify the quad pattern anchored on eta.
        int etaRun = -1;
        for (int r = 0; r < 4; ++r) {
          if (runs[r].owner != 0 || runs[r].arc != i) continue;
          std::set<int> re(runs[r].edgesUsed.begin(), runs[r].edgesUsed.end());
          std::set<int> ee(eta.begin(), eta.end());
          if (re == ee) etaRun = r;
        }
        if (etaRun < 0) continue;
        const Run& ra = runs[(etaRun + 2) % 4];
        const Run& rb1 = runs[(etaRun + 1) % 4];
        const Run& rb2 = runs[(etaRun + 3) % 4];
        if (ra.owner != 0 || ra.arc == i) continue;
        if (rb1.owner != 1 || rb2.owner != 1 || rb1.arc == rb2.arc) continue;

        // Emptiness: no puncture may sit strictly inside the quad. The
        // boundary meets the equator exactly at the runs' event points;
        // intervals between word points are classified by a parity sweep.
        std::vector<int> flips;
        int seedWord = -1;
        bool seedAfter = false;
        for (int r = 0; r < 4; ++r)
          for (int v : runs[r].eventVerts) flips.push_back(v);
        {
          std::set<int> uniq(flips.begin(), flips.end());
          BA_CHECK_MSG(uniq.size() == flips.size(),
                       "quad boundary visits an equator point twice");
        }
        if (!flips.empty()) {
          // Seed from the walk's out-dart at the first event vertex.
          for (size_t t = 0; t < walk.size() && seedWord < 0; ++t) {
            int v = m.dartTail[walk[t] ^ 1];
            if (v >= m.W || diag.word[v].isPuncture) continue;
            int outD = walk[(t + 1) % walk.size()];
            Hemisphere h = m.chords[m.edges[outD / 2].chord].side;
            seedWord = v;
            // Leaving on the upper chord: the enclosed side touches the
            // interval before this point; on the lower chord, the one after.
            seedAfter = (h == Hemisphere::Lower);
          }
          BA_CHECK(seedWord >= 0);
          std::vector<char> flip(n, 0);
          for (int v : flips) flip[v] = 1;
          BA_CHECK(static_cast<int>(flips.size()) % 2 == 0);
          // inside[t] = side of the interval (word t, word t+1).
          std::vector<char> inside(n, 0);
          int seedInterval = seedAfter ? seedWord : (seedWord + n - 1) % n;
          inside[seedInterval] = 1;
          for (int step = 1; step < n; ++step) {
            int prev = (seedInterval + step - 1) % n;
            int curI = (seedInterval + step) % n;
            inside[curI] = inside[prev] ^ flip[curI];  // crossing word point curI
          }
          bool punctureInside = false;
          for (int t = 0; t < n; ++t)
            if (diag.word[t].isPuncture && inside[(t + n - 1) % n] &&
                inside[t])
              punctureInside = true;
          if (punctureInside) continue;
        }
        got.insert(RectangleTuple{IndexPair::of(i + 1, ra.arc + 1),
                                  IndexPair::of(rb1.arc + 1, rb2.arc + 1)});
      }
    }
  }
  return std::vector<RectangleTuple>(got.begin(), got.end());
}

// ---------------------------------------------------------------------------
// Connecting pairs and the certificate.

std::set<IndexPair> connecting_pairs(const ArcSystem& gamma, int arcIndex,
                                     const ArcSystem& b) {
  BA_CHECK(arcIndex >= 1 && arcIndex <= 3);
  Arrangement red = reduce_to_minimal(superpose(gamma, b));
  auto stops = red.stopsAlong(0, arcIndex - 1);
  std::set<IndexPair> out;
  for (size_t k = 0; k + 1 < stops.size(); ++k)
    if (stops[k].otherArc != stops[k + 1].otherArc)
      out.insert(IndexPair::of(stops[k].otherArc + 1,
                               stops[k + 1].otherArc + 1));
  return out;
}

CertifyResult certify_no_rc_partner(const ArcSystem& candidate,
                                    const ArcSystem& base) {
  CertifyResult res;
  Arrangement red = reduce_to_minimal(superpose(candidate, base));
  Matrix3 mat = red.crossingMatrix();
  ArcSystem cc = canonicalize_system(candidate);
  ArcSystem cb = canonicalize_system(base);
  const std::vector<Face>& faces = red.faces();

  int degenerate = 0;
  for (int k = 0; k < 3; ++k) {
    bool rowZero = mat[k][0] == 0 && mat[k][1] == 0 && mat[k][2] == 0;
    bool isDegenerate = false;
    if (rowZero) {
      auto ends = std::minmax(cc.arcs[k].startPuncture, cc.arcs[k].endPuncture);
      for (int j = 0; j < 3 && !isDegenerate; ++j) {
        auto e2 = std::minmax(cb.arcs[j].startPuncture, cb.arcs[j].endPuncture);
        if (ends != e2) continue;
        for (const Face& f : faces)
          if (face_is_lens_between(f, k, j)) isDegenerate = true;
      }
    }
    if (isDegenerate) {
      ++degenerate;
      continue;
    }
    auto stops = red.stopsAlong(0, k);
    std::set<IndexPair> pairs;
    for (size_t t = 0; t + 1 < stops.size(); ++t)
      if (stops[t].otherArc != stops[t + 1].otherArc)
        pairs.insert(IndexPair::of(stops[t].otherArc + 1,
                                   stops[t + 1].otherArc + 1));
    for (const IndexPair& p :
         {IndexPair::of(1, 2), IndexPair::of(1, 3), IndexPair::of(2, 3)}) {
      if (!pairs.count(p)) {
        res.certificate = NoPartnerCertificate{k + 1, p};
        return res;
      }
    }
  }
  if (degenerate == 3) res.isotopicDegenerate = true;
  return res;
}

}  // namespace bridgearc
