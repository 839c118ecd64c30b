#include <algorithm>
#include <numeric>
#include <tuple>

#include "bridgearc/arrangement.hpp"
#include "bridgearc/check.hpp"

namespace bridgearc {

namespace {

int ccw_dist(int n, int a, int b) { return (((b - a) % n) + n) % n; }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// One chord endpoint incident to a word vertex, with the data the rotation
// rule needs.
struct EndDart {
  int dart = 0;
  int target = 0;  // word index of the chord's other endpoint
  int owner = 0;
  Hemisphere side = Hemisphere::Upper;
};

// Coincident chords (same endpoints, same hemisphere — necessarily one per
// system) never cross; the copy of the second system is pushed slightly
// toward the equator arc that runs counterclockwise from the endpoint with
// the smaller word index to the one with the larger. That convention decides
// every rotation tie below.
bool end_dart_less(int n, int w, const EndDart& a, const EndDart& b,
                   bool lowerList) {
  int da = lowerList ? ccw_dist(n, a.target, w) : ccw_dist(n, w, a.target);
  int db = lowerList ? ccw_dist(n, b.target, w) : ccw_dist(n, w, b.target);
  if (da != db) return da < db;
  BA_CHECK_MSG(a.target == b.target && a.owner != b.owner,
               "rotation tie between non-coincident chords");
  bool upper = !lowerList;
  bool secondOwnerFirst = (upper == (w < a.target));
  int keyA = secondOwnerFirst ? 1 - a.owner : a.owner;
  int keyB = secondOwnerFirst ? 1 - b.owner : b.owner;
  return keyA < keyB;
}

}  // namespace

MapData build_map(const Diagram& diag) {
  MapData m;
  const int n = diag.wordSize();
  m.W = n;

  // --- chords ----------------------------------------------------------
  for (int owner = 0; owner < 2; ++owner) {
    for (int k = 0; k < static_cast<int>(diag.sys[owner].size()); ++k) {
      const DiagArc& da = diag.sys[owner][k];
      std::vector<int> stations;
      stations.push_back(diag.wordIndexOfPuncture(da.startPuncture));
      for (int id : da.events) stations.push_back(diag.wordIndexOfEvent(id));
      stations.push_back(diag.wordIndexOfPuncture(da.endPuncture));
      for (int c = 0; c + 1 < static_cast<int>(stations.size()); ++c) {
        Chord ch;
        ch.owner = owner;
        ch.arc = k;
        ch.idx = c;
        ch.wa = stations[c];
        ch.wb = stations[c + 1];
        ch.side = da.chordSide(c);
        BA_CHECK(ch.wa != ch.wb);
        m.chordIds[owner][k].push_back(static_cast<int>(m.chords.size()));
        m.chords.push_back(ch);
      }
    }
  }

  // --- crossings --------------------------------------------------------
  m.crossingsAlong.assign(m.chords.size(), {});
  for (int ca = 0; ca < static_cast<int>(m.chords.size()); ++ca) {
    if (m.chords[ca].owner != 0) continue;
    for (int cb = 0; cb < static_cast<int>(m.chords.size()); ++cb) {
      if (m.chords[cb].owner != 1) continue;
      const Chord& A = m.chords[ca];
      const Chord& B = m.chords[cb];
      if (A.side != B.side) continue;
      if (!chords_interleave(n, A.wa, A.wb, B.wa, B.wb)) continue;
      int xid = static_cast<int>(m.crossings.size());
      m.crossings.push_back(CrossingRec{ca, cb});
      m.crossingsAlong[ca].push_back(xid);
      m.crossingsAlong[cb].push_back(xid);
    }
  }
  m.X = static_cast<int>(m.crossings.size());

  // Order the crossings along each chord. All chords crossing a given chord
  // belong to one system, hence are pairwise disjoint; the crossing order
  // from the chord's start is then the counterclockwise order of the single
  // endpoint each of them has strictly inside the start->end word interval.
  for (int c = 0; c < static_cast<int>(m.chords.size()); ++c) {
    const Chord& ch = m.chords[c];
    int span = ccw_dist(n, ch.wa, ch.wb);
    auto insideKey = [&](int xid) {
      const CrossingRec& x = m.crossings[xid];
      const Chord& other = m.chords[x.chordA == c ? x.chordB : x.chordA];
      int d1 = ccw_dist(n, ch.wa, other.wa);
      int d2 = ccw_dist(n, ch.wa, other.wb);
      bool in1 = d1 > 0 && d1 < span;
      bool in2 = d2 > 0 && d2 < span;
      BA_CHECK_MSG(in1 != in2, "crossing chord must split the endpoints");
      return in1 ? d1 : d2;
    };
    std::sort(m.crossingsAlong[c].begin(), m.crossingsAlong[c].end(),
              [&](int a, int b) {
                int ka = insideKey(a), kb = insideKey(b);
                BA_CHECK_MSG(ka != kb, "ambiguous crossing order along chord");
                return ka < kb;
              });
  }

  // --- edges ------------------------------------------------------------
  // Scaffold edges come first: edge i joins word point i to i+1.
  for (int i = 0; i < n; ++i) {
    MapEdge e;
    e.scaffold = true;
    e.v0 = i;
    e.v1 = (i + 1) % n;
    m.edges.push_back(e);
  }
  // Arc pieces, in order along each arc. Record the chord-end darts at word
  // vertices and the four darts at each crossing as we go.
  std::vector<int> dartAtWa(m.chords.size(), -1), dartAtWb(m.chords.size(), -1);
  std::vector<std::vector<EndDart>> crossDarts(m.X);
  for (int owner = 0; owner < 2; ++owner) {
    for (int k = 0; k < static_cast<int>(diag.sys[owner].size()); ++k) {
      int pos = 0;
      for (int c : m.chordIds[owner][k]) {
        const Chord& ch = m.chords[c];
        std::vector<int> sv;
        sv.push_back(ch.wa);
        for (int xid : m.crossingsAlong[c]) sv.push_back(n + xid);
        sv.push_back(ch.wb);
        std::vector<int> pieceEdges;
        for (size_t t = 0; t + 1 < sv.size(); ++t) {
          MapEdge e;
          e.scaffold = false;
          e.owner = owner;
          e.arc = k;
          e.pos = pos++;
          e.chord = c;
          e.v0 = sv[t];
          e.v1 = sv[t + 1];
          pieceEdges.push_back(static_cast<int>(m.edges.size()));
          m.edges.push_back(e);
        }
        dartAtWa[c] = 2 * pieceEdges.front();
        dartAtWb[c] = 2 * pieceEdges.back() + 1;
        for (size_t t = 0; t < m.crossingsAlong[c].size(); ++t) {
          int xid = m.crossingsAlong[c][t];
          // Dart heading back toward wa, dart heading on toward wb.
          crossDarts[xid].push_back(
              EndDart{2 * pieceEdges[t] + 1, ch.wa, owner, ch.side});
          crossDarts[xid].push_back(
              EndDart{2 * pieceEdges[t + 1], ch.wb, owner, ch.side});
        }
      }
    }
  }
  const int E = static_cast<int>(m.edges.size());

  // --- darts ------------------------------------------------------------
  m.dartTail.assign(2 * E, 0);
  for (int e = 0; e < E; ++e) {
    m.dartTail[2 * e] = m.edges[e].v0;
    m.dartTail[2 * e + 1] = m.edges[e].v1;
  }

  // --- rotations --------------------------------------------------------
  m.rot.assign(m.vertexCount(), {});
  // Chord-end darts grouped by word vertex.
  std::vector<std::vector<EndDart>> endsAt(n);
  for (int c = 0; c < static_cast<int>(m.chords.size()); ++c) {
    const Chord& ch = m.chords[c];
    endsAt[ch.wa].push_back(EndDart{dartAtWa[c], ch.wb, ch.owner, ch.side});
    endsAt[ch.wb].push_back(EndDart{dartAtWb[c], ch.wa, ch.owner, ch.side});
  }
  for (int w = 0; w < n; ++w) {
    std::vector<EndDart> upper, lower;
    for (const EndDart& ed : endsAt[w])
      (ed.side == Hemisphere::Upper ? upper : lower).push_back(ed);
    std::sort(upper.begin(), upper.end(), [&](const EndDart& a, const EndDart& b) {
      return end_dart_less(n, w, a, b, false);
    });
    std::sort(lower.begin(), lower.end(), [&](const EndDart& a, const EndDart& b) {
      return end_dart_less(n, w, a, b, true);
    });
    std::vector<int>& r = m.rot[w];
    r.push_back(2 * w);  // scaffold toward the next word point
    for (const EndDart& ed : upper) r.push_back(ed.dart);
    r.push_back(2 * ((w + n - 1) % n) + 1);  // scaffold toward the previous
    for (const EndDart& ed : lower) r.push_back(ed.dart);
    if (!diag.word[w].isPuncture) {
      BA_CHECK_MSG(r.size() == 4, "equator crossing point must have degree 4");
      BA_CHECK(upper.size() == 1 && lower.size() == 1);
    }
  }
  for (int x = 0; x < m.X; ++x) {
    std::vector<EndDart>& ds = crossDarts[x];
    BA_CHECK(ds.size() == 4);
    Hemisphere side = m.chords[m.crossings[x].chordA].side;
    std::sort(ds.begin(), ds.end(),
              [](const EndDart& a, const EndDart& b) { return a.target < b.target; });
    if (side == Hemisphere::Lower) std::reverse(ds.begin(), ds.end());
    std::vector<int>& r = m.rot[n + x];
    for (const EndDart& ed : ds) r.push_back(ed.dart);
    BA_CHECK_MSG(ds[0].owner != ds[1].owner && ds[1].owner != ds[2].owner &&
                     ds[2].owner != ds[3].owner,
                 "systems must alternate around a crossing");
  }

  m.rotPos.assign(2 * E, -1);
  for (int v = 0; v < m.vertexCount(); ++v) {
    for (size_t i = 0; i < m.rot[v].size(); ++i) {
      int d = m.rot[v][i];
      BA_CHECK(m.dartTail[d] == v && m.rotPos[d] == -1);
      m.rotPos[d] = static_cast<int>(i);
    }
  }
  for (int d = 0; d < 2 * E; ++d) BA_CHECK(m.rotPos[d] >= 0);

  // --- faces of the augmented map ----------------------------------------
  auto rotPrev = [&](int d) {
    int v = m.dartTail[d];
    int sz = static_cast<int>(m.rot[v].size());
    return m.rot[v][(m.rotPos[d] + sz - 1) % sz];
  };
  auto phi = [&](int d) { return rotPrev(d ^ 1); };

  m.augFace.assign(2 * E, -1);
  for (int d = 0; d < 2 * E; ++d) {
    if (m.augFace[d] != -1) continue;
    int id = m.augFaceCount++;
    int cur = d;
    do {
      m.augFace[cur] = id;
      cur = phi(cur);
    } while (cur != d);
  }
  BA_CHECK_MSG(m.vertexCount() - E + m.augFaceCount == 2,
               "augmented map must triangulate the sphere");

  // --- dissolve the scaffold ---------------------------------------------
  Dsu dsu(m.augFaceCount);
  for (int e = 0; e < n; ++e) dsu.unite(m.augFace[2 * e], m.augFace[2 * e + 1]);
  m.augClass.assign(m.augFaceCount, 0);
  for (int f = 0; f < m.augFaceCount; ++f) m.augClass[f] = dsu.find(f);

  auto truePhi = [&](int d) {
    int v = m.dartTail[d ^ 1];
    int sz = static_cast<int>(m.rot[v].size());
    int pos = m.rotPos[d ^ 1];
    for (int step = 1; step <= sz; ++step) {
      int cand = m.rot[v][((pos - step) % sz + sz) % sz];
      if (!m.edges[cand / 2].scaffold) return cand;
    }
    BA_CHECK_MSG(false, "vertex with arc darts lost them");
    return -1;
  };

  std::vector<char> seen(2 * E, 0);
  for (int d = 0; d < 2 * E; ++d) {
    if (seen[d] || m.edges[d / 2].scaffold) continue;
    TrueCycle cyc;
    int cur = d;
    do {
      seen[cur] = 1;
      cyc.darts.push_back(cur);
      cur = truePhi(cur);
    } while (cur != d);
    int cls = m.augClass[m.augFace[d]];
    for (int dd : cyc.darts)
      BA_CHECK_MSG(m.augClass[m.augFace[dd]] == cls,
                   "cycle spans two dissolved regions");
    cyc.faceClass = cls;
    m.cycles.push_back(std::move(cyc));
  }
  m.faceIdOfClass.assign(m.augFaceCount, -1);
  for (const TrueCycle& c : m.cycles) {
    if (m.faceIdOfClass[c.faceClass] == -1)
      m.faceIdOfClass[c.faceClass] = m.trueFaceCount++;
  }
  m.classOfCycle.reserve(m.cycles.size());
  for (const TrueCycle& c : m.cycles) m.classOfCycle.push_back(c.faceClass);

  // --- components & the dissolved Euler count -----------------------------
  Dsu comp(m.vertexCount());
  for (int e = n; e < E; ++e) comp.unite(m.edges[e].v0, m.edges[e].v1);
  std::vector<char> isRoot(m.vertexCount(), 0);
  for (int v = 0; v < m.vertexCount(); ++v) isRoot[comp.find(v)] = 1;
  m.componentCount = std::count(isRoot.begin(), isRoot.end(), char(1));

  int pieces = E - n;
  BA_CHECK_MSG(m.vertexCount() - pieces + m.trueFaceCount ==
                   1 + m.componentCount,
               "region count must match the component count");

  return m;
}

// ---------------------------------------------------------------------------

std::vector<Face> build_faces(const MapData& m, const Diagram& diag) {
  std::vector<Face> faces(m.trueFaceCount);
  for (int f = 0; f < m.trueFaceCount; ++f) faces[f].id = f;

  for (size_t ci = 0; ci < m.cycles.size(); ++ci) {
    const TrueCycle& cyc = m.cycles[ci];
    int fid = m.faceIdOfClass[cyc.faceClass];
    Face& face = faces[fid];
    face.faceClass = cyc.faceClass;

    const int L = static_cast<int>(cyc.darts.size());
    auto headOf = [&](int k) { return m.dartTail[cyc.darts[k] ^ 1]; };
    auto isCorner = [&](int k) {
      int v = headOf(k);
      if (m.isCrossingVertex(v)) return true;
      return diag.word[v].isPuncture;
    };
    int first = -1;
    for (int k = 0; k < L && first < 0; ++k)
      if (isCorner(k)) first = k;
    BA_CHECK_MSG(first >= 0, "boundary cycle without any corner");

    FaceCycle fc;
    fc.darts.reserve(L);
    for (int k = 0; k < L; ++k) fc.darts.push_back(cyc.darts[(first + 1 + k) % L]);

    FaceSide side;
    for (int k = 0; k < L; ++k) {
      int d = fc.darts[k];
      const MapEdge& e = m.edges[d / 2];
      BA_CHECK(!e.scaffold);
      if (side.darts.empty()) {
        side.owner = e.owner;
        side.arc = e.arc;
      } else {
        BA_CHECK_MSG(side.owner == e.owner && side.arc == e.arc,
                     "face side must stay on one arc");
      }
      side.darts.push_back(d);
      int v = m.dartTail[d ^ 1];
      bool corner = m.isCrossingVertex(v) || diag.word[v].isPuncture;
      if (corner) {
        FaceCorner fcn;
        fcn.vertex = v;
        fcn.atCrossing = m.isCrossingVertex(v);
        if (!fcn.atCrossing) fcn.puncture = diag.word[v].puncture;
        fcn.inDart = d;
        fcn.outDart = fc.darts[(k + 1) % L];
        fc.corners.push_back(fcn);
        fc.sides.push_back(std::move(side));
        side = FaceSide{};
        if (fcn.atCrossing)
          ++face.crossingCorners;
        else
          ++face.punctureCorners;
      }
    }
    BA_CHECK(side.darts.empty());
    BA_CHECK(fc.sides.size() == fc.corners.size());
    face.cycles.push_back(std::move(fc));
  }
  return faces;
}

bool face_is_bigon(const Face& f) {
  if (!f.singleCycle() || f.crossingCorners != 2 || f.punctureCorners != 0)
    return false;
  const FaceCycle& c = f.cycles[0];
  if (c.sides.size() != 2) return false;
  return c.sides[0].owner != c.sides[1].owner;
}

bool face_is_half_bigon(const Face& f) {
  if (!f.singleCycle() || f.crossingCorners != 1 || f.punctureCorners != 1)
    return false;
  const FaceCycle& c = f.cycles[0];
  if (c.sides.size() != 2) return false;
  return c.sides[0].owner != c.sides[1].owner;
}

}  // namespace bridgearc
