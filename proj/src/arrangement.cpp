#include <algorithm>
#include <random>
#include <set>

#include "bridgearc/arrangement.hpp"
#include "bridgearc/check.hpp"

namespace bridgearc {

namespace {

// Word surgery shared by the two reduction moves: delete the listed word
// points, and next to each anchor word point insert one new event point on
// the chosen side.
struct WordPlan {
  std::set<int> removeIdx;                         // word indices to delete
  std::map<int, std::pair<int, bool>> insertAt;    // anchor idx -> (id, before)
};

void apply_word_plan(Diagram& d, const WordPlan& p) {
  std::vector<WordPoint> nw;
  nw.reserve(d.word.size() + p.insertAt.size());
  for (int i = 0; i < d.wordSize(); ++i) {
    auto it = p.insertAt.find(i);
    if (it != p.insertAt.end() && it->second.second)
      nw.push_back(WordPoint{false, 0, it->second.first});
    if (!p.removeIdx.count(i)) nw.push_back(d.word[i]);
    if (it != p.insertAt.end() && !it->second.second)
      nw.push_back(WordPoint{false, 0, it->second.first});
  }
  d.word = std::move(nw);
}

// Interior word vertices of a face side, in traversal order.
std::vector<int> side_interior(const MapData& m, const FaceSide& s) {
  std::vector<int> out;
  for (size_t k = 0; k + 1 < s.darts.size(); ++k)
    out.push_back(m.dartTail[s.darts[k] ^ 1]);
  return out;
}

// Decides, for an anchor event vertex of the disappearing face, whether the
// face lies on the forward (toward the next word point) side. The mirrored
// event must then be inserted on the opposite side. The test reads the
// dissolved region in the forward-upper wedge of the rotation; exactly one
// of forward/backward matches the face, which self-checks the convention.
bool face_is_forward_at(const MapData& m, int wordVertex, int faceClass) {
  const std::vector<int>& r = m.rot[wordVertex];
  BA_CHECK(r.size() == 4);
  bool fwd = m.augClass[m.augFace[r[0]]] == faceClass;
  bool bwd = m.augClass[m.augFace[r[1]]] == faceClass;
  BA_CHECK_MSG(fwd != bwd, "face must lie on exactly one side of its edge");
  return fwd;
}

void check_still_valid(const Diagram& d) {
  for (int owner = 0; owner < 2; ++owner) {
    if (d.sys[owner].empty()) continue;
    auto v = check_invariants(extract_system(d, owner, "x"));
    BA_CHECK_MSG(v.empty(), "reduction move produced an invalid system");
  }
}

}  // namespace

Arrangement::Arrangement(Diagram d) : diag_(std::move(d)) {}

void Arrangement::invalidate() {
  map_.reset();
  faces_.reset();
}

const MapData& Arrangement::map() const {
  if (!map_) map_ = std::make_shared<MapData>(build_map(diag_));
  return *map_;
}

const std::vector<Face>& Arrangement::faces() const {
  if (!faces_) faces_ = std::make_shared<std::vector<Face>>(build_faces(map(), diag_));
  return *faces_;
}

Matrix3 Arrangement::crossingMatrix() const {
  Matrix3 out{};
  const MapData& m = map();
  for (const CrossingRec& x : m.crossings)
    ++out[m.chords[x.chordA].arc][m.chords[x.chordB].arc];
  return out;
}

std::vector<Arrangement::Stop> Arrangement::stopsAlong(int owner, int arc) const {
  const MapData& m = map();
  std::vector<Stop> out;
  for (int c : m.chordIds[owner][arc]) {
    for (int xid : m.crossingsAlong[c]) {
      const CrossingRec& x = m.crossings[xid];
      int otherChord = (owner == 0) ? x.chordB : x.chordA;
      out.push_back(Stop{m.W + xid, m.chords[otherChord].arc, c});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduction moves.

void Arrangement::applyBigon(const Face& f) {
  BA_CHECK(face_is_bigon(f));
  const MapData& m = map();
  const int oldX = m.X;
  const FaceCycle& cyc = f.cycles[0];
  const int ai = (cyc.sides[0].owner == 0) ? 0 : 1;
  const FaceSide& sa = cyc.sides[ai];
  const FaceSide& sb = cyc.sides[1 - ai];
  BA_CHECK(cyc.corners[0].vertex != cyc.corners[1].vertex);

  // Side data. sa runs from one crossing to the other; sb runs back.
  std::vector<int> aWords = side_interior(m, sa);  // A-side event vertices
  std::vector<int> uWords = side_interior(m, sb);  // B-side event vertices
  const int j = sb.arc;
  DiagArc& bj = diag_.sys[1][j];
  const size_t t = aWords.size(), s = uWords.size();
  BA_CHECK_MSG((s + t) % 2 == 0, "bigon sides must have equal hemisphere parity");

  // Where does the disappearing block live inside the arc's event list?
  const bool sbForward = (sb.darts[0] % 2 == 0);
  int lo;
  if (s == 0) {
    // Both crossings on one chord of the arc: the insertion gap is that
    // chord's slot in the event list.
    // Corner between sa and sb in cycle order is sa's end; its vertex is a
    // crossing; take its chord on the second system's side.
    int xv = cyc.corners[ai].vertex;
    const CrossingRec& x = m.crossings[xv - m.W];
    lo = m.chords[x.chordB].idx;
    int yv = cyc.corners[1 - ai].vertex;
    BA_CHECK(m.chords[m.crossings[yv - m.W].chordB].idx == lo);
  } else {
    std::vector<int> posInBj;
    for (int wv : uWords) {
      int id = diag_.word[wv].event;
      auto it = std::find(bj.events.begin(), bj.events.end(), id);
      BA_CHECK(it != bj.events.end());
      posInBj.push_back(static_cast<int>(it - bj.events.begin()));
    }
    if (!sbForward) std::reverse(posInBj.begin(), posInBj.end());
    for (size_t k = 0; k + 1 < posInBj.size(); ++k)
      BA_CHECK_MSG(posInBj[k] + 1 == posInBj[k + 1],
                   "bigon side must be one contiguous run of the arc");
    lo = posInBj.front();
  }

  // New events: one mirror next to each A-side event, placed on the side
  // opposite the bigon.
  WordPlan plan;
  for (int wv : uWords) plan.removeIdx.insert(wv);
  std::vector<int> newIdsCycleOrder;  // parallel to aWords (sa order)
  for (int wv : aWords) {
    int seg = diag_.events[diag_.word[wv].event].segment;
    int id = diag_.newEvent(seg, 1, j);
    newIdsCycleOrder.push_back(id);
    plan.insertAt[wv] = {id, face_is_forward_at(m, wv, f.faceClass)};
  }
  // Event-list order along the arc: sb runs opposite to sa around the face,
  // so when sb is forward the replacement block reads sa backward.
  std::vector<int> newIdsArcOrder = newIdsCycleOrder;
  if (sbForward) std::reverse(newIdsArcOrder.begin(), newIdsArcOrder.end());

  bj.events.erase(bj.events.begin() + lo, bj.events.begin() + lo + s);
  bj.events.insert(bj.events.begin() + lo, newIdsArcOrder.begin(),
                   newIdsArcOrder.end());
  apply_word_plan(diag_, plan);

  invalidate();
  BA_CHECK_MSG(map().X == oldX - 2, "bigon move must drop exactly two crossings");
  check_still_valid(diag_);
}

void Arrangement::applyHalfBigon(const Face& f) {
  BA_CHECK(face_is_half_bigon(f));
  const MapData& m = map();
  const int oldX = m.X;
  const FaceCycle& cyc = f.cycles[0];
  const int ai = (cyc.sides[0].owner == 0) ? 0 : 1;
  const FaceSide& sa = cyc.sides[ai];
  const FaceSide& sb = cyc.sides[1 - ai];

  // Corners: one crossing, one puncture. Each side runs between them.
  const FaceCorner& cEndA = cyc.corners[ai];        // sa ends here
  const FaceCorner& cStartA = cyc.corners[1 - ai];  // sa starts here
  const bool aFromX = cStartA.atCrossing;
  const FaceCorner& xCorner = aFromX ? cStartA : cEndA;
  const FaceCorner& pCorner = aFromX ? cEndA : cStartA;
  BA_CHECK(xCorner.atCrossing && !pCorner.atCrossing);
  const int P = pCorner.puncture;

  std::vector<int> aWords = side_interior(m, sa);
  std::vector<int> uWords = side_interior(m, sb);
  if (!aFromX) std::reverse(aWords.begin(), aWords.end());  // order x -> P

  // Hemisphere of the first system's approach into P (the side's end piece).
  int aEndDart = aFromX ? sa.darts.back() : sa.darts.front();
  Hemisphere hemA = m.chords[m.edges[aEndDart / 2].chord].side;

  const int i = sa.arc, j = sb.arc;
  DiagArc& aiArc = diag_.sys[0][i];
  DiagArc& bj = diag_.sys[1][j];
  BA_CHECK(aiArc.startPuncture == P || aiArc.endPuncture == P);
  BA_CHECK(bj.startPuncture == P || bj.endPuncture == P);

  // The disappearing block runs from the crossing's chord to the arc's end
  // at P. Which end that is follows from the side's end piece.
  const CrossingRec& x = m.crossings[xCorner.vertex - m.W];
  const int cIdx = m.chords[x.chordB].idx;
  const int total = static_cast<int>(bj.events.size());
  // sb's piece at P: position 0 means the arc starts at P.
  const FaceSide& sbRef = sb;
  int pEndDart = -1;
  for (int d : sbRef.darts) {
    if (m.dartTail[d] < m.W && diag_.word[m.dartTail[d]].isPuncture) pEndDart = d;
    if (m.dartTail[d ^ 1] < m.W && diag_.word[m.dartTail[d ^ 1]].isPuncture)
      pEndDart = d;
  }
  BA_CHECK(pEndDart >= 0);
  const bool pAtStart = (m.edges[pEndDart / 2].pos == 0);
  BA_CHECK(pAtStart ? (bj.startPuncture == P) : (bj.endPuncture == P));

  int lo, blockLen;
  if (pAtStart) {
    lo = 0;
    blockLen = cIdx;
  } else {
    lo = cIdx;
    blockLen = total - cIdx;
  }
  BA_CHECK(static_cast<size_t>(blockLen) == uWords.size());
  {
    std::set<int> expect, got;
    for (int k = 0; k < blockLen; ++k) expect.insert(bj.events[lo + k]);
    for (int wv : uWords) got.insert(diag_.word[wv].event);
    BA_CHECK_MSG(expect == got, "half-bigon side must be the arc's end run");
  }

  WordPlan plan;
  for (int wv : uWords) plan.removeIdx.insert(wv);
  std::vector<int> newIdsXtoP;
  for (int wv : aWords) {
    int seg = diag_.events[diag_.word[wv].event].segment;
    int id = diag_.newEvent(seg, 1, j);
    newIdsXtoP.push_back(id);
    plan.insertAt[wv] = {id, face_is_forward_at(m, wv, f.faceClass)};
  }
  std::vector<int> newIdsArcOrder = newIdsXtoP;
  if (pAtStart) std::reverse(newIdsArcOrder.begin(), newIdsArcOrder.end());

  bj.events.erase(bj.events.begin() + lo, bj.events.begin() + lo + blockLen);
  bj.events.insert(bj.events.begin() + lo, newIdsArcOrder.begin(),
                   newIdsArcOrder.end());
  if (pAtStart) bj.firstSide = hemA;
  apply_word_plan(diag_, plan);

  invalidate();
  BA_CHECK_MSG(map().X == oldX - 1,
               "end slide must drop exactly one crossing");
  // The rewritten arc must now approach P in the same hemisphere as the
  // first system's arc does.
  {
    const DiagArc& nb = diag_.sys[1][j];
    Hemisphere approach = pAtStart ? nb.firstSide
                                   : nb.chordSide(nb.chordCount() - 1);
    BA_CHECK(approach == hemA);
  }
  check_still_valid(diag_);
}

// ---------------------------------------------------------------------------
// Public operations.

namespace {
ArcSystem require_valid_canonical(const ArcSystem& a) {
  auto v = check_invariants(a);
  if (!v.empty())
    throw std::invalid_argument("system '" + a.name + "' is not valid: " +
                                violation_name(v.front().kind));
  return canonicalize_system(a);
}
}  // namespace

Arrangement superpose(const ArcSystem& a, const ArcSystem& b) {
  return Arrangement(make_diagram(require_valid_canonical(a),
                                  require_valid_canonical(b)));
}

Arrangement arrange_single(const ArcSystem& a) {
  return Arrangement(make_diagram(require_valid_canonical(a)));
}

Arrangement reduce_to_minimal(const Arrangement& arr, ReduceOptions opts) {
  Arrangement cur = arr;
  std::optional<std::mt19937_64> rng;
  if (opts.randomSeed) rng.emplace(*opts.randomSeed);
  for (;;) {
    const std::vector<Face>& fs = cur.faces();
    std::vector<int> cand;
    for (const Face& f : fs)
      if (face_is_bigon(f) || face_is_half_bigon(f)) cand.push_back(f.id);
    if (cand.empty()) break;
    int pick = rng ? cand[(*rng)() % cand.size()] : cand.front();
    Face f = fs[pick];  // copy: applying the move invalidates `fs`
    if (face_is_bigon(f))
      cur.applyBigon(f);
    else
      cur.applyHalfBigon(f);
  }
  cur.markMinimal();
  return cur;
}

const std::vector<Face>& face_census(const Arrangement& arr) {
  if (!arr.minimal()) throw NotMinimal();
  return arr.faces();
}

Matrix3 intersection_matrix(const ArcSystem& a, const ArcSystem& b) {
  return reduce_to_minimal(superpose(a, b)).crossingMatrix();
}

std::multiset<std::pair<int, int>> face_signature(const Arrangement& arr) {
  std::multiset<std::pair<int, int>> out;
  for (const Face& f : arr.faces())
    out.insert({f.crossingCorners, f.punctureCorners});
  return out;
}

}  // namespace bridgearc
