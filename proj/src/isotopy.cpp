#include <algorithm>

#include "bridgearc/check.hpp"
#include "bridgearc/isotopy.hpp"

namespace bridgearc {

bool face_is_lens_between(const Face& f, int i, int j) {
  if (!f.singleCycle() || f.punctureCorners != 2 || f.crossingCorners != 0)
    return false;
  const FaceCycle& c = f.cycles[0];
  if (c.sides.size() != 2) return false;
  const FaceSide& s0 = c.sides[0];
  const FaceSide& s1 = c.sides[1];
  const FaceSide& sa = (s0.owner == 0) ? s0 : s1;
  const FaceSide& sb = (s0.owner == 0) ? s1 : s0;
  if (sa.owner != 0 || sb.owner != 1) return false;
  return sa.arc == i && sb.arc == j;
}

bool are_isotopic(const ArcSystem& a, const ArcSystem& b) {
  auto pa = endpoint_pairing(a);
  auto pb = endpoint_pairing(b);
  if (pa != pb) return false;  // both sorted: equal as sets of pairs

  Arrangement red = reduce_to_minimal(superpose(a, b));
  if (!red.map().crossings.empty()) return false;

  // Match arcs by endpoints (unique: each system's endpoint pairs partition
  // the punctures) and demand an empty lens between every matched pair.
  ArcSystem ca = canonicalize_system(a);
  ArcSystem cb = canonicalize_system(b);
  for (int i = 0; i < 3; ++i) {
    auto ends = std::minmax(ca.arcs[i].startPuncture, ca.arcs[i].endPuncture);
    int j = -1;
    for (int k = 0; k < 3; ++k) {
      auto e2 = std::minmax(cb.arcs[k].startPuncture, cb.arcs[k].endPuncture);
      if (ends == e2) j = k;
    }
    BA_CHECK(j >= 0);
    bool lens = false;
    for (const Face& f : red.faces())
      if (face_is_lens_between(f, i, j)) lens = true;
    if (!lens) return false;
  }
  return true;
}

}  // namespace bridgearc
