#include <random>
#include <set>
#include <string>
#include <vector>

#include "bridgearc/arrangement.hpp"
#include "bridgearc/catalog.hpp"
#include "bridgearc/criteria.hpp"
#include "bridgearc/isotopy.hpp"
#include "bridgearc/model.hpp"
#include "bridgearc/moves.hpp"
#include "doctest.h"

using namespace bridgearc;

namespace {

ArcSystem twisted(std::uint64_t seed, int words) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string>& names = twist_circle_names();
  ArcSystem s = epsilon();
  for (int w = 0; w < words; ++w) {
    TwistSpec t;
    t.circle = names[static_cast<std::size_t>(rng() % names.size())];
    t.halfTurns = (rng() % 2 == 0) ? 1 : -1;
    s = apply_twist(t, s);
  }
  return s;
}

std::set<std::string> class_keys(const EnumerationResult& r) {
  std::set<std::string> keys;
  for (const ArcSystem& s : r.systems) keys.insert(coordinate_key(s));
  return keys;
}

}  // namespace

TEST_CASE("the twist catalog names nine circles over adjacent pairs") {
  const std::vector<std::string>& names = twist_circle_names();
  CHECK(names.size() == 9);
  std::set<int> lefts;
  for (const std::string& n : names) {
    int k = twist_circle_left_puncture(n);
    CHECK(k >= 1);
    CHECK(k <= 6);
    lefts.insert(k);
  }
  // Six distinct pair circles exist; the three arc-neighborhood circles
  // coincide with pair circles, so at most six distinct left punctures.
  CHECK(lefts.size() == 6);
  CHECK_THROWS_AS((void)twist_circle_left_puncture("nonsense"),
                  std::invalid_argument);
}

TEST_CASE("a zero twist canonicalizes and does nothing else") {
  ArcSystem s = twisted(3, 3);
  ArcSystem z = apply_twist(TwistSpec{"pair12", 0}, s);
  CHECK(same_coords(z, canonicalize_system(s)));
}

TEST_CASE("two half turns equal one full turn applied stepwise") {
  for (const std::string& name : twist_circle_names()) {
    ArcSystem s = twisted(11, 2);
    ArcSystem once = apply_twist(TwistSpec{name, 2}, s);
    ArcSystem twice =
        apply_twist(TwistSpec{name, 1}, apply_twist(TwistSpec{name, 1}, s));
    CAPTURE(name);
    CHECK(same_coords(once, twice));
  }
}

TEST_CASE("twists preserve validity and the six punctures") {
  for (const std::string& name : twist_circle_names()) {
    ArcSystem s = apply_twist(TwistSpec{name, 1}, delta85());
    CHECK(check_invariants(s).empty());
    auto pairing = endpoint_pairing(s);
    std::set<int> seen;
    for (auto [a, b] : pairing) {
      seen.insert(a);
      seen.insert(b);
    }
    CHECK(seen.size() == 6);
  }
}

TEST_CASE("applying one twist to both systems preserves pair invariants") {
  // The twist is a homeomorphism of the punctured sphere, so intersection
  // matrices, rectangle verdicts, and wave counts cannot change when both
  // systems are moved together.
  std::vector<std::pair<ArcSystem, ArcSystem>> pairs = {
      {delta85(), epsilon()}, {rc_positive_a(), rc_positive_b()}};
  for (int i = 0; i < 3; ++i)
    pairs.push_back({twisted(100 + i, 2), twisted(200 + i, 2)});

  for (const auto& [a, b] : pairs) {
    Matrix3 mx = intersection_matrix(a, b);
    bool rc = rectangle_report(a, b).holds;
    std::size_t waves = find_waves(a, b).size();
    for (const std::string& name : twist_circle_names()) {
      TwistSpec t{name, 1};
      ArcSystem ta = apply_twist(t, a);
      ArcSystem tb = apply_twist(t, b);
      CAPTURE(name);
      CHECK(intersection_matrix(ta, tb) == mx);
      CHECK(rectangle_report(ta, tb).holds == rc);
      CHECK(find_waves(ta, tb).size() == waves);
    }
  }
}

TEST_CASE("replacement enumeration always contains the base class") {
  for (int arcIndex : {1, 2, 3}) {
    EnumerationResult r = enumerate_replacements(epsilon(), arcIndex, 2);
    CHECK_FALSE(r.truncated);
    bool baseSeen = false;
    for (const ArcSystem& s : r.systems)
      if (are_isotopic(s, epsilon())) baseSeen = true;
    CHECK(baseSeen);
  }
}

TEST_CASE("replacement enumeration is deterministic and monotone") {
  EnumerationResult a = enumerate_replacements(epsilon(), 1, 4);
  EnumerationResult b = enumerate_replacements(epsilon(), 1, 4);
  REQUIRE(a.systems.size() == b.systems.size());
  for (std::size_t i = 0; i < a.systems.size(); ++i)
    CHECK(same_coords(a.systems[i], b.systems[i]));

  // Raising the bound only adds classes; every small-bound class reappears
  // (possibly with a different representative).
  EnumerationResult small = enumerate_replacements(epsilon(), 1, 2);
  for (const ArcSystem& s : small.systems) {
    bool found = false;
    for (const ArcSystem& l : a.systems)
      if (are_isotopic(s, l)) found = true;
    CHECK(found);
  }
  CHECK(a.systems.size() >= small.systems.size());
}

TEST_CASE("replacements honor the crossing bound and keep the other arcs") {
  const int bound = 4;
  EnumerationResult r = enumerate_replacements(epsilon(), 2, bound);
  for (const ArcSystem& s : r.systems) {
    CHECK(static_cast<int>(s.arcs[1].events.size()) <= bound);
    CHECK(s.arcs[0] == epsilon().arcs[0]);
    CHECK(s.arcs[2] == epsilon().arcs[2]);
    CHECK(check_invariants(s).empty());
  }
}

TEST_CASE("system enumeration grows with depth and dedups by isotopy") {
  EnumerationResult d0 = enumerate_systems(epsilon(), 0, 4);
  CHECK(d0.systems.size() == 1);
  EnumerationResult d1 = enumerate_systems(epsilon(), 1, 4);
  CHECK(d1.systems.size() > 1);
  std::set<std::string> keys = class_keys(d1);
  CHECK(keys.size() == d1.systems.size());  // no duplicate classes
  for (const std::string& k : class_keys(d0)) CHECK(keys.count(k) == 1);
  // Pairwise non-isotopic representatives (spot check a few).
  for (std::size_t i = 0; i + 1 < d1.systems.size() && i < 6; ++i)
    for (std::size_t j = i + 1; j < d1.systems.size() && j < 6; ++j)
      CHECK_FALSE(are_isotopic(d1.systems[i], d1.systems[j]));
}

TEST_CASE("parallel enumeration matches the single-threaded result") {
  EnumerationResult seq = enumerate_systems(epsilon(), 1, 4, {}, 1);
  EnumerationResult par = enumerate_systems(epsilon(), 1, 4, {}, 4);
  REQUIRE(seq.systems.size() == par.systems.size());
  for (std::size_t i = 0; i < seq.systems.size(); ++i)
    CHECK(same_coords(seq.systems[i], par.systems[i]));
}

TEST_CASE("the class cap truncates and says so") {
  EnumerationLimits lim;
  lim.maxClasses = 3;
  EnumerationResult r = enumerate_systems(epsilon(), 1, 4, lim);
  CHECK(r.truncated);
  CHECK(r.systems.size() <= 3);
}
