#include <algorithm>

#include "bridgearc/arrangement.hpp"
#include "bridgearc/check.hpp"

namespace bridgearc {

int Diagram::wordIndexOfPuncture(int p) const {
  for (int i = 0; i < wordSize(); ++i)
    if (word[i].isPuncture && word[i].puncture == p) return i;
  BA_CHECK_MSG(false, "puncture not on word");
  return -1;
}

int Diagram::wordIndexOfEvent(int id) const {
  for (int i = 0; i < wordSize(); ++i)
    if (!word[i].isPuncture && word[i].event == id) return i;
  BA_CHECK_MSG(false, "event not on word");
  return -1;
}

int Diagram::newEvent(int segment, int owner, int arc) {
  events.push_back(DiagEvent{segment, owner, arc});
  return static_cast<int>(events.size()) - 1;
}

namespace {

// Inserts one system's arcs into the diagram and returns, per arc, the event
// ids in arc order. Word placement happens separately.
void add_system_arcs(Diagram& d, const ArcSystem& a, int owner) {
  for (int k = 0; k < 3; ++k) {
    const ArcCoord& arc = a.arcs[k];
    DiagArc da;
    da.startPuncture = arc.startPuncture;
    da.endPuncture = arc.endPuncture;
    da.firstSide = arc.startSide;
    for (const Event& e : arc.events)
      da.events.push_back(d.newEvent(e.segment, owner, k));
    d.sys[owner].push_back(da);
  }
}

// Builds the word: for each segment s_k (from puncture k), lay down puncture
// k, then the events on s_k ordered by (owner, rank). Owner 0 first realizes
// the fixed crossing policy of superposition.
void build_word(Diagram& d, const std::array<const ArcSystem*, 2>& systems) {
  // (segment, owner, rank) -> event id
  std::vector<std::tuple<int, int, int, int>> keyed;
  for (int owner = 0; owner < 2; ++owner) {
    if (!systems[owner]) continue;
    for (int k = 0; k < 3; ++k) {
      const ArcCoord& arc = systems[owner]->arcs[k];
      const DiagArc& da = d.sys[owner][k];
      for (size_t i = 0; i < arc.events.size(); ++i)
        keyed.emplace_back(arc.events[i].segment, owner, arc.events[i].rank,
                           da.events[i]);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  size_t next = 0;
  for (int p = 1; p <= 6; ++p) {
    d.word.push_back(WordPoint{true, p, 0});
    while (next < keyed.size() && std::get<0>(keyed[next]) == p) {
      d.word.push_back(WordPoint{false, 0, std::get<3>(keyed[next])});
      ++next;
    }
  }
  BA_CHECK(next == keyed.size());
}

}  // namespace

Diagram make_diagram(const ArcSystem& a) {
  Diagram d;
  d.systems = 1;
  add_system_arcs(d, a, 0);
  build_word(d, {&a, nullptr});
  return d;
}

Diagram make_diagram(const ArcSystem& a, const ArcSystem& b) {
  Diagram d;
  d.systems = 2;
  add_system_arcs(d, a, 0);
  add_system_arcs(d, b, 1);
  build_word(d, {&a, &b});
  return d;
}

ArcSystem extract_system(const Diagram& d, int owner, const std::string& name) {
  // Recover ranks: walk the word once; per segment, count this owner's
  // events in word order.
  std::map<int, std::pair<int, int>> rankOf;  // event id -> (segment, rank)
  {
    std::array<int, 7> counter{};
    int segment = 0;
    for (const WordPoint& wp : d.word) {
      if (wp.isPuncture) {
        segment = wp.puncture;
      } else {
        const DiagEvent& ev = d.events[wp.event];
        BA_CHECK(ev.segment == segment);
        if (ev.owner == owner) rankOf[wp.event] = {segment, ++counter[segment]};
      }
    }
  }
  ArcSystem out;
  out.name = name;
  for (int k = 0; k < 3; ++k) {
    const DiagArc& da = d.sys[owner][k];
    ArcCoord& arc = out.arcs[k];
    arc.startPuncture = da.startPuncture;
    arc.endPuncture = da.endPuncture;
    arc.startSide = da.firstSide;
    for (int id : da.events) {
      auto it = rankOf.find(id);
      BA_CHECK_MSG(it != rankOf.end(), "arc references an event not on the word");
      arc.events.push_back(Event{it->second.first, it->second.second});
    }
  }
  return out;
}

}  // namespace bridgearc
