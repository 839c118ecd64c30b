#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "bridgearc/arrangement.hpp"
#include "bridgearc/check.hpp"
#include "bridgearc/criteria.hpp"
#include "bridgearc/io.hpp"
#include "bridgearc/svg.hpp"

namespace bridgearc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRadius = 200.0;
constexpr double kUpperCx = 230.0, kUpperCy = 230.0;
constexpr double kLowerCx = 670.0, kLowerCy = 230.0;

struct Pt {
  double x = 0.0, y = 0.0;
};

// The equator word wraps counterclockwise around each hemisphere disk; the
// lower disk is drawn mirrored (seen from the far side) so both disks carry
// the same word order.
Pt diskPoint(Hemisphere side, int wordIdx, int W) {
  double ang = 2.0 * kPi * wordIdx / W;
  if (side == Hemisphere::Upper)
    return {kUpperCx + kRadius * std::cos(ang),
            kUpperCy - kRadius * std::sin(ang)};
  return {kLowerCx + kRadius * std::cos(ang),
          kLowerCy + kRadius * std::sin(ang)};
}

Pt segmentIntersection(Pt a, Pt b, Pt c, Pt d) {
  double rx = b.x - a.x, ry = b.y - a.y;
  double sx = d.x - c.x, sy = d.y - c.y;
  double denom = rx * sy - ry * sx;
  BA_CHECK_MSG(std::abs(denom) > 1e-12, "crossing chords must not be parallel");
  double t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  return {a.x + t * rx, a.y + t * ry};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

const char* arc_color(int owner, int arc) {
  static const char* first[3] = {"#c62828", "#2e7d32", "#1565c0"};
  static const char* second[3] = {"#ef6c00", "#6a1b9a", "#00838f"};
  return owner == 0 ? first[arc] : second[arc];
}

}  // namespace

std::string render_svg_text(const ArcSystem& a,
                            const std::optional<ArcSystem>& other) {
  Arrangement arr =
      other ? reduce_to_minimal(superpose(a, *other)) : arrange_single(a);
  const MapData& m = arr.map();
  const Diagram& diag = arr.diagram();
  const int W = m.W;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" "
         "height=\"460\" viewBox=\"0 0 900 460\">\n";
  svg << "  <title>" << escape_text(a.name);
  if (other) svg << " over " << escape_text(other->name);
  svg << "</title>\n";
  svg << "  <rect width=\"900\" height=\"460\" fill=\"#ffffff\"/>\n";

  for (int disk = 0; disk < 2; ++disk) {
    double cx = disk == 0 ? kUpperCx : kLowerCx;
    double cy = disk == 0 ? kUpperCy : kLowerCy;
    svg << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
        << num(kRadius) << "\" fill=\"none\" stroke=\"#888888\" "
           "stroke-width=\"1.5\"/>\n";
    svg << "  <text x=\"" << num(cx) << "\" y=\"" << num(cy + kRadius + 22)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\" fill=\"#444444\">"
        << (disk == 0 ? "upper hemisphere" : "lower hemisphere")
        << "</text>\n";
  }

  // Faint ticks at every word point, on both disks.
  for (int i = 0; i < W; ++i) {
    for (Hemisphere h : {Hemisphere::Upper, Hemisphere::Lower}) {
      Pt p = diskPoint(h, i, W);
      svg << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
          << "\" r=\"1.50\" fill=\"#bbbbbb\"/>\n";
    }
  }

  // Chords.
  for (const Chord& c : m.chords) {
    Pt p0 = diskPoint(c.side, c.wa, W);
    Pt p1 = diskPoint(c.side, c.wb, W);
    svg << "  <line class=\"arc\" data-system=\"" << (c.owner == 0 ? 'A' : 'B')
        << "\" data-arc=\"" << (c.arc + 1) << "\" x1=\"" << num(p0.x)
        << "\" y1=\"" << num(p0.y) << "\" x2=\"" << num(p1.x) << "\" y2=\""
        << num(p1.y) << "\" stroke=\"" << arc_color(c.owner, c.arc)
        << "\" stroke-width=\"2\""
        << (c.owner == 1 ? " stroke-dasharray=\"6 3\"" : "") << "/>\n";
  }

  // Crossing markers.
  std::vector<Pt> crossingAt(m.crossings.size());
  for (std::size_t i = 0; i < m.crossings.size(); ++i) {
    const Chord& ca = m.chords[m.crossings[i].chordA];
    const Chord& cb = m.chords[m.crossings[i].chordB];
    BA_CHECK(ca.side == cb.side);
    Pt p = segmentIntersection(diskPoint(ca.side, ca.wa, W),
                               diskPoint(ca.side, ca.wb, W),
                               diskPoint(cb.side, cb.wa, W),
                               diskPoint(cb.side, cb.wb, W));
    crossingAt[i] = p;
    svg << "  <circle class=\"xing\" cx=\"" << num(p.x) << "\" cy=\""
        << num(p.y)
        << "\" r=\"3.50\" fill=\"#ffffff\" stroke=\"#000000\" "
           "stroke-width=\"1.2\"/>\n";
  }

  // Rectangle witnesses: a ring on each corner crossing of every witness
  // face.
  if (other) {
    RectangleReport rep = rectangle_report(a, *other);
    const std::vector<Face>& faces = arr.faces();
    for (const auto& [tuple, faceId] : rep.witnesses) {
      for (const Face& f : faces) {
        if (f.id != faceId) continue;
        for (const FaceCycle& cyc : f.cycles)
          for (const FaceCorner& corner : cyc.corners)
            if (corner.atCrossing) {
              Pt p = crossingAt[static_cast<std::size_t>(corner.vertex - W)];
              svg << "  <circle class=\"witness\" cx=\"" << num(p.x)
                  << "\" cy=\"" << num(p.y)
                  << "\" r=\"8.00\" fill=\"none\" stroke=\"#f9a825\" "
                     "stroke-width=\"2.5\"/>\n";
            }
      }
    }
  }

  // Puncture markers (upper disk only, so exactly six carry the class) with
  // labels on both disks.
  for (int p = 1; p <= 6; ++p) {
    int wi = diag.wordIndexOfPuncture(p);
    Pt up = diskPoint(Hemisphere::Upper, wi, W);
    svg << "  <circle class=\"puncture\" cx=\"" << num(up.x) << "\" cy=\""
        << num(up.y)
        << "\" r=\"4.50\" fill=\"#000000\"/>\n";
    for (Hemisphere h : {Hemisphere::Upper, Hemisphere::Lower}) {
      Pt pos = diskPoint(h, wi, W);
      double cx = h == Hemisphere::Upper ? kUpperCx : kLowerCx;
      double cy = h == Hemisphere::Upper ? kUpperCy : kLowerCy;
      double dx = pos.x - cx, dy = pos.y - cy;
      double len = std::sqrt(dx * dx + dy * dy);
      svg << "  <text x=\"" << num(pos.x + 14 * dx / len) << "\" y=\""
          << num(pos.y + 14 * dy / len + 4)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"12\" fill=\"#333333\">p"
          << p << "</text>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

void render_svg(const ArcSystem& a, const std::optional<ArcSystem>& other,
                const std::string& path) {
  write_file(path, render_svg_text(a, other));
}

}  // namespace bridgearc
