#include "bridgearc/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace bridgearc {

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment-stripped
};

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    // Trim trailing whitespace / carriage returns.
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
      raw.pop_back();
    size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;  // blank or comment-only
    lines.push_back({number, raw.substr(first)});
  }
  return lines;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line, int col, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw ParseError(line, col, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

Event parse_event_token(const std::string& tok, int line, int col) {
  size_t at = tok.find('@');
  if (at == std::string::npos)
    throw ParseError(line, col, "expected <segment>@<rank>, got '" + tok + "'");
  Event e;
  e.segment = parse_int(tok.substr(0, at), line, col, "segment number");
  e.rank = parse_int(tok.substr(at + 1), line, col, "rank number");
  return e;
}

// 1-based column of the n-th whitespace token (for error locations).
int token_column(const std::string& s, size_t tokenIndex) {
  size_t i = 0, tok = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    if (tok == tokenIndex) return static_cast<int>(i) + 1;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    ++tok;
  }
  return static_cast<int>(s.size()) + 1;
}

}  // namespace

RawSystem parse_system_text(const std::string& text) {
  std::vector<Line> lines = logical_lines(text);
  size_t i = 0;
  auto need = [&](const char* what) -> const Line& {
    if (i >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back().number;
      throw ParseError(last, 1, std::string("unexpected end of file, expected ") + what);
    }
    return lines[i];
  };

  {
    const Line& l = need("header 'bridge-arc-system v1'");
    if (l.text != "bridge-arc-system v1")
      throw ParseError(l.number, 1, "expected header 'bridge-arc-system v1'");
    ++i;
  }

  RawSystem raw;
  {
    const Line& l = need("'system <name>'");
    std::vector<std::string> toks = split_ws(l.text);
    if (toks.size() != 2 || toks[0] != "system")
      throw ParseError(l.number, 1, "expected 'system <name>'");
    raw.name = toks[1];
    ++i;
  }

  for (int k = 1; k <= 3; ++k) {
    const Line& arcLine = need("'arc <k> <pStart> <pEnd> <U|L>'");
    std::vector<std::string> toks = split_ws(arcLine.text);
    if (toks.size() != 5 || toks[0] != "arc")
      throw ParseError(arcLine.number, 1,
                       "expected 'arc <k> <pStart> <pEnd> <U|L>'");
    int declared = parse_int(toks[1], arcLine.number, token_column(arcLine.text, 1), "arc index");
    if (declared != k)
      throw ParseError(arcLine.number, token_column(arcLine.text, 1),
                       "arcs must be listed in order 1..3; expected arc " +
                           std::to_string(k));
    RawArc arc;
    arc.startPuncture = parse_int(toks[2], arcLine.number, token_column(arcLine.text, 2), "puncture");
    arc.endPuncture = parse_int(toks[3], arcLine.number, token_column(arcLine.text, 3), "puncture");
    arc.side = toks[4];
    ++i;

    const Line& evLine = need("'events <k> :'");
    std::vector<std::string> evToks = split_ws(evLine.text);
    if (evToks.size() < 3 || evToks[0] != "events" || evToks[2] != ":")
      throw ParseError(evLine.number, 1, "expected 'events <k> : [tokens]'");
    int evIdx = parse_int(evToks[1], evLine.number, token_column(evLine.text, 1), "arc index");
    if (evIdx != k)
      throw ParseError(evLine.number, token_column(evLine.text, 1),
                       "events line must follow its arc; expected events " +
                           std::to_string(k));
    for (size_t t = 3; t < evToks.size(); ++t)
      arc.events.push_back(parse_event_token(evToks[t], evLine.number,
                                             token_column(evLine.text, t)));
    ++i;

    raw.arcs.push_back(std::move(arc));
  }

  {
    const Line& l = need("'end'");
    if (l.text != "end") throw ParseError(l.number, 1, "expected 'end'");
    ++i;
  }
  if (i < lines.size())
    throw ParseError(lines[i].number, 1, "unexpected content after 'end'");
  return raw;
}

std::string serialize_system(const ArcSystem& a) {
  std::ostringstream os;
  os << "bridge-arc-system v1\n";
  os << "system " << (a.name.empty() ? std::string("unnamed") : a.name) << "\n";
  for (int k = 0; k < 3; ++k) {
    const ArcCoord& arc = a.arcs[k];
    os << "arc " << (k + 1) << ' ' << arc.startPuncture << ' '
       << arc.endPuncture << ' ' << hemisphere_tag(arc.startSide) << "\n";
    os << "events " << (k + 1) << " :";
    for (const Event& e : arc.events) os << ' ' << e.segment << '@' << e.rank;
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void save_system(const ArcSystem& a, const std::string& path) {
  write_file(path, serialize_system(a));
}

}  // namespace bridgearc
