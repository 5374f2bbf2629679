#include "homobraid/chords.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "homobraid/error.hpp"

namespace homobraid {
namespace {

[[noreturn]] void bad(const std::string& what, std::optional<std::size_t> pos = {}) {
  throw Error(ErrorCode::kChordConfig, what, pos);
}

// Distance from p going forward around the circle.
std::size_t after(std::size_t p, std::size_t x, std::size_t n) { return (x + n - p) % n; }

bool crosses(const Chord& c, const Chord& d) {
  if (c.has(d.p) || c.has(d.q)) return false;
  const bool p_in = c.p < d.p && d.p < c.q;
  const bool q_in = c.p < d.q && d.q < c.q;
  return p_in != q_in;
}

void check_set(const std::vector<Chord>& chords, std::size_t n, const char* name) {
  std::set<std::size_t> ends;
  for (const Chord& c : chords) {
    if (c.q >= n) bad(std::string("chord of ") + name + " uses an unknown point");
    if (c.p == c.q) bad(std::string("chord of ") + name + " must join two distinct points");
    if (!ends.insert(c.p).second || !ends.insert(c.q).second) {
      bad(std::string("disjointness: chords of ") + name + " share an endpoint");
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (crosses(chords[i], chords[j])) {
        bad(std::string("disjointness: chords of ") + name + " cross");
      }
    }
  }
}

std::set<std::size_t> endpoints(const std::vector<Chord>& chords) {
  std::set<std::size_t> out;
  for (const Chord& c : chords) {
    out.insert(c.p);
    out.insert(c.q);
  }
  return out;
}

const Chord* chord_at(const std::vector<Chord>& chords, std::size_t p) {
  for (const Chord& c : chords) {
    if (c.has(p)) return &c;
  }
  return nullptr;
}

}  // namespace

bool is_right_of(const Chord& a, const Chord& b, std::size_t p, std::size_t point_count) {
  if (a.q >= point_count || b.q >= point_count || p >= point_count) {
    bad("chord endpoint out of range");
  }
  if (a == b) bad("a chord is neither right nor left of itself");
  if (!a.has(p) || !b.has(p) || a.other(p) == b.other(p)) {
    bad("chords must share exactly the given endpoint");
  }
  return after(p, a.other(p), point_count) < after(p, b.other(p), point_count);
}

void validate_chord_config(const ChordConfig& cfg) {
  const std::size_t n = cfg.points.size();
  std::set<std::string> labels(cfg.points.begin(), cfg.points.end());
  if (labels.size() != n) bad("point labels must be distinct");
  check_set(cfg.a, n, "A");
  check_set(cfg.b, n, "B");
  if (endpoints(cfg.a) != endpoints(cfg.b)) bad("A and B must have the same endpoints");
  if (!cfg.polygon_mode()) return;
  if (cfg.side_of.size() != n) bad("every point needs a side");
  // Sides are runs of consecutive points; count the changes around the circle.
  std::set<int> sides(cfg.side_of.begin(), cfg.side_of.end());
  std::size_t changes = 0;
  for (std::size_t i = 0; i < n; ++i) changes += cfg.side_of[i] != cfg.side_of[(i + 1) % n];
  if (sides.size() > 1 && changes != sides.size()) bad("sides must be runs of consecutive points");
  for (const auto* set : {&cfg.a, &cfg.b}) {
    for (const Chord& c : *set) {
      if (cfg.side_of[c.p] == cfg.side_of[c.q]) {
        bad("no chord may join two points on the same side (" + render_chord(cfg, c) + ")");
      }
    }
  }
}

WitnessResult find_witnesses(const ChordConfig& cfg) {
  validate_chord_config(cfg);
  const std::set<Chord> sa(cfg.a.begin(), cfg.a.end());
  const std::set<Chord> sb(cfg.b.begin(), cfg.b.end());
  if (sa == sb) return ChordsEqual{};
  const std::size_t n = cfg.points.size();
  auto scan = [&](bool want_right, bool need_sides) -> std::optional<Witness> {
    for (std::size_t p = 0; p < n; ++p) {
      const Chord* a = chord_at(cfg.a, p);
      const Chord* b = chord_at(cfg.b, p);
      if (!a || !b || *a == *b) continue;
      if (need_sides && cfg.side_of[a->other(p)] == cfg.side_of[b->other(p)]) continue;
      if (is_right_of(*b, *a, p, n) == want_right) return Witness{*a, *b, p};
    }
    return std::nullopt;
  };
  if (cfg.polygon_mode()) {
    auto r = scan(true, true);
    auto l = scan(false, true);
    if (r && l) return WitnessPair{*r, *l, true};
  }
  auto r = scan(true, false);
  auto l = scan(false, false);
  if (!r || !l) throw std::logic_error("distinct chord sets without a witness pair");
  return WitnessPair{*r, *l, false};
}

std::string render_chord(const ChordConfig& cfg, const Chord& c) {
  return cfg.points.at(c.p) + "-" + cfg.points.at(c.q);
}

ChordConfig parse_chord_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  ChordConfig cfg;
  std::map<std::string, std::size_t> index;
  std::optional<std::vector<std::vector<std::string>>> sides;
  std::vector<std::string> a_text, b_text;
  bool have_points = false, have_a = false, have_b = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string key = tok[0];
    tok.erase(tok.begin());
    if (key == "points") {
      if (have_points) bad("duplicate points record", lineno);
      have_points = true;
      cfg.points = tok;
    } else if (key == "sides") {
      if (sides) bad("duplicate sides record", lineno);
      sides.emplace(1);
      for (const auto& t : tok) {
        if (t == "|") sides->emplace_back();
        else sides->back().push_back(t);
      }
    } else if (key == "A") {
      if (have_a) bad("duplicate A record", lineno);
      have_a = true;
      a_text = tok;
    } else if (key == "B") {
      if (have_b) bad("duplicate B record", lineno);
      have_b = true;
      b_text = tok;
    } else {
      bad("unknown record '" + key + "'", lineno);
    }
  }
  if (!have_points || !have_a || !have_b) bad("a chord file needs points, A and B records");
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (cfg.points[i].find('-') != std::string::npos) bad("point labels may not contain '-'");
    if (!index.emplace(cfg.points[i], i).second) bad("point labels must be distinct");
  }
  auto chords = [&](const std::vector<std::string>& items) {
    std::vector<Chord> out;
    for (const auto& item : items) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) bad("chord '" + item + "' is not written as x-y");
      auto x = index.find(item.substr(0, dash));
      auto y = index.find(item.substr(dash + 1));
      if (x == index.end() || y == index.end()) bad("chord '" + item + "' uses an unknown point");
      if (x->second == y->second) bad("chord '" + item + "' must join two distinct points");
      out.emplace_back(x->second, y->second);
    }
    return out;
  };
  cfg.a = chords(a_text);
  cfg.b = chords(b_text);
  if (sides) {
    cfg.side_of.assign(cfg.points.size(), -1);
    for (std::size_t s = 0; s < sides->size(); ++s) {
      if ((*sides)[s].empty()) bad("empty side in sides record");
      for (const auto& label : (*sides)[s]) {
        auto it = index.find(label);
        if (it == index.end()) bad("side uses unknown point '" + label + "'");
        if (cfg.side_of[it->second] != -1) bad("point '" + label + "' is on two sides");
        cfg.side_of[it->second] = static_cast<int>(s);
      }
    }
    if (std::count(cfg.side_of.begin(), cfg.side_of.end(), -1) > 0) {
      bad("every point needs a side");
    }
  }
  return cfg;
}

std::string write_chord_config(const ChordConfig& cfg) {
  std::ostringstream out;
  out << "points";
  for (const auto& p : cfg.points) out << ' ' << p;
  out << '\n';
  if (cfg.polygon_mode()) {
    out << "sides";
    // Start at a side boundary so every side is printed as one run.
    std::size_t start = 0;
    const std::size_t n = cfg.points.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (cfg.side_of[i] != cfg.side_of[(i + n - 1) % n]) {
        start = i;
        break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = (start + k) % n;
      if (k > 0 && cfg.side_of[i] != cfg.side_of[(i + n - 1) % n]) out << " |";
      out << ' ' << cfg.points[i];
    }
    out << '\n';
  }
  for (const auto& [name, set] : {std::pair{"A", &cfg.a}, std::pair{"B", &cfg.b}}) {
    out << name;
    for (const Chord& c : *set) out << ' ' << render_chord(cfg, c);
    out << '\n';
  }
  return out.str();
}

}  // namespace homobraid
