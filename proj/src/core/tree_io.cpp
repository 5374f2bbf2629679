#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "homobraid/error.hpp"
#include "homobraid/open_book_tree.hpp"

namespace homobraid {
namespace {

[[noreturn]] void malformed(const std::string& what, std::optional<std::size_t> line = {}) {
  throw Error(ErrorCode::kMalformedTree, what, line);
}

int to_int(std::string_view s, const std::string& what) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) malformed("bad integer '" + std::string(s) + "' in " + what);
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string placement_to_string(const Placement& p) {
  if (const auto* r = std::get_if<RingSlot>(&p)) return "ring:" + std::to_string(r->slot);
  if (const auto* b = std::get_if<BandCocore>(&p)) return "band:" + std::to_string(b->band);
  const auto& d = std::get<DiskRegion>(p);
  std::string out = std::string("disk:") + (d.disk == DiskEnd::kBottom ? "bottom" : "top") + ":";
  for (std::size_t j = 0; j < d.caps.size(); ++j) {
    if (j) out += '/';
    if (d.caps[j].empty()) out += '-';
    for (std::size_t t = 0; t < d.caps[j].size(); ++t) {
      out += (t ? "," : "") + std::to_string(d.caps[j][t]);
    }
  }
  return out;
}

Placement placement_from_string(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() == 2 && parts[0] == "ring") return RingSlot{to_int(parts[1], "ring slot")};
  if (parts.size() == 2 && parts[0] == "band") return BandCocore{to_int(parts[1], "band index")};
  if (parts.size() == 3 && parts[0] == "disk" && (parts[1] == "bottom" || parts[1] == "top")) {
    DiskRegion d{parts[1] == "bottom" ? DiskEnd::kBottom : DiskEnd::kTop, {}};
    for (auto cap : split(parts[2], '/')) {
      auto& out = d.caps.emplace_back();
      if (cap == "-") continue;
      for (auto band : split(cap, ',')) out.push_back(to_int(band, "disk cap"));
    }
    return d;
  }
  malformed("bad placement '" + std::string(text) + "'");
}

PlaneTree parse_plane_tree(std::string_view text) {
  PlaneTree tree;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw Error(ErrorCode::kMalformedTree, std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  // Iterative descent keeps deep trees off the call stack.
  std::vector<std::size_t> stack;
  expect('(');
  do {
    skip();
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) {
      throw Error(ErrorCode::kMalformedTree, "expected a sign", pos);
    }
    const std::size_t v = tree.signs.size();
    tree.signs.push_back(text[pos] == '+' ? Sign::kPositive : Sign::kNegative);
    tree.rotation.emplace_back();
    ++pos;
    if (!stack.empty()) {
      tree.rotation[stack.back()].push_back(v);
      tree.rotation[v].push_back(stack.back());
    }
    stack.push_back(v);
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        break;
      }
      expect(')');
      stack.pop_back();
      if (stack.empty()) break;
    }
  } while (!stack.empty());
  skip();
  if (pos != text.size()) throw Error(ErrorCode::kMalformedTree, "trailing input", pos);
  return tree;
}

std::string render_plane_tree(const PlaneTree& tree) {
  if (tree.signs.empty()) return "";
  std::string out;
  struct Frame {
    std::size_t v;
    long parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  out += "(";
  out += tree.signs[0] == Sign::kPositive ? '+' : '-';
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& rot = tree.rotation.at(f.v);
    std::size_t start = 0;
    if (f.parent >= 0) {
      start = static_cast<std::size_t>(
          std::find(rot.begin(), rot.end(), static_cast<std::size_t>(f.parent)) - rot.begin());
    }
    const std::size_t children = f.parent >= 0 ? rot.size() - 1 : rot.size();
    if (f.next >= children) {
      out += ')';
      stack.pop_back();
      continue;
    }
    const std::size_t offset = f.parent >= 0 ? 1 : 0;
    const std::size_t child = rot[(start + offset + f.next) % rot.size()];
    ++f.next;
    out += '(';
    out += tree.signs.at(child) == Sign::kPositive ? '+' : '-';
    stack.push_back({child, static_cast<long>(f.v), 0});
  }
  return out;
}

std::string write_tree(const TreeOfOpenBooks& tree) {
  const TreeOfOpenBooks& base = tree.base() ? *tree.base() : tree;
  std::ostringstream out;
  out << "homobraid-tree 1\n";
  for (const auto& v : base.vertices()) {
    out << "vertex " << v.name << ' ';
    if (const auto* t = std::get_if<TorusBlock>(&v.kind)) {
      out << "torus " << t->twists;
    } else {
      out << "hopf " << (std::get<HopfBand>(v.kind).sign == Sign::kPositive ? '+' : '-');
    }
    out << ' ' << veering_name(v.veering) << '\n';
  }
  for (const auto& e : base.edges()) {
    out << "edge " << e.name << ' ' << base.vertices()[e.a].name << ' '
        << base.vertices()[e.b].name << " sides=" << e.region.sides
        << " essential=" << essentiality_name(e.region.essential)
        << " a=" << placement_to_string(e.region.on_a)
        << " b=" << placement_to_string(e.region.on_b) << '\n';
  }
  if (tree.base()) {
    for (std::size_t b = 0; b < tree.size(); ++b) {
      out << "block " << tree.vertices()[b].name;
      for (std::size_t m : tree.members(b)) out << ' ' << base.vertices()[m].name;
      out << '\n';
    }
  }
  return out.str();
}

TreeOfOpenBooks read_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<OpenBookVertex> vertices;
  std::vector<TreeEdge> edges;
  std::map<std::string, std::vector<std::string>> blocks;
  std::map<std::string, std::size_t> index;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "homobraid-tree" || tok[1] != "1") {
        malformed("missing 'homobraid-tree 1' header", lineno);
      }
      header = true;
      continue;
    }
    const std::string where = "line " + std::to_string(lineno);
    if (tok[0] == "vertex") {
      if (tok.size() != 5) malformed(where + ": vertex <name> <torus|hopf> <arg> <veering>", lineno);
      OpenBookVertex v{tok[1], TorusBlock{}, Veering::kUnknown};
      if (tok[2] == "torus") {
        v.kind = TorusBlock{to_int(tok[3], where)};
      } else if (tok[2] == "hopf" && (tok[3] == "+" || tok[3] == "-")) {
        v.kind = HopfBand{tok[3] == "+" ? Sign::kPositive : Sign::kNegative};
      } else {
        malformed(where + ": unknown vertex kind", lineno);
      }
      if (tok[4] == "right") v.veering = Veering::kStrictlyRight;
      else if (tok[4] == "left") v.veering = Veering::kStrictlyLeft;
      else if (tok[4] != "unknown") malformed(where + ": unknown veering '" + tok[4] + "'", lineno);
      if (!index.emplace(v.name, vertices.size()).second) {
        malformed(where + ": duplicate vertex '" + v.name + "'", lineno);
      }
      vertices.push_back(std::move(v));
    } else if (tok[0] == "edge") {
      if (tok.size() != 8) malformed(where + ": edge record has 8 fields", lineno);
      TreeEdge e;
      e.name = tok[1];
      for (int k : {2, 3}) {
        auto it = index.find(tok[static_cast<std::size_t>(k)]);
        if (it == index.end()) malformed(where + ": unknown vertex '" + tok[static_cast<std::size_t>(k)] + "'", lineno);
        (k == 2 ? e.a : e.b) = it->second;
      }
      std::map<std::string, std::string> kv;
      for (std::size_t k = 4; k < 8; ++k) {
        const auto eq = tok[k].find('=');
        if (eq == std::string::npos) malformed(where + ": expected key=value", lineno);
        kv[tok[k].substr(0, eq)] = tok[k].substr(eq + 1);
      }
      if (!kv.count("sides") || !kv.count("essential") || !kv.count("a") || !kv.count("b")) {
        malformed(where + ": edge needs sides=, essential=, a= and b=", lineno);
      }
      e.region.sides = to_int(kv["sides"], where);
      bool known = false;
      for (auto ess : {Essentiality::kNotEssential, Essentiality::kSeesawAtLeastFour,
                       Essentiality::kAnnulusCocore, Essentiality::kAssertedByInput}) {
        if (essentiality_name(ess) == kv["essential"]) {
          e.region.essential = ess;
          known = true;
        }
      }
      if (!known) malformed(where + ": unknown essentiality '" + kv["essential"] + "'", lineno);
      e.region.on_a = placement_from_string(kv["a"]);
      e.region.on_b = placement_from_string(kv["b"]);
      edges.push_back(std::move(e));
    } else if (tok[0] == "block") {
      if (tok.size() < 3) malformed(where + ": block <name> <member>...", lineno);
      blocks[tok[1]] = {tok.begin() + 2, tok.end()};
    } else {
      malformed(where + ": unknown record '" + tok[0] + "'", lineno);
    }
  }
  if (!header) malformed("missing 'homobraid-tree 1' header");
  TreeOfOpenBooks base(std::move(vertices), std::move(edges));
  if (blocks.empty()) return base;
  TreeOfOpenBooks contracted = block_tree(base);
  std::map<std::string, std::vector<std::string>> expected;
  for (std::size_t b = 0; b < contracted.size(); ++b) {
    auto& names = expected[contracted.vertices()[b].name];
    for (std::size_t m : contracted.members(b)) names.push_back(base.vertices()[m].name);
  }
  for (auto& [name, members] : blocks) std::sort(members.begin(), members.end());
  for (auto& [name, members] : expected) std::sort(members.begin(), members.end());
  if (blocks != expected) malformed("block records do not match the veering blocks of the tree");
  return contracted;
}

}  // namespace homobraid
