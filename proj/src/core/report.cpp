#include "homobraid/report.hpp"

#include <sstream>

#include "homobraid/error.hpp"
#include "homobraid/primeness.hpp"
#include "homobraid/surface.hpp"

namespace homobraid {
namespace {

std::string use_name(GeneratorUse u) {
  switch (u) {
    case GeneratorUse::kAbsent: return "absent";
    case GeneratorUse::kOnlyPositive: return "positive";
    case GeneratorUse::kOnlyNegative: return "negative";
    case GeneratorUse::kMixed: return "mixed";
  }
  return "absent";
}

std::string status_name(PrimenessStatus s) {
  switch (s) {
    case PrimenessStatus::kPrime: return "prime";
    case PrimenessStatus::kComposite: return "composite";
    case PrimenessStatus::kInconclusiveNotHomogeneous: return "inconclusive";
  }
  return "inconclusive";
}

std::string step_kind(FactorizationStep::Kind k) {
  switch (k) {
    case FactorizationStep::Kind::kSplit: return "split";
    case FactorizationStep::Kind::kDestabilize: return "destabilize";
    case FactorizationStep::Kind::kDecompose: return "decompose";
  }
  return "split";
}

Report optional_int(const std::optional<int>& v) { return v ? Report(*v) : Report(nullptr); }

Report word_json(const BraidWord& w) {
  Report r;
  r["word"] = render_word(w);
  r["strands"] = w.strands();
  r["letters"] = w.letters().size();
  return r;
}

Report seesaw_json(const BraidWord& w) {
  Report r = Report::object();
  for (const auto& [i, g] : seesaw_profile(w)) r[std::to_string(i)] = g;
  return r;
}

Report invariants_json(const SurfaceInvariants& s) {
  Report r;
  r["euler_char"] = s.euler_char;
  r["boundary_components"] = s.boundary_components;
  r["genus"] = s.genus;
  r["connected"] = s.connected;
  r["vertices"] = s.vertices;
  r["edges"] = s.edges;
  r["faces"] = s.faces;
  return r;
}

Report closure_json(const ClosureStats& c) {
  Report r;
  r["components"] = c.components;
  r["euler_char"] = c.euler_char;
  r["first_betti"] = optional_int(c.first_betti);
  r["genus"] = optional_int(c.genus);
  r["genus_is_split_sum"] = c.genus_is_split_sum;
  r["genus_is_minimal"] = c.genus_is_minimal;
  return r;
}

std::string veering_letter(Veering v) {
  return v == Veering::kStrictlyRight ? "R" : v == Veering::kStrictlyLeft ? "L" : "?";
}

Report tree_json(const TreeOfOpenBooks& tree) {
  Report r;
  Report vertices = Report::array();
  for (const auto& v : tree.vertices()) {
    Report j;
    j["name"] = v.name;
    if (const auto* t = std::get_if<TorusBlock>(&v.kind)) {
      j["kind"] = "torus";
      j["twists"] = t->twists;
    } else if (const auto* h = std::get_if<HopfBand>(&v.kind)) {
      j["kind"] = "hopf";
      j["sign"] = h->sign == Sign::kPositive ? "+" : "-";
    }
    j["veering"] = std::string(veering_name(v.veering));
    vertices.push_back(std::move(j));
  }
  Report edges = Report::array();
  for (const auto& e : tree.edges()) {
    Report j;
    j["name"] = e.name;
    j["a"] = tree.vertices()[e.a].name;
    j["b"] = tree.vertices()[e.b].name;
    j["sides"] = e.region.sides;
    j["essential"] = std::string(essentiality_name(e.region.essential));
    j["on_a"] = placement_to_string(e.region.on_a);
    j["on_b"] = placement_to_string(e.region.on_b);
    edges.push_back(std::move(j));
  }
  r["vertices"] = std::move(vertices);
  r["edges"] = std::move(edges);
  r["page"] = invariants_json(surface_invariants(page_of_tree(tree)));
  r["serialization"] = write_tree(tree);
  return r;
}

}  // namespace

std::optional<ReportFormat> report_format_from_string(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "structured") return ReportFormat::kStructured;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

Report certificate_section(const TreeOfOpenBooks& tree) {
  Report r;
  try {
    const PrimenessCertificate cert = primeness_certificate(tree);
    const TreeOfOpenBooks& blocks = cert.block_tree;
    const TreeOfOpenBooks& base = blocks.base() ? *blocks.base() : blocks;
    r["status"] = "certified";
    std::string sequence;
    Report block_list = Report::array();
    for (std::size_t b : cert.block_growing.order) {
      Report j;
      j["name"] = blocks.vertices()[b].name;
      j["veering"] = veering_letter(blocks.vertices()[b].veering);
      Report members = Report::array();
      for (std::size_t m : blocks.members(b)) members.push_back(base.vertices()[m].name);
      j["members"] = std::move(members);
      block_list.push_back(std::move(j));
      sequence += (sequence.empty() ? "" : ",") + veering_letter(blocks.vertices()[b].veering);
    }
    r["block_veering"] = sequence;
    r["blocks"] = std::move(block_list);
    Report growing = Report::array();
    for (std::size_t v : cert.growing.order) growing.push_back(base.vertices()[v].name);
    r["growing"] = std::move(growing);
    Report twists = Report::array();
    for (const auto& t : cert.monodromy) twists.push_back(t.render());
    r["monodromy"] = std::move(twists);
    r["monodromy_length"] = cert.monodromy.size();
    Report cites = Report::array();
    for (const auto& c : cert.citations) {
      Report j;
      j["result"] = std::string(cited_result_name(c.result));
      j["subject"] = c.subject;
      cites.push_back(std::move(j));
    }
    r["citations"] = std::move(cites);
    const auto problem = validate_certificate(cert);
    r["valid"] = !problem.has_value();
    if (problem) r["problem"] = *problem;
  } catch (const Error& e) {
    r["status"] = "refused";
    r["reason"] = std::string(error_code_name(e.code()));
    if (e.code() == ErrorCode::kNonEssentialEdge && e.position()) {
      const auto& edge = tree.edges()[*e.position()];
      r["edge"] = edge.name;
      r["edge_sides"] = edge.region.sides;
    }
    r["message"] = e.what();
  }
  return r;
}

Report analysis_report(const BraidWord& word, std::string_view input, bool certify) {
  Report r;
  r["schema"] = std::string(kReportSchema);
  r["command"] = "analyze";
  Report in = word_json(word);
  in["text"] = std::string(input);
  r["input"] = std::move(in);

  const auto profile = homogeneity_profile(word);
  Report hom;
  hom["homogeneous"] = profile.is_homogeneous();
  Report gens = Report::object();
  for (std::size_t i = 0; i < profile.uses.size(); ++i) {
    gens[std::to_string(i + 1)] = use_name(profile.uses[i]);
  }
  hom["generators"] = std::move(gens);
  r["homogeneity"] = std::move(hom);
  r["seesaw"] = seesaw_json(word);
  r["decomposition_strands"] = decomposition_strands(word);

  Report split;
  split["split"] = is_split(word);
  split["unused_generators"] = unused_generators(word);
  Report comps = Report::array();
  for (const SplitComponent& c : split_component_intervals(word)) {
    Report j = word_json(c.word);
    j["first_strand"] = c.first_strand;
    const auto d = destabilize_fully(c.word);
    Report ds = word_json(d.reduced);
    ds["m_minus"] = d.m_minus;
    ds["m_plus"] = d.m_plus;
    ds["seesaw"] = seesaw_json(d.reduced);
    ds["decomposition_strands"] = decomposition_strands(d.reduced);
    j["destabilization"] = std::move(ds);
    if (certify && profile.is_homogeneous()) {
      if (d.reduced.strands() >= 2) {
        const TreeOfOpenBooks tree = braid_tree(d.reduced);
        j["tree"] = tree_json(tree);
        j["certificate"] = certificate_section(tree);
      } else {
        Report cert;
        cert["status"] = "refused";
        cert["reason"] = "unknotComponent";
        cert["message"] = "component reduces to a single strand";
        j["certificate"] = std::move(cert);
      }
    }
    comps.push_back(std::move(j));
  }
  split["components"] = std::move(comps);
  r["split"] = std::move(split);

  const auto verdict = primeness_verdict(word);
  Report v;
  v["status"] = status_name(verdict.status);
  v["witness_strand"] = optional_int(verdict.witness_strand);
  if (verdict.status == PrimenessStatus::kInconclusiveNotHomogeneous) {
    v["reason"] = "word is not homogeneous";
  }
  r["verdict"] = std::move(v);

  if (profile.is_homogeneous()) {
    const auto fac = prime_factorization(word);
    Report f;
    Report summands = Report::array();
    for (const BraidWord& s : fac.summands) summands.push_back(word_json(s));
    f["summands"] = std::move(summands);
    f["canonical"] = fac.canonical_summands();
    f["unknot_components"] = fac.unknot_components;
    Report steps = Report::array();
    for (const auto& s : fac.provenance) {
      Report j;
      j["kind"] = step_kind(s.kind);
      j["depth"] = s.depth;
      j["word"] = s.word;
      j["strands"] = s.strands;
      if (s.kind == FactorizationStep::Kind::kDecompose) j["strand"] = s.strand;
      if (s.kind == FactorizationStep::Kind::kDestabilize) {
        j["m_minus"] = s.m_minus;
        j["m_plus"] = s.m_plus;
      }
      if (s.kind == FactorizationStep::Kind::kSplit) j["parts"] = s.parts;
      steps.push_back(std::move(j));
    }
    f["steps"] = std::move(steps);
    r["factorization"] = std::move(f);
  } else {
    r["factorization"] = nullptr;
  }
  r["closure"] = closure_json(closure_stats(word));
  return r;
}

Report tree_report(const TreeOfOpenBooks& tree, bool certify) {
  Report r;
  r["schema"] = std::string(kReportSchema);
  r["command"] = "tree";
  r["tree"] = tree_json(tree);
  if (certify) r["certificate"] = certificate_section(tree);
  return r;
}

Report chords_report(const ChordConfig& cfg) {
  Report r;
  r["schema"] = std::string(kReportSchema);
  r["command"] = "chords";
  r["points"] = cfg.points.size();
  r["mode"] = cfg.polygon_mode() ? "polygon" : "disk";
  const WitnessResult res = find_witnesses(cfg);
  if (std::holds_alternative<ChordsEqual>(res)) {
    r["result"] = "Equal";
    return r;
  }
  const auto& pair = std::get<WitnessPair>(res);
  r["result"] = "Witnesses";
  auto witness = [&](const Witness& w) {
    Report j;
    j["point"] = cfg.points[w.p];
    j["a"] = render_chord(cfg, w.a);
    j["b"] = render_chord(cfg, w.b);
    return j;
  };
  r["right"] = witness(pair.right);
  r["left"] = witness(pair.left);
  if (cfg.polygon_mode()) r["different_sides"] = pair.different_sides;
  return r;
}

Report surface_report(const BraidWord& word) {
  Report r;
  r["schema"] = std::string(kReportSchema);
  r["command"] = "surface";
  r["input"] = word_json(word);
  const CombinatorialSurface s = seifert_surface_of_word(word);
  r["surface"] = invariants_json(surface_invariants(s));
  Report comps = Report::array();
  for (const auto& c : component_invariants(s)) comps.push_back(invariants_json(c));
  r["components"] = std::move(comps);
  r["closure"] = closure_json(closure_stats(word));
  r["polygons"] = write_surface(s);
  return r;
}

namespace {

std::string scalar(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && v.empty()) return "[]";
  if (v.is_object() && v.empty()) return "{}";
  return v.dump();
}

bool is_leaf(const Report& v) { return !v.is_structured() || v.empty(); }

void structured(const Report& v, const std::string& path, std::ostringstream& out) {
  if (is_leaf(v)) {
    out << path << " = " << (v.is_string() ? v.dump() : scalar(v)) << '\n';
    return;
  }
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) structured(child, path.empty() ? k : path + "." + k, out);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) structured(v[i], path + "." + std::to_string(i), out);
  }
}

bool scalar_array(const Report& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_structured()) return false;
  }
  return true;
}

void text(const Report& v, int indent, std::ostringstream& out, bool color) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [k, child] : v.items()) {
    const bool header = color && indent == 0;
    const std::string key = header ? "\x1b[1m" + k + "\x1b[0m" : k;
    if (child.is_string() && child.get<std::string>().find('\n') != std::string::npos) {
      out << pad << key << ":\n";
      std::istringstream lines(child.get<std::string>());
      for (std::string line; std::getline(lines, line);) out << pad << "  " << line << '\n';
    } else if (scalar_array(child) && !child.empty()) {
      out << pad << key << ": ";
      for (std::size_t i = 0; i < child.size(); ++i) out << (i ? ", " : "") << scalar(child[i]);
      out << '\n';
    } else if (is_leaf(child)) {
      std::string value = scalar(child);
      if (color && k == "status") {
        const char* tint = value == "prime" || value == "certified" ? "\x1b[32m"
                           : value == "composite" || value == "refused" ? "\x1b[31m"
                                                                        : "\x1b[33m";
        value = tint + value + "\x1b[0m";
      }
      out << pad << key << ": " << value << '\n';
    } else if (child.is_object()) {
      out << pad << key << ":\n";
      text(child, indent + 1, out, color);
    } else {
      out << pad << key << ":\n";
      for (std::size_t i = 0; i < child.size(); ++i) {
        out << pad << "  [" << i << "]\n";
        text(child[i], indent + 2, out, color);
      }
    }
  }
}

}  // namespace

std::string render_report(const Report& report, ReportFormat format, bool color) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kJson:
      out << report.dump(2) << '\n';
      break;
    case ReportFormat::kStructured:
      structured(report, "", out);
      break;
    case ReportFormat::kText:
      text(report, 0, out, color);
      break;
  }
  return out.str();
}

}  // namespace homobraid
