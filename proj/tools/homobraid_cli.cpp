#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homobraid/homobraid.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;
constexpr int kExitComposite = 10;
constexpr int kExitInconclusive = 11;
constexpr int kExitRefused = 12;
constexpr int kExitInternal = 70;

struct Owned {
  char* s = nullptr;
  ~Owned() { hb_string_free(s); }
};

using WordPtr = std::unique_ptr<hb_word, decltype(&hb_word_free)>;
using TreePtr = std::unique_ptr<hb_tree, decltype(&hb_tree_free)>;
using ChordsPtr = std::unique_ptr<hb_chords, decltype(&hb_chords_free)>;

int exit_for(hb_status s) {
  switch (s) {
    case HB_OK: return kExitOk;
    case HB_ERR_PARSE:
    case HB_ERR_MALFORMED_TREE: return kExitUsage;
    case HB_ERR_IO: return kExitIo;
    case HB_ERR_NON_ESSENTIAL_EDGE: return kExitRefused;
    case HB_ERR_INTERNAL: return kExitInternal;
    default: return kExitDomain;
  }
}

int report_error(hb_status s) {
  std::string msg = std::string("error: ") + hb_status_name(s) + ": " + hb_last_error();
  if (hb_last_error_position() >= 0 && s != HB_ERR_PARSE) {
    msg += " (at " + std::to_string(hb_last_error_position()) + ")";
  }
  std::fprintf(stderr, "%s\n", msg.c_str());
  return exit_for(s);
}

void emit(const char* text) {
  std::fputs(text, stdout);
  std::fflush(stdout);
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool color_enabled() {
  const char* env = std::getenv("HOMOBRAID_COLOR");
  if (!env) return false;
  const std::string v = env;
  return v == "1" || v == "always" || v == "yes" || v == "on";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

struct Globals {
  int strands = 0;
  std::string format = "text";
  std::uint64_t seed = 1;
  hb_format fmt() const {
    if (format == "structured") return HB_FORMAT_STRUCTURED;
    if (format == "json") return HB_FORMAT_JSON;
    return HB_FORMAT_TEXT;
  }
};

std::optional<WordPtr> parse(const std::string& text, const Globals& g, int& code) {
  hb_word* w = nullptr;
  if (hb_status s = hb_word_parse(text.c_str(), g.strands, &w); s != HB_OK) {
    code = report_error(s);
    return std::nullopt;
  }
  return WordPtr(w, hb_word_free);
}

int cmd_analyze(const Globals& g, const std::vector<std::string>& tokens, bool certify) {
  const std::string text = join(tokens);
  int code = 0;
  auto w = parse(text, g, code);
  if (!w) return code;
  Owned out;
  if (hb_status s = hb_word_report(w->get(), text.c_str(), certify, g.fmt(), color_enabled(), &out.s);
      s != HB_OK) {
    return report_error(s);
  }
  hb_verdict v = HB_VERDICT_PRIME;
  if (hb_status s = hb_word_verdict(w->get(), &v, nullptr); s != HB_OK) return report_error(s);
  emit(out.s);
  if (v == HB_VERDICT_COMPOSITE) return kExitComposite;
  if (v == HB_VERDICT_INCONCLUSIVE) return kExitInconclusive;
  return kExitOk;
}

int cmd_tree(const Globals& g, const std::vector<std::string>& tokens, const std::string& plane_file,
             const std::string& tree_file, bool certify) {
  const int sources = !tokens.empty() + !plane_file.empty() + !tree_file.empty();
  if (sources != 1) {
    std::fprintf(stderr, "error: tree needs exactly one of <word>, --arborescent FILE, --read FILE\n");
    return kExitUsage;
  }
  hb_tree* raw = nullptr;
  hb_status s = HB_OK;
  if (!tokens.empty()) {
    int code = 0;
    auto w = parse(join(tokens), g, code);
    if (!w) return code;
    s = hb_tree_from_word(w->get(), &raw);
  } else {
    const std::string& path = plane_file.empty() ? tree_file : plane_file;
    auto text = slurp(path);
    if (!text) {
      std::fprintf(stderr, "error: io: cannot read '%s'\n", path.c_str());
      return kExitIo;
    }
    s = plane_file.empty() ? hb_tree_read(text->c_str(), &raw)
                           : hb_tree_from_plane_tree(text->c_str(), &raw);
  }
  if (s != HB_OK) return report_error(s);
  TreePtr tree(raw, hb_tree_free);
  Owned out;
  s = hb_tree_report(tree.get(), certify, g.fmt(), color_enabled(), &out.s);
  if (out.s) emit(out.s);
  return s == HB_OK ? kExitOk : report_error(s);
}

int cmd_chords(const Globals& g, const std::string& path) {
  auto text = slurp(path);
  if (!text) {
    std::fprintf(stderr, "error: io: cannot read '%s'\n", path.c_str());
    return kExitIo;
  }
  hb_chords* raw = nullptr;
  if (hb_status s = hb_chords_parse(text->c_str(), &raw); s != HB_OK) return report_error(s);
  ChordsPtr chords(raw, hb_chords_free);
  Owned out;
  int equal = 0;
  if (hb_status s = hb_chords_report(chords.get(), g.fmt(), color_enabled(), &equal, &out.s);
      s != HB_OK) {
    return report_error(s);
  }
  emit(out.s);
  return kExitOk;
}

int cmd_surface(const Globals& g, const std::vector<std::string>& tokens) {
  int code = 0;
  auto w = parse(join(tokens), g, code);
  if (!w) return code;
  Owned out;
  if (hb_status s = hb_word_surface_report(w->get(), g.fmt(), color_enabled(), &out.s); s != HB_OK) {
    return report_error(s);
  }
  emit(out.s);
  return kExitOk;
}

int cmd_corpus(const Globals& g, int count, int max_strands, int max_letters) {
  Owned out;
  if (hb_status s = hb_corpus(g.seed, count, max_strands, max_letters, &out.s); s != HB_OK) {
    return report_error(s);
  }
  emit(out.s);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primeness of homogeneous braid closures"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--strands", g.strands, "Strand count for word arguments")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized commands");

  std::vector<std::string> words;
  bool certify = false;
  std::string plane_file, tree_file, chord_file;
  int count = 20, max_strands = 6, max_letters = 12;

  auto* analyze = app.add_subcommand("analyze", "Decide primeness and factor a braid word");
  analyze->add_option("word", words, "Braid word, e.g. \"1^-2 2 1^-1 2^2\"")->required();
  analyze->add_flag("--certify", certify, "Attach braid trees and certificates");

  auto* tree = app.add_subcommand("tree", "Tree of open books of a word or plane tree");
  tree->add_option("word", words, "Homogeneous, non-split, destabilized braid word");
  tree->add_option("--arborescent", plane_file, "Plane tree file, e.g. (+(+)(-))");
  tree->add_option("--read", tree_file, "Serialized tree file");
  tree->add_flag("--certify", certify, "Emit a primeness certificate");

  auto* chords = app.add_subcommand("chords", "Right/left witnesses for two chord sets");
  chords->add_option("file", chord_file, "Chord configuration file")->required();

  auto* surface = app.add_subcommand("surface", "Seifert surface invariants of a braid word");
  surface->add_option("word", words, "Braid word")->required();

  auto* corpus = app.add_subcommand("corpus", "Random homogeneous words with verdicts");
  corpus->add_option("--count", count)->check(CLI::NonNegativeNumber);
  corpus->add_option("--max-strands", max_strands)->check(CLI::Range(2, 64));
  corpus->add_option("--max-letters", max_letters)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (analyze->parsed()) return cmd_analyze(g, words, certify);
  if (tree->parsed()) return cmd_tree(g, words, plane_file, tree_file, certify);
  if (chords->parsed()) return cmd_chords(g, chord_file);
  if (surface->parsed()) return cmd_surface(g, words);
  return cmd_corpus(g, count, max_strands, max_letters);
}
