#include "homobraid/homobraid.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "homobraid/braid.hpp"
#include "homobraid/chords.hpp"
#include "homobraid/corpus.hpp"
#include "homobraid/error.hpp"
#include "homobraid/open_book_tree.hpp"
#include "homobraid/primeness.hpp"
#include "homobraid/report.hpp"

struct hb_word {
  homobraid::BraidWord word;
};

struct hb_tree {
  homobraid::TreeOfOpenBooks tree;
};

struct hb_chords {
  homobraid::ChordConfig cfg;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;

hb_status fail(hb_status status, const std::string& message, long position = -1) {
  last_error = message;
  last_position = position;
  return status;
}

hb_status ok() {
  last_error.clear();
  last_position = -1;
  return HB_OK;
}

template <typename F>
hb_status guard(F&& body) {
  try {
    return body();
  } catch (const homobraid::Error& e) {
    return fail(static_cast<hb_status>(e.code()), e.what(),
                e.position() ? static_cast<long>(*e.position()) : -1);
  } catch (const std::bad_alloc&) {
    return fail(HB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HB_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

homobraid::ReportFormat to_format(hb_format f) {
  switch (f) {
    case HB_FORMAT_TEXT: return homobraid::ReportFormat::kText;
    case HB_FORMAT_STRUCTURED: return homobraid::ReportFormat::kStructured;
    case HB_FORMAT_JSON: return homobraid::ReportFormat::kJson;
  }
  throw homobraid::Error(homobraid::ErrorCode::kInvalidArgument, "unknown report format");
}

hb_status null_arg() { return fail(HB_ERR_INVALID_ARGUMENT, "null argument"); }

hb_status status_from_name(const std::string& name) {
  for (int c = 1; c <= static_cast<int>(homobraid::ErrorCode::kIo); ++c) {
    if (homobraid::error_code_name(static_cast<homobraid::ErrorCode>(c)) == name) {
      return static_cast<hb_status>(c);
    }
  }
  return HB_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* hb_version(void) { return "1.0.0"; }

const char* hb_status_name(hb_status status) {
  if (status == HB_OK) return "ok";
  if (status == HB_ERR_INTERNAL) return "internal";
  if (status >= HB_ERR_PARSE && status <= HB_ERR_IO) {
    return homobraid::error_code_name(static_cast<homobraid::ErrorCode>(status)).data();
  }
  return "unknown";
}

const char* hb_last_error(void) { return last_error.c_str(); }
long hb_last_error_position(void) { return last_position; }
void hb_string_free(char* s) { std::free(s); }

hb_status hb_word_parse(const char* text, int strands, hb_word** out) {
  if (!text || !out) return null_arg();
  return guard([&] {
    auto w = homobraid::parse_word(text, strands > 0 ? std::optional<int>(strands) : std::nullopt);
    *out = new hb_word{std::move(w)};
    return ok();
  });
}

void hb_word_free(hb_word* word) { delete word; }
int hb_word_strands(const hb_word* word) { return word ? word->word.strands() : 0; }
size_t hb_word_length(const hb_word* word) { return word ? word->word.letters().size() : 0; }

hb_status hb_word_render(const hb_word* word, char** out) {
  if (!word || !out) return null_arg();
  return guard([&] {
    *out = dup(homobraid::render_word(word->word));
    return ok();
  });
}

hb_status hb_word_verdict(const hb_word* word, hb_verdict* verdict, int* witness_strand) {
  if (!word || !verdict) return null_arg();
  return guard([&] {
    const auto v = homobraid::primeness_verdict(word->word);
    switch (v.status) {
      case homobraid::PrimenessStatus::kPrime: *verdict = HB_VERDICT_PRIME; break;
      case homobraid::PrimenessStatus::kComposite: *verdict = HB_VERDICT_COMPOSITE; break;
      default: *verdict = HB_VERDICT_INCONCLUSIVE; break;
    }
    if (witness_strand) *witness_strand = v.witness_strand.value_or(0);
    return ok();
  });
}

hb_status hb_word_report(const hb_word* word, const char* input_echo, int certify,
                         hb_format format, int color, char** out) {
  if (!word || !out) return null_arg();
  return guard([&] {
    const std::string echo = input_echo ? input_echo : homobraid::render_word(word->word);
    const auto report = homobraid::analysis_report(word->word, echo, certify != 0);
    *out = dup(homobraid::render_report(report, to_format(format), color != 0));
    return ok();
  });
}

hb_status hb_word_surface_report(const hb_word* word, hb_format format, int color, char** out) {
  if (!word || !out) return null_arg();
  return guard([&] {
    const auto report = homobraid::surface_report(word->word);
    *out = dup(homobraid::render_report(report, to_format(format), color != 0));
    return ok();
  });
}

hb_status hb_tree_from_word(const hb_word* word, hb_tree** out) {
  if (!word || !out) return null_arg();
  return guard([&] {
    *out = new hb_tree{homobraid::braid_tree(word->word)};
    return ok();
  });
}

hb_status hb_tree_from_plane_tree(const char* text, hb_tree** out) {
  if (!text || !out) return null_arg();
  return guard([&] {
    *out = new hb_tree{homobraid::arborescent_tree(homobraid::parse_plane_tree(text))};
    return ok();
  });
}

hb_status hb_tree_read(const char* text, hb_tree** out) {
  if (!text || !out) return null_arg();
  return guard([&] {
    *out = new hb_tree{homobraid::read_tree(text)};
    return ok();
  });
}

void hb_tree_free(hb_tree* tree) { delete tree; }
size_t hb_tree_vertex_count(const hb_tree* tree) { return tree ? tree->tree.size() : 0; }

hb_status hb_tree_serialize(const hb_tree* tree, char** out) {
  if (!tree || !out) return null_arg();
  return guard([&] {
    *out = dup(homobraid::write_tree(tree->tree));
    return ok();
  });
}

hb_status hb_tree_report(const hb_tree* tree, int certify, hb_format format, int color,
                         char** out) {
  if (!tree || !out) return null_arg();
  return guard([&] {
    const auto report = homobraid::tree_report(tree->tree, certify != 0);
    *out = dup(homobraid::render_report(report, to_format(format), color != 0));
    if (certify && report["certificate"]["status"] == "refused") {
      const auto& cert = report["certificate"];
      long position = -1;
      if (cert.contains("edge")) {
        for (std::size_t i = 0; i < tree->tree.edges().size(); ++i) {
          if (tree->tree.edges()[i].name == cert["edge"].get<std::string>()) {
            position = static_cast<long>(i);
          }
        }
      }
      return fail(status_from_name(cert["reason"].get<std::string>()),
                  cert["message"].get<std::string>(), position);
    }
    if (certify && !report["certificate"]["valid"].get<bool>()) {
      return fail(HB_ERR_INTERNAL, "certificate failed validation");
    }
    return ok();
  });
}

hb_status hb_chords_parse(const char* text, hb_chords** out) {
  if (!text || !out) return null_arg();
  return guard([&] {
    auto cfg = homobraid::parse_chord_config(text);
    homobraid::validate_chord_config(cfg);
    *out = new hb_chords{std::move(cfg)};
    return ok();
  });
}

void hb_chords_free(hb_chords* chords) { delete chords; }

hb_status hb_chords_report(const hb_chords* chords, hb_format format, int color, int* equal,
                           char** out) {
  if (!chords || !out) return null_arg();
  return guard([&] {
    const auto report = homobraid::chords_report(chords->cfg);
    if (equal) *equal = report["result"] == "Equal" ? 1 : 0;
    *out = dup(homobraid::render_report(report, to_format(format), color != 0));
    return ok();
  });
}

hb_status hb_corpus(uint64_t seed, int count, int max_strands, int max_letters, char** out) {
  if (!out) return null_arg();
  return guard([&] {
    *out = dup(homobraid::generate_corpus(seed, count, max_strands, max_letters));
    return ok();
  });
}

}  // extern "C"
