#include <doctest.h>

#include <string>
#include <thread>

#include "homobraid/homobraid.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("word lifecycle") {
  hb_word* w = nullptr;
  REQUIRE(hb_word_parse("3^5 1^-3 2^3 4^-3", 0, &w) == HB_OK);
  CHECK(hb_word_strands(w) == 5);
  CHECK(hb_word_length(w) == 14);
  char* text = nullptr;
  REQUIRE(hb_word_render(w, &text) == HB_OK);
  CHECK(take(text) == "3^5 1^-3 2^3 4^-3");
  hb_verdict v = HB_VERDICT_PRIME;
  int strand = -1;
  REQUIRE(hb_word_verdict(w, &v, &strand) == HB_OK);
  CHECK(v == HB_VERDICT_COMPOSITE);
  CHECK(strand == 2);
  hb_word_free(w);
  hb_word_free(nullptr);
}

TEST_CASE("errors set status, message and position") {
  hb_word* w = nullptr;
  CHECK(hb_word_parse("1 2 zz", 0, &w) == HB_ERR_PARSE);
  CHECK(w == nullptr);
  CHECK(std::string(hb_last_error()).find("zz") != std::string::npos);
  CHECK(hb_last_error_position() == 2);
  CHECK(std::string(hb_status_name(HB_ERR_PARSE)) == "parse");
  CHECK(hb_word_parse(nullptr, 0, &w) == HB_ERR_INVALID_ARGUMENT);
  CHECK(hb_word_parse("5", 3, &w) == HB_ERR_PARSE);
}

TEST_CASE("last error is per thread") {
  hb_word* w = nullptr;
  CHECK(hb_word_parse("x", 0, &w) == HB_ERR_PARSE);
  std::string other;
  std::thread t([&] { other = hb_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(hb_last_error()).empty());
}

TEST_CASE("reports") {
  hb_word* w = nullptr;
  REQUIRE(hb_word_parse("1^-2 2 1^-1 2^2", 0, &w) == HB_OK);
  char* out = nullptr;
  REQUIRE(hb_word_report(w, nullptr, 1, HB_FORMAT_STRUCTURED, 0, &out) == HB_OK);
  const std::string report = take(out);
  CHECK(report.find("verdict.status = \"prime\"") != std::string::npos);
  REQUIRE(hb_word_surface_report(w, HB_FORMAT_JSON, 0, &out) == HB_OK);
  CHECK(take(out).find("\"genus\": 2") != std::string::npos);
  CHECK(hb_word_report(w, nullptr, 0, static_cast<hb_format>(9), 0, &out) ==
        HB_ERR_INVALID_ARGUMENT);
  hb_word_free(w);
}

TEST_CASE("trees and certificates") {
  hb_word* w = nullptr;
  REQUIRE(hb_word_parse("3^5 1^-3 2^3 4^-3", 0, &w) == HB_OK);
  hb_tree* t = nullptr;
  REQUIRE(hb_tree_from_word(w, &t) == HB_OK);
  CHECK(hb_tree_vertex_count(t) == 4);
  char* out = nullptr;
  CHECK(hb_tree_report(t, 1, HB_FORMAT_STRUCTURED, 0, &out) == HB_ERR_NON_ESSENTIAL_EDGE);
  CHECK(take(out).find("certificate.edge = \"strand2\"") != std::string::npos);
  CHECK(hb_last_error_position() == 0);
  REQUIRE(hb_tree_serialize(t, &out) == HB_OK);
  const std::string text = take(out);
  hb_tree* back = nullptr;
  REQUIRE(hb_tree_read(text.c_str(), &back) == HB_OK);
  REQUIRE(hb_tree_serialize(back, &out) == HB_OK);
  CHECK(take(out) == text);
  hb_tree_free(back);
  hb_tree_free(t);
  hb_word_free(w);

  REQUIRE(hb_tree_from_plane_tree("(+(+))", &t) == HB_OK);
  REQUIRE(hb_tree_report(t, 1, HB_FORMAT_TEXT, 0, &out) == HB_OK);
  CHECK(take(out).find("certified") != std::string::npos);
  hb_tree_free(t);
  CHECK(hb_tree_from_plane_tree("(+", &t) == HB_ERR_MALFORMED_TREE);

  REQUIRE(hb_word_parse("1 1^-1 2^2", 0, &w) == HB_OK);
  CHECK(hb_tree_from_word(w, &t) == HB_ERR_NOT_HOMOGENEOUS);
  hb_word_free(w);
}

TEST_CASE("chords") {
  hb_chords* c = nullptr;
  REQUIRE(hb_chords_parse("points 1 2 3 4\nA 1-2 3-4\nB 1-4 2-3\n", &c) == HB_OK);
  char* out = nullptr;
  int equal = -1;
  REQUIRE(hb_chords_report(c, HB_FORMAT_STRUCTURED, 0, &equal, &out) == HB_OK);
  CHECK(equal == 0);
  CHECK(take(out).find("result = \"Witnesses\"") != std::string::npos);
  hb_chords_free(c);
  CHECK(hb_chords_parse("points 1 2 3 4\nA 1-3 2-4\nB 1-3 2-4\n", &c) == HB_ERR_CHORD_CONFIG);
  CHECK(std::string(hb_last_error()).find("disjointness") != std::string::npos);
}

TEST_CASE("corpus is reproducible") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(hb_corpus(5, 10, 5, 8, &a) == HB_OK);
  REQUIRE(hb_corpus(5, 10, 5, 8, &b) == HB_OK);
  CHECK(take(a) == take(b));
  CHECK(hb_corpus(5, 1, 1, 8, &a) == HB_ERR_INVALID_ARGUMENT);
}
