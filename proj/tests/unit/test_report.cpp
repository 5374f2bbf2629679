#include <doctest.h>

#include <map>
#include <sstream>

#include "homobraid/report.hpp"
#include "support.hpp"

using namespace homobraid;

namespace {

// Flattens a JSON document the way the structured renderer does.
void flatten(const Report& v, const std::string& path, std::map<std::string, std::string>& out) {
  if (!v.is_structured() || v.empty()) {
    out[path] = v.is_array() ? "[]" : v.is_object() ? "{}" : v.dump();
    return;
  }
  if (v.is_object()) {
    for (const auto& [k, c] : v.items()) flatten(c, path.empty() ? k : path + "." + k, out);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
  }
}

std::map<std::string, std::string> parse_structured(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto eq = line.find(" = ");
    REQUIRE(eq != std::string::npos);
    out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

}  // namespace

TEST_CASE("structured rendering carries the same data as JSON") {
  for (const char* w : {fixtures::kBetaPrime, fixtures::kBetaComp, fixtures::kKnot63, "1 1^-1", "1 3"}) {
    CAPTURE(w);
    const Report r = analysis_report(parse_word(w), w, true);
    const std::string structured = render_report(r, ReportFormat::kStructured);
    CHECK(structured.rfind("schema = \"homobraid-report/1\"\n", 0) == 0);
    std::map<std::string, std::string> expected;
    flatten(r, "", expected);
    CHECK(parse_structured(structured) == expected);
    const Report back = Report::parse(render_report(r, ReportFormat::kJson));
    CHECK(back == r);
  }
}

TEST_CASE("reports are deterministic") {
  const BraidWord w = parse_word(fixtures::kBetaPrime, 5);
  const auto a = render_report(analysis_report(w, "x", true), ReportFormat::kText);
  const auto b = render_report(analysis_report(w, "x", true), ReportFormat::kText);
  CHECK(a == b);
  CHECK(a.find("\x1b[") == std::string::npos);
  const auto colored = render_report(analysis_report(w, "x", true), ReportFormat::kText, true);
  CHECK(colored.find("\x1b[") != std::string::npos);
}

TEST_CASE("analysis report contents") {
  const Report r = analysis_report(parse_word(fixtures::kBetaComp), fixtures::kBetaComp, true);
  CHECK(r["verdict"]["status"] == "composite");
  CHECK(r["seesaw"]["2"] == 2);
  CHECK(r["factorization"]["canonical"].size() == 4);
  CHECK(r["split"]["components"][0]["certificate"]["status"] == "refused");
  CHECK(r["split"]["components"][0]["certificate"]["edge"] == "strand2");

  const Report p = analysis_report(parse_word(fixtures::kBetaPrime, 5), "", true);
  CHECK(p["split"]["components"][0]["certificate"]["block_veering"] == "L,R,L");
  CHECK(p["closure"]["genus"] == 5);

  const Report mixed = analysis_report(parse_word("1 1^-1"), "", false);
  CHECK(mixed["verdict"]["status"] == "inconclusive");
  CHECK(mixed["factorization"].is_null());
}

TEST_CASE("format names") {
  CHECK(report_format_from_string("structured") == ReportFormat::kStructured);
  CHECK_FALSE(report_format_from_string("yaml"));
}
