#pragma once

// Report data model shared by every output format. A report is an ordered
// JSON document; the text and structured renderings are derived from it so
// the formats cannot drift apart.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "homobraid/braid.hpp"
#include "homobraid/chords.hpp"
#include "homobraid/open_book_tree.hpp"

namespace homobraid {

inline constexpr std::string_view kReportSchema = "homobraid-report/1";

using Report = nlohmann::ordered_json;

enum class ReportFormat { kText, kStructured, kJson };

std::optional<ReportFormat> report_format_from_string(std::string_view name);

Report analysis_report(const BraidWord& word, std::string_view input, bool certify);

// certificate section: the certificate, or a refusal naming the failed
// hypothesis. Never throws for certification failures.
Report tree_report(const TreeOfOpenBooks& tree, bool certify);
Report certificate_section(const TreeOfOpenBooks& tree);

Report chords_report(const ChordConfig& cfg);
Report surface_report(const BraidWord& word);

// Structured: one `path = value` line per leaf, starting with the schema.
std::string render_report(const Report& report, ReportFormat format, bool color = false);

}  // namespace homobraid
