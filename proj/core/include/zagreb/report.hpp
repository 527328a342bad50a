#pragma once

#include <optional>
#include <ostream>
#include <string_view>

#include "zagreb/verifier.hpp"

namespace zagreb {

enum class OutputFormat { kText, kCsv, kJson };

// Schema version written as the top-level "schema" field of every JSON report.
inline constexpr int kReportSchema = 1;

std::optional<OutputFormat> parse_format(std::string_view name);

// Deterministic renderings: identical input gives byte-identical output.
void write_verify_report(std::ostream& out, const VerifySummary& summary, OutputFormat format);
void write_lemma_report(std::ostream& out, const LemmaSuiteReport& report, OutputFormat format);

}  // namespace zagreb
