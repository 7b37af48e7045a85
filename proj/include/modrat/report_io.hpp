#pragma once

#include "modrat/classification.hpp"

#include <json.hpp>

#include <string>

namespace modrat {

enum class OutputFormat { Json, Csv, Text };

std::optional<OutputFormat> parse_output_format(const std::string& text);

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; the reader accepts both.
nlohmann::ordered_json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& v);

nlohmann::ordered_json chain_to_json(const ReductionChain& chain);
// Steps carry their targets only; sources are rebuilt from `start`.
ReductionChain chain_from_json(const Genus& g, const Pair& start, const nlohmann::json& v);

nlohmann::ordered_json diagram_to_json(const AdmissibleDiagram& diagram);
AdmissibleDiagram diagram_from_json(const Genus& g, const nlohmann::json& v);

// Keys in fixed order: genus, n, d, window, gcd, nice, nice_chain, fine,
// fine_diagram, newstead, dims{moduli, quotient_identity}.
nlohmann::ordered_json report_to_json(const ClassificationReport& r);
// Throws ParseError on a malformed document.
ClassificationReport report_from_json(const nlohmann::json& v);

std::string csv_header();
std::string csv_row(const ClassificationReport& r);
std::string text_report(const ClassificationReport& r);

// One line (JSON, CSV row) or a text block, newline-terminated.
std::string serialize_report(const ClassificationReport& r, OutputFormat format);

std::string chain_arrows(const ReductionChain& chain, const Pair& start);  // "(15;77) -> (13;77) -> (1;6)"

}  // namespace modrat
