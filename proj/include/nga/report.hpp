#pragma once

// Report documents and their text / LaTeX / JSON renderings. Every CLI
// subcommand fills one Document; the JSON form follows schema/report.schema.json.

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "nga/verify.hpp"

namespace nga {

enum class Format { Text, Latex, Json };

Format parse_format(std::string_view name);

/// A computed expression, e.g. a twisted coproduct.
struct ResultItem {
  std::string name;
  std::string text;
  std::string latex;
  /// Set for series results: whether the series terminated exactly.
  std::optional<bool> terminated;
};

struct Document {
  AlgebraSpec spec;
  std::vector<CheckReport> checks;
  std::vector<SpacetimeTable> tables;
  std::vector<ResultItem> results;
  std::vector<std::string> notes;
  /// Whether text and LaTeX output list the table entries (JSON always does).
  bool list_tables = true;
  /// Parameter values substituted into table entries on output.
  std::map<std::string, Rational> substitutions;

  bool passed() const;
};

inline constexpr int kReportVersion = 1;

nlohmann::ordered_json to_json(const Document& doc);
std::string render_text(const Document& doc);
std::string render_latex(const Document& doc);
std::string render(const Document& doc, Format format);

/// Process exit status for a finished document: 0 when every check passed, 1 otherwise.
int exit_code(const Document& doc);

/// Escapes text for LaTeX running text.
std::string latex_escape(std::string_view text);

}  // namespace nga
