#include "nga/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nga {

namespace {

FunctionElement substituted(const FunctionElement& f, const std::map<std::string, Rational>& s) {
  return s.empty() ? f : f.substitute(s);
}

std::string coordinate_latex(int c) { return c == 0 ? "t" : "x_{" + std::to_string(c) + "}"; }

std::string spec_line(const AlgebraSpec& spec) {
  return "N=" + std::to_string(spec.n) + " dim=" + std::to_string(spec.dim) +
         " variant=" + variant_name(spec.variant);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

bool Document::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

nlohmann::ordered_json to_json(const Document& doc) {
  using json = nlohmann::ordered_json;
  json out;
  out["version"] = kReportVersion;
  out["spec"] = {{"N", doc.spec.n}, {"dim", doc.spec.dim}, {"variant", variant_name(doc.spec.variant)}};
  out["passed"] = doc.passed();
  json checks = json::array();
  for (const CheckReport& c : doc.checks) {
    json j;
    j["name"] = c.name;
    j["paper_eq"] = c.formula;
    j["status"] = c.passed ? "pass" : "fail";
    j["terminated"] = c.terminated;
    j["detail"] = c.detail;
    if (!c.twist.empty()) j["twist"] = c.twist;
    if (c.order >= 0) j["order"] = c.order;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  json tables = json::array();
  for (const SpacetimeTable& t : doc.tables) {
    json entries = json::array();
    for (const SpacetimeEntry& e : t.entries)
      entries.push_back({{"pair", e.pair_name()},
                         {"entry", substituted(e.value, doc.substitutions).str()},
                         {"matches_paper", e.matches},
                         {"paper_form", substituted(e.closed_form, doc.substitutions).str()}});
    tables.push_back({{"twist", t.twist}, {"closed_form", t.closed_form_template},
                      {"entries", std::move(entries)}});
  }
  out["tables"] = std::move(tables);
  json results = json::array();
  for (const ResultItem& r : doc.results) {
    json j{{"name", r.name}, {"value", r.text}, {"latex", r.latex}};
    if (r.terminated) j["terminated"] = *r.terminated;
    results.push_back(std::move(j));
  }
  out["results"] = std::move(results);
  out["notes"] = doc.notes;
  return out;
}

std::string render_text(const Document& doc) {
  std::ostringstream os;
  os << "nga " << spec_line(doc.spec) << "\n";
  for (const ResultItem& r : doc.results) {
    os << r.name << " = " << r.text << "\n";
    if (r.terminated) os << "  terminated: " << (*r.terminated ? "yes" : "no") << "\n";
  }
  for (const SpacetimeTable& t : doc.tables) {
    if (!doc.list_tables) break;
    os << "\nspace-time table for " << t.twist << "\n";
    os << "  closed form: " << t.closed_form_template << "\n";
    for (const SpacetimeEntry& e : t.entries)
      os << "  " << e.pair_name() << " = " << substituted(e.value, doc.substitutions).str()
         << (e.matches ? "" : "   [MISMATCH, expected " +
                                  substituted(e.closed_form, doc.substitutions).str() + "]")
         << "\n";
  }
  if (!doc.checks.empty()) {
    if (!doc.results.empty() || (doc.list_tables && !doc.tables.empty())) os << "\n";
    std::size_t width = 0;
    for (const CheckReport& c : doc.checks) width = std::max(width, c.name.size());
    for (const CheckReport& c : doc.checks) {
      os << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
         << c.name << "  ";
      if (!c.twist.empty()) os << c.twist << " ";
      if (c.order >= 0) os << "K=" << c.order << " ";
      os << c.detail;
      if (!c.terminated) os << " [series truncated]";
      os << "\n";
    }
    const auto failed = std::count_if(doc.checks.begin(), doc.checks.end(),
                                      [](const CheckReport& c) { return !c.passed; });
    os << (failed == 0 ? "all " + std::to_string(doc.checks.size()) + " checks passed"
                       : std::to_string(failed) + " of " + std::to_string(doc.checks.size()) +
                             " checks failed")
       << "\n";
  }
  for (const std::string& n : doc.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string latex_escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '\\': out += "\\textbackslash{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '#': out += "\\#"; break;
      case '$': out += "\\$"; break;
      case '~': out += "\\~{}"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string render_latex(const Document& doc) {
  std::ostringstream os;
  os << "% nga " << spec_line(doc.spec) << "\n";
  for (const ResultItem& r : doc.results) {
    os << "\\begin{equation*}\n  " << r.latex << "\n\\end{equation*}\n";
  }
  for (const SpacetimeTable& t : doc.tables) {
    if (!doc.list_tables) break;
    os << "% space-time table for " << t.twist << "\n";
    for (const SpacetimeEntry& e : t.entries)
      os << "\\begin{equation*}\n  [" << coordinate_latex(e.a) << ", " << coordinate_latex(e.b)
         << "]_{\\star} = " << substituted(e.value, doc.substitutions).latex() << "\n\\end{equation*}\n";
  }
  if (!doc.checks.empty()) {
    os << "\\begin{tabular}{lll}\n";
    for (const CheckReport& c : doc.checks) {
      os << "  \\texttt{" << latex_escape(c.name) << "} & " << (c.passed ? "pass" : "fail") << " & "
         << latex_escape((c.twist.empty() ? "" : c.twist + " ") + c.detail) << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  }
  for (const std::string& n : doc.notes) os << "% note: " << n << "\n";
  return os.str();
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::Text: return render_text(doc);
    case Format::Latex: return render_latex(doc);
    case Format::Json: return to_json(doc).dump(2) + "\n";
  }
  return {};
}

int exit_code(const Document& doc) { return doc.passed() ? 0 : 1; }

}  // namespace nga
