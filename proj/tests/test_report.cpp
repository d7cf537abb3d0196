#include <doctest.h>

#include "nga/report.hpp"
#include "support.hpp"

using namespace nga;

namespace {

Document sample() {
  Document doc;
  doc.spec = {1, 3, Variant::Galilei};
  static const LieAlgebra alg(doc.spec);
  static const Representation rep(alg);
  static const RMatrix r = RMatrix::nm(alg, 1, 1, AlphaMatrix::symbolic(3));
  doc.tables.push_back(spacetime_table(rep, r));
  doc.checks.push_back(check_jacobi(alg));
  CheckReport bad;
  bad.name = "made_up_{check}";
  bad.formula = "a_1 = b^2";
  bad.passed = false;
  bad.terminated = false;
  bad.twist = "r^(1,1)";
  bad.order = 4;
  bad.detail = "residual 100% & more";
  doc.checks.push_back(bad);
  doc.results.push_back({"f", "x1*x2", "x_{1} x_{2}", true});
  doc.notes.push_back("a note");
  return doc;
}

}  // namespace

TEST_CASE("formats") {
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("JSON document shape") {
  const Document doc = sample();
  const auto j = to_json(doc);
  CHECK(j["version"] == kReportVersion);
  CHECK(j["spec"]["N"] == 1);
  CHECK(j["spec"]["variant"] == "galilei");
  CHECK(j["passed"] == false);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][1]["terminated"] == false);
  CHECK(j["checks"][1]["order"] == 4);
  CHECK_FALSE(j["checks"][0].contains("order"));
  REQUIRE(j["tables"].size() == 1);
  CHECK(j["tables"][0]["entries"].size() == 6);
  CHECK(j["tables"][0]["entries"][3]["pair"] == "[x1,x2]");
  CHECK(j["tables"][0]["entries"][3]["matches_paper"] == true);
  CHECK(j["results"][0]["terminated"] == true);
}

TEST_CASE("substitutions apply to rendered tables") {
  Document doc = sample();
  doc.substitutions["alpha_1_2"] = frac(1, 2);
  const auto j = to_json(doc);
  CHECK(j["tables"][0]["entries"][3]["entry"] == "i*t^2");
}

TEST_CASE("text rendering") {
  const std::string text = render_text(sample());
  CHECK(text.find("PASS  jacobi") != std::string::npos);
  CHECK(text.find("[series truncated]") != std::string::npos);
  CHECK(text.find("1 of 2 checks failed") != std::string::npos);
  CHECK(text.find("note: a note") != std::string::npos);
  Document quiet = sample();
  quiet.list_tables = false;
  CHECK(render_text(quiet).find("space-time table") == std::string::npos);
}

TEST_CASE("LaTeX rendering is balanced") {
  const std::string tex = render_latex(sample());
  CHECK(testing::latex_balanced(tex));
  CHECK(tex.find("made\\_up\\_\\{check\\}") != std::string::npos);
  CHECK(testing::latex_balanced(latex_escape("{}\\_^&%#$~")));
  CHECK_FALSE(testing::latex_balanced("\\begin{a}{\\end{a}"));
}

TEST_CASE("exit status follows the checks") {
  Document doc = sample();
  CHECK(exit_code(doc) == 1);
  doc.checks.pop_back();
  CHECK(exit_code(doc) == 0);
  doc.checks.clear();
  CHECK(exit_code(doc) == 0);
}
