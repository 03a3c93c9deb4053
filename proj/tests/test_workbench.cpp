#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "pck/algebra_file.hpp"
#include "pck/corpus.hpp"
#include "pck/report.hpp"

namespace pck {
namespace {

using nlohmann::json;

json sl2_json() { return algebra_to_json(sl2_algebra()); }

LoadError load_error(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const LoadError& e) {
    return e;
  }
  ADD_FAILURE() << "no LoadError for: " << text.substr(0, 80);
  return LoadError(LoadErrorKind::schema, "", "none");
}

json& bracket_entry(json& j, const std::string& left, const std::string& right) {
  for (auto& e : j["bracket"]) {
    if (e["left"] == left && e["right"] == right) return e;
  }
  throw std::runtime_error("entry not found");
}

TEST(AlgebraFile, LoadsSl2) {
  const auto a = parse_algebra(serialize_algebra(sl2_algebra()));
  EXPECT_EQ(a.dim(), 3);
  EXPECT_TRUE(validate_all(a).passed());
}

TEST(AlgebraFile, RejectsJacobiMutation) {
  json j = sl2_json();
  bracket_entry(j, "h", "f")["result"] = json::array({{{"basis", "f"}, {"coeff", "2"}}});
  bracket_entry(j, "f", "h")["result"] = json::array({{{"basis", "f"}, {"coeff", "-2"}}});
  const auto e = load_error(j.dump());
  EXPECT_EQ(e.kind(), LoadErrorKind::axiom_failure);
  EXPECT_EQ(e.location(), "/jacobi");
  ASSERT_NE(e.axioms(), nullptr);
  const auto* jac = e.axioms()->find("jacobi");
  ASSERT_NE(jac, nullptr);
  bool cited = false;
  for (const auto& c : jac->counterexamples) cited |= c.basis == std::vector<std::string>{"h", "e", "f"};
  EXPECT_TRUE(cited);
  EXPECT_NE(std::string(e.what()).find("(h,e,f)"), std::string::npos);
}

TEST(AlgebraFile, EmptyBasisIsZeroAlgebra) {
  const std::string text = R"({"pck_format": 1, "name": "empty", "scalar_order": 1,
    "group_g": {"free_rank": 0, "torsion": []}, "group_lambda": {"free_rank": 0, "torsion": []},
    "bicharacter": {"cyclotomic_order": 1, "matrix": []}, "basis": [], "product": [], "bracket": []})";
  const auto a = parse_algebra(text);
  EXPECT_EQ(a.dim(), 0);
  EXPECT_TRUE(validate_all(a).passed());
}

TEST(AlgebraFile, StructuredErrors) {
  const auto syntax = load_error("{\"pck_format\": 1,");
  EXPECT_EQ(syntax.kind(), LoadErrorKind::syntax);
  EXPECT_EQ(syntax.location().rfind("byte ", 0), 0u);

  json j = sl2_json();
  j["pck_format"] = 2;
  EXPECT_EQ(load_error(j.dump()).kind(), LoadErrorKind::schema);

  j = sl2_json();
  j.erase("basis");
  EXPECT_EQ(load_error(j.dump()).kind(), LoadErrorKind::schema);

  j = sl2_json();
  bracket_entry(j, "e", "f")["left"] = "q";
  const auto unknown = load_error(j.dump());
  EXPECT_EQ(unknown.kind(), LoadErrorKind::unknown_name);
  EXPECT_EQ(unknown.location().rfind("/bracket/", 0), 0u);

  j = sl2_json();
  bracket_entry(j, "e", "f")["result"] = json::array({{{"basis", "h"}, {"coeff", 1}}, {{"basis", "e"}, {"coeff", 1}}});
  EXPECT_EQ(load_error(j.dump()).kind(), LoadErrorKind::non_homogeneous);

  j = sl2_json();
  bracket_entry(j, "e", "f")["result"][0]["coeff"] = "1 +* 2";
  EXPECT_EQ(load_error(j.dump()).kind(), LoadErrorKind::schema);

  j = algebra_to_json(group_algebra(3));
  j["group_g"] = {{"free_rank", 0}, {"torsion", {3}}};
  j["scalar_order"] = 3;
  j["bicharacter"] = {{"cyclotomic_order", 3}, {"matrix", {{1}}}};
  for (auto& b : j["basis"]) b["gdeg"] = {0};
  EXPECT_EQ(load_error(j.dump()).kind(), LoadErrorKind::bicharacter);
}

TEST(AlgebraFile, CoefficientsAcceptLiterals) {
  json j = algebra_to_json(color_z3xz3());
  const auto a = parse_algebra(j.dump());
  EXPECT_EQ(a.product_tensor(), color_z3xz3().product_tensor());
}

TEST(AlgebraFile, RoundTripIsStable) {
  for (const auto& entry : builtin_corpus()) {
    const std::string once = serialize_algebra(entry.algebra);
    const auto back = parse_algebra(once);
    EXPECT_EQ(serialize_algebra(back), once) << entry.name;
    EXPECT_EQ(back.product_tensor(), entry.algebra.product_tensor());
    EXPECT_EQ(back.bracket_tensor(), entry.algebra.bracket_tensor());
    EXPECT_EQ(back.g_spec(), entry.algebra.g_spec());
    EXPECT_EQ(back.lambda_spec(), entry.algebra.lambda_spec());
    const AnalysisReport r1 = full_analysis(entry.algebra), r2 = full_analysis(back);
    EXPECT_EQ(emit_report(entry.algebra, r1, ReportFormat::json), emit_report(back, r2, ReportFormat::json));
  }
}

TEST(Corpus, Contents) {
  const auto corpus = builtin_corpus();
  EXPECT_GE(corpus.size(), 9u);
  int refusals = 0;
  for (const auto& entry : corpus) {
    EXPECT_TRUE(validate_all(entry.algebra).passed()) << entry.name;
    EXPECT_EQ(check_symmetric_support(compute_supports(entry.algebra)), entry.symmetric_support) << entry.name;
    refusals += entry.symmetric_support ? 0 : 1;
  }
  EXPECT_EQ(refusals, 1);
  const auto gc = grassmann_clifford();
  EXPECT_EQ(gc.epsilon(1, 1), CycScalar(2, Rational(-1)));
  EXPECT_FALSE(corpus_entry("nope").has_value());
}

TEST(Report, Sl2Classes) {
  const auto sl2 = sl2_algebra();
  const auto j = json::parse(emit_report(sl2, full_analysis(sl2), ReportFormat::json));
  EXPECT_EQ(j["classes"], json::parse(R"([["z","z^-1"]])"));
  EXPECT_EQ(j["support"]["symmetric_support"], true);
  EXPECT_EQ(j["simplicity"]["criterion_result"], true);
  EXPECT_EQ(j["decomposition"]["is_direct"], true);
  EXPECT_FALSE(j["notes"].empty());
}

TEST(Report, Deterministic) {
  for (const auto& entry : builtin_corpus()) {
    for (auto format : {ReportFormat::json, ReportFormat::text}) {
      const auto a = emit_report(entry.algebra, full_analysis(entry.algebra, {1}, 5), format);
      const auto b = emit_report(entry.algebra, full_analysis(entry.algebra, {3}, 5), format);
      EXPECT_EQ(a, b) << entry.name;
    }
  }
}

TEST(Report, RefusalCase) {
  const auto ns = nonsymmetric_example();
  const auto j = json::parse(emit_report(ns, full_analysis(ns), ReportFormat::json));
  EXPECT_EQ(j["support"]["symmetric_support"], false);
  EXPECT_FALSE(j.contains("decomposition"));
  EXPECT_FALSE(j.contains("classes"));
}

TEST(Report, TextWitnessChains) {
  const auto fz5 = group_algebra(5);
  const auto text = emit_report(fz5, full_analysis(fz5), ReportFormat::text);
  EXPECT_NE(text.find("t ~ t^3: t -> t^2"), std::string::npos) << text;
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(PCK_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "pck_cli_test";
  void SetUp() override { std::filesystem::create_directories(dir); }
  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

TEST_F(Cli, CorpusListAndEmit) {
  const auto list = run_cli("corpus --list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("two_block"), std::string::npos);
  const auto emit = run_cli("corpus --emit sl2");
  EXPECT_EQ(emit.code, 0);
  EXPECT_EQ(emit.out, serialize_algebra(sl2_algebra()));
  EXPECT_EQ(run_cli("corpus --emit missing").code, 1);
}

TEST_F(Cli, ExitCodes) {
  const auto sl2 = write("sl2.json", serialize_algebra(sl2_algebra()));
  for (const char* cmd : {"validate", "support", "classes", "decompose", "simplicity", "center"}) {
    EXPECT_EQ(run_cli(std::string(cmd) + " " + sl2).code, 0) << cmd;
  }
  const auto ns = write("ns.json", serialize_algebra(nonsymmetric_example()));
  const auto refused = run_cli("decompose " + ns);
  EXPECT_EQ(refused.code, 2);
  const auto j = json::parse(refused.out);
  EXPECT_EQ(j["support"]["symmetric_support"], false);
  EXPECT_FALSE(j.contains("decomposition"));

  json bad = algebra_to_json(sl2_algebra());
  bracket_entry(bad, "h", "f")["result"][0]["coeff"] = "2";
  const auto badfile = write("bad.json", bad.dump());
  EXPECT_EQ(run_cli("validate " + badfile).code, 1);
  EXPECT_EQ(run_cli("decompose " + badfile).code, 1);
  EXPECT_EQ(run_cli("decompose " + write("garbage.json", "{")).code, 1);
  EXPECT_EQ(run_cli("decompose " + (dir / "missing.json").string()).code, 1);
}

TEST_F(Cli, WitnessAndFormats) {
  const auto fz5 = write("fz5.json", serialize_algebra(group_algebra(5)));
  const auto j = json::parse(run_cli("classes " + fz5 + " --witness t t^3").out);
  EXPECT_EQ(j["witness_queries"][0]["chain"], json::parse(R"(["t","t"])"));
  const auto text = run_cli("--format text decompose " + fz5);
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("direct: yes"), std::string::npos);
  EXPECT_EQ(run_cli("classes " + fz5 + " --witness t q").code, 1);
  EXPECT_EQ(run_cli("classes " + fz5 + " --witness t 1").code, 2);
}

TEST_F(Cli, OutputIndependentOfThreads) {
  const auto three = write("three.json", serialize_algebra(corpus_entry("three_block")->algebra));
  for (const char* cmd : {"validate", "decompose", "simplicity"}) {
    const auto a = run_cli(std::string("--threads 1 ") + cmd + " " + three);
    const auto b = run_cli(std::string("--threads 4 --seed 9 ") + cmd + " " + three);
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

}  // namespace
}  // namespace pck
