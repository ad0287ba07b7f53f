#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "oneone/catalog.hpp"
#include "oneone/error.hpp"
#include "oneone/text.hpp"
#include "report.hpp"
#include "run.hpp"

using namespace oneone;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

ordered_json RunJson(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = RunCli(args);
  return ordered_json::parse(r.out);
}

CyclicPresentation P(std::int64_t n, std::string_view s) {
  return CyclicPresentation(n, parse_cyclic_word(s));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(ParseMcg, Examples) {
  EXPECT_EQ(parse_mcg("a^2 g a^-4"), (MCGWord{{Twist::Alpha, 2}, {Twist::Gamma, 1}, {Twist::Alpha, -4}}));
  EXPECT_TRUE(parse_mcg("").empty());
  try {
    parse_mcg("a^0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(Cli, PresentL41Knot) {
  const auto r = RunCli({"present", "a^-2 g^-2 a^-2", "--n", "4", "--all-monodromies"});
  EXPECT_EQ(r.code, 0) << r.err;

  const auto j = RunJson({"present", "a^-2 g^-2 a^-2", "--n", "4", "--all-monodromies"});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["p"], 4);
  EXPECT_EQ(j["q_normalized"], 1);
  ASSERT_EQ(j["coverings"].size(), 1u);
  const auto& ms = j["coverings"][0]["monodromies"];
  ASSERT_EQ(ms.size(), 4u);
  const std::vector<CyclicPresentation> reference{
      P(4, "x4^2 x3 x2^2 x1^-1"), P(4, "x4 x1^3 x2 x1^-1"), P(4, "x4 x2 x3 x4 x2 x1^-1"),
      P(4, "x4 x3 x1 x3 x2 x1^-1")};
  const std::vector<std::string> h1{"Z_8 + Z_8", "Z + Z_4", "Z_8 + Z_8", "Z + Z_4"};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(ms[i]["x"], static_cast<int>(i));
    const auto w = P(4, ms[i]["word"].get<std::string>());
    EXPECT_TRUE(equivalent_up_to_shift(w, reference[i], {.conjugation = false})) << ms[i]["word"];
    EXPECT_EQ(ms[i]["h1"]["text"], h1[i]);
  }
}

TEST(Cli, CoverL65KnotHasNoSixFoldCovering) {
  const auto r = RunCli({"cover", "a^2 g a^-4", "--n", "6"});
  EXPECT_EQ(r.code, cli::kNoCovering);
  EXPECT_NE(r.out.find("no strongly-cyclic covering (gcd 6 ∤ 4)"), std::string::npos) << r.out;

  const auto j = RunCli({"cover", "a^2 g a^-4", "--n", "6", "--json"});
  EXPECT_EQ(j.code, cli::kNoCovering);
  EXPECT_EQ(ordered_json::parse(j.out)["coverings"][0]["exists"], false);
  EXPECT_NE(j.err.find("gcd 6 ∤ 4"), std::string::npos);
}

TEST(Cli, MixedDegreesSucceedIfAnyCoveringExists) {
  EXPECT_EQ(RunCli({"cover", "a^2 g a^-4", "--n", "6", "--n", "2"}).code, 0);
}

TEST(Cli, AnalyzeIdentity) {
  const auto r = RunCli({"analyze", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("ambient: S^1 x S^2"), std::string::npos);
  const auto j = RunJson({"analyze", ""});
  EXPECT_EQ(j["p"], 0);
  EXPECT_TRUE(j["q_normalized"].is_null());
  EXPECT_EQ(j["ambient"], "S^1 x S^2");
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(RunCli({"analyze", "a^0"}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"analyze", "q"}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"present", "a"}).code, cli::kUsage);  // --n missing
  EXPECT_EQ(RunCli({"present", "a", "--n", "1"}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(RunCli({}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"torus", "--k", "0", "--h", "1", "--sign", "+"}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"torus", "--k", "2", "--h", "1", "--sign", "x"}).code, cli::kUsage);
  // 1 is not a monodromy of the trefoil for n = 5
  const auto t = RunCli({"present", "a^-1 g^-2 b^3 a", "--n", "5", "--monodromy", "1"});
  EXPECT_EQ(t.code, cli::kUsage);
  EXPECT_NE(t.err.find("not a monodromy"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(RunCli({"--help"}).code, 0); }

TEST(Cli, SingleMonodromy) {
  const auto j = RunJson({"present", "a^-2 g^-2 a^-2", "--n", "4", "--monodromy", "-1"});
  ASSERT_EQ(j["coverings"][0]["monodromies"].size(), 1u);
  EXPECT_EQ(j["coverings"][0]["monodromies"][0]["x"], 3);
}

TEST(Cli, TorusRoutesThroughCatalog) {
  const auto j = RunJson({"torus", "--k", "3", "--h", "2", "--sign", "-", "--n", "9"});
  EXPECT_EQ(j["torus"]["knot"], ordered_json::array({3, 5}));
  EXPECT_EQ(parse_mcg(j["psi"].get<std::string>()), torus_mcg({3, 2, KnotSign::Minus}));
  const auto& m = j["coverings"][0]["monodromies"][0];
  EXPECT_TRUE(m["matches_formula"].get<bool>());
  IntPoly alexander;
  for (const auto& c : j["torus"]["alexander"]) alexander.coeffs.push_back(c.get<std::int64_t>());
  EXPECT_EQ(alexander, torus_alexander(3, 5));
}

// Re-parsing every emitted word reproduces the library values.
TEST(Cli, JsonRoundTrip) {
  const std::string input = "a^-2 g^-2 a^-2 b^3";
  const auto j = RunJson({"present", input, "--n", "3", "--n", "4", "--n", "8"});
  const auto k = analyze(parse_mcg(input));
  EXPECT_EQ(parse_mcg(j["psi"].get<std::string>()), k.psi);
  EXPECT_EQ(parse_pi1(j["psi_beta"].get<std::string>()), k.psi_beta);
  EXPECT_EQ(parse_pi1(j["relator"].get<std::string>()), k.relator);
  EXPECT_EQ(j["p"].get<std::int64_t>(), k.p);
  for (const auto& c : j["coverings"]) {
    const auto n = c["n"].get<std::int64_t>();
    for (const auto& m : c["monodromies"]) {
      const auto lib = cyclic_word(k, Monodromy{n, m["x"].get<std::int64_t>()});
      const auto parsed = P(n, m["word"].get<std::string>());
      EXPECT_EQ(parsed, lib);
      IntPoly f;
      for (const auto& a : m["f_w"]) f.coeffs.push_back(a.get<std::int64_t>());
      EXPECT_EQ(f, polynomial(lib));
    }
  }
}

TEST(Cli, BigIntegersBecomeStrings) {
  EXPECT_TRUE(cli::json_integer(Integer(42)).is_number());
  const Integer big = Integer(1) << 80;
  EXPECT_EQ(cli::json_integer(big), big.str());
}

namespace {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"present_l41", {"present", "a^-2 g^-2 a^-2", "--n", "4", "--all-monodromies"}},
      {"cover_l65", {"cover", "a^2 g a^-4", "--n", "6", "--n", "2"}},
      {"analyze_identity", {"analyze", ""}},
      {"homology_trefoil", {"homology", "a^-1 g^-2 b^3 a", "--n", "5", "--n", "6"}},
      {"poly_trefoil", {"poly", "a^-1 g^-2 b^3 a", "--n", "7"}},
      {"torus_3_5", {"torus", "--k", "3", "--h", "2", "--sign", "-", "--n", "9"}},
  };
  return cases;
}

// Splits "key: value" and "  x = 1 | w = ... | H1 = ..." lines.
struct TextReport {
  std::map<std::string, std::string> header;
  std::map<std::string, std::string> coverings;                       // "n" -> summary
  std::map<std::string, std::map<std::string, std::string>> entries;  // "n/x" -> field -> value
};

TextReport parse_text(const std::string& text) {
  TextReport t;
  std::istringstream in(text);
  std::string line, n;
  while (std::getline(in, line)) {
    if (line.rfind("  x = ", 0) == 0) {
      std::map<std::string, std::string> fields;
      std::size_t pos = 2;
      while (pos < line.size()) {
        const std::size_t bar = line.find(" | ", pos);
        const std::string part = line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        const std::size_t eq = part.find(" = ");
        fields[part.substr(0, eq)] = part.substr(eq + 3);
        pos = bar == std::string::npos ? line.size() : bar + 3;
      }
      t.entries[n + "/" + fields["x"]] = fields;
    } else if (line.rfind("n = ", 0) == 0) {
      const std::size_t colon = line.find(": ");
      n = line.substr(4, colon - 4);
      t.coverings[n] = line.substr(colon + 2);
    } else {
      const std::size_t colon = line.find(": ");
      t.header[line.substr(0, colon)] = line.substr(colon + 2);
    }
  }
  return t;
}

std::string str(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

TEST(CliGolden, OutputsMatchFiles) {
  const bool update = std::getenv("ONEONE_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    auto json_args = c.args;
    json_args.push_back("--json");
    const std::string text = RunCli(c.args).out;
    const std::string json = RunCli(json_args).out;
    const std::string base = std::string(ONEONE_GOLDEN_DIR) + "/" + c.name;
    if (update) {
      std::ofstream(base + ".txt") << text;
      std::ofstream(base + ".json") << json;
      continue;
    }
    EXPECT_EQ(text, slurp(base + ".txt")) << c.name;
    EXPECT_EQ(json, slurp(base + ".json")) << c.name;
  }
}

TEST(CliGolden, TextAndJsonCarryTheSameNumbers) {
  for (const auto& c : golden_cases()) {
    SCOPED_TRACE(c.name);
    auto json_args = c.args;
    json_args.push_back("--json");
    const TextReport t = parse_text(RunCli(c.args).out);
    const ordered_json j = ordered_json::parse(RunCli(json_args).out);

    EXPECT_EQ(t.header.at("p"), str(j["p"]));
    EXPECT_EQ(t.header.at("q"), str(j["q_raw"]) + " (normalized " +
                                    (j["q_normalized"].is_null() ? "-" : str(j["q_normalized"])) + ")");
    EXPECT_EQ(t.header.at("psi"), j["psi"]);
    if (t.header.count("H1(complement)")) EXPECT_EQ(t.header.at("H1(complement)"), j["h1_complement"]["text"]);
    if (t.header.count("q', q''"))
      EXPECT_EQ(t.header.at("q', q''"), str(j["q_prime"]) + ", " + str(j["q_dblprime"]));
    if (t.header.count("q''")) EXPECT_EQ(t.header.at("q''"), str(j["q_dblprime"]));
    if (t.header.count("ambient")) EXPECT_EQ(t.header.at("ambient"), j["ambient"]);
    if (t.header.count("relator")) EXPECT_EQ(t.header.at("relator"), j["relator"]);
    if (t.header.count("alexander")) {
      IntPoly a;
      for (const auto& v : j["torus"]["alexander"]) a.coeffs.push_back(v.get<std::int64_t>());
      EXPECT_EQ(t.header.at("alexander"), to_string(a));
    }

    ASSERT_EQ(t.coverings.size(), j["coverings"].size());
    std::size_t entries = 0;
    for (const auto& cov : j["coverings"]) {
      const std::string n = str(cov["n"]);
      const std::string summary = t.coverings.at(n);
      if (!cov["exists"].get<bool>()) {
        EXPECT_EQ(summary, "no strongly-cyclic covering (gcd " + str(cov["gcd"]) + " ∤ " + str(j["q_dblprime"]) + ")");
        continue;
      }
      std::string xs;
      for (const auto& m : cov["monodromies"]) xs += (xs.empty() ? "" : " ") + str(m["x"]);
      EXPECT_EQ(summary.substr(0, summary.find(',')), str(cov["gcd"]) + (cov["gcd"] == 1 ? " covering" : " coverings"));
      EXPECT_EQ(summary.substr(summary.find("x = ") + 4), xs);

      for (const auto& m : cov["monodromies"]) {
        const auto it = t.entries.find(n + "/" + str(m["x"]));
        if (it == t.entries.end()) continue;  // summary-only sections
        ++entries;
        const auto& f = it->second;
        if (f.count("w")) EXPECT_EQ(f.at("w"), m["word"]);
        if (f.count("H1")) EXPECT_EQ(f.at("H1"), m["h1"]["text"]);
        if (f.count("f_w")) {
          IntPoly p;
          for (const auto& v : m["f_w"]) p.coeffs.push_back(v.get<std::int64_t>());
          EXPECT_EQ(f.at("f_w"), to_string(p));
        }
        if (f.count("formula"))
          EXPECT_EQ(f.at("formula"), m["formula_word"].get<std::string>() +
                                         (m["matches_formula"].get<bool>() ? " (matches)" : " (differs)"));
      }
    }
    EXPECT_EQ(entries, t.entries.size());
  }
}
