#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "convexoid/catalog.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/duality.hpp"
#include "convexoid/instance_file.hpp"
#include "convexoid/verify.hpp"

namespace cx = convexoid;
using cx::Side;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(CONVEXOID_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string example(const std::string& name) { return std::string(CONVEXOID_EXAMPLES_DIR) + "/instances/" + name; }

// Value of "key = value" inside "[block]" of a text report.
std::string field(const std::string& text, const std::string& block, const std::string& key) {
  const auto start = text.find("\n[" + block + "]\n");
  if (start == std::string::npos) return "<no block>";
  const auto end = text.find("\n[", start + 1);
  std::istringstream in(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
  }
  return "<no key>";
}

}  // namespace

TEST(Cli, ConjugateMatchesLibrary) {
  const auto r = cli("conjugate " + example("classic-squares.instance") + " --function bump --double --check-convex");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto file = cx::load_instance_file(example("classic-squares.instance"));
  const auto& g = std::get<cx::GalleryInstance<cx::ClassicCodomain>>(file.model);
  const auto f = cx::resolve_function(g.inst, file.function("bump"));
  const auto fs = cx::conjugate(g.inst, f);
  const auto fss = cx::conjugate(g.inst, fs);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_EQ(field(r.out, "f*", g.inst.name(Side::lambda, i)), cx::to_string(fs[i]));
    EXPECT_EQ(field(r.out, "f**", g.inst.name(Side::delta, i)), cx::to_string(fss[i]));
  }
  EXPECT_EQ(field(r.out, "convexity", "convex"), cx::is_convex(g.inst, f) ? "true" : "false");
  EXPECT_EQ(field(r.out, "convexity", "convex"), "false");
}

TEST(Cli, SquaresConjugateToZeros) {
  const auto r = cli("conjugate " + example("classic-squares.instance") + " --function squares");
  ASSERT_EQ(r.status, 0) << r.out;
  for (const char* y : {"-1", "0", "1"}) EXPECT_EQ(field(r.out, "f*", y), "0");
}

TEST(Cli, CutSystemIsConvex) {
  const auto r = cli("conjugate " + example("cut-system.instance") + " --function cut1 --check-convex --subdiff '{1}'");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(field(r.out, "convexity", "convex"), "true");
  const auto s = cli("conjugate " + example("cut-system.instance") + " --function singleton --check-convex");
  EXPECT_EQ(field(s.out, "convexity", "convex"), "false");
  EXPECT_EQ(field(s.out, "convexity", "closure"), cx::format_system(cx::upper_closure_oracle(cx::SetSystem::of(3, {0b001}))));
}

TEST(Cli, DualityMatchesLibrary) {
  const auto r = cli("duality " + example("perturbation.instance") + " --function abs_sum --minimax");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto file = cx::load_instance_file(example("perturbation.instance"));
  const auto& g = std::get<cx::GalleryInstance<cx::ClassicCodomain>>(file.model);
  const auto f = cx::resolve_function(g.inst, file.function("abs_sum"));
  const auto sys = cx::build_conjugate_duality(g.inst, g.product->structure, g.product->zero2, g.product->zero1);
  const auto rep = cx::type1_values(sys.type1, f);
  EXPECT_EQ(field(r.out, "duality", "zP"), cx::to_string(rep.zP));
  EXPECT_EQ(field(r.out, "duality", "zD"), cx::to_string(rep.zD));
  EXPECT_EQ(field(r.out, "duality", "certificate"), "minimax");
  EXPECT_EQ(field(r.out, "duality", "well-penalized"), "true");
  EXPECT_EQ(field(r.out, "duality", "minimax equal"), "true");
  EXPECT_EQ(field(r.out, "value function", "zD = h**(0)"), "true");
}

TEST(Cli, NormSphereIsWeakOnly) {
  const auto r = cli("duality " + example("norm-sphere.instance") + " --function gap");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(field(r.out, "duality", "weak"), "true");
  EXPECT_EQ(field(r.out, "duality", "strong"), "false");
  EXPECT_EQ(field(r.out, "duality", "well-penalized"), "false");
  EXPECT_EQ(field(r.out, "duality", "certificate"), "none");
}

TEST(Cli, AlternativesReport) {
  for (const char* fn : {"miss", "hit"}) {
    const auto r = cli("duality " + example("alternatives.instance") + " --function " + fn);
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(field(r.out, "alternatives", "zP oplus dual system"), "0");
    EXPECT_EQ(field(r.out, "alternatives", "holds"), "true");
    EXPECT_NE(field(r.out, "alternatives", "zP"), field(r.out, "alternatives", "dual system"));
  }
}

TEST(Cli, RadialStarConvexIsCertified) {
  const auto r = cli("duality " + example("radial-star.instance") + " --function star");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(field(r.out, "duality", "strong"), "true");
  EXPECT_EQ(field(r.out, "duality", "certificate"), "well-guided+convex");
  EXPECT_EQ(field(r.out, "radial", "star-convex"), "true");
}

TEST(Cli, ToposConjugate) {
  const auto r = cli("conjugate " + example("topos-edge.instance") + " --function whole --double");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto file = cx::load_instance_file(example("topos-edge.instance"));
  const auto& m = std::get<cx::ToposModel>(file.model);
  const auto fs = cx::topos_conjugate(m.g1, m.g2, m.phi, cx::resolve_topos_function(m, file.function("whole")));
  EXPECT_EQ(field(r.out, "f*", "subgraph"), cx::format_subgraph(fs.value));
  EXPECT_EQ(field(r.out, "checks", "f** contains f"), "true");
  EXPECT_EQ(cli("conjugate " + example("topos-edge.instance") + " --function whole --subdiff u").status, 2);
  EXPECT_EQ(cli("duality " + example("topos-edge.instance") + " --function whole").status, 2);
}

TEST(Cli, VerifyMatchesLibraryTallies) {
  const auto r = cli("verify codomain --seed 4");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto s = cx::verify_criterion(1, 4);
  EXPECT_EQ(field(r.out, "criterion 1", "checks"), std::to_string(s.checked));
  EXPECT_EQ(field(r.out, "criterion 1", "result"), "PASS");
  EXPECT_EQ(field(r.out, "run", "seed"), "4");
  const auto st = cli("verify structural");
  EXPECT_EQ(field(st.out, "criterion 4", "systems"), "256");
  EXPECT_EQ(field(st.out, "run", "seed"), "0");
}

TEST(Cli, GalleryListAndDescribe) {
  const auto r = cli("gallery list");
  ASSERT_EQ(r.status, 0) << r.out;
  for (const auto& e : cx::catalog()) EXPECT_NE(field(r.out, "gallery", e.name), "<no key>") << e.name;
  EXPECT_GE(std::stoul(field(r.out, "gallery", "count")), 10U);
  const auto d = cli("gallery describe radial-1ray");
  ASSERT_EQ(d.status, 0);
  EXPECT_NE(d.out.find("magnitudes:\n  - 1/2\n  - 1\n  - 2\n"), std::string::npos) << d.out;
  const auto u = cli("gallery describe no-such-instance");
  EXPECT_EQ(u.status, 2);
  EXPECT_NE(u.out.find("unknown gallery instance"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(cli("conjugate " + example("classic-squares.instance")).status, 2);  // missing --function
  EXPECT_EQ(cli("conjugate " + example("classic-squares.instance") + " --function nope").status, 2);
  EXPECT_EQ(cli("conjugate /nonexistent/file --function f").status, 2);
  EXPECT_EQ(cli("verify bogus").status, 2);
  EXPECT_EQ(cli("--format yaml gallery list").status, 2);
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("--help").status, 0);

  const auto dir = std::filesystem::temp_directory_path() / "convexoid_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.instance";
  std::ofstream(bad) << "[gallery]\nname = classic-1d\n[function f]\n-1, 1\n0, x\n1, 1\n";
  const auto r = cli("conjugate " + bad.string() + " --function f");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("line 5:"), std::string::npos) << r.out;
}

TEST(Cli, JsonAndOutFile) {
  const auto r = cli("--format json duality " + example("norm-sphere.instance") + " --function gap");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "ok");
  bool found = false;
  for (const auto& b : j["blocks"]) {
    if (b["name"] != "duality") continue;
    found = true;
    EXPECT_EQ(b["fields"]["zP"], "1");
    EXPECT_EQ(b["fields"]["zD"], "-1");
    EXPECT_TRUE(b["fields"]["witnesses"].is_array());
  }
  EXPECT_TRUE(found);

  const auto out = std::filesystem::temp_directory_path() / "convexoid_cli_test_report.txt";
  std::filesystem::remove(out);
  const auto w = cli("--out " + out.string() + " gallery list");
  EXPECT_EQ(w.status, 0);
  EXPECT_TRUE(w.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), cli("gallery list").out);
  EXPECT_EQ(cli("--out /nonexistent/dir/x.txt gallery list").status, 2);
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  EXPECT_EQ(cli("verify codomain --seed 2").out, cli("--seed 2 verify codomain").out);
}
