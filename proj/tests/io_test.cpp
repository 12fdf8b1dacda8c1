#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "convexoid/catalog.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/instance_file.hpp"
#include "convexoid/io.hpp"

namespace cx = convexoid;
using cx::ExtRational;
using cx::Side;

namespace {

std::string examples(const std::string& name) { return std::string(CONVEXOID_EXAMPLES_DIR) + "/instances/" + name; }

// Message of the InputError thrown by fn, or "" when nothing is thrown.
template <class F>
std::string input_error(F&& fn) {
  try {
    fn();
  } catch (const cx::InputError& e) {
    return e.what();
  }
  return "";
}

template <class C>
const cx::GalleryInstance<C>& as(const cx::InstanceFile& f) {
  return std::get<cx::GalleryInstance<C>>(f.model);
}

}  // namespace

TEST(Words, BracketsGroup) {
  EXPECT_EQ(cx::io::split_words("a  (1, 0) {1, 2}\tb"), (std::vector<std::string>{"a", "(1,0)", "{1,2}", "b"}));
  EXPECT_EQ(cx::io::split_words("   "), std::vector<std::string>{});
  EXPECT_EQ(cx::io::split_csv("(1,0), 2 , {1,3}"), (std::vector<std::string>{"(1,0)", "2", "{1,3}"}));
  EXPECT_EQ(cx::io::strip_comment("  x = 1  # note"), "x = 1");
}

TEST(Document, SectionsEntriesAndRawLines) {
  const auto doc = cx::parse_document("# header\n[function f]\nside = lambda\n-1, 2\n\n[duality]\nkind = type1\n");
  ASSERT_EQ(doc.sections.size(), 2U);
  const auto& f = doc.sections[0];
  EXPECT_EQ(f.kind, "function");
  EXPECT_EQ(f.arg, "f");
  EXPECT_EQ(f.line, 2);
  EXPECT_EQ(f.get("side"), "lambda");
  ASSERT_EQ(f.raw.size(), 1U);
  EXPECT_EQ(f.raw[0].line, 4);
  EXPECT_EQ(f.raw[0].text, "-1, 2");
  EXPECT_EQ(doc.find("duality")->get("kind"), "type1");
  EXPECT_EQ(doc.all("function").size(), 1U);
}

TEST(Document, KeysWithBracketsStayRaw) {
  // "(0,0) = 1" is not a bare key, so the line is data.
  const auto doc = cx::parse_document("[function f]\n(0,0) = 1\n");
  EXPECT_TRUE(doc.sections[0].entries.empty());
  EXPECT_EQ(doc.sections[0].raw.size(), 1U);
}

TEST(Document, ErrorsCarryLineNumbers) {
  EXPECT_EQ(input_error([] { cx::parse_document("x = 1\n"); }), "line 1: content before the first section");
  EXPECT_EQ(input_error([] { cx::parse_document("[a]\n[b\n"); }), "line 2: unterminated section header");
  EXPECT_EQ(input_error([] { cx::parse_document("[a]\nk = 1\nk = 2\n"); }), "line 3: duplicate key 'k'");
  EXPECT_EQ(input_error([] { cx::parse_document("[a b c]\n"); }), "line 1: section header needs a kind and at most one name");
}

TEST(Tables, CsvRoundTrip) {
  const auto g = cx::gallery::classic_1d();
  const cx::FuncTable<ExtRational> f{Side::delta, {ExtRational(1, 2), ExtRational::neg_inf(), ExtRational::pos_inf()}};
  const auto text = cx::table_to_csv(g.inst, f);
  EXPECT_EQ(text, "-1,1/2\n0,-inf\n1,+inf\n");
  EXPECT_EQ(cx::table_from_csv(g.inst, Side::delta, text), f);
}

TEST(Tables, RowErrors) {
  const auto g = cx::gallery::classic_1d();
  EXPECT_EQ(input_error([&] { cx::table_from_csv(g.inst, Side::delta, "-1, 1\n0, 0\n"); }), "line 1: no value for element '1'");
  EXPECT_EQ(input_error([&] { cx::table_from_csv(g.inst, Side::delta, "-1, 1\n-1, 2\n"); }), "line 2: element '-1' listed twice");
  EXPECT_NE(input_error([&] { cx::table_from_csv(g.inst, Side::delta, "7, 1\n"); }).find("line 1:"), std::string::npos);
  EXPECT_NE(input_error([&] { cx::table_from_csv(g.inst, Side::delta, "-1, x\n"); }).find("line 1:"), std::string::npos);
  EXPECT_EQ(input_error([&] { cx::table_from_csv(g.inst, Side::delta, "-1\n"); }), "line 1: expected 'element, value'");
}

TEST(SetSystems, LinesAndWords) {
  const auto pi = cx::SetSystem::of(3, {0b001, 0b011, 0b111});
  EXPECT_EQ(cx::system_to_lines(pi), "{1}\n{1,2}\n{1,2,3}\n");
  EXPECT_EQ(cx::system_from_lines(cx::system_to_lines(pi), 3), pi);
  EXPECT_EQ(cx::system_from_words("{1} {1,2} {1,2,3}", 3), pi);
  EXPECT_EQ(cx::system_from_words("", 3), cx::SetSystem(3));
  EXPECT_NE(input_error([] { cx::system_from_words("{4}", 3, 9); }).find("line 9:"), std::string::npos);
}

TEST(Graphs, TextRoundTrip) {
  const auto g = cx::parse_graph("vertices: a b\nedge e a b\nedge l b b\n");
  EXPECT_EQ(g.vertex_count(), 2U);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(cx::format_graph(g), "vertices: a b\nedge e a b\nedge l b b\n");
  EXPECT_EQ(input_error([] { cx::parse_graph("edge e a b\n"); }), "line 1: edge before the vertices line");
  EXPECT_EQ(input_error([] { cx::parse_graph("vertices: a\nedge e a z\n"); }).substr(0, 8), "line 2: ");
  EXPECT_EQ(input_error([] { cx::parse_graph("vertices: a\nloop a\n"); }), "line 2: expected 'edge <name> <src> <dst>'");
}

TEST(InstanceFile, EveryShippedExampleLoads) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::string(CONVEXOID_EXAMPLES_DIR) + "/instances")) {
    SCOPED_TRACE(entry.path().string());
    const auto file = cx::load_instance_file(entry.path());
    EXPECT_FALSE(file.functions.empty());
    ++files;
  }
  EXPECT_GE(files, 6U);
}

TEST(InstanceFile, GalleryReferenceMatchesCatalog) {
  const auto file = cx::load_instance_file(examples("classic-squares.instance"));
  const auto& g = as<cx::ClassicCodomain>(file);
  EXPECT_EQ(g.name, "classic-1d");
  const auto f = cx::resolve_function(g.inst, file.function("squares"));
  EXPECT_EQ(f.values, (std::vector<ExtRational>{ExtRational(1), ExtRational(0), ExtRational(1)}));
  EXPECT_EQ(input_error([&] { file.function("cubes"); }), "no function named 'cubes'");
}

TEST(InstanceFile, GridCouplingMatchesGallery) {
  const auto file = cx::parse_instance_file(
      "[codomain]\ncarrier = classic\n[ground]\nkind = grid\naxis = -1 0 1\ndimension = 2\n[coupling]\nkind = norm-l1\n");
  EXPECT_EQ(as<cx::ClassicCodomain>(file).inst.phi_table(), cx::gallery::norm_l1().inst.phi_table());
  const auto mult = cx::parse_instance_file("[codomain]\ncarrier = multiplicative\n[ground]\nkind = grid\naxis = -2 -1 0 1 2\n[coupling]\n");
  EXPECT_EQ(as<cx::MultiplicativeCodomain>(mult).inst.phi_table(), cx::gallery::mult_1d().inst.phi_table());
}

TEST(InstanceFile, InlineTableCoupling) {
  const auto file = cx::parse_instance_file(
      "[codomain]\ncarrier = classic\n[ground]\nkind = names\ndelta = a b\nlambda = x y z\n"
      "[coupling]\nkind = table\nb, 4, 5, 6\na, 1, 2, +inf\n");
  const auto& inst = as<cx::ClassicCodomain>(file).inst;
  EXPECT_EQ(inst.phi(0, 2), ExtRational::pos_inf());
  EXPECT_EQ(inst.phi(1, 0), ExtRational(4));
  const std::string head = "[codomain]\ncarrier = classic\n[ground]\nkind = names\ndelta = a b\nlambda = x y\n[coupling]\n";
  EXPECT_EQ(input_error([&] { cx::parse_instance_file(head + "a, 1, 2\n"); }), "line 7: coupling has no row for 'b'");
  EXPECT_EQ(input_error([&] { cx::parse_instance_file(head + "a, 1\n"); }), "line 8: coupling row needs a delta name and 2 values");
  EXPECT_EQ(input_error([&] { cx::parse_instance_file(head + "q, 1, 2\n"); }), "line 8: unknown delta element 'q'");
}

TEST(InstanceFile, HeytingFileMatchesCatalog) {
  const auto file = cx::load_instance_file(examples("heyting-chain.instance"));
  const auto& g = as<cx::ChainConcavoid>(file);
  EXPECT_EQ(g.inst.phi_table(), cx::gallery::heyting_chain_3().inst.phi_table());
  EXPECT_EQ(g.inst.codomain(), cx::gallery::heyting_chain_3().inst.codomain());
}

TEST(InstanceFile, SetSystemFunctions) {
  const auto file = cx::load_instance_file(examples("cut-system.instance"));
  const auto& g = as<cx::BoolConcavoid>(file);
  const auto f = cx::resolve_function(g.inst, file.function("cut1"));
  EXPECT_EQ(cx::system_of(f, 3), cx::cut_system(3, 0b001));
  const auto bad = cx::parse_instance_file("[gallery]\nname = path-triangle\n[function f]\nside = lambda\nsystem = {1}\n");
  EXPECT_EQ(input_error([&] { cx::resolve_function(as<cx::BoolConcavoid>(bad).inst, bad.function("f")); }),
            "line 5: system = needs a power-set ground");
}

TEST(InstanceFile, WeightedSetCouplings) {
  const auto file = cx::parse_instance_file(
      "[codomain]\ncarrier = boolean\n[ground]\nkind = powerset\nsize = 3\n"
      "[coupling]\nkind = weight-intersect\nweights = 1 2 3\nthreshold = 2\n");
  const auto expect = cx::concavoid_from_coupling(3, cx::SetCoupling::weight_intersect({1, 2, 3}, 2));
  EXPECT_EQ(as<cx::BoolConcavoid>(file).inst.phi_table(), expect.phi_table());
  EXPECT_EQ(input_error([] {
              cx::parse_instance_file("[codomain]\ncarrier = boolean\n[ground]\nkind = powerset\nsize = 3\n"
                                      "[coupling]\nkind = weight-sum\nweights = 1 2\nthreshold = 2\n");
            }),
            "line 8: weights needs one entry per ground element");
}

TEST(InstanceFile, RadialFile) {
  const auto file = cx::load_instance_file(examples("radial-star.instance"));
  const auto& m = std::get<cx::RadialModel>(file.model);
  EXPECT_EQ(m.rays.names(), cx::gallery::radial_2ray().names());
  const auto f = cx::resolve_radial_function(m.rays, file.function("star"));
  EXPECT_TRUE(m.rays.is_star_convex(f));
  EXPECT_FALSE(m.rays.is_star_convex(cx::resolve_radial_function(m.rays, file.function("g"))));
}

TEST(InstanceFile, ToposFile) {
  const auto file = cx::load_instance_file(examples("topos-edge.instance"));
  const auto& m = std::get<cx::ToposModel>(file.model);
  const auto ref = cx::gallery::topos_edge();
  EXPECT_EQ(*m.g1, *ref.g1);
  EXPECT_EQ(m.phi, cx::make_subgraph(m.phi.host, {"(u,u)", "(v,v)"}, {"(e,e)"}));
  EXPECT_EQ(cx::format_subgraph(cx::resolve_topos_function(m, file.function("whole"))), cx::format_subgraph(cx::Subgraph::full(m.g1)));
  // An edge of phi without its endpoint vertices is not a subgraph.
  EXPECT_EQ(input_error([] {
              cx::parse_instance_file("[codomain]\ncarrier = graph-topos\n[ground]\nkind = graph\n[graph G1]\nvertices: u v\nedge e u v\n"
                                      "[coupling]\nedges = (e,e)\n");
            }).substr(0, 8),
            "line 8: ");
}

TEST(InstanceFile, ModelErrors) {
  EXPECT_EQ(input_error([] { cx::parse_instance_file("[gallery]\nname = nope\n"); }), "line 2: unknown gallery instance 'nope'");
  EXPECT_EQ(input_error([] { cx::parse_instance_file("[codomain]\ncarrier = classic\n"); }), "missing section [ground]");
  EXPECT_EQ(input_error([] { cx::parse_instance_file("[codomain]\ncarrier = reals\n[ground]\nkind = grid\n[coupling]\n"); }),
            "line 2: unknown carrier 'reals'");
  EXPECT_EQ(input_error([] {
              cx::parse_instance_file("[codomain]\ncarrier = boolean\norientation = convexoid\n[ground]\nkind = powerset\nsize = 2\n[coupling]\n");
            }),
            "line 3: carrier boolean is only available as a concavoid");
  EXPECT_EQ(input_error([] { cx::parse_instance_file("[codomain]\ncarrier = classic\n[ground]\nkind = grid\naxis = 1 x\n[coupling]\n"); })
                .substr(0, 8),
            "line 5: ");
  EXPECT_EQ(input_error([] { cx::parse_instance_file("[gallery]\nname = classic-1d\n[function]\n"); }),
            "line 3: function section needs a name");
  EXPECT_EQ(input_error([] { cx::parse_instance_file("[gallery]\nname = classic-1d\n[function f]\n[function f]\n"); }),
            "line 4: function 'f' defined twice");
}
