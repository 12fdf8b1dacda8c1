#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "convexoid/error.hpp"
#include "convexoid/functional_gallery.hpp"
#include "convexoid/graph_topos.hpp"
#include "convexoid/structural_gallery.hpp"

namespace convexoid {

struct RadialModel {
  std::string name;
  std::string description;
  RadialDescriptor rays;
};

/// phi is a subgraph of g1 x g2.
struct ToposModel {
  std::string name;
  std::string description;
  GraphPtr g1;
  GraphPtr g2;
  Subgraph phi;
};

using Model = std::variant<GalleryInstance<ClassicCodomain>, GalleryInstance<MultiplicativeCodomain>,
                           GalleryInstance<MaxLatticeCodomain>, GalleryInstance<BoolConcavoid>,
                           GalleryInstance<ChainConcavoid>, RadialModel, ToposModel>;

inline std::string model_name(const Model& m) {
  return std::visit([](const auto& x) { return x.name; }, m);
}

inline std::string model_description(const Model& m) {
  return std::visit([](const auto& x) { return x.description; }, m);
}

inline std::string model_carrier(const Model& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RadialModel>) return "multiplicative (radial)";
        else if constexpr (std::is_same_v<T, ToposModel>) return "graph topos";
        else return x.inst.codomain().name();
      },
      m);
}

template <Codomain C>
GalleryInstance<C> wrap_instance(std::string name, std::string description, Instance<C> inst) {
  return GalleryInstance<C>{std::move(name), std::move(description), std::move(inst), {}, {}, std::nullopt, std::nullopt, std::nullopt};
}

namespace gallery {

inline GalleryInstance<BoolConcavoid> set_instance(std::string name, std::string description, int n, const SetCoupling& c) {
  return wrap_instance(std::move(name), std::move(description), concavoid_from_coupling(n, c));
}

inline GalleryInstance<BoolConcavoid> path_triangle() {
  return wrap_instance("path-triangle", "edges 1:(0,1), 2:(1,2), 3:(0,2); lambda = the 0-1 paths {1} and {2,3}",
                       path_variant_instance({{0, 1}, {1, 2}, {0, 2}}, 0, 1));
}

inline GalleryInstance<ChainConcavoid> heyting_chain_3() {
  return wrap_instance("heyting-chain-3", "chain 0..3, delta {a,b,c}, lambda {x,y,z}, graded diagonal coupling",
                       heyting_chain_instance(3, {"a", "b", "c"}, {"x", "y", "z"}, {3, 1, 0, 2, 3, 1, 0, 2, 3}));
}

inline GalleryInstance<BoolConcavoid> alternatives_1_23() {
  auto sys = alternatives_instance({1}, {2, 3});
  auto g = wrap_instance("alternatives-1-23", "U = {1}, U' = {2,3}, intersect coupling on P(U u U')", sys.inst);
  g.type1 = {sys.delta_bar, sys.lambda_bar};
  return g;
}

inline ToposModel topos_edge() {
  const auto g = edge_graph();
  const auto p = product_graph(g, g);
  return ToposModel{"topos-edge", "single edge against single edge, phi = the diagonal {(u,u),(v,v),(e,e)}", g, g,
                    make_subgraph(p.graph, {"(u,u)", "(v,v)"}, {"(e,e)"})};
}

inline RadialModel radial_model(std::string name, RadialDescriptor r) {
  std::string desc = "rays";
  for (const auto& d : r.spec().directions) desc += " " + format_point(d);
  desc += ", magnitudes";
  for (const auto& m : r.spec().magnitudes) desc += " " + to_string(m);
  return RadialModel{std::move(name), std::move(desc), std::move(r)};
}

}  // namespace gallery

struct CatalogEntry {
  std::string name;
  std::string family;  // functional, structural or topos
  std::string topic;
  std::function<Model()> build;
};

inline const std::vector<CatalogEntry>& catalog() {
  using namespace gallery;
  static const std::vector<CatalogEntry> entries = {
      {"classic-1d", "functional", "inner-product conjugate (Fenchel)", [] { return Model(classic_1d()); }},
      {"classic-product", "functional", "perturbation duality, Type-I minimax", [] { return Model(classic_product()); }},
      {"mult-1d", "functional", "multiplicative convexoid, |<a,b>| coupling", [] { return Model(mult_1d()); }},
      {"mult-product", "functional", "multiplicative perturbation duality", [] { return Model(mult_product()); }},
      {"radial-1ray", "functional", "radial convexoid (co-ray coupling)", [] { return Model(radial_model("radial-1ray", radial_1ray())); }},
      {"radial-2ray", "functional", "radial convexoid, Type-II duality", [] { return Model(radial_model("radial-2ray", radial_2ray())); }},
      {"norm-l1", "functional", "norm-product coupling, sphere subdomain", [] { return Model(norm_l1()); }},
      {"bilinear-2x2", "functional", "bilinear <aa^T, B> coupling", [] { return Model(bilinear_2x2()); }},
      {"bilinear-vm", "functional", "bilinear coupling with a linear part", [] { return Model(bilinear_vm()); }},
      {"bilinear-product", "functional", "block-diagonal quadratic perturbation", [] { return Model(bilinear_product()); }},
      {"pwc1", "functional", "piecewise constant, Type I (scaled balls)", [] { return Model(pwc1()); }},
      {"pwc2", "functional", "piecewise constant, Type II (partition)", [] { return Model(pwc2()); }},
      {"pwc2-product", "functional", "piecewise constant with a perturbation axis", [] { return Model(pwc2_product()); }},
      {"lattice-beta", "functional", "max-lattice convexoid, threshold dual", [] { return Model(lattice_beta()); }},
      {"cut-systems-3", "structural", "Boolean concavoid, intersect coupling (cut systems)",
       [] { return Model(set_instance("cut-systems-3", "P({1,2,3}) against itself, phi = [S meets T]", 3, SetCoupling::intersect())); }},
      {"kcut-3-2", "structural", "Boolean concavoid, 2-cut coupling",
       [] { return Model(set_instance("kcut-3-2", "P({1,2,3}), phi = [|S n T| >= 2]", 3, SetCoupling::kcut(2))); }},
      {"weight-sum-3", "structural", "Boolean concavoid, weight-sum coupling",
       [] {
         return Model(set_instance("weight-sum-3", "P({1,2,3}), weights 1 2 3, phi = [w(S) + w(T) >= 3]", 3,
                                   SetCoupling::weight_sum({1, 2, 3}, 3)));
       }},
      {"weight-intersect-3", "structural", "Boolean concavoid, weighted intersection",
       [] {
         return Model(set_instance("weight-intersect-3", "P({1,2,3}), weights 1 2 3, phi = [w(S n T) >= 2]", 3,
                                   SetCoupling::weight_intersect({1, 2, 3}, 2)));
       }},
      {"path-triangle", "structural", "path variant, lambda = s-t paths", [] { return Model(path_triangle()); }},
      {"heyting-chain-3", "structural", "fuzzy concavoid over a Heyting chain", [] { return Model(heyting_chain_3()); }},
      {"alternatives-1-23", "structural", "theorem of the alternatives", [] { return Model(alternatives_1_23()); }},
      {"topos-edge", "topos", "graph-topos concavoid, separating family probes", [] { return Model(topos_edge()); }},
  };
  return entries;
}

inline const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown gallery instance '" + std::string(name) + "'");
}

inline Model build_model(std::string_view name) { return catalog_entry(name).build(); }

}  // namespace convexoid
