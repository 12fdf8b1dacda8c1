#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "convexoid/catalog.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/duality.hpp"
#include "convexoid/instance_file.hpp"
#include "convexoid/report.hpp"

namespace convexoid {

struct ConjugateOptions {
  std::string function;
  bool show_double = false;
  bool check_convex = false;
  std::vector<std::string> subdiff;
  ProbeMode mode = ProbeMode::sieve;
};

struct DualityOptions {
  std::string function;
  bool minimax = false;
};

namespace detail {

template <Codomain C>
void add_table(Report& r, std::string name, const Instance<C>& inst, const FuncTable<typename C::value_type>& f) {
  auto& b = r.add(std::move(name));
  for (std::size_t i = 0; i < f.size(); ++i) b.set(inst.name(f.side, i), inst.codomain().format(f[i]));
}

template <Codomain C>
std::vector<std::string> subset_names(const Instance<C>& inst, Side side, const Subset& s) {
  std::vector<std::string> out;
  for (auto i : s) out.push_back(inst.name(side, i));
  return out;
}

inline const DocSection& pick_function(const InstanceFile& file, const std::string& name) {
  if (name.empty()) throw InputError("missing function name (use --function)");
  return file.function(name);
}

inline void add_instance_block(Report& r, const InstanceFile& file, const std::string& function) {
  r.add("instance")
      .set("name", model_name(file.model))
      .set("carrier", model_carrier(file.model))
      .set("description", model_description(file.model))
      .set("function", function);
}

template <Codomain C>
void conjugate_blocks(Report& r, const Instance<C>& inst, const FuncTable<typename C::value_type>& f,
                      const ConjugateOptions& o) {
  add_table(r, "f", inst, f);
  const auto fs = conjugate(inst, f);
  add_table(r, "f*", inst, fs);
  if (o.show_double || o.check_convex) {
    const auto fss = conjugate(inst, fs);
    if (o.show_double) {
      add_table(r, "f**", inst, fss);
      const bool below = pointwise_leq(inst.codomain(), fss, f);
      const bool triple = triple_conjugate_check(inst, f);
      r.add("checks").set("f** below f", below).set("f*** = f*", triple);
      r.ok = r.ok && below && triple;
    }
    if (o.check_convex) {
      auto& b = r.add("convexity");
      b.set("convex", f == fss);
      if constexpr (std::is_same_v<C, BoolConcavoid>) {
        if (const auto n = power_set_ground(inst, f.side)) {
          b.set("system", format_system(system_of(f, *n)));
          b.set("closure", format_system(system_of(fss, *n)));
        }
      }
    }
  }
  for (const auto& x : o.subdiff) {
    const auto i = rethrow_at(0, [&] { return inst.index_of(f.side, x); });
    r.add("subdifferential " + x)
        .set_list("elements", subset_names(inst, opposite(f.side), subdifferential(inst, f, i)))
        .set_list("tight elements", subset_names(inst, opposite(f.side), classic_subdifferential(inst, f, i)));
  }
}

inline void topos_blocks(Report& r, const ToposModel& m, const Subgraph& f, const ConjugateOptions& o) {
  if (!o.subdiff.empty()) throw InputError("--subdiff is not available for graph-topos models");
  const auto fs = topos_conjugate(m.g1, m.g2, m.phi, f, o.mode);
  r.add("f").set("subgraph", format_subgraph(f));
  std::vector<std::string> probes;
  for (const auto& p : fs.probes) probes.push_back(p.probe + ": " + p.value);
  r.add("f*")
      .set("subgraph", format_subgraph(fs.value))
      .set("mode", to_string(o.mode))
      .set("coherent", fs.coherent)
      .set_list("incoherent edges", fs.incoherent)
      .set_list("probes", probes);
  if (o.show_double || o.check_convex) {
    const auto d = topos_double_check(m.g1, m.g2, m.phi, f, o.mode);
    if (o.show_double) {
      r.add("f**").set("subgraph", format_subgraph(d.f_double));
      r.add("checks").set("f** contains f", d.contains).set("f*** = f*", d.triple_equal).set("coherent", d.coherent);
      r.ok = r.ok && d.contains && d.triple_equal;
    }
    if (o.check_convex) r.add("convexity").set("convex", d.fixed_point);
  }
}

inline void radial_blocks(Report& r, const RadialModel& m, const FuncTable<ExtRational>& f, const ConjugateOptions& o) {
  const auto inst = m.rays.instance_for(f);
  add_table(r, "f", inst, f);
  const auto fs = m.rays.radial_conjugate(f);
  add_table(r, "f*", inst, fs);
  if (o.show_double || o.check_convex) {
    const auto fss = m.rays.radial_double_conjugate(f);
    if (o.show_double) {
      add_table(r, "f**", inst, fss);
      const bool below = pointwise_leq(inst.codomain(), fss, f);
      const bool oracle = gamma_oracle(m.rays, f) == fs;
      r.add("checks").set("f** below f", below).set("gamma oracle agrees", oracle);
      r.ok = r.ok && below && oracle;
    }
    if (o.check_convex) r.add("convexity").set("star-convex", m.rays.is_star_convex(f));
  }
  for (const auto& x : o.subdiff) {
    const auto i = rethrow_at(0, [&] { return inst.index_of(Side::delta, x); });
    r.add("subdifferential " + x).set_list("elements", subset_names(inst, Side::lambda, subdifferential(inst, f, i)));
  }
}

template <class V, Codomain C>
void duality_block(Report& r, const C& c, const DualityReport<V>& d, bool minimax) {
  auto& b = r.add("duality");
  b.set("kind", d.kind).set("zP", c.format(d.zP)).set("zD", c.format(d.zD)).set("weak", d.weak_ok).set("strong", d.strong_ok);
  b.set("certificate", to_string(d.certificate)).set("coincidental", d.coincidental).set("convex", d.convex);
  if (d.well_penalized) b.set("well-penalized", *d.well_penalized);
  if (d.well_guided) b.set("well-guided", *d.well_guided);
  if (minimax && d.minimax) {
    b.set("minimax inf-sup", c.format(d.minimax->first)).set("minimax sup-inf", c.format(d.minimax->second));
    b.set("minimax equal", d.minimax_equal());
  }
  b.set_list("witnesses", d.witnesses);
  r.ok = r.ok && d.consistent();
}

template <class F>
auto subdomain_input(F&& f) {
  try {
    return f();
  } catch (const SubdomainError& e) {
    throw InputError(e.what());
  } catch (const PartialEquilibriumError& e) {
    throw InputError(e.what());
  }
}

template <Codomain C>
std::pair<Subset, Subset> pick_subdomain(const GalleryInstance<C>& g, const std::optional<DocSection>& sec,
                                         const std::optional<std::pair<Subset, Subset>>& preset) {
  if (sec && (sec->find("delta_bar") || sec->find("lambda_bar"))) {
    return {resolve_subset(g.inst, Side::delta, sec->require("delta_bar")),
            resolve_subset(g.inst, Side::lambda, sec->require("lambda_bar"))};
  }
  if (!preset) throw InputError("duality needs delta_bar and lambda_bar", sec ? sec->line : 0);
  return *preset;
}

template <Codomain C>
void system_block(Report& r, const Instance<C>& inst, const Subset& dbar, const Subset& lbar,
                  const typename C::value_type& alpha) {
  r.add("system")
      .set_list("delta_bar", subset_names(inst, Side::delta, dbar))
      .set_list("lambda_bar", subset_names(inst, Side::lambda, lbar))
      .set("alpha", inst.codomain().format(alpha));
}

template <Codomain C>
void gallery_duality(Report& r, const GalleryInstance<C>& g, const std::optional<DocSection>& sec,
                     const FuncTable<typename C::value_type>& f, const DualityOptions& o) {
  const auto& c = g.inst.codomain();
  std::string kind;
  if (sec) kind = sec->require("kind").value;
  else if (g.type1) kind = "type1";
  else if (g.type2) kind = "type2";
  else if (g.product) kind = "product";
  else throw InputError("no [duality] section and '" + g.name + "' has no preset system");
  if (f.side != Side::delta) throw InputError("duality functions live on the delta side");

  if (kind == "type1" || kind == "alternatives") {
    Subset dbar, lbar;
    const bool by_ground = sec && sec->find("u");
    if (!by_ground) std::tie(dbar, lbar) = pick_subdomain(g, sec, g.type1);
    if constexpr (std::is_same_v<C, BoolConcavoid>) {
      if (by_ground) {
        const auto sys = rethrow_at(sec->line, [&] {
          return alternatives_instance(detail::parse_ints(sec->require("u")), detail::parse_ints(sec->require("u_prime")));
        });
        if (sys.inst.names(Side::delta) != g.inst.names(Side::delta)) {
          throw InputError("u and u_prime do not match the ground set", sec->line);
        }
        dbar = sys.delta_bar;
        lbar = sys.lambda_bar;
      }
    } else {
      if (by_ground) throw InputError("u and u_prime need a Boolean power-set instance", sec->line);
    }
    const auto sys = subdomain_input([&] { return make_type1_system(g.inst, dbar, lbar); });
    system_block(r, g.inst, sys.delta_bar, sys.lambda_bar, sys.alpha);
    if (kind == "alternatives") {
      const auto a = rethrow_at(sec ? sec->line : 0, [&] { return alternatives_check(sys, f); });
      r.add("alternatives")
          .set("zP", c.format(a.zP))
          .set("dual system", c.format(a.dual_system))
          .set("zD", c.format(a.zD))
          .set("zP oplus dual system", c.format(c.oplus(a.zP, a.dual_system)))
          .set("holds", a.holds);
      r.ok = r.ok && a.holds;
      return;
    }
    duality_block(r, c, type1_values(sys, f), o.minimax);
    const bool zd = zdval_check(sys, f);
    r.add("checks").set("zD = inf of restricted f**", zd);
    r.ok = r.ok && zd;
    return;
  }
  if (kind == "type2") {
    const auto [dbar, lbar] = pick_subdomain(g, sec, g.type2);
    const auto sys = subdomain_input([&] { return make_type2_system(g.inst, dbar, lbar); });
    system_block(r, g.inst, sys.delta_bar, sys.lambda_bar, sys.alpha);
    duality_block(r, c, type2_values(sys, f), o.minimax);
    return;
  }
  if (kind == "product") {
    if (!g.product) throw InputError("'" + g.name + "' has no product structure", sec ? sec->line : 0);
    const auto sys = subdomain_input([&] { return build_conjugate_duality(g.inst, g.product->structure, g.product->zero2, g.product->zero1); });
    system_block(r, g.inst, sys.type1.delta_bar, sys.type1.lambda_bar, sys.alpha);
    duality_block(r, c, type1_values(sys.type1, f), o.minimax);
    const auto e = ext_dual_check(sys, f);
    r.add("value function")
        .set("h(0)", c.format(e.h_zero))
        .set("h**(0)", c.format(e.hss_zero))
        .set("zP = h(0)", e.primal_ok)
        .set("zD = h**(0)", e.dual_ok);
    r.ok = r.ok && e.ok();
    return;
  }
  throw InputError("unknown duality kind '" + kind + "'", sec ? sec->require("kind").line : 0);
}

}  // namespace detail

inline Report cmd_conjugate(const InstanceFile& file, const ConjugateOptions& o) {
  const auto& sec = detail::pick_function(file, o.function);
  Report r;
  r.command = "conjugate " + model_name(file.model) + " --function " + o.function;
  if (o.show_double) r.command += " --double";
  if (o.check_convex) r.command += " --check-convex";
  for (const auto& x : o.subdiff) r.command += " --subdiff " + x;
  detail::add_instance_block(r, file, o.function);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ToposModel>) {
          detail::topos_blocks(r, m, resolve_topos_function(m, sec), o);
        } else if constexpr (std::is_same_v<T, RadialModel>) {
          detail::radial_blocks(r, m, resolve_radial_function(m.rays, sec), o);
        } else {
          detail::conjugate_blocks(r, m.inst, resolve_function(m.inst, sec), o);
        }
      },
      file.model);
  return r;
}

inline Report cmd_duality(const InstanceFile& file, const DualityOptions& o) {
  const auto& sec = detail::pick_function(file, o.function);
  Report r;
  r.command = "duality " + model_name(file.model) + " --function " + o.function;
  if (o.minimax) r.command += " --minimax";
  detail::add_instance_block(r, file, o.function);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ToposModel>) {
          throw InputError("duality systems are not defined for graph-topos models");
        } else if constexpr (std::is_same_v<T, RadialModel>) {
          const auto f = resolve_radial_function(m.rays, sec);
          const auto sys = detail::subdomain_input([&] { return m.rays.type2_system(f); });
          detail::system_block(r, sys.inst, sys.delta_bar, sys.lambda_bar, sys.alpha);
          detail::duality_block(r, sys.inst.codomain(), type2_values(sys, f), o.minimax);
          r.add("radial").set("star-convex", m.rays.is_star_convex(f));
        } else {
          detail::gallery_duality(r, m, file.duality, resolve_function(m.inst, sec), o);
        }
      },
      file.model);
  return r;
}

inline Report cmd_gallery_list() {
  Report r;
  r.command = "gallery list";
  auto& b = r.add("gallery");
  for (const auto& e : catalog()) b.set(e.name, e.family + ": " + e.topic);
  b.set("count", std::to_string(catalog().size()));
  return r;
}

inline Report cmd_gallery_describe(const std::string& name) {
  const auto& entry = catalog_entry(name);
  const auto model = entry.build();
  Report r;
  r.command = "gallery describe " + name;
  r.add("instance")
      .set("name", entry.name)
      .set("family", entry.family)
      .set("topic", entry.topic)
      .set("carrier", model_carrier(model))
      .set("description", model_description(model));
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ToposModel>) {
          auto& b = r.add("parameters");
          b.set("G1", format_graph(*m.g1)).set("G2", format_graph(*m.g2)).set("phi", format_subgraph(m.phi));
        } else if constexpr (std::is_same_v<T, RadialModel>) {
          std::vector<std::string> dirs, mags;
          for (const auto& d : m.rays.spec().directions) dirs.push_back(format_point(d));
          for (const auto& x : m.rays.spec().magnitudes) mags.push_back(to_string(x));
          r.add("parameters")
              .set_list("directions", dirs)
              .set_list("magnitudes", mags)
              .set_list("points", m.rays.names());
        } else {
          auto& b = r.add("parameters");
          b.set("|delta|", std::to_string(m.inst.delta_size())).set("|lambda|", std::to_string(m.inst.lambda_size()));
          b.set_list("delta", m.inst.names(Side::delta)).set_list("lambda", m.inst.names(Side::lambda));
          if (m.type1) {
            b.set_list("type1 delta_bar", detail::subset_names(m.inst, Side::delta, m.type1->first));
            b.set_list("type1 lambda_bar", detail::subset_names(m.inst, Side::lambda, m.type1->second));
          }
          if (m.type2) {
            b.set_list("type2 delta_bar", detail::subset_names(m.inst, Side::delta, m.type2->first));
            b.set_list("type2 lambda_bar", detail::subset_names(m.inst, Side::lambda, m.type2->second));
          }
          if (m.product) {
            b.set("product basepoint 0_2", m.product->structure.delta2[m.product->zero2]);
            b.set("product basepoint 0_1", m.product->structure.lambda1[m.product->zero1]);
          }
        }
      },
      model);
  return r;
}

}  // namespace convexoid
