#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "convexoid/catalog.hpp"
#include "convexoid/error.hpp"
#include "convexoid/io.hpp"

namespace convexoid {

// Instance files are line-oriented sections:
//
//   [gallery]            name = <catalog name>          (replaces the next three)
//   [codomain]           carrier, orientation, levels
//   [ground]             kind = grid | rays | powerset | names | graph, plus its keys
//   [coupling]           kind = <built-in id> plus parameters, or CSV rows for kind = table
//   [graph G1|G2]        "vertices: ..." and "edge <name> <src> <dst>" lines
//   [function NAME]      CSV rows "element, value", or system = ..., or vertices = / edges =
//   [duality]            kind = type1 | type2 | alternatives | product, delta_bar, lambda_bar, u, u_prime

struct InstanceFile {
  Model model;
  std::vector<DocSection> functions;
  std::optional<DocSection> duality;

  const DocSection& function(std::string_view name) const {
    for (const auto& f : functions) {
      if (f.arg == name) return f;
    }
    throw InputError("no function named '" + std::string(name) + "'");
  }
};

namespace detail {

inline int parse_count(const DocEntry& e, int lo, int hi) {
  try {
    const auto v = parse_int64(e.value, e.value);
    if (v < lo || v > hi) throw InputError("");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw InputError("'" + e.key + "' must be an integer in " + std::to_string(lo) + ".." + std::to_string(hi), e.line);
  }
}

inline std::vector<ExtRational> parse_values(const DocEntry& e) {
  std::vector<ExtRational> out;
  try {
    for (const auto& w : io::split_words(e.value)) out.push_back(parse_ext_rational(w));
  } catch (const std::exception& ex) {
    throw InputError("'" + e.key + "': " + ex.what(), e.line);
  }
  if (out.empty()) throw InputError("'" + e.key + "' is empty", e.line);
  return out;
}

inline std::vector<Rational> parse_rationals(const DocEntry& e) {
  std::vector<Rational> out;
  for (const auto& v : parse_values(e)) {
    if (!v.is_finite()) throw InputError("'" + e.key + "' must be finite", e.line);
    out.push_back(v.value());
  }
  return out;
}

inline std::vector<int> parse_ints(const DocEntry& e) {
  std::vector<int> out;
  for (const auto& w : io::split_words(e.value)) {
    try {
      out.push_back(static_cast<int>(parse_int64(w, w)));
    } catch (const std::exception&) {
      throw InputError("'" + e.key + "' expects integers, got '" + w + "'", e.line);
    }
  }
  return out;
}

/// "(1,0)" or "1" as a point of the given dimension.
inline Point parse_point(std::string_view text, int line) {
  std::string s(trim(text));
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw InputError("unterminated point '" + s + "'", line);
    s = s.substr(1, s.size() - 2);
  }
  Point p;
  try {
    for (const auto& c : io::split_csv(s)) p.push_back(parse_ext_rational(c));
  } catch (const std::exception& e) {
    throw InputError("point '" + std::string(text) + "': " + e.what(), line);
  }
  return p;
}

inline std::vector<std::string> parse_names(const DocEntry& e) {
  auto out = io::split_words(e.value);
  if (out.empty()) throw InputError("'" + e.key + "' lists no names", e.line);
  return out;
}

inline const DocSection& require_section(const Document& doc, std::string_view kind) {
  const auto* s = doc.find(kind);
  if (!s) throw InputError("missing section [" + std::string(kind) + "]");
  return *s;
}

template <class F>
auto rethrow_at(int line, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    if (e.line() > 0) throw;
    throw InputError(e.what(), line);
  } catch (const std::exception& e) {
    throw InputError(e.what(), line);
  }
}

/// Rows "delta-name, v1, ..., vk" with k = |lambda|; every delta name exactly once.
template <Codomain C>
Instance<C> table_coupling(C c, const std::vector<std::string>& dnames, const std::vector<std::string>& lnames,
                           const DocSection& sec) {
  using V = typename C::value_type;
  std::vector<std::optional<std::vector<V>>> rows(dnames.size());
  for (const auto& row : sec.raw) {
    const auto cells = io::split_csv(row.text);
    if (cells.size() != lnames.size() + 1) {
      throw InputError("coupling row needs a delta name and " + std::to_string(lnames.size()) + " values", row.line);
    }
    const auto it = std::find(dnames.begin(), dnames.end(), cells[0]);
    if (it == dnames.end()) throw InputError("unknown delta element '" + cells[0] + "'", row.line);
    auto& slot = rows[static_cast<std::size_t>(it - dnames.begin())];
    if (slot) throw InputError("coupling row '" + cells[0] + "' given twice", row.line);
    slot.emplace();
    for (std::size_t j = 1; j < cells.size(); ++j) slot->push_back(rethrow_at(row.line, [&] { return c.parse(cells[j]); }));
  }
  std::vector<V> table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) throw InputError("coupling has no row for '" + dnames[i] + "'", sec.line);
    table.insert(table.end(), rows[i]->begin(), rows[i]->end());
  }
  return rethrow_at(sec.line, [&] { return Instance<C>(std::move(c), dnames, lnames, std::move(table)); });
}

struct NamedGround {
  std::vector<std::string> delta;
  std::vector<std::string> lambda;
};

inline NamedGround named_ground(const DocSection& ground) {
  NamedGround g{parse_names(ground.require("delta")), {}};
  g.lambda = ground.find("lambda") ? parse_names(*ground.find("lambda")) : g.delta;
  return g;
}

inline std::pair<GridSpec, GridSpec> grid_ground(const DocSection& ground) {
  const int dim = ground.find("dimension") ? parse_count(*ground.find("dimension"), 1, 4) : 1;
  const auto axis = parse_values(ground.require("axis"));
  const auto laxis = ground.find("lambda_axis") ? parse_values(*ground.find("lambda_axis")) : axis;
  return {GridSpec::cube(axis, static_cast<std::size_t>(dim)), GridSpec::cube(laxis, static_cast<std::size_t>(dim))};
}

template <Codomain C, class Rule>
GalleryInstance<C> grid_model(C c, const DocSection& ground, Rule&& rule) {
  const auto [dg, lg] = grid_ground(ground);
  return rethrow_at(ground.line, [&] {
    return grid_instance(std::move(c), "file", "grid instance from file", grid_points(dg), grid_points(lg), rule);
  });
}

inline Model extended_model(const std::string& carrier, const DocSection& ground, const DocSection& coupling) {
  const auto gkind = ground.require("kind").value;
  const auto ckind = coupling.get("kind", gkind == "names" ? "table" : "");
  if (gkind == "rays") {
    if (carrier != "multiplicative") throw InputError("ray grids need carrier = multiplicative", ground.line);
    if (ckind != "radial") throw InputError("ray grids take coupling kind = radial", coupling.line);
    RaySpec spec;
    const auto& dirs = ground.require("directions");
    for (const auto& w : io::split_words(dirs.value)) spec.directions.push_back(parse_point(w, dirs.line));
    spec.magnitudes = parse_rationals(ground.require("magnitudes"));
    return rethrow_at(ground.line, [&] { return Model(gallery::radial_model("file", RadialDescriptor(spec))); });
  }
  if (gkind == "names") {
    if (ckind != "table") throw InputError("named ground sets take coupling kind = table", coupling.line);
    const auto g = named_ground(ground);
    if (carrier == "classic") return wrap_instance("file", "table coupling from file", table_coupling(ClassicCodomain{}, g.delta, g.lambda, coupling));
    if (carrier == "multiplicative") {
      return wrap_instance("file", "table coupling from file", table_coupling(MultiplicativeCodomain{}, g.delta, g.lambda, coupling));
    }
    return wrap_instance("file", "table coupling from file", table_coupling(MaxLatticeCodomain{}, g.delta, g.lambda, coupling));
  }
  if (gkind != "grid") throw InputError("carrier " + carrier + " takes ground kind grid, rays or names", ground.line);
  auto dot = [](const Point& a, const Point& b) { return inner_product(a, b); };
  if (carrier == "classic") {
    if (ckind == "inner-product" || ckind.empty()) return grid_model(ClassicCodomain{}, ground, dot);
    if (ckind == "norm-l1" || ckind == "norm-linf") {
      const auto k = ckind == "norm-l1" ? gallery::NormKind::l1 : gallery::NormKind::linf;
      return grid_model(ClassicCodomain{}, ground,
                        [k](const Point& a, const Point& b) { return mul_zero_absorbing(gallery::norm_of(k, a), gallery::norm_of(k, b)); });
    }
  } else if (carrier == "multiplicative") {
    if (ckind == "abs-inner-product" || ckind.empty()) {
      return grid_model(MultiplicativeCodomain{}, ground, [](const Point& a, const Point& b) { return abs(inner_product(a, b)); });
    }
  } else if (ckind == "inner-product" || ckind.empty()) {
    return grid_model(MaxLatticeCodomain{}, ground, dot);
  }
  throw InputError("coupling kind '" + ckind + "' is not available for carrier " + carrier + " on a grid", coupling.line);
}

inline SetCoupling set_coupling(const DocSection& sec, int n) {
  const auto kind = sec.get("kind", "intersect");
  if (kind == "intersect") return SetCoupling::intersect();
  if (kind == "kcut") return SetCoupling::kcut(parse_count(sec.require("k"), 1, n));
  if (kind == "weight-sum" || kind == "weight-intersect") {
    const auto w = parse_rationals(sec.require("weights"));
    if (static_cast<int>(w.size()) != n) throw InputError("weights needs one entry per ground element", sec.require("weights").line);
    const auto t = parse_rationals(sec.require("threshold"));
    if (t.size() != 1) throw InputError("threshold takes one value", sec.require("threshold").line);
    return kind == "weight-sum" ? SetCoupling::weight_sum(w, t[0]) : SetCoupling::weight_intersect(w, t[0]);
  }
  throw InputError("unknown set coupling '" + kind + "'", sec.line);
}

inline Model boolean_model(const DocSection& ground, const DocSection& coupling) {
  const auto gkind = ground.require("kind").value;
  if (gkind == "powerset") {
    const int n = parse_count(ground.require("size"), 1, 8);
    return wrap_instance("file", "Boolean concavoid on P({1.." + std::to_string(n) + "})",
                         rethrow_at(coupling.line, [&] { return concavoid_from_coupling(n, set_coupling(coupling, n)); }));
  }
  if (gkind == "names") {
    const auto g = named_ground(ground);
    return wrap_instance("file", "Boolean table coupling from file", table_coupling(BoolConcavoid(BooleanCodomain{}), g.delta, g.lambda, coupling));
  }
  throw InputError("carrier boolean takes ground kind powerset or names", ground.line);
}

inline Model topos_model(const Document& doc, const DocSection& ground, const DocSection& coupling) {
  if (ground.require("kind").value != "graph") throw InputError("carrier graph-topos takes ground kind graph", ground.line);
  const auto* s1 = doc.find("graph", "G1");
  const auto* s2 = doc.find("graph", "G2");
  if (!s1) throw InputError("missing section [graph G1]");
  const auto g1 = share(graph_from_lines(s1->raw));
  const auto g2 = s2 ? share(graph_from_lines(s2->raw)) : g1;
  const auto prod = product_graph(g1, g2);
  return ToposModel{"file", "graph-topos instance from file", g1, g2, subgraph_from_section(prod.graph, coupling)};
}

}  // namespace detail

inline InstanceFile parse_instance_file(std::string_view text) {
  const auto doc = parse_document(text);
  std::optional<Model> model;
  if (const auto* g = doc.find("gallery")) {
    const auto& e = g->require("name");
    model = detail::rethrow_at(e.line, [&] { return build_model(e.value); });
  } else {
    const auto& cod = detail::require_section(doc, "codomain");
    const auto& ground = detail::require_section(doc, "ground");
    const auto& coupling = detail::require_section(doc, "coupling");
    const auto carrier = cod.require("carrier").value;
    const bool meet_based = carrier == "boolean" || carrier == "heyting" || carrier == "graph-topos";
    const auto orientation = cod.get("orientation", meet_based ? "concavoid" : "convexoid");
    if (orientation != (meet_based ? "concavoid" : "convexoid")) {
      throw InputError("carrier " + carrier + " is only available as a " + (meet_based ? "concavoid" : "convexoid"),
                       cod.find("orientation")->line);
    }
    if (carrier == "classic" || carrier == "multiplicative" || carrier == "max-lattice") {
      model = detail::extended_model(carrier, ground, coupling);
    } else if (carrier == "boolean") {
      model = detail::boolean_model(ground, coupling);
    } else if (carrier == "heyting") {
      const int m = detail::parse_count(cod.require("levels"), 1, 64);
      if (ground.require("kind").value != "names") throw InputError("carrier heyting takes ground kind names", ground.line);
      const auto g = detail::named_ground(ground);
      model = wrap_instance("file", "Heyting chain 0.." + std::to_string(m) + " table coupling from file",
                            detail::table_coupling(ChainConcavoid(HeytingChainCodomain(m)), g.delta, g.lambda, coupling));
    } else if (carrier == "graph-topos") {
      model = detail::topos_model(doc, ground, coupling);
    } else {
      throw InputError("unknown carrier '" + carrier + "'", cod.require("carrier").line);
    }
  }
  InstanceFile out{std::move(*model), {}, std::nullopt};
  for (const auto* f : doc.all("function")) {
    if (f->arg.empty()) throw InputError("function section needs a name", f->line);
    for (const auto& g : out.functions) {
      if (g.arg == f->arg) throw InputError("function '" + f->arg + "' defined twice", f->line);
    }
    out.functions.push_back(*f);
  }
  if (const auto* d = doc.find("duality")) out.duality = *d;
  return out;
}

inline InstanceFile load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_file(ss.str());
}

// ---------------------------------------------------------------------------
// Function resolution
// ---------------------------------------------------------------------------

inline Side parse_side(const DocSection& sec) {
  const auto s = sec.get("side", "delta");
  if (s == "delta") return Side::delta;
  if (s == "lambda") return Side::lambda;
  throw InputError("side must be delta or lambda", sec.require("side").line);
}

/// Ground size n when the side's names are exactly P({1..n}) in rank order.
template <Codomain C>
std::optional<int> power_set_ground(const Instance<C>& inst, Side side) {
  const auto& names = inst.names(side);
  for (int n = 0; n <= 8; ++n) {
    if (names.size() == (std::size_t{1} << n)) return names == power_set_names(n) ? std::optional<int>(n) : std::nullopt;
  }
  return std::nullopt;
}

template <Codomain C>
FuncTable<typename C::value_type> resolve_function(const Instance<C>& inst, const DocSection& sec) {
  const auto side = parse_side(sec);
  if constexpr (std::is_same_v<C, BoolConcavoid>) {
    if (const auto* sys = sec.find("system")) {
      const auto n = power_set_ground(inst, side);
      if (!n) throw InputError("system = needs a power-set ground", sys->line);
      return membership(system_from_words(sys->value, *n, sys->line), side);
    }
  }
  if (sec.raw.empty()) throw InputError("function '" + sec.arg + "' has no rows", sec.line);
  return table_from_rows(inst, side, sec.raw);
}

inline FuncTable<ExtRational> resolve_radial_function(const RadialDescriptor& r, const DocSection& sec) {
  if (parse_side(sec) != Side::delta) throw InputError("radial functions live on the delta side", sec.line);
  if (sec.raw.empty()) throw InputError("function '" + sec.arg + "' has no rows", sec.line);
  const auto names = Instance<MultiplicativeCodomain>::from_rule(MultiplicativeCodomain{}, r.names(), r.names(),
                                                                 [](std::size_t, std::size_t) { return ExtRational(0); });
  return table_from_rows(names, Side::delta, sec.raw);
}

inline Subgraph resolve_topos_function(const ToposModel& m, const DocSection& sec) {
  const auto side = parse_side(sec);
  return subgraph_from_section(side == Side::delta ? m.g1 : m.g2, sec);
}

/// Names of `which` resolved to indices; throws with the entry's line.
template <Codomain C>
Subset resolve_subset(const Instance<C>& inst, Side side, const DocEntry& e) {
  Subset out;
  for (const auto& w : io::split_words(e.value)) {
    out.push_back(detail::rethrow_at(e.line, [&] { return inst.index_of(side, w); }));
  }
  if (out.empty()) throw InputError("'" + e.key + "' selects nothing", e.line);
  return out;
}

}  // namespace convexoid
