#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexoid/codomains.hpp"
#include "convexoid/error.hpp"

namespace convexoid {

struct GraphEdge {
  std::string name;
  std::size_t src = 0;
  std::size_t dst = 0;
};

/// Directed multigraph. Vertex and edge names live in separate name spaces.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
        if (vertices_[i] == vertices_[j]) throw Error("duplicate vertex '" + vertices_[i] + "'");
      }
    }
  }

  std::size_t add_edge(std::string name, std::size_t src, std::size_t dst) {
    if (src >= vertices_.size() || dst >= vertices_.size()) throw Error("edge '" + name + "' has a missing endpoint");
    for (const auto& e : edges_) {
      if (e.name == name) throw Error("duplicate edge '" + name + "'");
    }
    for (const auto& v : vertices_) {
      if (v == name) throw Error("edge '" + name + "' reuses a vertex name");
    }
    edges_.push_back({std::move(name), src, dst});
    return edges_.size() - 1;
  }
  std::size_t add_edge(std::string name, std::string_view src, std::string_view dst) {
    return add_edge(std::move(name), vertex(src), vertex(dst));
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(std::size_t i) const { return edges_.at(i); }

  std::size_t vertex(std::string_view name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == name) return i;
    }
    throw InputError("no vertex named '" + std::string(name) + "'");
  }
  std::size_t edge_index(std::string_view name) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].name == name) return i;
    }
    throw InputError("no edge named '" + std::string(name) + "'");
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto &x = a.edges_[i], &y = b.edges_[i];
      if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
};

using GraphPtr = std::shared_ptr<const DiGraph>;

inline GraphPtr share(DiGraph g) { return std::make_shared<const DiGraph>(std::move(g)); }

/// G_v: one vertex, no edges.
inline GraphPtr vertex_graph() { return share(DiGraph({"x"})); }

/// G_e: u -e-> v.
inline GraphPtr edge_graph() {
  DiGraph g({"u", "v"});
  g.add_edge("e", 0, 1);
  return share(std::move(g));
}

struct GraphMorphism {
  GraphPtr source;
  GraphPtr target;
  std::vector<std::size_t> vmap;
  std::vector<std::size_t> emap;

  /// Maps are total and in range, and every edge square commutes.
  bool valid() const {
    if (!source || !target) return false;
    if (vmap.size() != source->vertex_count() || emap.size() != source->edge_count()) return false;
    for (auto v : vmap) {
      if (v >= target->vertex_count()) return false;
    }
    for (std::size_t e = 0; e < emap.size(); ++e) {
      if (emap[e] >= target->edge_count()) return false;
      const auto& se = source->edge(e);
      const auto& te = target->edge(emap[e]);
      if (vmap[se.src] != te.src || vmap[se.dst] != te.dst) return false;
    }
    return true;
  }

  friend bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
    return a.vmap == b.vmap && a.emap == b.emap;
  }
};

inline GraphMorphism identity(const GraphPtr& g) {
  GraphMorphism m{g, g, {}, {}};
  for (std::size_t v = 0; v < g->vertex_count(); ++v) m.vmap.push_back(v);
  for (std::size_t e = 0; e < g->edge_count(); ++e) m.emap.push_back(e);
  return m;
}

/// g after f.
inline GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
  if (f.target.get() != g.source.get() && !(f.target && g.source && *f.target == *g.source)) {
    throw Error("morphisms are not composable");
  }
  GraphMorphism h{f.source, g.target, {}, {}};
  for (auto v : f.vmap) h.vmap.push_back(g.vmap.at(v));
  for (auto e : f.emap) h.emap.push_back(g.emap.at(e));
  return h;
}

/// All morphisms source -> target by backtracking over vertex images; edge
/// images are then chosen independently among the matching parallel edges.
inline std::vector<GraphMorphism> enumerate_morphisms(const GraphPtr& source, const GraphPtr& target) {
  std::vector<GraphMorphism> out;
  const auto nv = source->vertex_count();
  const auto ne = source->edge_count();
  std::vector<std::size_t> vmap(nv, 0);
  std::vector<std::size_t> emap(ne, 0);
  std::vector<std::vector<std::size_t>> choices(ne);

  std::function<void(std::size_t)> pick_edges = [&](std::size_t e) {
    if (e == ne) {
      out.push_back({source, target, vmap, emap});
      return;
    }
    for (auto c : choices[e]) {
      emap[e] = c;
      pick_edges(e + 1);
    }
  };
  std::function<void(std::size_t)> pick_vertices = [&](std::size_t v) {
    if (v == nv) {
      for (std::size_t e = 0; e < ne; ++e) {
        choices[e].clear();
        const auto& se = source->edge(e);
        for (std::size_t t = 0; t < target->edge_count(); ++t) {
          const auto& te = target->edge(t);
          if (te.src == vmap[se.src] && te.dst == vmap[se.dst]) choices[e].push_back(t);
        }
        if (choices[e].empty()) return;
      }
      pick_edges(0);
      return;
    }
    for (std::size_t t = 0; t < target->vertex_count(); ++t) {
      vmap[v] = t;
      pick_vertices(v + 1);
    }
  };
  pick_vertices(0);
  return out;
}

// ---------------------------------------------------------------------------
// Subgraphs and the classifier
// ---------------------------------------------------------------------------

struct Subgraph {
  GraphPtr host;
  std::vector<bool> vertices;
  std::vector<bool> edges;

  static Subgraph empty(const GraphPtr& g) {
    return {g, std::vector<bool>(g->vertex_count(), false), std::vector<bool>(g->edge_count(), false)};
  }
  static Subgraph full(const GraphPtr& g) {
    return {g, std::vector<bool>(g->vertex_count(), true), std::vector<bool>(g->edge_count(), true)};
  }

  /// Sizes match the host and every selected edge has both endpoints selected.
  bool valid() const {
    if (!host || vertices.size() != host->vertex_count() || edges.size() != host->edge_count()) return false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e] && (!vertices[host->edge(e).src] || !vertices[host->edge(e).dst])) return false;
    }
    return true;
  }
  bool subset_of(const Subgraph& o) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] && !o.vertices.at(i)) return false;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] && !o.edges.at(i)) return false;
    }
    return true;
  }
  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
  }
};

/// "{u,v,e}": selected vertex names then selected edge names.
inline std::string format_subgraph(const Subgraph& s) {
  std::string out = "{";
  bool first = true;
  auto put = [&](const std::string& n) {
    if (!first) out += ",";
    out += n;
    first = false;
  };
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    if (s.vertices[v]) put(s.host->vertices()[v]);
  }
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e]) put(s.host->edge(e).name);
  }
  return out + "}";
}

/// Builds a subgraph from vertex and edge names; throws InputError if it is not closed.
inline Subgraph make_subgraph(const GraphPtr& g, const std::vector<std::string>& vertices,
                              const std::vector<std::string>& edges) {
  auto s = Subgraph::empty(g);
  for (const auto& v : vertices) s.vertices[g->vertex(v)] = true;
  for (const auto& e : edges) s.edges[g->edge_index(e)] = true;
  if (!s.valid()) throw InputError("subgraph " + format_subgraph(s) + " selects an edge without its endpoints");
  return s;
}

/// Every subgraph of g; vertex bitsets vary slowest, edges restricted to the closure.
inline std::vector<Subgraph> enumerate_subgraphs(const GraphPtr& g) {
  if (g->vertex_count() > 16 || g->edge_count() > 16) throw Error("graph too large to enumerate subgraphs");
  std::vector<Subgraph> out;
  const std::size_t nv = g->vertex_count(), ne = g->edge_count();
  for (std::uint32_t vm = 0; vm < (1U << nv); ++vm) {
    std::vector<std::size_t> allowed;
    for (std::size_t e = 0; e < ne; ++e) {
      if (((vm >> g->edge(e).src) & 1U) && ((vm >> g->edge(e).dst) & 1U)) allowed.push_back(e);
    }
    for (std::uint32_t em = 0; em < (1U << allowed.size()); ++em) {
      auto s = Subgraph::empty(g);
      for (std::size_t v = 0; v < nv; ++v) s.vertices[v] = (vm >> v) & 1U;
      for (std::size_t k = 0; k < allowed.size(); ++k) s.edges[allowed[k]] = (em >> k) & 1U;
      out.push_back(std::move(s));
    }
  }
  return out;
}

enum class OmegaVertex : std::size_t { in = 0, out = 1 };

/// Omega arcs are indexed 0..4 by the pattern (src in, dst in, edge in).
struct OmegaArc {
  bool src_in;
  bool dst_in;
  bool edge_in;
  const char* truth;  // loop truth value, empty for the two non-loop arcs
};

inline const std::vector<OmegaArc>& omega_arcs() {
  static const std::vector<OmegaArc> arcs = {
      {false, false, false, "0"}, {true, false, false, ""}, {false, true, false, ""},
      {true, true, false, "delta"}, {true, true, true, "1"}};
  return arcs;
}

inline GraphPtr omega_graph() {
  static const GraphPtr g = [] {
    DiGraph o({"in", "out"});
    for (const auto& a : omega_arcs()) {
      const std::string name = std::string("p") + (a.src_in ? "1" : "0") + (a.dst_in ? "1" : "0") + (a.edge_in ? "1" : "0");
      o.add_edge(name, a.src_in ? 0 : 1, a.dst_in ? 0 : 1);
    }
    return share(std::move(o));
  }();
  return g;
}

inline std::size_t omega_arc(bool src_in, bool dst_in, bool edge_in) {
  const auto& arcs = omega_arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].src_in == src_in && arcs[i].dst_in == dst_in && arcs[i].edge_in == edge_in) return i;
  }
  throw Error("edge selected without both endpoints");
}

/// Characteristic morphism host -> Omega of a subgraph.
inline GraphMorphism classify(const Subgraph& h) {
  if (!h.valid()) throw Error("cannot classify an invalid subgraph");
  const auto& g = *h.host;
  GraphMorphism m{h.host, omega_graph(), {}, {}};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    m.vmap.push_back(static_cast<std::size_t>(h.vertices[v] ? OmegaVertex::in : OmegaVertex::out));
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    m.emap.push_back(omega_arc(h.vertices[g.edge(e).src], h.vertices[g.edge(e).dst], h.edges[e]));
  }
  return m;
}

/// Pullback of the 1-arc (and the in vertex) along a morphism into Omega.
inline Subgraph unclassify(const GraphMorphism& m) {
  if (!m.valid() || !(*m.target == *omega_graph())) throw Error("not a morphism into Omega");
  auto s = Subgraph::empty(m.source);
  for (std::size_t v = 0; v < m.vmap.size(); ++v) s.vertices[v] = m.vmap[v] == static_cast<std::size_t>(OmegaVertex::in);
  for (std::size_t e = 0; e < m.emap.size(); ++e) s.edges[e] = omega_arcs()[m.emap[e]].edge_in;
  return s;
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

struct ProductGraph {
  GraphPtr graph;
  GraphMorphism pi1;
  GraphMorphism pi2;
  GraphPtr left;
  GraphPtr right;

  std::size_t vertex(std::size_t v1, std::size_t v2) const { return v1 * right->vertex_count() + v2; }
  std::size_t edge(std::size_t e1, std::size_t e2) const { return e1 * right->edge_count() + e2; }
};

/// V1 x V2 and E1 x E2 with componentwise endpoints, names "(a,b)".
inline ProductGraph product_graph(const GraphPtr& g1, const GraphPtr& g2) {
  std::vector<std::string> names;
  for (const auto& a : g1->vertices()) {
    for (const auto& b : g2->vertices()) names.push_back("(" + a + "," + b + ")");
  }
  DiGraph p(std::move(names));
  const auto n2 = g2->vertex_count();
  for (const auto& e1 : g1->edges()) {
    for (const auto& e2 : g2->edges()) {
      p.add_edge("(" + e1.name + "," + e2.name + ")", e1.src * n2 + e2.src, e1.dst * n2 + e2.dst);
    }
  }
  auto pg = share(std::move(p));
  ProductGraph out{pg, {pg, g1, {}, {}}, {pg, g2, {}, {}}, g1, g2};
  for (std::size_t v = 0; v < pg->vertex_count(); ++v) {
    out.pi1.vmap.push_back(v / n2);
    out.pi2.vmap.push_back(v % n2);
  }
  const auto m2 = g2->edge_count();
  for (std::size_t e = 0; e < pg->edge_count(); ++e) {
    out.pi1.emap.push_back(e / m2);
    out.pi2.emap.push_back(e % m2);
  }
  return out;
}

/// The pairing <f, g>: G0 -> G1 x G2.
inline GraphMorphism factorize(const ProductGraph& p, const GraphMorphism& f, const GraphMorphism& g) {
  if (!(*f.source == *g.source)) throw Error("factorize needs morphisms with a common source");
  if (!(*f.target == *p.left) || !(*g.target == *p.right)) throw Error("factorize targets do not match the product");
  GraphMorphism h{f.source, p.graph, {}, {}};
  for (std::size_t v = 0; v < f.vmap.size(); ++v) h.vmap.push_back(p.vertex(f.vmap[v], g.vmap[v]));
  for (std::size_t e = 0; e < f.emap.size(); ++e) h.emap.push_back(p.edge(f.emap[e], g.emap[e]));
  return h;
}

struct UniversalPropertyReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string witness;
  bool ok() const { return failures == 0; }
};

/// For every pair (f, g) out of G0: factorize commutes and is the only
/// morphism into the product with those projections.
inline UniversalPropertyReport check_universal_property(const GraphPtr& g0, const GraphPtr& g1, const GraphPtr& g2) {
  const auto p = product_graph(g1, g2);
  const auto fs = enumerate_morphisms(g0, g1);
  const auto gs = enumerate_morphisms(g0, g2);
  const auto hs = enumerate_morphisms(g0, p.graph);
  UniversalPropertyReport r;
  auto fail = [&](const std::string& why) {
    if (r.failures++ == 0) r.witness = why;
  };
  // Every h must be counted exactly once over all pairs.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hits;
  for (const auto& h : hs) {
    const auto a = compose(p.pi1, h), b = compose(p.pi2, h);
    std::optional<std::size_t> fi, gi;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i] == a) fi = i;
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (gs[i] == b) gi = i;
    }
    if (!fi || !gi) {
      fail("projection of a product morphism is not a morphism");
      continue;
    }
    ++hits[{*fi, *gi}];
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < gs.size(); ++j) {
      ++r.pairs;
      const auto h = factorize(p, fs[i], gs[j]);
      if (!h.valid()) fail("pairing is not a morphism");
      else if (!(compose(p.pi1, h) == fs[i]) || !(compose(p.pi2, h) == gs[j])) fail("pairing does not commute");
      const auto it = hits.find({i, j});
      if (it == hits.end() || it->second != 1) fail("factorization is not unique");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subobject lattices
// ---------------------------------------------------------------------------

struct SubobjectLattice {
  std::vector<Subgraph> subgraphs;
  std::shared_ptr<const FiniteLattice> lattice;

  Node node_of(const Subgraph& s) const {
    for (std::size_t i = 0; i < subgraphs.size(); ++i) {
      if (subgraphs[i] == s) return Node{static_cast<std::uint16_t>(i)};
    }
    throw Error("subgraph not in lattice");
  }
  const Subgraph& subgraph(Node n) const { return subgraphs.at(n.id); }
};

inline SubobjectLattice subobject_lattice(const GraphPtr& g) {
  SubobjectLattice out;
  out.subgraphs = enumerate_subgraphs(g);
  std::vector<std::string> names;
  for (const auto& s : out.subgraphs) names.push_back(format_subgraph(s));
  out.lattice = std::make_shared<const FiniteLattice>(FiniteLattice::from_order(
      std::move(names), [&](std::size_t i, std::size_t j) { return out.subgraphs[i].subset_of(out.subgraphs[j]); }));
  return out;
}

// ---------------------------------------------------------------------------
// Topos conjugate
// ---------------------------------------------------------------------------

/// sieve: vertex and edge probes are combined through the endpoint
/// inclusions, which always assembles into a subgraph.
/// same_shape: each probe takes its infimum over same-shape probes only;
/// an incoherent assembly is reported, not repaired.
enum class ProbeMode { sieve, same_shape };

inline const char* to_string(ProbeMode m) { return m == ProbeMode::sieve ? "sieve" : "same-shape"; }

struct ProbeValue {
  std::string probe;  // "vertex w" or "edge e"
  std::string value;  // element of the probe's subobject lattice
};

struct ToposConjugateResult {
  Subgraph value;
  std::vector<ProbeValue> probes;
  bool coherent = true;
  std::vector<std::string> incoherent;  // edges whose endpoint bits disagree with the vertex probes
};

namespace detail {

struct ProbeLattices {
  SubobjectLattice vertex = subobject_lattice(vertex_graph());
  SubobjectLattice edge = subobject_lattice(edge_graph());

  Node vertex_value(bool in) const {
    auto s = Subgraph::empty(vertex.subgraphs.front().host);
    s.vertices[0] = in;
    return vertex.node_of(s);
  }
  Node edge_value(bool s_in, bool t_in, bool e_in) const {
    auto s = Subgraph::empty(edge.subgraphs.front().host);
    s.vertices = {s_in, t_in};
    s.edges = {e_in};
    return edge.node_of(s);
  }
};

inline const ProbeLattices& probe_lattices() {
  static const ProbeLattices p;
  return p;
}

}  // namespace detail

/// f*(b) = inf over probes a of f(a) => phi(a, b), for probes b of G2.
inline ToposConjugateResult topos_conjugate(const GraphPtr& g1, const GraphPtr& g2, const Subgraph& phi, const Subgraph& f,
                                            ProbeMode mode = ProbeMode::sieve) {
  const auto prod = product_graph(g1, g2);
  if (!phi.valid() || !(*phi.host == *prod.graph)) throw Error("phi must be a subgraph of the product graph");
  if (!f.valid() || !(*f.host == *g1)) throw Error("f must be a subgraph of the first graph");
  const auto& pl = detail::probe_lattices();
  const auto& lv = *pl.vertex.lattice;
  const auto& le = *pl.edge.lattice;

  ToposConjugateResult r{Subgraph::empty(g2), {}, true, {}};
  for (std::size_t w = 0; w < g2->vertex_count(); ++w) {
    Node acc = lv.top();
    for (std::size_t v = 0; v < g1->vertex_count(); ++v) {
      acc = lv.meet(acc, lv.implication(pl.vertex_value(f.vertices[v]), pl.vertex_value(phi.vertices[prod.vertex(v, w)])));
    }
    r.value.vertices[w] = pl.vertex.subgraph(acc).vertices[0];
    r.probes.push_back({"vertex " + g2->vertices()[w], lv.name(acc)});
  }
  for (std::size_t b = 0; b < g2->edge_count(); ++b) {
    const auto& eb = g2->edge(b);
    Node acc = le.top();
    for (std::size_t a = 0; a < g1->edge_count(); ++a) {
      const auto& ea = g1->edge(a);
      const auto fa = pl.edge_value(f.vertices[ea.src], f.vertices[ea.dst], f.edges[a]);
      const auto pab = pl.edge_value(phi.vertices[prod.vertex(ea.src, eb.src)], phi.vertices[prod.vertex(ea.dst, eb.dst)],
                                     phi.edges[prod.edge(a, b)]);
      acc = le.meet(acc, le.implication(fa, pab));
    }
    if (mode == ProbeMode::sieve) {
      // Largest element of L_e whose endpoints lie inside the vertex verdicts.
      const bool s = r.value.vertices[eb.src], t = r.value.vertices[eb.dst];
      acc = le.meet(acc, pl.edge_value(s, t, s && t));
    }
    const auto& sg = pl.edge.subgraph(acc);
    r.value.edges[b] = sg.edges[0];
    r.probes.push_back({"edge " + eb.name, le.name(acc)});
    if (sg.vertices[0] != r.value.vertices[eb.src] || sg.vertices[1] != r.value.vertices[eb.dst]) {
      r.coherent = false;
      r.incoherent.push_back(eb.name);
    }
  }
  if (!r.value.valid()) r.coherent = false;
  return r;
}

/// phi transported to G2 x G1 by swapping coordinates.
inline Subgraph swap_coupling(const GraphPtr& g1, const GraphPtr& g2, const Subgraph& phi) {
  const auto p12 = product_graph(g1, g2);
  const auto p21 = product_graph(g2, g1);
  auto out = Subgraph::empty(p21.graph);
  for (std::size_t v1 = 0; v1 < g1->vertex_count(); ++v1) {
    for (std::size_t v2 = 0; v2 < g2->vertex_count(); ++v2) out.vertices[p21.vertex(v2, v1)] = phi.vertices[p12.vertex(v1, v2)];
  }
  for (std::size_t e1 = 0; e1 < g1->edge_count(); ++e1) {
    for (std::size_t e2 = 0; e2 < g2->edge_count(); ++e2) out.edges[p21.edge(e2, e1)] = phi.edges[p12.edge(e1, e2)];
  }
  return out;
}

struct ToposDoubleReport {
  Subgraph f_star;
  Subgraph f_double;
  bool contains = false;       // f** contains f
  bool triple_equal = false;   // f*** == f*
  bool fixed_point = false;    // f == f**, i.e. f is the conjugate of f*
  bool coherent = true;
  bool ok() const { return contains && triple_equal && coherent; }
};

inline ToposDoubleReport topos_double_check(const GraphPtr& g1, const GraphPtr& g2, const Subgraph& phi, const Subgraph& f,
                                            ProbeMode mode = ProbeMode::sieve) {
  const auto back = swap_coupling(g1, g2, phi);
  const auto s1 = topos_conjugate(g1, g2, phi, f, mode);
  const auto s2 = topos_conjugate(g2, g1, back, s1.value, mode);
  const auto s3 = topos_conjugate(g1, g2, phi, s2.value, mode);
  ToposDoubleReport r{s1.value, s2.value};
  r.contains = f.subset_of(s2.value);
  r.triple_equal = s3.value == s1.value;
  r.fixed_point = f == s2.value;
  r.coherent = s1.coherent && s2.coherent && s3.coherent;
  return r;
}

}  // namespace convexoid
