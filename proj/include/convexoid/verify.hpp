#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexoid/catalog.hpp"
#include "convexoid/codomain_laws.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/duality.hpp"
#include "convexoid/oracles.hpp"
#include "convexoid/report.hpp"

namespace convexoid {

struct SuiteResult {
  SuiteResult(int c, std::string t) : criterion(c), title(std::move(t)) {}

  int criterion = 0;
  std::string title;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses;  // the first few failures
  std::vector<std::pair<std::string, std::string>> tallies;

  static constexpr std::size_t kMaxWitnesses = 5;

  bool ok() const { return failed == 0 && checked > 0; }

  template <class W>
  void record(bool pass, W&& witness) {
    ++checked;
    if (pass) return;
    if (failed++ < kMaxWitnesses) witnesses.push_back(witness());
  }
  void tally(std::string key, std::string value) { tallies.emplace_back(std::move(key), std::move(value)); }
  void tally(std::string key, std::size_t value) { tally(std::move(key), std::to_string(value)); }
};

namespace detail {

/// Independent stream per (criterion, instance) so suites do not perturb each other.
inline std::mt19937_64 suite_rng(std::uint64_t seed, int criterion, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

template <Codomain C>
std::string format_table(const Instance<C>& inst, const FuncTable<typename C::value_type>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += inst.name(f.side, i) + ":" + inst.codomain().format(f[i]);
  }
  return out + "}";
}

/// Calls fn(gallery_instance, index) for every catalog entry backed by a fixed Instance.
template <class Fn>
void for_each_instance_model(Fn&& fn) {
  std::size_t index = 0;
  for (const auto& entry : catalog()) {
    const auto model = entry.build();
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (!std::is_same_v<T, RadialModel> && !std::is_same_v<T, ToposModel>) fn(m, index);
        },
        model);
    ++index;
  }
}

template <Codomain C>
void add_law_report(SuiteResult& s, const CodomainReport& r) {
  std::size_t checked = 0;
  for (const auto& p : r.properties) {
    checked += p.checked;
    s.checked += p.checked;
    s.failed += p.failed;
    if (!p.ok() && s.witnesses.size() < SuiteResult::kMaxWitnesses) s.witnesses.push_back(r.codomain + " " + p.name + " at " + p.witness);
  }
  s.tally(r.codomain, std::to_string(r.properties.size()) + " laws, " + std::to_string(checked) + " checks");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Codomain laws
// ---------------------------------------------------------------------------

inline SuiteResult verify_codomain_laws() {
  SuiteResult s{1, "codomain laws on the six shipped carriers"};
  detail::add_law_report<ClassicCodomain>(s, verify_codomain(ClassicCodomain{}));
  detail::add_law_report<MultiplicativeCodomain>(s, verify_codomain(MultiplicativeCodomain{}));
  detail::add_law_report<MaxLatticeCodomain>(s, verify_codomain(MaxLatticeCodomain{}));
  detail::add_law_report<BoolConcavoid>(s, verify_codomain(boolean_concavoid()));
  detail::add_law_report<ChainConcavoid>(s, verify_codomain(dualize(HeytingChainCodomain(3))));
  const LatticeCodomain edge(subobject_lattice(edge_graph()).lattice);
  detail::add_law_report<Dual<LatticeCodomain>>(s, verify_codomain(dualize(edge)));
  return s;
}

// ---------------------------------------------------------------------------
// 2. Conjugation theorems
// ---------------------------------------------------------------------------

inline constexpr int kConjugationSamples = 200;

inline SuiteResult verify_conjugation(std::uint64_t seed) {
  SuiteResult s{2, "f** below f, f* = f***, antitone conjugation"};
  std::size_t instances = 0;
  detail::for_each_instance_model([&](const auto& g, std::size_t index) {
    auto rng = detail::suite_rng(seed, 2, index);
    const auto& c = g.inst.codomain();
    for (int i = 0; i < kConjugationSamples; ++i) {
      const Side side = i % 2 ? Side::lambda : Side::delta;
      const auto f = random_table(g.inst, side, rng);
      const auto fs = conjugate(g.inst, f);
      const auto fss = conjugate(g.inst, fs);
      auto where = [&] { return g.name + " f=" + detail::format_table(g.inst, f); };
      s.record(pointwise_leq(c, fss, f), where);
      s.record(fs == conjugate(g.inst, fss), where);
      // f1 = f meet h lies below f, so its conjugate lies above.
      auto f1 = f;
      const auto h = random_table(g.inst, side, rng);
      for (std::size_t k = 0; k < f1.size(); ++k) f1[k] = c.meet(f[k], h[k]);
      s.record(pointwise_leq(c, fs, conjugate(g.inst, f1)), where);
    }
    ++instances;
  });
  s.tally("instances", instances);
  s.tally("functions per instance", static_cast<std::size_t>(kConjugationSamples));
  return s;
}

// ---------------------------------------------------------------------------
// 3. Double-conjugate fixed points against the direct-definition envelope
// ---------------------------------------------------------------------------

inline constexpr int kFixedPointSamples = 100;
inline constexpr int kNonConvexTarget = 50;
inline constexpr int kNonConvexAttempts = 4000;

inline SuiteResult verify_fixed_points(std::uint64_t seed) {
  SuiteResult s{3, "f = f** exactly on conjugates; non-convex f detected against the envelope oracle"};
  std::size_t instances = 0, nonconvex_total = 0;
  detail::for_each_instance_model([&](const auto& g, std::size_t index) {
    auto rng = detail::suite_rng(seed, 3, index);
    for (int i = 0; i < kFixedPointSamples; ++i) {
      const auto f = conjugate(g.inst, random_table(g.inst, Side::lambda, rng));
      s.record(is_convex(g.inst, f), [&] { return g.name + " conjugate not fixed: " + detail::format_table(g.inst, f); });
    }
    int found = 0;
    for (int i = 0; i < kNonConvexAttempts && found < kNonConvexTarget; ++i) {
      const auto f = random_table(g.inst, Side::delta, rng);
      const auto env = envelope_oracle(g.inst, f);
      const auto fss = double_conjugate(g.inst, f);
      if (env == f) {
        s.record(fss == f, [&] { return g.name + " convex f rejected: " + detail::format_table(g.inst, f); });
        continue;
      }
      ++found;
      s.record(!(fss == f) && fss == env, [&] { return g.name + " misclassified: " + detail::format_table(g.inst, f); });
    }
    s.record(found >= kNonConvexTarget,
             [&] { return g.name + ": only " + std::to_string(found) + " non-convex functions in " + std::to_string(kNonConvexAttempts) + " draws"; });
    nonconvex_total += static_cast<std::size_t>(found);
    ++instances;
  });
  s.tally("instances", instances);
  s.tally("conjugates per instance", static_cast<std::size_t>(kFixedPointSamples));
  s.tally("non-convex functions", nonconvex_total);
  return s;
}

// ---------------------------------------------------------------------------
// 4. Set-system sweep
// ---------------------------------------------------------------------------

inline SuiteResult verify_set_systems() {
  SuiteResult s{4, "C(C(Pi)) against the upper-closure oracle; subgradient characterization"};
  const int n = 3;
  const auto inst = concavoid_from_coupling(n, SetCoupling::intersect());
  std::size_t upper = 0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << (1u << n)); ++k) {
    const auto pi = SetSystem::from_index(n, k);
    const auto cc = system_of(double_conjugate(inst, membership(pi)), n);
    auto where = [&] { return "Pi=" + format_system(pi) + " C(C(Pi))=" + format_system(cc); };
    s.record(cc == upper_closure_oracle(pi), where);
    if (is_upper(pi)) {
      ++upper;
      s.record(cc == pi, where);
    }
  }
  s.tally("systems", std::size_t{256});
  s.tally("superset-closed systems", upper);
  const auto sub = subgradient_characterization_check(2);
  s.checked += sub.checked;
  s.failed += sub.failed;
  if (!sub.ok()) s.witnesses.push_back("subgradient " + sub.witness);
  s.tally("subgradient pairs at |U| = 2", sub.checked);
  return s;
}

// ---------------------------------------------------------------------------
// 5. Theorem of the alternatives
// ---------------------------------------------------------------------------

inline SuiteResult verify_alternatives() {
  SuiteResult s{5, "zP and the dual system never both hold at |U u U'| = 3"};
  // Every split of {1,2,3} into nonempty U and U'.
  std::size_t splits = 0;
  for (Mask mu = 1; mu < 7; ++mu) {
    std::vector<int> u, v;
    for (int x = 1; x <= 3; ++x) ((mu >> (x - 1)) & 1 ? u : v).push_back(x);
    const auto sys = alternatives_instance(u, v);
    ++splits;
    for (std::uint64_t k = 0; k < 256; ++k) {
      const auto pi = SetSystem::from_index(3, k);
      const auto r = alternatives_check(sys, membership(pi));
      s.record(r.holds, [&] { return "U=" + format_subset(mu) + " Pi=" + format_system(pi); });
    }
  }
  s.tally("splits", splits);
  s.tally("membership functions per split", std::size_t{256});
  return s;
}

// ---------------------------------------------------------------------------
// 6. Radial equivalence
// ---------------------------------------------------------------------------

inline constexpr int kRadialSamples = 100;

inline SuiteResult verify_radial(std::uint64_t seed) {
  SuiteResult s{6, "radial conjugate against the Gamma oracle; Type-II strong duality on star-convex f"};
  const auto r = gallery::radial_2ray();
  auto rng = detail::suite_rng(seed, 6, 0);
  const std::vector<ExtRational> pool{ExtRational(1, 2), ExtRational(1), ExtRational(2), ExtRational(3), ExtRational(4)};
  const MultiplicativeCodomain c;
  std::size_t star = 0;
  for (int i = 0; i < 2 * kRadialSamples; ++i) {
    FuncTable<ExtRational> f{Side::delta, {}};
    for (std::size_t k = 0; k < r.size(); ++k) f.values.push_back(pool[rng() % pool.size()]);
    // The second half are conjugates, which are star-convex.
    if (i >= kRadialSamples) {
      f = r.radial_conjugate(f);
      f.side = Side::delta;
    }
    const auto fs = r.radial_conjugate(f);
    const auto oracle = gamma_oracle(r, f);
    auto show = [&] {
      std::string out = "f={";
      for (std::size_t k = 0; k < f.size(); ++k) out += (k ? ", " : "") + r.names()[k] + ":" + to_string(f[k]);
      return out + "}";
    };
    for (std::size_t b = 0; b < fs.size(); ++b) s.record(fs[b] == oracle[b], show);
    if (!r.is_star_convex(f)) continue;
    ++star;
    const auto sys = r.type2_system(f);
    const auto rep = type2_values(sys, f);
    auto sup = c.bottom();
    for (const auto& v : f.values) sup = c.join(sup, v);
    s.record(rep.weak_ok && sup == rep.zD, show);
  }
  s.tally("ray grid", std::to_string(r.spec().directions.size()) + " directions x " + std::to_string(r.spec().magnitudes.size()) + " magnitudes");
  s.tally("functions", static_cast<std::size_t>(2 * kRadialSamples));
  s.tally("star-convex functions", star);
  s.record(star > 0, [] { return std::string("no star-convex function was drawn"); });
  return s;
}

// ---------------------------------------------------------------------------
// 7. Type-I machinery
// ---------------------------------------------------------------------------

inline constexpr int kZdvalSamples = 50;

inline SuiteResult verify_type1(std::uint64_t seed) {
  SuiteResult s{7, "zD identity, |x+u| perturbation, norm sphere"};
  std::size_t systems = 0;
  detail::for_each_instance_model([&](const auto& g, std::size_t index) {
    if (!g.type1) return;
    auto rng = detail::suite_rng(seed, 7, index);
    const auto sys = make_type1_system(g.inst, g.type1->first, g.type1->second);
    for (int i = 0; i < kZdvalSamples; ++i) {
      const auto f = random_table(g.inst, Side::delta, rng);
      s.record(zdval_check(sys, f), [&] { return g.name + " zdval f=" + detail::format_table(g.inst, f); });
    }
    ++systems;
  });
  s.tally("Type-I systems", systems);

  const auto g = gallery::classic_product();
  const auto sys = make_type1_system(g.inst, g.type1->first, g.type1->second);
  FuncTable<ExtRational> f{Side::delta, {}};
  for (const auto& p : g.delta_points) f.values.push_back(abs(add_upper(p[0], p[1])));
  const auto r = type1_values(sys, f);
  const ExtRational zero(0);
  auto abs_witness = [&] { return "|x+u|: zP=" + to_string(r.zP) + " zD=" + to_string(r.zD); };
  s.record(r.zP == zero && r.zD == zero, abs_witness);
  s.record(r.minimax_equal() && r.minimax->first == zero, abs_witness);
  s.record(r.well_penalized.value_or(false), abs_witness);
  s.record(r.certificate == Certificate::minimax, abs_witness);

  const auto n = gallery::norm_l1();
  const auto nsys = make_type1_system(n.inst, n.type1->first, n.type1->second);
  s.record(!is_well_penalized(nsys), [] { return std::string("norm sphere reported well-penalized"); });
  auto rng = detail::suite_rng(seed, 7, 1000);
  for (int i = 0; i < kZdvalSamples; ++i) {
    const auto nf = random_table(n.inst, Side::delta, rng);
    const auto nr = type1_values(nsys, nf);
    s.record(nr.weak_ok && nr.certificate == Certificate::none,
             [&] { return "norm sphere certified f=" + detail::format_table(n.inst, nf); });
  }
  return s;
}

// ---------------------------------------------------------------------------
// 8. Conjugate-duality lemma
// ---------------------------------------------------------------------------

inline constexpr int kProductSamples = 100;

inline SuiteResult verify_product_duality(std::uint64_t seed) {
  SuiteResult s{8, "zP = h(0) and zD = h**(0) on product instances"};
  std::size_t instances = 0;
  detail::for_each_instance_model([&](const auto& g, std::size_t index) {
    if (!g.product) return;
    auto rng = detail::suite_rng(seed, 8, index);
    const auto sys = build_conjugate_duality(g.inst, g.product->structure, g.product->zero2, g.product->zero1);
    for (int i = 0; i < kProductSamples; ++i) {
      const auto f = random_table(g.inst, Side::delta, rng);
      const auto r = ext_dual_check(sys, f);
      s.record(r.primal_ok, [&] { return g.name + " zP != h(0) f=" + detail::format_table(g.inst, f); });
      s.record(r.dual_ok, [&] { return g.name + " zD != h**(0) f=" + detail::format_table(g.inst, f); });
    }
    ++instances;
  });
  s.tally("product instances", instances);
  return s;
}

// ---------------------------------------------------------------------------
// 9. Lattice threshold dual
// ---------------------------------------------------------------------------

inline constexpr int kThresholdSamples = 100;

inline SuiteResult verify_threshold(std::uint64_t seed) {
  SuiteResult s{9, "max-lattice threshold dual takes beta or -inf"};
  std::size_t certified = 0;
  for (int beta = -2; beta <= 2; ++beta) {
    const ExtRational b(beta);
    const auto g = gallery::lattice_beta(b);
    const auto sys = make_type1_system(g.inst, g.type1->first, g.type1->second);
    auto rng = detail::suite_rng(seed, 9, static_cast<std::size_t>(beta + 2));
    std::size_t here = 0;
    for (int i = 0; i < kThresholdSamples; ++i) {
      auto f = random_table(g.inst, Side::delta, rng);
      if (i % 2) f = conjugate(g.inst, random_table(g.inst, Side::lambda, rng));
      const auto d = gallery::lattice_threshold_dual(g, f, b);
      const auto r = type1_values(sys, f);
      auto where = [&] { return "beta=" + std::to_string(beta) + " d=" + to_string(d) + " f=" + detail::format_table(g.inst, f); };
      s.record(d == b || d == ExtRational::neg_inf(), where);
      s.record(r.zD == d && r.weak_ok, where);
      if (r.certificate == Certificate::minimax) {
        ++here;
        s.record((d == b) == (r.zP >= b), where);
      }
    }
    s.record(here > 0, [&] { return "beta=" + std::to_string(beta) + ": no certified function"; });
    certified += here;
  }
  s.tally("thresholds", std::size_t{5});
  s.tally("functions per threshold", static_cast<std::size_t>(kThresholdSamples));
  s.tally("certified functions", certified);
  return s;
}

// ---------------------------------------------------------------------------
// 10. Graph topos
// ---------------------------------------------------------------------------

namespace detail {

inline GraphPtr make_graph(std::vector<std::string> vs, const std::vector<std::array<std::string, 3>>& es) {
  DiGraph g(std::move(vs));
  for (const auto& [name, src, dst] : es) g.add_edge(name, src, dst);
  return share(std::move(g));
}

/// Factor graphs with at most 3 vertices and 2 edges: loops, parallel and opposed edges.
inline std::vector<GraphPtr> small_factor_graphs() {
  return {vertex_graph(),
          edge_graph(),
          make_graph({"a", "b"}, {}),
          make_graph({"a"}, {{"l", "a", "a"}}),
          make_graph({"a", "b"}, {{"p", "a", "b"}, {"q", "a", "b"}}),
          make_graph({"a", "b"}, {{"p", "a", "b"}, {"q", "b", "a"}}),
          make_graph({"a", "b", "c"}, {{"e", "a", "b"}, {"f", "b", "c"}}),
          make_graph({"a", "b", "c"}, {{"e", "a", "b"}, {"f", "c", "b"}})};
}

inline std::vector<GraphPtr> classifier_graphs() {
  auto out = small_factor_graphs();
  out.push_back(make_graph({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "b", "c"}, {"g", "c", "d"}, {"h", "d", "a"}}));
  out.push_back(make_graph({"a", "b", "c", "d"}, {{"e", "a", "a"}, {"f", "a", "b"}, {"g", "a", "b"}, {"h", "c", "d"}}));
  out.push_back(make_graph({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "a", "c"}, {"g", "a", "d"}, {"h", "b", "c"}}));
  return out;
}

/// Union of every K in G2 with f x K inside phi, by enumeration.
inline Subgraph sieve_oracle(const GraphPtr& g1, const GraphPtr& g2, const Subgraph& phi, const Subgraph& f) {
  const auto p = product_graph(g1, g2);
  auto best = Subgraph::empty(g2);
  for (const auto& k : enumerate_subgraphs(g2)) {
    bool inside = true;
    for (std::size_t v = 0; v < g1->vertex_count() && inside; ++v) {
      for (std::size_t w = 0; w < g2->vertex_count(); ++w) inside = inside && !(f.vertices[v] && k.vertices[w] && !phi.vertices[p.vertex(v, w)]);
    }
    for (std::size_t a = 0; a < g1->edge_count() && inside; ++a) {
      for (std::size_t b = 0; b < g2->edge_count(); ++b) inside = inside && !(f.edges[a] && k.edges[b] && !phi.edges[p.edge(a, b)]);
    }
    if (!inside) continue;
    for (std::size_t w = 0; w < k.vertices.size(); ++w) best.vertices[w] = best.vertices[w] || k.vertices[w];
    for (std::size_t b = 0; b < k.edges.size(); ++b) best.edges[b] = best.edges[b] || k.edges[b];
  }
  return best;
}

}  // namespace detail

inline constexpr int kToposSamples = 200;

inline SuiteResult verify_topos(std::uint64_t seed) {
  SuiteResult s{10, "classifier bijection, product universal property, topos conjugates"};
  std::size_t subobjects = 0;
  for (const auto& g : detail::classifier_graphs()) {
    const auto subs = enumerate_subgraphs(g);
    const auto chars = enumerate_morphisms(g, omega_graph());
    auto shape = [&] { return std::to_string(g->vertex_count()) + "v/" + std::to_string(g->edge_count()) + "e"; };
    s.record(subs.size() == chars.size(), shape);
    for (const auto& h : subs) {
      const auto m = classify(h);
      s.record(m.valid() && unclassify(m) == h, [&] { return shape() + " " + format_subgraph(h); });
    }
    for (const auto& m : chars) s.record(classify(unclassify(m)) == m, shape);
    subobjects += subs.size();
  }
  s.tally("classified subgraphs", subobjects);

  std::size_t pairs = 0;
  const auto factors = detail::small_factor_graphs();
  for (const auto& g0 : factors) {
    for (const auto& g1 : factors) {
      for (const auto& g2 : factors) {
        const auto r = check_universal_property(g0, g1, g2);
        s.checked += r.pairs;
        s.failed += r.failures;
        if (!r.ok() && s.witnesses.size() < SuiteResult::kMaxWitnesses) s.witnesses.push_back("universal property " + r.witness);
        pairs += r.pairs;
      }
    }
  }
  s.tally("morphism pairs", pairs);

  auto double_checks = [&](const GraphPtr& g1, const GraphPtr& g2, const Subgraph& phi, const Subgraph& f) {
    auto where = [&] { return "phi=" + format_subgraph(phi) + " f=" + format_subgraph(f); };
    s.record(topos_conjugate(g1, g2, phi, f).value == detail::sieve_oracle(g1, g2, phi, f), where);
    const auto d = topos_double_check(g1, g2, phi, f);
    s.record(d.contains, where);
    s.record(d.triple_equal && d.coherent, where);
  };
  const auto e = edge_graph();
  const auto ee = product_graph(e, e);
  std::size_t exhaustive = 0;
  for (const auto& phi : enumerate_subgraphs(ee.graph)) {
    for (const auto& f : enumerate_subgraphs(e)) {
      double_checks(e, e, phi, f);
      ++exhaustive;
    }
  }
  s.tally("single-edge (phi, f) pairs", exhaustive);

  const auto g1 = detail::make_graph({"a", "b", "c"}, {{"e", "a", "b"}, {"f", "b", "c"}});
  const auto g2 = detail::make_graph({"x", "y", "z"}, {{"k", "x", "y"}, {"l", "z", "y"}, {"m", "x", "x"}});
  const auto p = product_graph(g1, g2);
  const auto phis = enumerate_subgraphs(p.graph);
  const auto fs = enumerate_subgraphs(g1);
  auto rng = detail::suite_rng(seed, 10, 0);
  for (int i = 0; i < kToposSamples; ++i) double_checks(g1, g2, phis[rng() % phis.size()], fs[rng() % fs.size()]);
  s.tally("sampled 3-vertex pairs", static_cast<std::size_t>(kToposSamples));
  return s;
}

// ---------------------------------------------------------------------------
// Scopes
// ---------------------------------------------------------------------------

inline std::vector<int> scope_criteria(std::string_view scope) {
  if (scope == "codomain") return {1};
  if (scope == "conjugate") return {2, 3, 6};
  if (scope == "structural") return {4, 5};
  if (scope == "duality") return {7, 8, 9};
  if (scope == "topos") return {10};
  if (scope == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw InputError("unknown verify scope '" + std::string(scope) + "' (codomain, conjugate, structural, duality, topos, all)");
}

inline SuiteResult verify_criterion(int criterion, std::uint64_t seed) {
  switch (criterion) {
    case 1: return verify_codomain_laws();
    case 2: return verify_conjugation(seed);
    case 3: return verify_fixed_points(seed);
    case 4: return verify_set_systems();
    case 5: return verify_alternatives();
    case 6: return verify_radial(seed);
    case 7: return verify_type1(seed);
    case 8: return verify_product_duality(seed);
    case 9: return verify_threshold(seed);
    case 10: return verify_topos(seed);
    default: throw Error("no suite for criterion " + std::to_string(criterion));
  }
}

inline void add_suite_block(Report& r, const SuiteResult& s) {
  auto& b = r.add("criterion " + std::to_string(s.criterion));
  b.set("suite", s.title)
      .set("checks", std::to_string(s.checked))
      .set("passed", std::to_string(s.checked - s.failed))
      .set("failed", std::to_string(s.failed))
      .set("result", s.ok() ? "PASS" : "FAIL");
  for (const auto& [k, v] : s.tallies) b.set(k, v);
  b.set_list("witnesses", s.witnesses);
  r.ok = r.ok && s.ok();
}

inline Report cmd_verify(std::string_view scope, std::uint64_t seed) {
  const auto criteria = scope_criteria(scope);
  Report r;
  r.command = "verify " + std::string(scope) + " --seed " + std::to_string(seed);
  r.add("run").set("scope", std::string(scope)).set("seed", std::to_string(seed));
  std::size_t checks = 0, failures = 0, passed_suites = 0;
  for (int c : criteria) {
    const auto s = verify_criterion(c, seed);
    add_suite_block(r, s);
    checks += s.checked;
    failures += s.failed;
    passed_suites += s.ok() ? 1 : 0;
  }
  r.add("summary")
      .set("suites", std::to_string(criteria.size()))
      .set("suites passed", std::to_string(passed_suites))
      .set("checks", std::to_string(checks))
      .set("failed", std::to_string(failures));
  return r;
}

}  // namespace convexoid
