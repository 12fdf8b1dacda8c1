#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convexoid/codomain.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/error.hpp"
#include "convexoid/instance.hpp"

namespace convexoid {

/// Raised when a rectangle is not a (pointwise-)constant subdomain. `witness`
/// names the offending element pair.
class SubdomainError : public Error {
 public:
  SubdomainError(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class PartialEquilibriumError : public Error {
 public:
  PartialEquilibriumError(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

enum class Certificate { none, minimax, well_guided_convex, minimum_constant };

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::minimax: return "minimax";
    case Certificate::well_guided_convex: return "well-guided+convex";
    case Certificate::minimum_constant: return "minimum-constant";
    default: return "none";
  }
}

template <class V>
struct DualityReport {
  std::string kind;
  V zP{};
  V zD{};
  bool weak_ok = false;
  bool strong_ok = false;  // zP == zD
  Certificate certificate = Certificate::none;
  bool coincidental = false;  // equal values with no certificate
  bool convex = false;
  std::optional<bool> well_penalized;
  std::optional<bool> well_guided;
  std::optional<std::pair<V, V>> minimax;  // (inf sup, sup inf)
  std::vector<std::string> witnesses;

  bool minimax_equal() const { return minimax && minimax->first == minimax->second; }
  // A fired certificate with unequal values would contradict a theorem.
  bool consistent() const { return weak_ok && (certificate == Certificate::none || strong_ok); }
};

// ---------------------------------------------------------------------------
// Type-I systems
// ---------------------------------------------------------------------------

template <Codomain C>
struct TypeISystem {
  Instance<C> inst;
  Subset delta_bar;
  Subset lambda_bar;
  typename C::value_type alpha;
};

namespace detail {

inline void require_nonempty(const Subset& s, const char* what) {
  if (s.empty()) throw Error(std::string(what) + " must be nonempty");
}

template <Codomain C>
void require_in_range(const Instance<C>& inst, Side side, const Subset& s) {
  for (auto i : s) {
    if (i >= inst.size(side)) throw Error("subdomain index out of range");
  }
}

}  // namespace detail

/// The constant value of phi on delta_bar x lambda_bar, if there is one.
template <Codomain C>
std::optional<typename C::value_type> detect_constant_subdomain(const Instance<C>& inst, const Subset& delta_bar,
                                                                const Subset& lambda_bar) {
  detail::require_nonempty(delta_bar, "delta_bar");
  detail::require_nonempty(lambda_bar, "lambda_bar");
  detail::require_in_range(inst, Side::delta, delta_bar);
  detail::require_in_range(inst, Side::lambda, lambda_bar);
  const auto first = inst.phi(delta_bar.front(), lambda_bar.front());
  for (auto a : delta_bar) {
    for (auto b : lambda_bar) {
      if (!(inst.phi(a, b) == first)) return std::nullopt;
    }
  }
  return first;
}

template <Codomain C>
TypeISystem<C> make_type1_system(Instance<C> inst, Subset delta_bar, Subset lambda_bar) {
  auto alpha = detect_constant_subdomain(inst, delta_bar, lambda_bar);
  if (!alpha) {
    const auto a0 = delta_bar.front();
    const auto b0 = lambda_bar.front();
    for (auto a : delta_bar) {
      for (auto b : lambda_bar) {
        if (!(inst.phi(a, b) == inst.phi(a0, b0))) {
          const auto& c = inst.codomain();
          throw SubdomainError("coupling is not constant on the subdomain",
                               "phi(" + inst.name(Side::delta, a0) + ", " + inst.name(Side::lambda, b0) +
                                   ") = " + c.format(inst.phi(a0, b0)) + " but phi(" + inst.name(Side::delta, a) +
                                   ", " + inst.name(Side::lambda, b) + ") = " + c.format(inst.phi(a, b)));
        }
      }
    }
  }
  return TypeISystem<C>{std::move(inst), std::move(delta_bar), std::move(lambda_bar), *alpha};
}

namespace detail {

inline std::vector<bool> membership(std::size_t n, const Subset& s) {
  std::vector<bool> in(n, false);
  for (auto i : s) in[i] = true;
  return in;
}

}  // namespace detail

/// Lambda elements outside lambda_bar where inf over delta_bar of phi is not bottom.
template <Codomain C>
Subset well_penalized_violations(const TypeISystem<C>& sys) {
  const auto& c = sys.inst.codomain();
  const auto in_bar = detail::membership(sys.inst.lambda_size(), sys.lambda_bar);
  Subset out;
  for (std::size_t b = 0; b < sys.inst.lambda_size(); ++b) {
    if (in_bar[b]) continue;
    auto acc = c.top();
    for (auto a : sys.delta_bar) acc = c.meet(acc, sys.inst.phi(a, b));
    if (!(acc == c.bottom())) out.push_back(b);
  }
  return out;
}

template <Codomain C>
bool is_well_penalized(const TypeISystem<C>& sys) {
  return well_penalized_violations(sys).empty();
}

/// (inf_{a in delta_bar} sup_{b in Lambda}, sup_{b in Lambda} inf_{a in delta_bar}) of f*(b) odot phi(a, b).
template <Codomain C>
std::pair<typename C::value_type, typename C::value_type> minimax_gap(const TypeISystem<C>& sys,
                                                                      const FuncTable<typename C::value_type>& f) {
  check_side(sys.inst, f, Side::delta);
  const auto& c = sys.inst.codomain();
  const auto fs = conjugate(sys.inst, f);
  auto inner = [&](std::size_t a, std::size_t b) { return c.odot(fs[b], sys.inst.phi(a, b)); };
  auto inf_sup = c.top();
  for (auto a : sys.delta_bar) {
    auto s = c.bottom();
    for (std::size_t b = 0; b < sys.inst.lambda_size(); ++b) s = c.join(s, inner(a, b));
    inf_sup = c.meet(inf_sup, s);
  }
  auto sup_inf = c.bottom();
  for (std::size_t b = 0; b < sys.inst.lambda_size(); ++b) {
    auto s = c.top();
    for (auto a : sys.delta_bar) s = c.meet(s, inner(a, b));
    sup_inf = c.join(sup_inf, s);
  }
  return {inf_sup, sup_inf};
}

template <Codomain C>
typename C::value_type type1_primal(const TypeISystem<C>& sys, const FuncTable<typename C::value_type>& f) {
  const auto& c = sys.inst.codomain();
  auto acc = c.top();
  for (auto a : sys.delta_bar) acc = c.meet(acc, f[a]);
  return acc;
}

template <Codomain C>
typename C::value_type type1_dual(const TypeISystem<C>& sys, const FuncTable<typename C::value_type>& fs) {
  const auto& c = sys.inst.codomain();
  auto acc = c.bottom();
  for (auto b : sys.lambda_bar) acc = c.join(acc, c.odot(fs[b], sys.alpha));
  return acc;
}

template <Codomain C>
DualityReport<typename C::value_type> type1_values(const TypeISystem<C>& sys,
                                                   const FuncTable<typename C::value_type>& f) {
  check_side(sys.inst, f, Side::delta);
  const auto& c = sys.inst.codomain();
  const auto fs = conjugate(sys.inst, f);
  DualityReport<typename C::value_type> r;
  r.kind = "type1";
  r.zP = type1_primal(sys, f);
  r.zD = type1_dual(sys, fs);
  r.weak_ok = c.leq(r.zD, r.zP);
  r.strong_ok = r.zP == r.zD;
  r.convex = f == conjugate(sys.inst, fs);
  const auto violations = well_penalized_violations(sys);
  r.well_penalized = violations.empty();
  if (!violations.empty()) r.witnesses.push_back("not well-penalized at " + sys.inst.name(Side::lambda, violations.front()));
  r.minimax = minimax_gap(sys, f);
  if (!r.minimax_equal()) {
    r.witnesses.push_back("minimax gap: " + c.format(r.minimax->first) + " vs " + c.format(r.minimax->second));
  }
  if (r.convex && *r.well_penalized && r.minimax_equal()) r.certificate = Certificate::minimax;
  r.coincidental = r.strong_ok && r.certificate == Certificate::none;
  return r;
}

/// zD == inf over delta_bar of (f*)* restricted to lambda_bar.
template <Codomain C>
bool zdval_check(const TypeISystem<C>& sys, const FuncTable<typename C::value_type>& f) {
  check_side(sys.inst, f, Side::delta);
  const auto& c = sys.inst.codomain();
  const auto fs = conjugate(sys.inst, f);
  const auto restricted = conjugate_over(sys.inst, fs, sys.lambda_bar);
  auto acc = c.top();
  for (auto a : sys.delta_bar) acc = c.meet(acc, restricted[a]);
  return acc == type1_dual(sys, fs);
}

// ---------------------------------------------------------------------------
// Type-II systems
// ---------------------------------------------------------------------------

template <Codomain C>
struct TypeIISystem {
  Instance<C> inst;
  Subset delta_bar;
  Subset lambda_bar;
  typename C::value_type alpha;
};

template <Codomain C>
typename C::value_type column_sup(const Instance<C>& inst, const Subset& delta_bar, std::size_t b) {
  const auto& c = inst.codomain();
  auto acc = c.bottom();
  for (auto a : delta_bar) acc = c.join(acc, inst.phi(a, b));
  return acc;
}

template <Codomain C>
TypeIISystem<C> make_type2_system(Instance<C> inst, Subset delta_bar, Subset lambda_bar) {
  detail::require_nonempty(delta_bar, "delta_bar");
  detail::require_nonempty(lambda_bar, "lambda_bar");
  detail::require_in_range(inst, Side::delta, delta_bar);
  detail::require_in_range(inst, Side::lambda, lambda_bar);
  const auto& c = inst.codomain();
  auto alpha = c.bottom();
  for (auto b : lambda_bar) alpha = c.join(alpha, column_sup(inst, delta_bar, b));
  for (auto b : lambda_bar) {
    const auto s = column_sup(inst, delta_bar, b);
    if (!(s == alpha)) {
      throw SubdomainError("subdomain is not pointwise-constant",
                           "sup over delta_bar of phi(., " + inst.name(Side::lambda, b) + ") = " + c.format(s) +
                               " but alpha = " + c.format(alpha));
    }
  }
  return TypeIISystem<C>{std::move(inst), std::move(delta_bar), std::move(lambda_bar), alpha};
}

template <Codomain C>
Subset well_guided_violations(const TypeIISystem<C>& sys) {
  const auto& c = sys.inst.codomain();
  const auto in_bar = detail::membership(sys.inst.lambda_size(), sys.lambda_bar);
  Subset out;
  for (std::size_t b = 0; b < sys.inst.lambda_size(); ++b) {
    if (!in_bar[b] && !(column_sup(sys.inst, sys.delta_bar, b) == c.bottom())) out.push_back(b);
  }
  return out;
}

template <Codomain C>
bool is_well_guided(const TypeIISystem<C>& sys) {
  return well_guided_violations(sys).empty();
}

template <class V>
struct TypeIIDualForms {
  V sup_form;
  V inf_form;
};

template <Codomain C>
TypeIIDualForms<typename C::value_type> type2_dual_forms(const TypeIISystem<C>& sys,
                                                         const FuncTable<typename C::value_type>& fs) {
  const auto& c = sys.inst.codomain();
  auto sup_form = c.bottom();
  auto inf_fs = c.top();
  for (auto b : sys.lambda_bar) {
    sup_form = c.join(sup_form, c.odot(fs[b], sys.alpha));
    inf_fs = c.meet(inf_fs, fs[b]);
  }
  return {sup_form, c.odot(inf_fs, sys.alpha)};
}

template <Codomain C>
DualityReport<typename C::value_type> type2_values(const TypeIISystem<C>& sys,
                                                   const FuncTable<typename C::value_type>& f) {
  check_side(sys.inst, f, Side::delta);
  const auto& c = sys.inst.codomain();
  const auto fs = conjugate(sys.inst, f);
  DualityReport<typename C::value_type> r;
  r.kind = "type2";
  r.zP = c.bottom();
  for (auto a : sys.delta_bar) r.zP = c.join(r.zP, f[a]);
  const auto forms = type2_dual_forms(sys, fs);
  if (!(forms.sup_form == forms.inf_form)) {
    throw std::logic_error("type-II dual forms disagree: " + c.format(forms.sup_form) + " vs " +
                           c.format(forms.inf_form));
  }
  r.zD = forms.sup_form;
  r.weak_ok = c.leq(r.zD, r.zP);
  r.strong_ok = r.zP == r.zD;
  r.convex = f == conjugate(sys.inst, fs);
  const auto violations = well_guided_violations(sys);
  r.well_guided = violations.empty();
  if (!violations.empty()) r.witnesses.push_back("not well-guided at " + sys.inst.name(Side::lambda, violations.front()));
  if (r.convex && *r.well_guided) r.certificate = Certificate::well_guided_convex;
  r.coincidental = r.strong_ok && r.certificate == Certificate::none;
  return r;
}

// ---------------------------------------------------------------------------
// Theorem of the alternatives
// ---------------------------------------------------------------------------

template <class V>
struct AlternativesResult {
  V zP;             // primal value
  V dual_system;    // engine inf over lambda_bar of f*: whether the dual system is nonempty
  V zD;             // formal dual value
  bool holds = false;
};

/// For a Type-I system whose constant alpha is the codomain's extreme element
/// opposite to bottom (the minimum of the natural order in a concavoid),
/// weak duality forces oplus(zP, s) == alpha where s is the dual system's
/// value. For the Boolean concavoid this says one of the two systems is empty.
template <Codomain C>
AlternativesResult<typename C::value_type> alternatives_check(const TypeISystem<C>& sys,
                                                              const FuncTable<typename C::value_type>& f) {
  const auto& c = sys.inst.codomain();
  if (!(sys.alpha == c.top())) {
    throw Error("alternatives check needs alpha to be the extreme element " + c.format(c.top()));
  }
  const auto fs = conjugate(sys.inst, f);
  AlternativesResult<typename C::value_type> r{type1_primal(sys, f), c.top(), type1_dual(sys, fs)};
  for (auto b : sys.lambda_bar) r.dual_system = c.meet(r.dual_system, fs[b]);
  r.holds = c.oplus(r.zP, r.dual_system) == sys.alpha;
  return r;
}

// ---------------------------------------------------------------------------
// Conjugate duality systems
// ---------------------------------------------------------------------------

/// Row-major pairing of two factor ground sets: index = i1 * n2 + i2.
struct ProductLayout {
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  std::size_t size() const { return n1 * n2; }
  std::size_t index(std::size_t i1, std::size_t i2) const { return i1 * n2 + i2; }
  std::size_t first(std::size_t i) const { return i / n2; }
  std::size_t second(std::size_t i) const { return i % n2; }
};

struct ProductStructure {
  std::vector<std::string> delta1, delta2, lambda1, lambda2;

  ProductLayout delta() const { return {delta1.size(), delta2.size()}; }
  ProductLayout lambda() const { return {lambda1.size(), lambda2.size()}; }
};

template <Codomain C>
struct ConjugateDualitySystem {
  ProductStructure product;
  std::size_t zero2 = 0;  // position in delta2
  std::size_t zero1 = 0;  // position in lambda1
  Instance<C> sub1;       // (delta1, lambda1, phi1)
  Instance<C> sub2;       // (delta2, lambda2, phi2)
  typename C::value_type alpha;
  TypeISystem<C> type1;   // delta1 x {0_2} against {0_1} x lambda2
};

template <Codomain C>
ConjugateDualitySystem<C> build_conjugate_duality(const Instance<C>& inst, const ProductStructure& prod,
                                                  std::size_t zero2, std::size_t zero1) {
  const auto dl = prod.delta();
  const auto ll = prod.lambda();
  if (dl.size() != inst.delta_size() || ll.size() != inst.lambda_size()) {
    throw Error("product structure does not match the instance ground sets");
  }
  if (zero2 >= dl.n2 || zero1 >= ll.n1) throw Error("basepoint out of range");
  const auto& c = inst.codomain();
  auto phi = [&](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) -> const auto& {
    return inst.phi(dl.index(a1, a2), ll.index(b1, b2));
  };
  auto tuple = [&](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    return "(" + prod.delta1[a1] + ", " + prod.delta2[a2] + ", " + prod.lambda1[b1] + ", " + prod.lambda2[b2] +
           ") -> " + c.format(phi(a1, a2, b1, b2));
  };

  for (std::size_t a1 = 0; a1 < dl.n1; ++a1) {
    for (std::size_t b1 = 0; b1 < ll.n1; ++b1) {
      for (std::size_t b2 = 1; b2 < ll.n2; ++b2) {
        if (!(phi(a1, zero2, b1, b2) == phi(a1, zero2, b1, 0))) {
          throw PartialEquilibriumError("phi(a1, 0_2, b1, .) depends on b2",
                                        tuple(a1, zero2, b1, 0) + " vs " + tuple(a1, zero2, b1, b2));
        }
      }
    }
  }
  for (std::size_t a2 = 0; a2 < dl.n2; ++a2) {
    for (std::size_t b2 = 0; b2 < ll.n2; ++b2) {
      for (std::size_t a1 = 1; a1 < dl.n1; ++a1) {
        if (!(phi(a1, a2, zero1, b2) == phi(0, a2, zero1, b2))) {
          throw PartialEquilibriumError("phi(., a2, 0_1, b2) depends on a1",
                                        tuple(0, a2, zero1, b2) + " vs " + tuple(a1, a2, zero1, b2));
        }
      }
    }
  }
  auto sub1 = Instance<C>::from_rule(c, prod.delta1, prod.lambda1,
                                     [&](std::size_t a1, std::size_t b1) { return phi(a1, zero2, b1, 0); });
  auto sub2 = Instance<C>::from_rule(c, prod.delta2, prod.lambda2,
                                     [&](std::size_t a2, std::size_t b2) { return phi(0, a2, zero1, b2); });
  Subset delta_bar, lambda_bar;
  for (std::size_t a1 = 0; a1 < dl.n1; ++a1) delta_bar.push_back(dl.index(a1, zero2));
  for (std::size_t b2 = 0; b2 < ll.n2; ++b2) lambda_bar.push_back(ll.index(zero1, b2));
  auto type1 = make_type1_system(inst, std::move(delta_bar), std::move(lambda_bar));
  auto alpha = type1.alpha;
  return ConjugateDualitySystem<C>{prod, zero2, zero1, std::move(sub1), std::move(sub2), alpha, std::move(type1)};
}

/// h(a2) = inf over a1 of f(a1, a2), on the delta side of sub2.
template <Codomain C>
FuncTable<typename C::value_type> value_function(const ConjugateDualitySystem<C>& sys,
                                                 const FuncTable<typename C::value_type>& f) {
  check_side(sys.type1.inst, f, Side::delta);
  const auto& c = sys.type1.inst.codomain();
  const auto dl = sys.product.delta();
  FuncTable<typename C::value_type> h{Side::delta, std::vector<typename C::value_type>(dl.n2, c.top())};
  for (std::size_t a1 = 0; a1 < dl.n1; ++a1) {
    for (std::size_t a2 = 0; a2 < dl.n2; ++a2) h[a2] = c.meet(h[a2], f[dl.index(a1, a2)]);
  }
  return h;
}

template <class V>
struct ExtDualResult {
  V zP, zD, h_zero, hss_zero;
  bool primal_ok = false;
  bool dual_ok = false;
  bool ok() const { return primal_ok && dual_ok; }
};

/// zP == h(0_2) and zD == h**(0_2), with h** taken in the (delta2, lambda2, phi2) sub-instance.
template <Codomain C>
ExtDualResult<typename C::value_type> ext_dual_check(const ConjugateDualitySystem<C>& sys,
                                                     const FuncTable<typename C::value_type>& f) {
  const auto h = value_function(sys, f);
  const auto hss = double_conjugate(sys.sub2, h);
  const auto fs = conjugate(sys.type1.inst, f);
  ExtDualResult<typename C::value_type> r{type1_primal(sys.type1, f), type1_dual(sys.type1, fs), h[sys.zero2],
                                          hss[sys.zero2]};
  r.primal_ok = r.zP == r.h_zero;
  r.dual_ok = r.zD == r.hss_zero;
  return r;
}

}  // namespace convexoid
