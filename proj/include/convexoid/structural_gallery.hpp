#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "convexoid/codomains.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/duality.hpp"
#include "convexoid/error.hpp"
#include "convexoid/instance.hpp"
#include "convexoid/rational.hpp"

namespace convexoid {

/// A subset of the ground set {1..n}; element i is bit i-1.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;

inline std::string format_subset(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (s & (Mask{1} << i)) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

/// Parses "{1,3}" (or "{}") over the ground set {1..n}.
inline Mask parse_subset(std::string_view text, int n) {
  auto s = detail::trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw InputError("not a subset: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  Mask m = 0;
  while (!detail::trim(s).empty()) {
    const auto comma = s.find(',');
    const auto tok = detail::trim(s.substr(0, comma));
    std::int64_t v = 0;
    try {
      v = detail::parse_int64(tok, text);
    } catch (const std::invalid_argument&) {
      throw InputError("not a subset: '" + std::string(text) + "'");
    }
    if (v < 1 || v > n) throw InputError("element " + std::to_string(v) + " outside ground set of size " + std::to_string(n));
    m |= Mask{1} << (v - 1);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return m;
}

/// Pi within P({1..n}), stored as a membership bit per subset rank.
class SetSystem {
 public:
  explicit SetSystem(int n) : n_(n) {
    if (n < 0 || n > kMaxGround) throw Error("ground set size must be in 0.." + std::to_string(kMaxGround));
    bits_.assign(std::size_t{1} << n, false);
  }
  SetSystem(int n, std::vector<bool> bits) : n_(n), bits_(std::move(bits)) {
    if (n < 0 || n > kMaxGround) throw Error("ground set size must be in 0.." + std::to_string(kMaxGround));
    if (bits_.size() != (std::size_t{1} << n)) throw Error("set system bitset must have 2^n entries");
  }

  static SetSystem power_set(int n) {
    SetSystem s(n);
    s.bits_.assign(s.bits_.size(), true);
    return s;
  }
  static SetSystem of(int n, std::initializer_list<Mask> members) {
    SetSystem s(n);
    for (auto m : members) s.insert(m);
    return s;
  }
  /// The k-th system in rank order: bit S of k says whether S is a member.
  static SetSystem from_index(int n, std::uint64_t k) {
    SetSystem s(n);
    for (std::size_t i = 0; i < s.bits_.size(); ++i) s.bits_[i] = (k >> i) & 1U;
    return s;
  }

  int ground_size() const { return n_; }
  std::size_t universe_size() const { return bits_.size(); }
  Mask full_mask() const { return n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

  bool contains(Mask s) const { return bits_.at(s); }
  void insert(Mask s) { bits_.at(s) = true; }
  void erase(Mask s) { bits_.at(s) = false; }
  const std::vector<bool>& bits() const { return bits_; }

  std::vector<Mask> members() const {
    std::vector<Mask> out;
    for (std::size_t s = 0; s < bits_.size(); ++s) {
      if (bits_[s]) out.push_back(static_cast<Mask>(s));
    }
    return out;
  }
  std::size_t size() const {
    std::size_t k = 0;
    for (bool b : bits_) k += b;
    return k;
  }
  bool subset_of(const SetSystem& o) const {
    for (std::size_t s = 0; s < bits_.size(); ++s) {
      if (bits_[s] && !o.bits_[s]) return false;
    }
    return true;
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int n_;
  std::vector<bool> bits_;
};

inline std::string format_system(const SetSystem& s) {
  std::string out = "[";
  bool first = true;
  for (auto m : s.members()) {
    if (!first) out += " ";
    out += format_subset(m);
    first = false;
  }
  return out + "]";
}

/// Hex encoding of the membership bitset, most significant rank first.
inline std::string to_hex(const SetSystem& s) {
  static const char* digits = "0123456789abcdef";
  const auto& bits = s.bits();
  const std::size_t nibbles = (bits.size() + 3) / 4;
  std::string out;
  for (std::size_t k = nibbles; k-- > 0;) {
    int v = 0;
    for (int j = 3; j >= 0; --j) {
      const auto i = 4 * k + static_cast<std::size_t>(j);
      v = 2 * v + (i < bits.size() && bits[i] ? 1 : 0);
    }
    out += digits[v];
  }
  return out;
}

inline SetSystem from_hex(std::string_view text, int n) {
  SetSystem s(n);
  const auto hex = detail::trim(text);
  const std::size_t nibbles = (s.universe_size() + 3) / 4;
  if (hex.size() != nibbles) throw InputError("hex set system needs " + std::to_string(nibbles) + " digits");
  for (std::size_t k = 0; k < nibbles; ++k) {
    const char ch = hex[nibbles - 1 - k];
    int v = 0;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw InputError("bad hex digit '" + std::string(1, ch) + "'");
    for (int j = 0; j < 4; ++j) {
      const auto i = 4 * k + static_cast<std::size_t>(j);
      if ((v >> j) & 1) {
        if (i >= s.universe_size()) throw InputError("hex set system has bits beyond 2^n");
        s.insert(static_cast<Mask>(i));
      }
    }
  }
  return s;
}

/// C(T) = {S : S meets T}. C(empty) is empty.
inline SetSystem cut_system(int n, Mask t) {
  SetSystem s(n);
  for (std::size_t m = 0; m < s.universe_size(); ++m) {
    if (m & t) s.insert(static_cast<Mask>(m));
  }
  return s;
}

/// C(Pi) = intersection of C(T) over T in Pi; the empty intersection is P(U).
inline SetSystem cut_of_system(const SetSystem& pi) {
  auto out = SetSystem::power_set(pi.ground_size());
  for (auto t : pi.members()) {
    for (std::size_t m = 0; m < out.universe_size(); ++m) {
      if (!(m & t)) out.erase(static_cast<Mask>(m));
    }
  }
  return out;
}

/// Smallest superset-closed system containing Pi.
inline SetSystem upper_closure_oracle(const SetSystem& pi) {
  SetSystem out(pi.ground_size());
  for (auto s : pi.members()) {
    for (std::size_t m = 0; m < out.universe_size(); ++m) {
      if ((m & s) == s) out.insert(static_cast<Mask>(m));
    }
  }
  return out;
}

inline bool is_upper(const SetSystem& pi) {
  const Mask full = pi.full_mask();
  for (auto s : pi.members()) {
    for (int i = 0; i < pi.ground_size(); ++i) {
      const Mask bigger = s | (Mask{1} << i);
      if ((bigger & full) == bigger && !pi.contains(bigger)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Boolean concavoids over power sets
// ---------------------------------------------------------------------------

using BoolConcavoid = Dual<BooleanCodomain>;
using SetInstance = Instance<BoolConcavoid>;

inline std::vector<std::string> power_set_names(int n) {
  std::vector<std::string> out;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) out.push_back(format_subset(static_cast<Mask>(m)));
  return out;
}

struct SetCoupling {
  enum class Kind { intersect, kcut, weight_sum, weight_intersect, custom };
  Kind kind = Kind::intersect;
  int k = 1;
  std::vector<Rational> weights;
  Rational threshold{0};
  std::function<bool(Mask, Mask)> custom;

  static SetCoupling intersect() { return {}; }
  static SetCoupling kcut(int k) { return {Kind::kcut, k, {}, Rational(0), {}}; }
  static SetCoupling weight_sum(std::vector<Rational> w, Rational threshold) {
    return {Kind::weight_sum, 1, std::move(w), threshold, {}};
  }
  static SetCoupling weight_intersect(std::vector<Rational> w, Rational threshold) {
    return {Kind::weight_intersect, 1, std::move(w), threshold, {}};
  }
  static SetCoupling table(std::function<bool(Mask, Mask)> rule) { return {Kind::custom, 1, {}, Rational(0), std::move(rule)}; }
};

inline const char* to_string(SetCoupling::Kind k) {
  switch (k) {
    case SetCoupling::Kind::intersect: return "intersect";
    case SetCoupling::Kind::kcut: return "kcut";
    case SetCoupling::Kind::weight_sum: return "weight-sum";
    case SetCoupling::Kind::weight_intersect: return "weight-intersect";
    default: return "custom";
  }
}

inline Rational set_weight(const std::vector<Rational>& w, Mask s) {
  Rational acc(0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (s & (Mask{1} << i)) acc += w[i];
  }
  return acc;
}

/// Delta = Lambda = P({1..n}) over the Boolean concavoid.
inline SetInstance concavoid_from_coupling(int n, const SetCoupling& c) {
  if (n < 0 || n > 8) throw Error("set-system instances are limited to n <= 8");
  switch (c.kind) {
    case SetCoupling::Kind::kcut:
      if (c.k < 1 || c.k > n) throw Error("k-cut needs 1 <= k <= n");
      break;
    case SetCoupling::Kind::weight_sum:
    case SetCoupling::Kind::weight_intersect:
      if (c.weights.size() != static_cast<std::size_t>(n)) throw Error("weights must cover every ground element");
      break;
    case SetCoupling::Kind::custom:
      if (!c.custom) throw Error("custom coupling needs a rule");
      break;
    default: break;
  }
  auto rule = [&](Mask s, Mask t) -> bool {
    switch (c.kind) {
      case SetCoupling::Kind::intersect: return (s & t) != 0;
      case SetCoupling::Kind::kcut: return std::popcount(s & t) >= c.k;
      case SetCoupling::Kind::weight_sum: return set_weight(c.weights, s) + set_weight(c.weights, t) >= c.threshold;
      case SetCoupling::Kind::weight_intersect: return set_weight(c.weights, s & t) >= c.threshold;
      default: return c.custom(s, t);
    }
  };
  auto names = power_set_names(n);
  return SetInstance::from_rule(BoolConcavoid(BooleanCodomain{}), names, names, [&](std::size_t a, std::size_t b) {
    return Truth{rule(static_cast<Mask>(a), static_cast<Mask>(b))};
  });
}

inline FuncTable<Truth> membership(const SetSystem& pi, Side side = Side::delta) {
  FuncTable<Truth> f{side, {}};
  for (bool b : pi.bits()) f.values.push_back(Truth{b});
  return f;
}

inline SetSystem system_of(const FuncTable<Truth>& f, int n) {
  if (f.size() != (std::size_t{1} << n)) throw Error("membership table does not match 2^n");
  std::vector<bool> bits;
  for (const auto& v : f.values) bits.push_back(v.value);
  return SetSystem(n, std::move(bits));
}

/// The subgradient set described for the intersect coupling: every T missing
/// S, plus C(Pi) when S is in Pi.
inline Subset described_subgradients(const SetSystem& pi, Mask s) {
  const auto cut = cut_of_system(pi);
  Subset out;
  for (std::size_t t = 0; t < pi.universe_size(); ++t) {
    if (!(t & s) || (pi.contains(s) && cut.contains(static_cast<Mask>(t)))) out.push_back(t);
  }
  return out;
}

struct SweepResult {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string witness;
  bool ok() const { return failed == 0; }
  void record(bool pass, const std::string& what) {
    ++checked;
    if (!pass && failed++ == 0) witness = what;
  }
};

/// For every Pi and S over P({1..n}), the engine's tight-Fenchel-Young
/// subdifferential equals described_subgradients(Pi, S).
inline SweepResult subgradient_characterization_check(int n) {
  if (n < 0 || n > 4) throw Error("subgradient sweep needs n <= 4");
  const auto inst = concavoid_from_coupling(n, SetCoupling::intersect());
  const std::uint64_t systems = std::uint64_t{1} << (std::size_t{1} << n);
  SweepResult r;
  for (std::uint64_t k = 0; k < systems; ++k) {
    const auto pi = SetSystem::from_index(n, k);
    const auto f = membership(pi);
    for (std::size_t s = 0; s < pi.universe_size(); ++s) {
      const auto got = classic_subdifferential(inst, f, s);
      r.record(got == described_subgradients(pi, static_cast<Mask>(s)),
               "Pi=" + format_system(pi) + " S=" + format_subset(static_cast<Mask>(s)));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Path variant
// ---------------------------------------------------------------------------

struct UndirectedEdge {
  int u = 0;
  int v = 0;
};

/// Edge sets (bit i = edge i+1) of all simple s-t paths, in discovery order.
inline std::vector<Mask> simple_paths(const std::vector<UndirectedEdge>& edges, int s, int t) {
  std::vector<Mask> out;
  std::vector<int> on_path;
  std::function<void(int, Mask)> walk = [&](int at, Mask used) {
    if (at == t) {
      out.push_back(used);
      return;
    }
    on_path.push_back(at);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      int next = -1;
      if (e.u == at) next = e.v;
      else if (e.v == at) next = e.u;
      if (next < 0 || std::find(on_path.begin(), on_path.end(), next) != on_path.end()) continue;
      walk(next, used | (Mask{1} << i));
    }
    on_path.pop_back();
  };
  walk(s, 0);
  return out;
}

/// Delta = P(E), Lambda = s-t paths as edge sets, phi = [S meets P].
inline SetInstance path_variant_instance(const std::vector<UndirectedEdge>& edges, int s, int t) {
  if (s == t) throw Error("path variant needs distinct endpoints");
  if (edges.empty() || edges.size() > 8) throw Error("path variant needs 1..8 edges");
  const auto paths = simple_paths(edges, s, t);
  if (paths.empty()) throw Error("no path between " + std::to_string(s) + " and " + std::to_string(t));
  const int m = static_cast<int>(edges.size());
  std::vector<std::string> lnames;
  for (auto p : paths) lnames.push_back(format_subset(p));
  return SetInstance::from_rule(BoolConcavoid(BooleanCodomain{}), power_set_names(m), lnames,
                                [&](std::size_t a, std::size_t b) { return Truth{(static_cast<Mask>(a) & paths[b]) != 0}; });
}

// ---------------------------------------------------------------------------
// Heyting chain and alternatives
// ---------------------------------------------------------------------------

using ChainConcavoid = Dual<HeytingChainCodomain>;

inline Instance<ChainConcavoid> heyting_chain_instance(int m, std::vector<std::string> delta, std::vector<std::string> lambda,
                                                       const std::vector<int>& phi,
                                                       OdotStrategy strategy = OdotStrategy::brute_force) {
  for (int v : phi) {
    if (v < 0 || v > m) throw Error("coupling level " + std::to_string(v) + " outside chain 0.." + std::to_string(m));
  }
  std::vector<Level> table;
  for (int v : phi) table.push_back(Level{v});
  return Instance<ChainConcavoid>(ChainConcavoid(HeytingChainCodomain(m, strategy)), std::move(delta), std::move(lambda),
                                  std::move(table));
}

/// Delta = Lambda = P(U u U') with the intersect coupling; Delta-bar = P(U),
/// Lambda-bar = P(U'), alpha = 0. U and U' list ground labels 1..n.
inline TypeISystem<BoolConcavoid> alternatives_instance(const std::vector<int>& u, const std::vector<int>& u_prime) {
  Mask mu = 0, mv = 0;
  int n = 0;
  for (int x : u) {
    if (x < 1 || x > 8) throw Error("ground labels must be in 1..8");
    mu |= Mask{1} << (x - 1);
    n = std::max(n, x);
  }
  for (int x : u_prime) {
    if (x < 1 || x > 8) throw Error("ground labels must be in 1..8");
    mv |= Mask{1} << (x - 1);
    n = std::max(n, x);
  }
  if (mu & mv) throw Error("U and U' overlap in " + format_subset(mu & mv));
  auto inst = concavoid_from_coupling(n, SetCoupling::intersect());
  Subset dbar, lbar;
  for (std::size_t m = 0; m < inst.delta_size(); ++m) {
    if ((m & ~static_cast<std::size_t>(mu)) == 0) dbar.push_back(m);
    if ((m & ~static_cast<std::size_t>(mv)) == 0) lbar.push_back(m);
  }
  return make_type1_system(std::move(inst), std::move(dbar), std::move(lbar));
}

}  // namespace convexoid
