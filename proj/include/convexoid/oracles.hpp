#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "convexoid/codomain.hpp"
#include "convexoid/codomains.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/instance.hpp"

namespace convexoid {

// ---------------------------------------------------------------------------
// Value pools for randomized tables
// ---------------------------------------------------------------------------

inline std::vector<ExtRational> value_pool(const ClassicCodomain&) {
  std::vector<ExtRational> out{ExtRational::neg_inf()};
  for (int k = -3; k <= 3; ++k) out.emplace_back(k);
  out.push_back(ExtRational::pos_inf());
  return out;
}

inline std::vector<ExtRational> value_pool(const MaxLatticeCodomain&) { return value_pool(ClassicCodomain{}); }

inline std::vector<ExtRational> value_pool(const MultiplicativeCodomain&) {
  return {ExtRational(0), ExtRational(1, 2), ExtRational(1), ExtRational(2), ExtRational(3), ExtRational::pos_inf()};
}

template <Codomain C>
  requires(!std::same_as<typename C::value_type, ExtRational>)
std::vector<typename C::value_type> value_pool(const C& c) {
  return c.sample();
}

template <Codomain C>
std::vector<typename C::value_type> value_pool(const Dual<C>& c) {
  return value_pool(c.base());
}

template <Codomain C>
FuncTable<typename C::value_type> random_table(const Instance<C>& inst, Side side, std::mt19937_64& rng) {
  const auto pool = value_pool(inst.codomain());
  FuncTable<typename C::value_type> f{side, {}};
  for (std::size_t i = 0; i < inst.size(side); ++i) f.values.push_back(pool[rng() % pool.size()]);
  return f;
}

// ---------------------------------------------------------------------------
// Direct-definition envelope
// ---------------------------------------------------------------------------

/// Pointwise sup of every affine minorant gamma odot phi(., b) of f, found by
/// testing the minorant inequality directly. Candidate gammas are the values
/// f(a') odot phi(a', b), the pool and top; on a finite carrier every element.
template <Codomain C>
FuncTable<typename C::value_type> envelope_oracle(const Instance<C>& inst, const FuncTable<typename C::value_type>& f) {
  using V = typename C::value_type;
  check_side(inst, f, f.side);
  const auto& c = inst.codomain();
  const Side other = opposite(f.side);
  FuncTable<V> env = inst.constant(f.side, c.bottom());
  for (std::size_t b = 0; b < inst.size(other); ++b) {
    std::vector<V> gammas;
    if (c.is_finite_carrier()) {
      gammas = c.sample();
    } else {
      gammas = value_pool(c);
      gammas.push_back(c.top());
      gammas.push_back(c.bottom());
      for (std::size_t a = 0; a < f.size(); ++a) gammas.push_back(c.odot(f[a], inst.coupling(f.side, a, b)));
    }
    for (const auto& g : gammas) {
      bool minorant = true;
      for (std::size_t a = 0; a < f.size() && minorant; ++a) minorant = c.leq(c.odot(g, inst.coupling(f.side, a, b)), f[a]);
      if (!minorant) continue;
      for (std::size_t a = 0; a < f.size(); ++a) env[a] = c.join(env[a], c.odot(g, inst.coupling(f.side, a, b)));
    }
  }
  return env;
}

}  // namespace convexoid
