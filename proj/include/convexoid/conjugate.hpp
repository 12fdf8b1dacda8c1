#pragma once

#include <set>
#include <string>
#include <vector>

#include "convexoid/codomain.hpp"
#include "convexoid/error.hpp"
#include "convexoid/instance.hpp"

namespace convexoid {

/// f*(y) = sup over x in `over` of f(x) odot phi(x, y), for every y on the
/// opposite side. Works for either side of the instance.
template <Codomain C>
FuncTable<typename C::value_type> conjugate_over(const Instance<C>& inst, const FuncTable<typename C::value_type>& f,
                                                 const Subset& over) {
  check_side(inst, f, f.side);
  const auto& c = inst.codomain();
  const Side out_side = opposite(f.side);
  FuncTable<typename C::value_type> out{out_side, {}};
  out.values.reserve(inst.size(out_side));
  for (std::size_t y = 0; y < inst.size(out_side); ++y) {
    auto acc = c.bottom();
    for (std::size_t x : over) acc = c.join(acc, c.odot(f[x], inst.coupling(f.side, x, y)));
    out.values.push_back(acc);
  }
  return out;
}

template <Codomain C>
FuncTable<typename C::value_type> conjugate(const Instance<C>& inst, const FuncTable<typename C::value_type>& f) {
  check_side(inst, f, f.side);
  return conjugate_over(inst, f, inst.all(f.side));
}

template <Codomain C>
FuncTable<typename C::value_type> double_conjugate(const Instance<C>& inst,
                                                   const FuncTable<typename C::value_type>& f) {
  return conjugate(inst, conjugate(inst, f));
}

/// f* == f*** exactly.
template <Codomain C>
bool triple_conjugate_check(const Instance<C>& inst, const FuncTable<typename C::value_type>& f) {
  const auto fs = conjugate(inst, f);
  return fs == conjugate(inst, conjugate(inst, fs));
}

template <Codomain C>
bool pointwise_leq(const C& c, const FuncTable<typename C::value_type>& f, const FuncTable<typename C::value_type>& g) {
  if (f.side != g.side || f.size() != g.size()) throw Error("pointwise comparison of incompatible tables");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!c.leq(f[i], g[i])) return false;
  }
  return true;
}

/// {y | f*(y) = f(x) odot phi(x, y)}: the subdifferential with exact equality.
template <Codomain C>
Subset subdifferential(const Instance<C>& inst, const FuncTable<typename C::value_type>& f, std::size_t x) {
  if (x >= inst.size(f.side)) throw Error("subdifferential point out of range");
  const auto fs = conjugate(inst, f);
  const auto& c = inst.codomain();
  Subset out;
  for (std::size_t y = 0; y < fs.size(); ++y) {
    if (fs[y] == c.odot(f[x], inst.coupling(f.side, x, y))) out.push_back(y);
  }
  return out;
}

/// {y | f(x) oplus f*(y) = phi(x, y)}: the variant where Fenchel-Young is tight.
template <Codomain C>
Subset classic_subdifferential(const Instance<C>& inst, const FuncTable<typename C::value_type>& f, std::size_t x) {
  if (x >= inst.size(f.side)) throw Error("subdifferential point out of range");
  const auto fs = conjugate(inst, f);
  const auto& c = inst.codomain();
  Subset out;
  for (std::size_t y = 0; y < fs.size(); ++y) {
    if (c.oplus(f[x], fs[y]) == inst.coupling(f.side, x, y)) out.push_back(y);
  }
  return out;
}

/// h(x) = g(y) odot phi(x, y) on the side opposite to g.
template <Codomain C>
FuncTable<typename C::value_type> affine_function(const Instance<C>& inst, const FuncTable<typename C::value_type>& g,
                                                  std::size_t y) {
  check_side(inst, g, g.side);
  if (y >= g.size()) throw Error("affine index out of range");
  const auto& c = inst.codomain();
  const Side out_side = opposite(g.side);
  FuncTable<typename C::value_type> h{out_side, {}};
  for (std::size_t x = 0; x < inst.size(out_side); ++x) h.values.push_back(c.odot(g[y], inst.coupling(g.side, y, x)));
  return h;
}

template <Codomain C>
bool is_convex(const Instance<C>& inst, const FuncTable<typename C::value_type>& f) {
  return f == double_conjugate(inst, f);
}

/// f(x) oplus g(y) >= phi(x, y) for all pairs, f and g on opposite sides.
template <Codomain C>
bool fenchel_young_check(const Instance<C>& inst, const FuncTable<typename C::value_type>& f,
                         const FuncTable<typename C::value_type>& g) {
  if (f.side == g.side) throw Error("Fenchel-Young pair must live on opposite sides");
  check_side(inst, f, f.side);
  check_side(inst, g, g.side);
  const auto& c = inst.codomain();
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (!c.leq(inst.coupling(f.side, x, y), c.oplus(f[x], g[y]))) return false;
    }
  }
  return true;
}

template <Codomain C>
std::string table_key(const C& c, const FuncTable<typename C::value_type>& f) {
  std::string key;
  for (const auto& v : f.values) {
    key += c.format(v);
    key += '\x1f';
  }
  return key;
}

/// Distinct affine functions h_{g,y} over every g in gs and every y, in first-seen order.
template <Codomain C>
std::vector<FuncTable<typename C::value_type>> enumerate_affine(
    const Instance<C>& inst, const std::vector<FuncTable<typename C::value_type>>& gs) {
  std::vector<FuncTable<typename C::value_type>> out;
  std::set<std::string> seen;
  for (const auto& g : gs) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      auto h = affine_function(inst, g, y);
      if (seen.insert(table_key(inst.codomain(), h)).second) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace convexoid
