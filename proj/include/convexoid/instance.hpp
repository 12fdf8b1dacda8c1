#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexoid/codomain.hpp"
#include "convexoid/error.hpp"

namespace convexoid {

enum class Side { delta, lambda };

inline constexpr Side opposite(Side s) { return s == Side::delta ? Side::lambda : Side::delta; }
inline const char* to_string(Side s) { return s == Side::delta ? "delta" : "lambda"; }

/// Positions into a ground set.
using Subset = std::vector<std::size_t>;

/// A total map from one ground set into the codomain, stored densely in
/// declaration order.
template <class V>
struct FuncTable {
  Side side = Side::delta;
  std::vector<V> values;

  std::size_t size() const { return values.size(); }
  const V& operator[](std::size_t i) const { return values[i]; }
  V& operator[](std::size_t i) { return values[i]; }

  friend bool operator==(const FuncTable&, const FuncTable&) = default;
};

/// Two finite ground sets, a codomain, and a dense coupling table phi[a][b].
/// A concavoid is an Instance over Dual<C>; see make_concavoid.
template <Codomain C>
class Instance {
 public:
  using codomain_type = C;
  using value_type = typename C::value_type;
  using table_type = FuncTable<value_type>;

  Instance(C codomain, std::vector<std::string> delta, std::vector<std::string> lambda,
           std::vector<value_type> phi)
      : cod_(std::move(codomain)), names_{std::move(delta), std::move(lambda)}, phi_(std::move(phi)) {
    if (phi_.size() != names_[0].size() * names_[1].size()) {
      throw Error("coupling table has " + std::to_string(phi_.size()) + " entries, expected " +
                  std::to_string(names_[0].size() * names_[1].size()));
    }
    index_side(0);
    index_side(1);
  }

  /// Materializes phi from a rule evaluated on positions (a, b).
  template <class Rule>
  static Instance from_rule(C codomain, std::vector<std::string> delta, std::vector<std::string> lambda,
                            Rule&& rule) {
    std::vector<value_type> phi;
    phi.reserve(delta.size() * lambda.size());
    for (std::size_t a = 0; a < delta.size(); ++a) {
      for (std::size_t b = 0; b < lambda.size(); ++b) phi.push_back(rule(a, b));
    }
    return Instance(std::move(codomain), std::move(delta), std::move(lambda), std::move(phi));
  }

  const C& codomain() const { return cod_; }

  std::size_t delta_size() const { return names_[0].size(); }
  std::size_t lambda_size() const { return names_[1].size(); }
  std::size_t size(Side s) const { return names(s).size(); }

  const std::vector<std::string>& names(Side s) const { return names_[s == Side::delta ? 0 : 1]; }
  const std::string& name(Side s, std::size_t i) const { return names(s).at(i); }

  std::size_t index_of(Side s, std::string_view name) const {
    const auto& m = index_[s == Side::delta ? 0 : 1];
    auto it = m.find(std::string(name));
    if (it == m.end()) throw InputError("no " + std::string(to_string(s)) + " element named '" + std::string(name) + "'");
    return it->second;
  }

  const value_type& phi(std::size_t a, std::size_t b) const { return phi_[a * lambda_size() + b]; }
  const std::vector<value_type>& phi_table() const { return phi_; }

  /// phi seen from `source`: phi(src, dst) when source is delta, phi(dst, src) otherwise.
  const value_type& coupling(Side source, std::size_t src, std::size_t dst) const {
    return source == Side::delta ? phi(src, dst) : phi(dst, src);
  }

  table_type constant(Side s, const value_type& v) const { return table_type{s, std::vector<value_type>(size(s), v)}; }

  Subset all(Side s) const {
    Subset out(size(s));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  /// The same ground sets and coupling with phi read as Lambda x Delta.
  Instance transposed() const {
    std::vector<value_type> t;
    t.reserve(phi_.size());
    for (std::size_t b = 0; b < lambda_size(); ++b) {
      for (std::size_t a = 0; a < delta_size(); ++a) t.push_back(phi(a, b));
    }
    return Instance(cod_, names_[1], names_[0], std::move(t));
  }

 private:
  void index_side(int k) {
    for (std::size_t i = 0; i < names_[k].size(); ++i) {
      if (!index_[k].emplace(names_[k][i], i).second) {
        throw Error("duplicate " + std::string(k == 0 ? "delta" : "lambda") + " element '" + names_[k][i] + "'");
      }
    }
  }

  C cod_;
  std::vector<std::string> names_[2];
  std::map<std::string, std::size_t> index_[2];
  std::vector<value_type> phi_;
};

/// Reads the same tables as a concavoid: the codomain order is flipped.
template <Codomain C>
Instance<Dual<C>> make_concavoid(const Instance<C>& inst) {
  return Instance<Dual<C>>(Dual<C>(inst.codomain()), inst.names(Side::delta), inst.names(Side::lambda),
                           inst.phi_table());
}

template <Codomain C>
void check_side(const Instance<C>& inst, const FuncTable<typename C::value_type>& f, Side expected) {
  if (f.side != expected) {
    throw Error(std::string("function lives on ") + to_string(f.side) + ", expected " + to_string(expected));
  }
  if (f.size() != inst.size(expected)) {
    throw Error("function table has " + std::to_string(f.size()) + " entries, ground set has " +
                std::to_string(inst.size(expected)));
  }
}

}  // namespace convexoid
