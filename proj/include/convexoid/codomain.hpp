#pragma once

#include <concepts>
#include <ranges>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace convexoid {

/// Verdict of a partial-order comparison a <= b.
enum class LeqResult { holds, fails, incomparable };

/// A convexoid codomain: a complete lattice (Omega, <=) with a commutative,
/// entrywise-increasing operator oplus and its least relative cover
///
///   odot(a, b)      = inf { g | oplus(a, g) >= b }
///   odot_dual(a, b) = sup { g | oplus(a, g) <= b }
///
/// odot_dual is what odot becomes once the order is flipped, so Dual<C> can
/// reuse it. `sample()` is the whole carrier when `is_finite_carrier()`,
/// otherwise a small representative set used by law checks.
template <class C>
concept Codomain =
    std::equality_comparable<C> && std::copy_constructible<C> &&
    std::regular<typename C::value_type> &&
    requires(const C& c, const typename C::value_type& a, const typename C::value_type& b,
             std::string_view text) {
      { c.leq(a, b) } -> std::same_as<bool>;
      { c.meet(a, b) } -> std::same_as<typename C::value_type>;
      { c.join(a, b) } -> std::same_as<typename C::value_type>;
      { c.bottom() } -> std::same_as<typename C::value_type>;
      { c.top() } -> std::same_as<typename C::value_type>;
      { c.oplus(a, b) } -> std::same_as<typename C::value_type>;
      { c.odot(a, b) } -> std::same_as<typename C::value_type>;
      { c.odot_dual(a, b) } -> std::same_as<typename C::value_type>;
      { c.format(a) } -> std::same_as<std::string>;
      { c.parse(text) } -> std::same_as<typename C::value_type>;
      { c.name() } -> std::same_as<std::string>;
      { c.sample() } -> std::same_as<std::vector<typename C::value_type>>;
      { c.is_finite_carrier() } -> std::same_as<bool>;
    };

/// The order-dual of a codomain. A concavoid over C is a convexoid over Dual<C>.
template <Codomain C>
class Dual {
 public:
  using value_type = typename C::value_type;
  using base_type = C;

  explicit Dual(C base) : base_(std::move(base)) {}

  const C& base() const { return base_; }

  bool leq(const value_type& a, const value_type& b) const { return base_.leq(b, a); }
  value_type meet(const value_type& a, const value_type& b) const { return base_.join(a, b); }
  value_type join(const value_type& a, const value_type& b) const { return base_.meet(a, b); }
  value_type bottom() const { return base_.top(); }
  value_type top() const { return base_.bottom(); }
  value_type oplus(const value_type& a, const value_type& b) const { return base_.oplus(a, b); }
  value_type odot(const value_type& a, const value_type& b) const { return base_.odot_dual(a, b); }
  value_type odot_dual(const value_type& a, const value_type& b) const { return base_.odot(a, b); }

  std::string format(const value_type& a) const { return base_.format(a); }
  value_type parse(std::string_view text) const { return base_.parse(text); }
  std::string name() const { return "dual(" + base_.name() + ")"; }
  std::vector<value_type> sample() const { return base_.sample(); }
  bool is_finite_carrier() const { return base_.is_finite_carrier(); }

  friend bool operator==(const Dual&, const Dual&) = default;

 private:
  C base_;
};

template <class T>
struct is_dual : std::false_type {};
template <class C>
struct is_dual<Dual<C>> : std::true_type {};

/// True when instances over C are concavoids (order flipped relative to the carrier).
template <class C>
inline constexpr bool is_concavoid_v = is_dual<std::remove_cvref_t<C>>::value;

template <Codomain C>
Dual<C> dualize(const C& c) {
  return Dual<C>(c);
}

// Dualizing twice gives back the original codomain, not Dual<Dual<C>>.
template <Codomain C>
C dualize(const Dual<C>& c) {
  return c.base();
}

template <Codomain C>
LeqResult compare(const C& c, const typename C::value_type& a, const typename C::value_type& b) {
  if (c.leq(a, b)) return LeqResult::holds;
  if (c.leq(b, a)) return LeqResult::fails;
  return LeqResult::incomparable;
}

/// Greatest lower bound of a finite collection; the empty infimum is top.
template <Codomain C, std::ranges::input_range R>
typename C::value_type inf_set(const C& c, const R& xs) {
  auto acc = c.top();
  for (const auto& x : xs) acc = c.meet(acc, x);
  return acc;
}

/// Least upper bound of a finite collection; the empty supremum is bottom.
template <Codomain C, std::ranges::input_range R>
typename C::value_type sup_set(const C& c, const R& xs) {
  auto acc = c.bottom();
  for (const auto& x : xs) acc = c.join(acc, x);
  return acc;
}

/// inf { g in carrier | oplus(a, g) >= b }, by enumeration.
template <Codomain C>
typename C::value_type brute_force_odot(const C& c, const std::vector<typename C::value_type>& carrier,
                                        const typename C::value_type& a, const typename C::value_type& b) {
  auto acc = c.top();
  for (const auto& g : carrier) {
    if (c.leq(b, c.oplus(a, g))) acc = c.meet(acc, g);
  }
  return acc;
}

/// sup { g in carrier | oplus(a, g) <= b }, by enumeration.
template <Codomain C>
typename C::value_type brute_force_odot_dual(const C& c, const std::vector<typename C::value_type>& carrier,
                                             const typename C::value_type& a,
                                             const typename C::value_type& b) {
  auto acc = c.bottom();
  for (const auto& g : carrier) {
    if (c.leq(c.oplus(a, g), b)) acc = c.join(acc, g);
  }
  return acc;
}

}  // namespace convexoid
