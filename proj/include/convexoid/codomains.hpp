#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "convexoid/codomain.hpp"
#include "convexoid/error.hpp"
#include "convexoid/rational.hpp"

namespace convexoid {

// ---------------------------------------------------------------------------
// Extended-rational carriers
// ---------------------------------------------------------------------------

namespace detail {

struct ExtRationalOrder {
  using value_type = ExtRational;

  bool leq(const ExtRational& a, const ExtRational& b) const { return a <= b; }
  ExtRational meet(const ExtRational& a, const ExtRational& b) const { return std::min(a, b); }
  ExtRational join(const ExtRational& a, const ExtRational& b) const { return std::max(a, b); }
  std::string format(const ExtRational& a) const { return to_string(a); }
  bool is_finite_carrier() const { return false; }
  friend bool operator==(const ExtRationalOrder&, const ExtRationalOrder&) = default;
};

}  // namespace detail

/// (Q u {-inf,+inf}, <=, +) with (+inf) + (-inf) = +inf.
class ClassicCodomain : public detail::ExtRationalOrder {
 public:
  ExtRational bottom() const { return ExtRational::neg_inf(); }
  ExtRational top() const { return ExtRational::pos_inf(); }
  ExtRational oplus(const ExtRational& a, const ExtRational& b) const { return add_upper(a, b); }

  ExtRational odot(const ExtRational& a, const ExtRational& b) const {
    if (b.is_neg_inf() || a.is_pos_inf()) return ExtRational::neg_inf();
    if (a.is_neg_inf() || b.is_pos_inf()) return ExtRational::pos_inf();
    return ExtRational(b.value() - a.value());
  }

  // sup { g | a + g <= b }. Not attained when a = -inf and b < +inf.
  ExtRational odot_dual(const ExtRational& a, const ExtRational& b) const {
    if (b.is_pos_inf()) return ExtRational::pos_inf();
    if (a.is_pos_inf()) return ExtRational::neg_inf();
    if (a.is_neg_inf()) return ExtRational::pos_inf();
    if (b.is_neg_inf()) return ExtRational::neg_inf();
    return ExtRational(b.value() - a.value());
  }

  ExtRational parse(std::string_view text) const { return parse_ext_rational(text); }
  std::string name() const { return "classic"; }
  std::vector<ExtRational> sample() const {
    return {ExtRational::neg_inf(), ExtRational(-2), ExtRational(0), ExtRational(1), ExtRational::pos_inf()};
  }

  friend bool operator==(const ClassicCodomain&, const ClassicCodomain&) = default;
};

/// (Q+ u {+inf}, <=, *) with 0 * (+inf) = +inf, so top absorbs like in the
/// classic carrier and 0 odot b = +inf for b > 0.
class MultiplicativeCodomain : public detail::ExtRationalOrder {
 public:
  ExtRational bottom() const { return ExtRational(0); }
  ExtRational top() const { return ExtRational::pos_inf(); }

  ExtRational oplus(const ExtRational& a, const ExtRational& b) const {
    if (a.is_pos_inf() || b.is_pos_inf()) return ExtRational::pos_inf();
    return ExtRational(a.value() * b.value());
  }

  ExtRational odot(const ExtRational& a, const ExtRational& b) const {
    const ExtRational zero(0);
    if (b == zero || a.is_pos_inf()) return zero;
    if (a == zero || b.is_pos_inf()) return ExtRational::pos_inf();
    return ExtRational(b.value() / a.value());
  }

  // sup { g | a * g <= b }. Not attained when a = 0 and b < +inf.
  ExtRational odot_dual(const ExtRational& a, const ExtRational& b) const {
    const ExtRational zero(0);
    if (b.is_pos_inf()) return ExtRational::pos_inf();
    if (a.is_pos_inf()) return zero;
    if (a == zero) return ExtRational::pos_inf();
    return ExtRational(b.value() / a.value());
  }

  ExtRational parse(std::string_view text) const {
    auto v = parse_ext_rational(text);
    if (v < ExtRational(0)) throw InputError("negative value '" + std::string(text) + "' in multiplicative carrier");
    return v;
  }
  std::string name() const { return "multiplicative"; }
  std::vector<ExtRational> sample() const {
    return {ExtRational(0), ExtRational(1, 2), ExtRational(1), ExtRational(3), ExtRational::pos_inf()};
  }

  friend bool operator==(const MultiplicativeCodomain&, const MultiplicativeCodomain&) = default;
};

/// (Q u {-inf,+inf}, <=, max).
class MaxLatticeCodomain : public detail::ExtRationalOrder {
 public:
  ExtRational bottom() const { return ExtRational::neg_inf(); }
  ExtRational top() const { return ExtRational::pos_inf(); }
  ExtRational oplus(const ExtRational& a, const ExtRational& b) const { return std::max(a, b); }
  ExtRational odot(const ExtRational& a, const ExtRational& b) const { return b > a ? b : ExtRational::neg_inf(); }
  ExtRational odot_dual(const ExtRational& a, const ExtRational& b) const {
    return a <= b ? b : ExtRational::neg_inf();
  }
  ExtRational parse(std::string_view text) const { return parse_ext_rational(text); }
  std::string name() const { return "max-lattice"; }
  std::vector<ExtRational> sample() const {
    return {ExtRational::neg_inf(), ExtRational(-2), ExtRational(0), ExtRational(1), ExtRational::pos_inf()};
  }

  friend bool operator==(const MaxLatticeCodomain&, const MaxLatticeCodomain&) = default;
};

// ---------------------------------------------------------------------------
// Boolean and Heyting chains
// ---------------------------------------------------------------------------

struct Truth {
  bool value = false;
  friend constexpr bool operator==(Truth, Truth) = default;
  friend constexpr auto operator<=>(Truth, Truth) = default;
  friend std::ostream& operator<<(std::ostream& os, Truth t) { return os << (t.value ? 1 : 0); }
};

inline constexpr Truth kFalse{false};
inline constexpr Truth kTrue{true};

/// ({0,1}, <=, and). Its relative cover is only a valid one in the flipped
/// order, where odot becomes implication; use Dual<BooleanCodomain>.
class BooleanCodomain {
 public:
  using value_type = Truth;

  bool leq(Truth a, Truth b) const { return !a.value || b.value; }
  Truth meet(Truth a, Truth b) const { return Truth{a.value && b.value}; }
  Truth join(Truth a, Truth b) const { return Truth{a.value || b.value}; }
  Truth bottom() const { return kFalse; }
  Truth top() const { return kTrue; }
  Truth oplus(Truth a, Truth b) const { return meet(a, b); }
  Truth odot(Truth, Truth b) const { return b; }
  Truth odot_dual(Truth a, Truth b) const { return Truth{!a.value || b.value}; }

  std::string format(Truth a) const { return a.value ? "1" : "0"; }
  Truth parse(std::string_view text) const {
    const auto s = detail::trim(text);
    if (s == "1") return kTrue;
    if (s == "0") return kFalse;
    throw InputError("not a Boolean: '" + std::string(text) + "'");
  }
  std::string name() const { return "boolean"; }
  std::vector<Truth> sample() const { return {kFalse, kTrue}; }
  bool is_finite_carrier() const { return true; }

  friend bool operator==(const BooleanCodomain&, const BooleanCodomain&) = default;
};

struct Level {
  int value = 0;
  friend constexpr bool operator==(Level, Level) = default;
  friend constexpr auto operator<=>(Level, Level) = default;
  friend std::ostream& operator<<(std::ostream& os, Level l) { return os << 'L' << l.value; }
};

enum class OdotStrategy { closed_form, brute_force };

/// The chain 0 < 1 < ... < m as a Heyting algebra with oplus = min.
/// In the flipped order odot is Goedel implication.
class HeytingChainCodomain {
 public:
  using value_type = Level;

  explicit HeytingChainCodomain(int top_level, OdotStrategy strategy = OdotStrategy::brute_force)
      : m_(top_level), strategy_(strategy) {
    if (top_level < 1) throw Error("Heyting chain needs at least two levels");
  }

  int top_level() const { return m_; }
  OdotStrategy strategy() const { return strategy_; }

  bool leq(Level a, Level b) const { return a.value <= b.value; }
  Level meet(Level a, Level b) const { return std::min(a, b); }
  Level join(Level a, Level b) const { return std::max(a, b); }
  Level bottom() const { return Level{0}; }
  Level top() const { return Level{m_}; }
  Level oplus(Level a, Level b) const { return std::min(a, b); }

  Level odot(Level a, Level b) const {
    if (strategy_ == OdotStrategy::brute_force) return brute_force_odot(*this, sample(), a, b);
    return odot_closed_form(a, b);
  }
  Level odot_dual(Level a, Level b) const {
    if (strategy_ == OdotStrategy::brute_force) return brute_force_odot_dual(*this, sample(), a, b);
    return implication(a, b);
  }

  Level odot_closed_form(Level a, Level b) const { return b.value <= a.value ? b : top(); }
  // Goedel implication.
  Level implication(Level a, Level b) const { return a.value <= b.value ? top() : b; }

  std::string format(Level a) const { return "L" + std::to_string(a.value); }
  Level parse(std::string_view text) const {
    auto s = detail::trim(text);
    if (!s.empty() && s.front() == 'L') s.remove_prefix(1);
    const auto v = detail::parse_int64(s, text);
    if (v < 0 || v > m_) throw InputError("level '" + std::string(text) + "' outside chain 0.." + std::to_string(m_));
    return Level{static_cast<int>(v)};
  }
  std::string name() const { return "chain(" + std::to_string(m_) + ")"; }
  std::vector<Level> sample() const {
    std::vector<Level> out;
    for (int i = 0; i <= m_; ++i) out.push_back(Level{i});
    return out;
  }
  bool is_finite_carrier() const { return true; }

  friend bool operator==(const HeytingChainCodomain&, const HeytingChainCodomain&) = default;

 private:
  int m_;
  OdotStrategy strategy_;
};

// ---------------------------------------------------------------------------
// Explicit finite lattices
// ---------------------------------------------------------------------------

struct Node {
  std::uint16_t id = 0;
  friend constexpr bool operator==(Node, Node) = default;
  friend constexpr auto operator<=>(Node, Node) = default;
  friend std::ostream& operator<<(std::ostream& os, Node n) { return os << '#' << n.id; }
};

/// A finite lattice given by its order relation. Meets, joins, and the
/// relative-cover tables for oplus = meet are precomputed by brute force.
class FiniteLattice {
 public:
  FiniteLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq)
      : names_(std::move(names)), n_(names_.size()) {
    if (n_ == 0) throw Error("a lattice needs at least one element");
    if (n_ > 0xFFFF) throw Error("lattice too large");
    if (leq.size() != n_) throw Error("order relation has wrong size");
    leq_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (leq[i].size() != n_) throw Error("order relation has wrong size");
      for (std::size_t j = 0; j < n_; ++j) leq_[i * n_ + j] = leq[i][j] ? 1 : 0;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (names_[i] == names_[j]) throw Error("duplicate lattice element '" + names_[i] + "'");
      }
    }
    validate_order();
    build_bounds();
    build_residuals();
  }

  template <class Pred>
  static FiniteLattice from_order(std::vector<std::string> names, Pred&& le) {
    const auto n = names.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rel[i][j] = le(i, j);
    }
    return FiniteLattice(std::move(names), std::move(rel));
  }

  std::size_t size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Node a) const { return names_.at(a.id); }

  Node node(std::string_view name) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (names_[i] == name) return Node{static_cast<std::uint16_t>(i)};
    }
    throw InputError("no lattice element named '" + std::string(name) + "'");
  }

  bool leq(Node a, Node b) const { return leq_[idx(a, b)] != 0; }
  Node meet(Node a, Node b) const { return meet_[idx(a, b)]; }
  Node join(Node a, Node b) const { return join_[idx(a, b)]; }
  Node bottom() const { return bottom_; }
  Node top() const { return top_; }
  // inf { c | a ^ c >= b }
  Node relative_cover(Node a, Node b) const { return cover_[idx(a, b)]; }
  // sup { c | a ^ c <= b }: the Heyting implication a => b.
  Node implication(Node a, Node b) const { return implication_[idx(a, b)]; }

  std::vector<Node> elements() const {
    std::vector<Node> out;
    for (std::size_t i = 0; i < n_; ++i) out.push_back(Node{static_cast<std::uint16_t>(i)});
    return out;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  std::size_t idx(Node a, Node b) const {
    if (a.id >= n_ || b.id >= n_) throw Error("lattice node out of range");
    return a.id * n_ + b.id;
  }
  bool le(std::size_t i, std::size_t j) const { return leq_[i * n_ + j] != 0; }

  void validate_order() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!le(i, i)) throw Error("order not reflexive at '" + names_[i] + "'");
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && le(i, j) && le(j, i)) {
          throw Error("order not antisymmetric at '" + names_[i] + "', '" + names_[j] + "'");
        }
        for (std::size_t k = 0; k < n_; ++k) {
          if (le(i, j) && le(j, k) && !le(i, k)) throw Error("order not transitive at '" + names_[i] + "'");
        }
      }
    }
  }

  void build_bounds() {
    meet_.resize(n_ * n_);
    join_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        meet_[a * n_ + b] = extremal_bound(a, b, /*lower=*/true);
        join_[a * n_ + b] = extremal_bound(a, b, /*lower=*/false);
      }
    }
    bottom_ = Node{0};
    top_ = Node{0};
    for (std::size_t i = 1; i < n_; ++i) {
      bottom_ = meet_[bottom_.id * n_ + i];
      top_ = join_[top_.id * n_ + i];
    }
  }

  // The greatest common lower bound (or least common upper bound).
  Node extremal_bound(std::size_t a, std::size_t b, bool lower) const {
    auto is_bound = [&](std::size_t c) { return lower ? (le(c, a) && le(c, b)) : (le(a, c) && le(b, c)); };
    for (std::size_t c = 0; c < n_; ++c) {
      if (!is_bound(c)) continue;
      bool extremal = true;
      for (std::size_t d = 0; d < n_ && extremal; ++d) {
        if (is_bound(d)) extremal = lower ? le(d, c) : le(c, d);
      }
      if (extremal) return Node{static_cast<std::uint16_t>(c)};
    }
    throw Error(std::string("no ") + (lower ? "meet" : "join") + " for '" + names_[a] + "', '" + names_[b] + "'");
  }

  void build_residuals() {
    cover_.resize(n_ * n_);
    implication_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        Node cover = top_;
        Node impl = bottom_;
        for (std::size_t c = 0; c < n_; ++c) {
          const Node m = meet_[a * n_ + c];
          if (le(b, m.id)) cover = meet_[cover.id * n_ + c];
          if (le(m.id, b)) impl = join_[impl.id * n_ + c];
        }
        cover_[a * n_ + b] = cover;
        implication_[a * n_ + b] = impl;
      }
    }
  }

  std::vector<std::string> names_;
  std::size_t n_;
  std::vector<std::uint8_t> leq_;
  std::vector<Node> meet_, join_, cover_, implication_;
  Node bottom_, top_;
};

/// A finite lattice as a codomain with oplus = meet. The relative covers come
/// from the lattice's brute-force tables, so in the flipped order odot is
/// Heyting implication.
class LatticeCodomain {
 public:
  using value_type = Node;

  explicit LatticeCodomain(std::shared_ptr<const FiniteLattice> lattice) : lattice_(std::move(lattice)) {
    if (!lattice_) throw Error("null lattice");
  }
  explicit LatticeCodomain(FiniteLattice lattice)
      : lattice_(std::make_shared<const FiniteLattice>(std::move(lattice))) {}

  const FiniteLattice& lattice() const { return *lattice_; }

  bool leq(Node a, Node b) const { return lattice_->leq(a, b); }
  Node meet(Node a, Node b) const { return lattice_->meet(a, b); }
  Node join(Node a, Node b) const { return lattice_->join(a, b); }
  Node bottom() const { return lattice_->bottom(); }
  Node top() const { return lattice_->top(); }
  Node oplus(Node a, Node b) const { return lattice_->meet(a, b); }
  Node odot(Node a, Node b) const { return lattice_->relative_cover(a, b); }
  Node odot_dual(Node a, Node b) const { return lattice_->implication(a, b); }

  std::string format(Node a) const { return lattice_->name(a); }
  Node parse(std::string_view text) const { return lattice_->node(detail::trim(text)); }
  std::string name() const { return "lattice(" + std::to_string(lattice_->size()) + ")"; }
  std::vector<Node> sample() const { return lattice_->elements(); }
  bool is_finite_carrier() const { return true; }

  friend bool operator==(const LatticeCodomain& a, const LatticeCodomain& b) {
    return a.lattice_ == b.lattice_ || *a.lattice_ == *b.lattice_;
  }

 private:
  std::shared_ptr<const FiniteLattice> lattice_;
};

static_assert(Codomain<ClassicCodomain>);
static_assert(Codomain<MultiplicativeCodomain>);
static_assert(Codomain<MaxLatticeCodomain>);
static_assert(Codomain<BooleanCodomain>);
static_assert(Codomain<HeytingChainCodomain>);
static_assert(Codomain<LatticeCodomain>);
static_assert(Codomain<Dual<BooleanCodomain>>);

/// The Boolean concavoid codomain, where odot is implication.
inline Dual<BooleanCodomain> boolean_concavoid() { return Dual<BooleanCodomain>(BooleanCodomain{}); }

}  // namespace convexoid
