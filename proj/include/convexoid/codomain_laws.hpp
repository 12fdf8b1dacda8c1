#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convexoid/codomain.hpp"

namespace convexoid {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string witness;  // first failing tuple, formatted

  bool ok() const { return failed == 0; }
};

struct CodomainReport {
  std::string codomain;
  std::size_t sample_size = 0;
  std::vector<PropertyResult> properties;

  bool ok() const {
    for (const auto& p : properties) {
      if (!p.ok()) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& p : properties) n += p.failed;
    return n;
  }
  const PropertyResult* find(const std::string& name) const {
    for (const auto& p : properties) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }
};

namespace detail {

template <Codomain C>
class LawChecker {
 public:
  using V = typename C::value_type;

  LawChecker(const C& c, CodomainReport& report) : c_(c), report_(report) {}

  template <class Pred>
  void check(const std::string& name, const std::vector<V>& xs, Pred&& pred) {
    PropertyResult r{name, 0, 0, {}};
    for (const auto& a : xs) {
      for (const auto& b : xs) {
        for (const auto& g : xs) {
          ++r.checked;
          if (!pred(a, b, g)) {
            if (r.failed++ == 0) r.witness = "(" + c_.format(a) + ", " + c_.format(b) + ", " + c_.format(g) + ")";
          }
        }
      }
    }
    report_.properties.push_back(std::move(r));
  }

 private:
  const C& c_;
  CodomainReport& report_;
};

}  // namespace detail

/// Checks the codomain axioms and the relative-cover lemma on every triple of
/// `sample`. For a finite carrier pass the whole carrier to make it exhaustive.
/// Failures are data; nothing throws.
template <Codomain C>
CodomainReport verify_codomain(const C& c, const std::vector<typename C::value_type>& sample) {
  using V = typename C::value_type;
  CodomainReport report{c.name(), sample.size(), {}};
  detail::LawChecker<C> chk(c, report);
  const V zero = c.bottom();
  auto geq = [&](const V& x, const V& y) { return c.leq(y, x); };

  chk.check("cover", sample, [&](const V& a, const V& b, const V&) { return geq(c.oplus(a, c.odot(a, b)), b); });
  chk.check("galois", sample, [&](const V& a, const V& b, const V& g) {
    return geq(c.oplus(a, b), g) == geq(a, c.odot(b, g));
  });
  chk.check("right_increasing", sample, [&](const V& a, const V& b, const V& g) {
    return !c.leq(a, b) || c.leq(c.odot(g, a), c.odot(g, b));
  });
  chk.check("left_decreasing", sample, [&](const V& a, const V& b, const V& g) {
    return !c.leq(a, b) || geq(c.odot(a, g), c.odot(b, g));
  });
  chk.check("double_cover", sample, [&](const V& a, const V& b, const V&) { return geq(a, c.odot(c.odot(a, b), b)); });
  chk.check("odot_bottom", sample, [&](const V& a, const V&, const V&) { return c.odot(a, zero) == zero; });
  chk.check("commutative", sample, [&](const V& a, const V& b, const V&) { return c.oplus(a, b) == c.oplus(b, a); });
  chk.check("monotone", sample, [&](const V& a, const V& b, const V& g) {
    return !c.leq(a, b) || c.leq(c.oplus(a, g), c.oplus(b, g));
  });
  // No sampled cover lies strictly below odot(a, b).
  chk.check("least_cover", sample, [&](const V& a, const V& b, const V& g) {
    return !geq(c.oplus(a, g), b) || c.leq(c.odot(a, b), g);
  });
  chk.check("lattice", sample, [&](const V& a, const V& b, const V&) {
    return c.leq(c.bottom(), a) && c.leq(a, c.top()) && c.meet(a, c.join(a, b)) == a &&
           c.join(a, c.meet(a, b)) == a && c.meet(a, a) == a && c.join(a, a) == a && c.leq(c.meet(a, b), a) &&
           c.leq(a, c.join(a, b));
  });
  if (c.is_finite_carrier()) {
    chk.check("closed_form", sample, [&](const V& a, const V& b, const V&) {
      return c.odot(a, b) == brute_force_odot(c, sample, a, b);
    });
  }
  return report;
}

template <Codomain C>
CodomainReport verify_codomain(const C& c) {
  return verify_codomain(c, c.sample());
}

}  // namespace convexoid
