#include "pgonal/extension.hpp"

#include <algorithm>
#include <numeric>

namespace pgonal {

MetacyclicGroup::MetacyclicGroup(PrimeModulus p, Int n, Unit u) : p_(p), n_(n), u_(u) {
  if (n < 2) throw std::invalid_argument("top order n must be >= 2");
  if (u.modulus() != p) throw std::invalid_argument("unit modulus mismatch");
  if (pow_mod(u.value(), n, p) != 1)
    throw std::invalid_argument("u = " + std::to_string(u.value()) + " does not satisfy u^" + std::to_string(n) +
                                " = 1 mod " + std::to_string(p.value()));
  twist_.resize(static_cast<std::size_t>(n));
  Int x = 1;
  for (Int b = 0; b < n; ++b) {
    twist_[static_cast<std::size_t>(b)] = x;
    x = mod(x * u.value(), p);
  }
}

GroupElement MetacyclicGroup::multiply(GroupElement x, GroupElement y) const {
  return {mod(x.a + twist(x.b) * y.a, p_), mod(x.b + y.b, n_)};
}

GroupElement MetacyclicGroup::inverse(GroupElement x) const {
  return {mod(-twist(-x.b) * x.a, p_), mod(-x.b, n_)};
}

GroupElement MetacyclicGroup::power(GroupElement x, Int e) const {
  if (e < 0) return power(inverse(x), -e);
  GroupElement result = identity();
  for (GroupElement base = x; e > 0; e >>= 1) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
  }
  return result;
}

std::vector<GroupElement> MetacyclicGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (Int b = 0; b < n_; ++b)
    for (Int a = 0; a < p_; ++a) out.push_back({a, b});
  return out;
}

Int MetacyclicGroup::generated_order(std::span<const GroupElement> gens) const {
  std::vector<bool> seen(static_cast<std::size_t>(order()), false);
  auto index = [&](GroupElement g) { return static_cast<std::size_t>(g.b * p_.value() + g.a); };
  std::vector<GroupElement> frontier{identity()};
  seen[index(identity())] = true;
  Int count = 1;
  while (!frontier.empty()) {
    GroupElement x = frontier.back();
    frontier.pop_back();
    for (GroupElement g : gens) {
      GroupElement y = multiply(x, g);
      if (!seen[index(y)]) {
        seen[index(y)] = true;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

std::string MetacyclicGroup::name() const {
  const std::string cp = "C" + std::to_string(p_.value());
  if (u_.is_one()) {
    if (n_ % p_ == 0) return cp + "xC" + std::to_string(n_);
    return "C" + std::to_string(order());
  }
  if (n_ == 2) return "D" + std::to_string(p_.value());
  std::string s = cp + ":C" + std::to_string(n_);
  if (mult_order(u_) != n_) s += "[u=" + std::to_string(u_.value()) + "]";
  return s;
}

Int element_order(GroupElement g, const MetacyclicGroup& group) {
  Int order = 1;
  for (GroupElement x = g; x != group.identity(); x = group.multiply(x, g)) ++order;
  return order;
}

std::vector<Signature> quotient_signatures(PrimeModulus p, Int k, Int n) {
  if (k < 3) throw std::invalid_argument("quotient_signatures needs k >= 3");
  if (n < 2) throw std::invalid_argument("quotient_signatures needs n >= 2");
  const Rational target = normalized_area(pgonal_signature(p, k)) / Rational(n) + Rational(2);

  std::vector<Int> divisors;
  const Int pn = checked_mul(p.value(), n);
  for (Int m = 2; m <= pn; ++m)
    if (pn % m == 0) divisors.push_back(m);

  std::vector<Signature> out;
  std::vector<Int> periods;
  // Non-decreasing period sequences; each term contributes at least 1/2.
  auto extend = [&](auto&& self, std::size_t from, const Rational& remaining) -> void {
    if (remaining == Rational(0)) {
      out.emplace_back(0, periods);
      return;
    }
    for (std::size_t i = from; i < divisors.size(); ++i) {
      Rational term(divisors[i] - 1, divisors[i]);
      if (term > remaining) break;  // terms increase with m
      periods.push_back(divisors[i]);
      self(self, i, remaining - term);
      periods.pop_back();
    }
  };
  extend(extend, 0, target);
  std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) {
    if (a.period_count() != b.period_count()) return a.period_count() < b.period_count();
    return a.periods() < b.periods();
  });
  return out;
}

namespace {

// What a single quotient generator contributes to the induced branch data.
struct ElementData {
  GroupElement g;
  Int order;
  std::vector<Int> exponents;  // one per cycle on G/C_p producing a period-p point
};

ElementData describe(const MetacyclicGroup& group, GroupElement g) {
  const Int p = group.p(), n = group.n();
  const Int cycles = std::gcd(n, g.b);  // gcd(n, 0) = n
  const Int len = n / cycles;
  // g^len = (a * (1 + u^b + ... + u^{(len-1)b}), 0)
  Int geometric = 0;
  for (Int i = 0; i < len; ++i) geometric = mod(geometric + group.twist(i * g.b), p);
  const Int lifted = mod(g.a * geometric, p);

  ElementData data{g, lifted == 0 ? len : len * p, {}};
  if (lifted != 0)
    for (Int c = 0; c < cycles; ++c) data.exponents.push_back(mod(group.twist(c) * lifted, p));
  return data;
}

class WitnessSearch {
 public:
  WitnessSearch(const StratumClass& cls, const MetacyclicGroup& group) : cls_(cls), group_(group) {
    for (GroupElement g : group.elements()) data_.push_back(describe(group, g));
  }

  std::optional<ExtensionWitness> search(const Signature& sig) {
    remaining_ = profile(cls_).counts;
    left_ = cls_.k();
    const auto& periods = sig.periods();
    by_period_.assign(periods.size(), {});
    // Elements of one order can lift to different numbers of points when p | n.
    Int fewest = 0, most = 0;
    for (std::size_t i = 0; i < periods.size(); ++i) {
      Int lo = cls_.k() + 1, hi = -1;
      for (const auto& d : data_) {
        if (d.order != periods[i]) continue;
        by_period_[i].push_back(&d);
        lo = std::min(lo, static_cast<Int>(d.exponents.size()));
        hi = std::max(hi, static_cast<Int>(d.exponents.size()));
      }
      if (by_period_[i].empty()) return std::nullopt;
      fewest += lo;
      most += hi;
    }
    if (cls_.k() < fewest || cls_.k() > most) return std::nullopt;

    periods_ = &periods;
    chosen_.assign(periods.size(), {});
    if (!descend(0, group_.identity())) return std::nullopt;
    return ExtensionWitness{group_, sig, chosen_, cls_};
  }

 private:
  bool take(const ElementData& d) {
    std::size_t i = 0;
    for (; i < d.exponents.size(); ++i) {
      auto& slot = remaining_[static_cast<std::size_t>(d.exponents[i])];
      if (slot == 0) break;
      --slot;
    }
    if (i == d.exponents.size()) {
      left_ -= static_cast<Int>(i);
      return true;
    }
    while (i-- > 0) ++remaining_[static_cast<std::size_t>(d.exponents[i])];
    return false;
  }

  void give_back(const ElementData& d) {
    for (Int e : d.exponents) ++remaining_[static_cast<std::size_t>(e)];
    left_ += static_cast<Int>(d.exponents.size());
  }

  bool descend(std::size_t pos, GroupElement prefix) {
    const std::size_t last = periods_->size() - 1;
    if (pos == last) {
      GroupElement g = group_.inverse(prefix);
      const ElementData& d = data_[static_cast<std::size_t>(g.b * group_.p().value() + g.a)];
      if (d.order != (*periods_)[pos] || !take(d)) return false;
      chosen_[pos] = g;
      if (left_ == 0 && group_.generated_order(chosen_) == group_.order()) return true;
      give_back(d);
      return false;
    }
    for (const ElementData* d : by_period_[pos]) {
      if (!take(*d)) continue;
      chosen_[pos] = d->g;
      if (descend(pos + 1, group_.multiply(prefix, d->g))) return true;
      give_back(*d);
    }
    return false;
  }

  const StratumClass& cls_;
  const MetacyclicGroup& group_;
  std::vector<ElementData> data_;
  std::vector<Int> remaining_;
  Int left_ = 0;
  std::vector<std::vector<const ElementData*>> by_period_;
  const std::vector<Int>* periods_ = nullptr;
  std::vector<GroupElement> chosen_;
};

}  // namespace

std::optional<ExtensionWitness> find_witness(const StratumClass& cls, Int n, Unit u) {
  MetacyclicGroup group(cls.p(), n, u);
  // The automorphism (a, b) -> (w a, b) of G rescales induced exponents, so
  // matching the canonical multiset exactly loses no generality.
  WitnessSearch search(cls, group);
  for (const auto& sig : quotient_signatures(cls.p(), cls.k(), n))
    if (auto w = search.search(sig)) return w;
  return std::nullopt;
}

std::vector<ExtensionWitness> prove_extension(const StratumClass& cls, Int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  std::vector<ExtensionWitness> out;
  const PrimeModulus p = cls.p();
  for (Int n = 2; n <= n_max; ++n) {
    for (Int v = 1; v < p; ++v) {
      if (pow_mod(v, n, p) != 1) continue;
      MetacyclicGroup group(p, n, Unit(v, p));
      WitnessSearch search(cls, group);
      for (const auto& sig : quotient_signatures(p, cls.k(), n))
        if (auto w = search.search(sig)) out.push_back(std::move(*w));
    }
  }
  return out;
}

PermutationRep coset_action(const ExtensionWitness& w) {
  // Cosets C_p (0, c); right multiplication by (a, b) sends c to c + b.
  const Int n = w.group.n();
  PermutationRep rep;
  rep.degree = n;
  for (GroupElement g : w.images) {
    Permutation perm(static_cast<std::size_t>(n));
    for (Int c = 0; c < n; ++c) perm[static_cast<std::size_t>(c)] = mod(c + g.b, n);
    rep.elliptic.push_back(std::move(perm));
  }
  return rep;
}

WitnessCheck verify_witness(const ExtensionWitness& w) {
  const MetacyclicGroup& G = w.group;
  const auto& periods = w.quotient_signature.periods();
  const Int k = w.induced_class.k();
  WitnessCheck check;
  if (w.images.size() != periods.size() || w.quotient_signature.orbit_genus() != 0) return check;

  check.generates = G.generated_order(w.images) == G.order();

  GroupElement product = G.identity();
  for (GroupElement g : w.images) product = G.multiply(product, g);
  check.product_one = product == G.identity();

  check.orders_match = true;
  for (std::size_t i = 0; i < periods.size(); ++i)
    check.orders_match = check.orders_match && element_order(w.images[i], G) == periods[i];

  check.area_matches =
      Rational(G.n()) * normalized_area(w.quotient_signature) == normalized_area(pgonal_signature(G.p(), k));

  try {
    const PermutationRep rep = coset_action(w);
    check.induced_signature_matches =
        induced_subgroup_signature(w.quotient_signature, rep) == pgonal_signature(G.p(), k);

    // Each cycle of length l < m at coset c gives the point whose stabilizer
    // is generated by t g^l t^{-1}, t = (0, c).
    std::vector<Int> exponents;
    for (std::size_t i = 0; i < periods.size(); ++i) {
      const Permutation& perm = rep.elliptic[i];
      std::vector<bool> seen(perm.size(), false);
      for (Int c = 0; c < G.n(); ++c) {
        if (seen[static_cast<std::size_t>(c)]) continue;
        Int len = 0;
        for (Int x = c; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = true;
          ++len;
        }
        if (len == periods[i]) continue;
        GroupElement t{0, c};
        GroupElement h = G.identity();
        for (Int j = 0; j < len; ++j) h = G.multiply(h, w.images[i]);
        h = G.multiply(G.multiply(t, h), G.inverse(t));
        if (h.b != 0 || h.a == 0) throw std::logic_error("lifted stabilizer outside C_p");
        exponents.push_back(h.a);
      }
    }
    check.class_matches = canonical_form(BranchData::validate(G.p(), exponents)) == w.induced_class;
  } catch (const std::exception&) {
    check.induced_signature_matches = false;
    check.class_matches = false;
  }
  return check;
}

}  // namespace pgonal
