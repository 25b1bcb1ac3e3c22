#include "pgonal/signature.hpp"

#include <algorithm>
#include <numeric>

namespace pgonal {

Signature::Signature(Int orbit_genus, std::vector<Int> periods)
    : genus_(orbit_genus), periods_(std::move(periods)) {
  if (genus_ < 0) throw SignatureError("orbit genus must be non-negative");
  for (Int m : periods_)
    if (m < 2) throw SignatureError("period " + std::to_string(m) + " is less than 2");
  std::sort(periods_.begin(), periods_.end());
}

std::string Signature::to_string() const {
  std::string s = "(" + std::to_string(genus_) + "; ";
  if (periods_.empty()) return s + "-)";
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(periods_[i]);
  }
  return s + ")";
}

Rational normalized_area(const Signature& sig) {
  Rational area(checked_sub(checked_mul(2, sig.orbit_genus()), 2));
  for (Int m : sig.periods()) area += Rational(m - 1, m);
  return area;
}

bool is_hyperbolic(const Signature& sig) { return normalized_area(sig) > Rational(0); }

Int teichmuller_dim(const Signature& sig) {
  return checked_add(checked_sub(checked_mul(3, sig.orbit_genus()), 3), sig.period_count());
}

Signature pgonal_signature(PrimeModulus p, Int k) {
  if (k < 3) throw SignatureError("(0; p^k) with k = " + std::to_string(k) + " is not hyperbolic");
  return Signature(0, std::vector<Int>(static_cast<std::size_t>(k), p.value()));
}

GenusDim genus_and_dim(PrimeModulus p, Int k) {
  if (k < 3) throw SignatureError("cyclic p-gonal branch data needs k >= 3");
  // p is odd, so (p-1)/2 is an integer.
  return {checked_mul(k - 2, (p - 1) / 2), k - 3};
}

Int uniqueness_bound(PrimeModulus p) { return checked_add(checked_mul(p - 1, p - 1), 1); }

namespace {

void check_permutation(const Permutation& perm, Int degree) {
  if (static_cast<Int>(perm.size()) != degree) throw SignatureError("permutation has wrong degree");
  std::vector<bool> hit(static_cast<std::size_t>(degree), false);
  for (Int v : perm) {
    if (v < 0 || v >= degree || hit[static_cast<std::size_t>(v)])
      throw SignatureError("image is not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

bool is_transitive(const std::vector<Permutation>& gens, Int degree) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<Int> stack{0};
  seen[0] = true;
  Int reached = 1;
  while (!stack.empty()) {
    Int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      Int y = g[static_cast<std::size_t>(x)];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == degree;
}

std::vector<Int> cycle_lengths(const Permutation& perm) {
  std::vector<Int> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    Int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace

Signature induced_subgroup_signature(const Signature& sig, const PermutationRep& rep) {
  if (rep.degree < 1) throw SignatureError("representation degree must be positive");
  if (sig.orbit_genus() != 0 || !rep.hyperbolic.empty())
    throw SignatureError("only genus-0 source signatures are supported");
  if (rep.elliptic.size() != sig.periods().size())
    throw SignatureError("one elliptic image per period is required");

  for (const auto& perm : rep.elliptic) check_permutation(perm, rep.degree);
  if (!is_transitive(rep.elliptic, rep.degree)) throw SignatureError("representation is not transitive");

  // Long relation x_1 x_2 ... x_k = 1, composed left to right.
  for (Int point = 0; point < rep.degree; ++point) {
    Int x = point;
    for (const auto& perm : rep.elliptic) x = perm[static_cast<std::size_t>(x)];
    if (x != point) throw SignatureError("product-one relation fails");
  }

  std::vector<Int> induced;
  for (std::size_t i = 0; i < rep.elliptic.size(); ++i) {
    const Int m = sig.periods()[i];
    for (Int len : cycle_lengths(rep.elliptic[i])) {
      if (m % len != 0)
        throw SignatureError("cycle length " + std::to_string(len) + " does not divide period " +
                             std::to_string(m));
      if (len < m) induced.push_back(m / len);
    }
  }

  // 2h' - 2 + sum(1 - 1/m') = N * area(sig)
  Rational rhs = Rational(rep.degree) * normalized_area(sig);
  for (Int m : induced) rhs -= Rational(m - 1, m);
  rhs += Rational(2);
  if (!rhs.is_integer() || rhs.numerator() < 0 || rhs.numerator() % 2 != 0)
    throw SignatureError("area relation has no non-negative integer orbit genus");
  return Signature(rhs.numerator() / 2, std::move(induced));
}

PermutationRep regular_cyclic_rep(PrimeModulus p, const std::vector<Int>& exponents) {
  PermutationRep rep;
  rep.degree = p;
  for (Int r : exponents) {
    Permutation perm(static_cast<std::size_t>(p.value()));
    for (Int x = 0; x < p; ++x) perm[static_cast<std::size_t>(x)] = mod(x + r, p);
    rep.elliptic.push_back(std::move(perm));
  }
  return rep;
}

}  // namespace pgonal
