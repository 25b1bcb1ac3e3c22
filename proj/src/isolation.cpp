#include "pgonal/isolation.hpp"

#include <algorithm>
#include <optional>

namespace pgonal {

namespace {

std::vector<RotationCandidate> candidates_from_profile(PrimeModulus p, const Profile& m) {
  std::vector<RotationCandidate> out;

  for (const auto& [u, q] : units_of_prime_order(p)) {
    bool invariant = true;
    for (Int j = 1; j < p && invariant; ++j) invariant = m.at(u.value() * j) == m.at(j);
    if (invariant) out.push_back({q, u, 0, true});
  }

  const Unit one(1, p);
  const Int largest = m.max_multiplicity();
  for (Int q = 2; q <= largest; ++q) {
    if (!is_prime(q)) continue;
    Int fixed = 0;
    bool has_cycle = false;
    for (Int j = 1; j < p; ++j) {
      fixed += m.at(j) % q;
      has_cycle = has_cycle || m.at(j) >= q;
    }
    if (fixed <= 2 && has_cycle) out.push_back({q, one, fixed, has_cycle});
  }

  std::sort(out.begin(), out.end(), [](const RotationCandidate& a, const RotationCandidate& b) {
    return std::pair(a.q, a.u.value()) < std::pair(b.q, b.u.value());
  });
  return out;
}

bool isolated_profile(PrimeModulus p, const std::vector<Int>& exponents) {
  return candidates_from_profile(p, profile(BranchData::validate(p, exponents))).empty();
}

std::optional<BranchData> first_isolated_in_census(PrimeModulus p, Int k, std::uint64_t budget) {
  for (const auto& cls : census(p, k, budget))
    if (isolation_verdict(cls).isolated()) return cls.branch_data();
  return std::nullopt;
}

// (1^{k-t}, tail) with a non-decreasing tail over [2, p-1]; the last tail
// entry is forced by the sum condition.
class TailSearch {
 public:
  TailSearch(PrimeModulus p, Int k) : p_(p), k_(k) {}

  std::optional<BranchData> run(Int max_tail, std::uint64_t max_checks) {
    max_checks_ = max_checks;
    for (Int t = 1; t <= std::min(max_tail, k_); ++t) {
      tail_.assign(static_cast<std::size_t>(t), 0);
      if (extend(0, t, k_ - t)) return BranchData::validate(p_, exponents());
      if (checks_ >= max_checks_) break;
    }
    return std::nullopt;
  }

 private:
  std::vector<Int> exponents() const {
    std::vector<Int> exps(static_cast<std::size_t>(k_) - tail_.size(), 1);
    exps.insert(exps.end(), tail_.begin(), tail_.end());
    return exps;
  }

  bool extend(std::size_t pos, Int t, Int sum) {
    const Int lo = pos == 0 ? 2 : tail_[pos - 1];
    if (static_cast<Int>(pos) == t - 1) {
      Int last = mod(-sum, p_);
      if (last < lo) return false;
      tail_[pos] = last;
      ++checks_;
      return isolated_profile(p_, exponents());
    }
    for (Int v = lo; v < p_ && checks_ < max_checks_; ++v) {
      tail_[pos] = v;
      if (extend(pos + 1, t, sum + v)) return true;
    }
    return false;
  }

  PrimeModulus p_;
  Int k_;
  std::vector<Int> tail_;
  std::uint64_t checks_ = 0;
  std::uint64_t max_checks_ = 0;
};

BranchData search_isolated(PrimeModulus p, Int d, std::uint64_t budget) {
  const Int k = d + 3;
  if (auto found = TailSearch(p, k).run(6, 1'000'000)) return *found;
  if (auto found = first_isolated_in_census(p, k, budget)) return *found;
  throw NoIsolatedClass("no isolated class for p=" + std::to_string(p.value()) + ", d=" + std::to_string(d));
}

}  // namespace

std::vector<RotationCandidate> rotation_candidates(const StratumClass& cls) {
  return candidates_from_profile(cls.p(), profile(cls));
}

IsolationVerdict isolation_verdict(const StratumClass& cls) { return IsolationVerdict(rotation_candidates(cls)); }

BranchData paper_witness(PrimeModulus p, Int d, std::uint64_t budget) {
  if (d < 0) throw std::invalid_argument("dimension must be non-negative");
  if (d <= 1) {
    if (auto found = first_isolated_in_census(p, d + 3, budget)) return *found;
    throw NoIsolatedClass("census(" + std::to_string(p.value()) + ", " + std::to_string(d + 3) +
                          ") has no isolated class");
  }
  if (p >= 7) return case_construction(p, d);
  if (d == 4) return BranchData::validate(p, {1, 1, 1, 2, 3, 3, 4});
  if (d == 6) return BranchData::validate(p, {1, 1, 1, 1, 1, 1, 2, 3, 4});
  return search_isolated(p, d, budget);
}

BranchData isolated_witness(PrimeModulus p, Int d, std::uint64_t budget) {
  BranchData bd = paper_witness(p, d, budget);
  if (isolation_verdict(bd).isolated()) return bd;
  return search_isolated(p, d, budget);
}

}  // namespace pgonal
