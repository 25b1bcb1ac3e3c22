#include "pgonal/monodromy.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "pgonal/signature.hpp"

namespace pgonal {

std::string to_string(BranchDataErrorCode code) {
  switch (code) {
    case BranchDataErrorCode::ExponentOutOfRange:
      return "ExponentOutOfRange";
    case BranchDataErrorCode::SumNotZero:
      return "SumNotZero";
    case BranchDataErrorCode::TooFewPoints:
      return "TooFewPoints";
  }
  return "Unknown";
}

namespace {

std::string join(const std::vector<Int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s;
}

}  // namespace

BranchData BranchData::validate(PrimeModulus p, std::vector<Int> exponents) {
  for (Int r : exponents) {
    if (r < 1 || r >= p)
      throw BranchDataError(BranchDataErrorCode::ExponentOutOfRange,
                            "exponent " + std::to_string(r) + " is outside [1, " + std::to_string(p - 1) + "]");
  }
  if (exponents.size() < 3)
    throw BranchDataError(BranchDataErrorCode::TooFewPoints,
                          "need at least 3 branch points, got " + std::to_string(exponents.size()));
  Int sum = 0;
  for (Int r : exponents) sum = checked_add(sum, r);
  if (mod(sum, p) != 0)
    throw BranchDataError(BranchDataErrorCode::SumNotZero,
                          "exponent sum " + std::to_string(sum) + " is " + std::to_string(mod(sum, p)) +
                              " mod " + std::to_string(p.value()) + ", not 0");
  return BranchData(p, std::move(exponents));
}

Int BranchData::genus() const { return genus_and_dim(p_, k()).genus; }

std::string BranchData::to_string() const {
  return "p=" + std::to_string(p_.value()) + " (" + join(exponents_) + ")";
}

Int Profile::max_multiplicity() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::string Profile::to_string() const {
  return "(" + join(std::vector<Int>(counts.begin() + 1, counts.end())) + ")";
}

namespace {

Profile profile_of(Int p, const std::vector<Int>& exponents) {
  Profile prof{p, static_cast<Int>(exponents.size()), std::vector<Int>(static_cast<std::size_t>(p), 0)};
  for (Int r : exponents) ++prof.counts[static_cast<std::size_t>(r)];
  return prof;
}

// Sorted u*R without allocating a fresh vector each time.
void scaled_sorted(const std::vector<Int>& exps, Int u, Int p, std::vector<Int>& out) {
  out.resize(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    out[i] = static_cast<Int>(static_cast<__int128>(exps[i]) * u % p);
  std::sort(out.begin(), out.end());
}

// The least sorted multiple starts with 1, so only u = r^{-1} for r in R
// can attain it.
std::vector<Int> least_multiple(const std::vector<Int>& exps, Int p) {
  std::vector<Int> distinct = exps;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Int> best, scratch;
  for (Int r : distinct) {
    scaled_sorted(exps, inverse_mod(r, p), p, scratch);
    if (best.empty() || scratch < best) best = scratch;
  }
  return best;
}

// `sorted` must be sorted ascending and start with 1.
bool is_least_multiple(const std::vector<Int>& sorted, Int p, std::vector<Int>& scratch) {
  Int previous = 0;
  for (Int r : sorted) {
    if (r == previous || r == 1) {
      previous = r;
      continue;
    }
    previous = r;
    scaled_sorted(sorted, inverse_mod(r, p), p, scratch);
    if (scratch < sorted) return false;
  }
  return true;
}

}  // namespace

Profile profile(const BranchData& bd) { return profile_of(bd.p(), bd.exponents()); }

Profile profile(const StratumClass& cls) { return profile_of(cls.p(), cls.canonical()); }

StratumClass::StratumClass(PrimeModulus p, std::vector<Int> canonical)
    : p_(p), canonical_(std::move(canonical)) {
  auto gd = genus_and_dim(p_, static_cast<Int>(canonical_.size()));
  genus_ = gd.genus;
  dim_ = gd.dim;
}

std::string StratumClass::to_string() const {
  return "p=" + std::to_string(p_.value()) + " [" + join(canonical_) + "] g=" + std::to_string(genus_) +
         " d=" + std::to_string(dim_);
}

StratumClass canonical_form(const BranchData& bd) {
  return StratumClass(bd.p(), least_multiple(bd.exponents(), bd.p()));
}

bool equivalent(const BranchData& a, const BranchData& b) {
  if (a.p() != b.p()) throw std::invalid_argument("equivalent: modulus mismatch");
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Depth-first walk over non-decreasing vectors (1, v_2, ..., v_k). Positions
// 1..k-2 branch; the last entry is forced by the sum condition.
class CensusWalker {
 public:
  CensusWalker(Int p, Int k, std::uint64_t budget, std::atomic<std::uint64_t>& nodes,
               std::atomic<bool>& abort)
      : p_(p), k_(k), budget_(budget), nodes_(nodes), abort_(abort), vec_(static_cast<std::size_t>(k)) {
    vec_[0] = 1;
  }

  void run_subtree(Int second) {
    if (!count_node()) return;
    vec_[1] = second;
    descend(2, checked_add(1, second));
  }

  std::vector<std::vector<Int>>& found() { return found_; }

 private:
  bool count_node() {
    if (abort_.load(std::memory_order_relaxed)) return false;
    std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_) {
      abort_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  // Can `slots` values in [lo, p-1] sum to `residue` mod p? Reachable sums
  // form the full integer interval [slots*lo, slots*(p-1)].
  bool reachable(Int slots, Int lo, Int residue) const {
    if (slots == 0) return mod(residue, p_) == 0;
    Int low = slots * lo;
    Int first = low + mod(residue - low, p_);
    return first <= slots * (p_ - 1);
  }

  void descend(Int pos, Int sum) {
    const Int prev = vec_[static_cast<std::size_t>(pos - 1)];
    if (pos == k_ - 1) {
      Int last = mod(-sum, p_);
      if (last >= prev && last != 0) {
        vec_[static_cast<std::size_t>(pos)] = last;
        if (is_least_multiple(vec_, p_, scratch_)) found_.push_back(vec_);
      }
      return;
    }
    const Int slots_after = k_ - 1 - pos;
    for (Int v = prev; v < p_; ++v) {
      if (!reachable(slots_after, v, -(sum + v))) continue;
      if (!count_node()) return;
      vec_[static_cast<std::size_t>(pos)] = v;
      descend(pos + 1, sum + v);
    }
  }

  Int p_, k_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& abort_;
  std::vector<Int> vec_;
  std::vector<Int> scratch_;
  std::vector<std::vector<Int>> found_;
};

}  // namespace

std::vector<StratumClass> census(PrimeModulus p, Int k, std::uint64_t budget, unsigned jobs) {
  if (k < 3) throw BranchDataError(BranchDataErrorCode::TooFewPoints, "census needs k >= 3");
  checked_mul(k, p.value() - 1);  // running sums never exceed k(p-1)
  std::atomic<std::uint64_t> nodes{1};
  std::atomic<bool> abort{false};
  if (budget < 1) throw BudgetExceeded(budget);

  jobs = std::max(1u, jobs);
  std::vector<std::vector<std::vector<Int>>> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);

  auto work = [&](unsigned worker) {
    try {
      CensusWalker walker(p, k, budget, nodes, abort);
      for (Int second = 1 + worker; second < p; second += jobs) walker.run_subtree(second);
      partial[worker] = std::move(walker.found());
    } catch (...) {
      errors[worker] = std::current_exception();
      abort.store(true);
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (nodes.load() > budget) throw BudgetExceeded(budget);

  std::vector<StratumClass> out;
  for (auto& chunk : partial)
    for (auto& v : chunk) out.push_back(canonical_form(BranchData::validate(p, std::move(v))));
  std::sort(out.begin(), out.end());
  return out;
}

Int burnside_fixed_count(Unit u, Int k) {
  const Int p = u.modulus();
  // Orbits of <u> on {1..p-1}; an invariant multiset is constant on each.
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  struct Orbit {
    Int size;
    Int residue;
  };
  std::vector<Orbit> orbits;
  for (Int j = 1; j < p; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    Orbit o{0, 0};
    for (Int x = j; !seen[static_cast<std::size_t>(x)]; x = mod(x * u.value(), p)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++o.size;
      o.residue = mod(o.residue + x, p);
    }
    orbits.push_back(o);
  }

  // ways[size][residue]
  std::vector<std::vector<Int>> ways(static_cast<std::size_t>(k + 1), std::vector<Int>(static_cast<std::size_t>(p), 0));
  ways[0][0] = 1;
  for (const Orbit& o : orbits) {
    auto next = ways;  // multiplicity 0 of this orbit
    for (Int size = 0; size <= k; ++size) {
      for (Int res = 0; res < p; ++res) {
        Int w = ways[static_cast<std::size_t>(size)][static_cast<std::size_t>(res)];
        if (w == 0) continue;
        for (Int c = 1; size + c * o.size <= k; ++c) {
          auto& cell = next[static_cast<std::size_t>(size + c * o.size)][static_cast<std::size_t>(mod(res + c * o.residue, p))];
          cell = checked_add(cell, w);
        }
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(k)][0];
}

Int burnside_count(PrimeModulus p, Int k) {
  if (k < 3) throw BranchDataError(BranchDataErrorCode::TooFewPoints, "burnside_count needs k >= 3");
  Int total = 0;
  for (Int v = 1; v < p; ++v) total = checked_add(total, burnside_fixed_count(Unit(v, p), k));
  if (total % (p - 1) != 0) throw std::logic_error("Burnside sum not divisible by group order");
  return total / (p - 1);
}

int construction_case(PrimeModulus p, Int d) {
  const Int r = mod(d, p);
  if (r == 0) return 2;
  if (r == 2) return 3;
  if (r == p - 2) return 4;
  if (r == p - 1) return 5;
  return 1;
}

BranchData case_construction(PrimeModulus p, Int d) {
  if (p < 7 || d < 2) throw std::invalid_argument("case construction needs p >= 7 and d >= 2");
  const Int r = mod(d, p);
  std::vector<Int> tail;
  switch (construction_case(p, d)) {
    case 1: tail = {2, p - 2, p - r}; break;
    case 2: tail = {3, 5, mod(p - 8, p)}; break;
    case 3: tail = {3, p - 3, p - 2}; break;
    case 4: tail = {3, p - 3, 2}; break;
    case 5: tail = {4, 5, mod(p - 8, p)}; break;
  }
  std::vector<Int> exps(static_cast<std::size_t>(d), 1);
  exps.insert(exps.end(), tail.begin(), tail.end());
  return BranchData::validate(p, std::move(exps));
}

}  // namespace pgonal
