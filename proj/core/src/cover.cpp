#include "blocklang/cover.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace blocklang {

namespace {

// descending popcount, then descending bit string
bool candidate_before(const BitVector& a, const BitVector& b) {
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca > cb;
  return b < a;
}

void check_width(const BitVector& v, std::size_t width) {
  if (v.size() != width) {
    throw Error(ErrorCode::WidthMismatch,
                "vector of width " + std::to_string(v.size()) + ", expected " + std::to_string(width));
  }
}

void check_feasible(const CoverInstance& inst) {
  for (const BitVector& t : inst.targets) {
    BitVector acc(inst.width);
    for (const BitVector& c : inst.candidates)
      if (c.is_submask_of(t)) acc |= c;
    if (!(acc == t)) throw Error(ErrorCode::Infeasible, "target " + t.to_string() + " cannot be covered");
  }
}

CoverSolution finish(const CoverInstance& inst, std::vector<BitVector> chosen, bool certified, std::uint64_t nodes) {
  std::sort(chosen.begin(), chosen.end(), DescendingBits{});
  CoverSolution sol;
  sol.elements = std::move(chosen);
  sol.certified_minimal = certified;
  sol.nodes = nodes;
  sol.selection.reserve(inst.targets.size());
  for (const BitVector& t : inst.targets) sol.selection.push_back(select_subset(sol.elements, t));
  return sol;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (std::uint32_t x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class ExactSearch {
 public:
  ExactSearch(const CoverInstance& inst, std::uint64_t budget) : inst_(inst), budget_(budget) {
    const std::size_t nc = inst.candidates.size();
    const std::size_t nt = inst.targets.size();
    inside_.resize(nc);
    sub_.resize(nt);
    for (std::uint32_t c = 0; c < nc; ++c)
      for (std::uint32_t t = 0; t < nt; ++t)
        if (inst.candidates[c].is_submask_of(inst.targets[t])) {
          inside_[c].push_back(t);
          sub_[t].push_back(c);
        }
  }

  // Returns true and fills chosen_ if a cover of at most `limit` elements exists.
  bool run(std::size_t limit) {
    limit_ = limit;
    chosen_.clear();
    used_.assign(inst_.candidates.size(), 0);
    coverage_.assign(inst_.targets.size(), BitVector(inst_.width));
    seen_.clear();
    return descend();
  }

  bool exhausted() const noexcept { return nodes_ > budget_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::vector<BitVector> solution() const {
    std::vector<BitVector> out;
    for (std::uint32_t c : chosen_) out.push_back(inst_.candidates[c]);
    return out;
  }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 20;

  bool descend() {
    if (++nodes_ > budget_) return false;
    std::size_t open = inst_.targets.size();
    for (std::size_t t = 0; t < inst_.targets.size(); ++t) {
      if (!(coverage_[t] == inst_.targets[t])) {
        open = t;
        break;
      }
    }
    if (open == inst_.targets.size()) return true;
    if (chosen_.size() == limit_) return false;

    std::vector<std::uint32_t> key = chosen_;
    std::sort(key.begin(), key.end());
    if (seen_.size() < kMemoCap && !seen_.insert(std::move(key)).second) return false;

    BitVector missing = inst_.targets[open];
    missing.subtract(coverage_[open]);
    const std::size_t bit = missing.find_first();
    for (std::uint32_t c : sub_[open]) {
      if (used_[c] || !inst_.candidates[c].test(bit)) continue;
      std::vector<BitVector> saved;
      saved.reserve(inside_[c].size());
      for (std::uint32_t t : inside_[c]) {
        saved.push_back(coverage_[t]);
        coverage_[t] |= inst_.candidates[c];
      }
      used_[c] = 1;
      chosen_.push_back(c);
      if (descend()) return true;
      chosen_.pop_back();
      used_[c] = 0;
      for (std::size_t i = 0; i < inside_[c].size(); ++i) coverage_[inside_[c][i]] = std::move(saved[i]);
      if (exhausted()) return false;
    }
    return false;
  }

  const CoverInstance& inst_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t limit_ = 0;
  std::vector<std::vector<std::uint32_t>> inside_;
  std::vector<std::vector<std::uint32_t>> sub_;
  std::vector<std::uint32_t> chosen_;
  std::vector<char> used_;
  std::vector<BitVector> coverage_;
  std::unordered_set<std::vector<std::uint32_t>, VectorHash> seen_;
};

}  // namespace

CoverBudgetExceeded::CoverBudgetExceeded(std::uint64_t budget, CoverSolution best)
    : Error(ErrorCode::BudgetExceeded, "cover search exceeded " + std::to_string(budget) + " nodes"),
      best_(std::move(best)) {
  best_.certified_minimal = false;
}

CoverInstance make_cover_instance(std::size_t width, std::vector<BitVector> targets, std::vector<BitVector> candidates) {
  CoverInstance inst;
  inst.width = width;
  for (const BitVector& v : targets) check_width(v, width);
  for (const BitVector& v : candidates) check_width(v, width);
  std::erase_if(targets, [](const BitVector& v) { return v.none(); });
  std::sort(targets.begin(), targets.end(), DescendingBits{});
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::erase_if(candidates, [&](const BitVector& c) {
    return c.none() || std::none_of(targets.begin(), targets.end(), [&](const BitVector& t) { return c.is_submask_of(t); });
  });
  std::sort(candidates.begin(), candidates.end(), candidate_before);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  inst.targets = std::move(targets);
  inst.candidates = std::move(candidates);
  return inst;
}

bool is_cover(const std::vector<BitVector>& elements, const BitVector& target) {
  BitVector acc(target.size());
  for (const BitVector& e : elements) {
    check_width(e, target.size());
    if (e.is_submask_of(target)) acc |= e;
  }
  return acc == target;
}

std::vector<std::size_t> select_subset(const std::vector<BitVector>& elements, const BitVector& target) {
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].any() && elements[i].is_submask_of(target)) pool.push_back(i);
  if (!is_cover(elements, target)) throw Error(ErrorCode::Infeasible, "target " + target.to_string() + " not covered");
  if (target.none()) return {};

  // suffix[i] = OR of pool[i..]; lets the search drop branches that cannot finish
  std::vector<BitVector> suffix(pool.size() + 1, BitVector(target.size()));
  for (std::size_t i = pool.size(); i-- > 0;) suffix[i] = suffix[i + 1] | elements[pool[i]];

  constexpr std::uint64_t kStepCap = 1'000'000;
  std::uint64_t steps = 0;
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= pool.size(); ++size) {
    // lexicographic combinations of `size` pool entries
    auto search = [&](auto&& self, std::size_t from, const BitVector& acc) -> bool {
      if (++steps > kStepCap) return false;
      if (pick.size() == size) return acc == target;
      const std::size_t left = size - pick.size();
      for (std::size_t i = from; i + left <= pool.size(); ++i) {
        if (!((acc | suffix[i]) == target)) return false;
        pick.push_back(pool[i]);
        if (self(self, i + 1, acc | elements[pool[i]])) return true;
        pick.pop_back();
      }
      return false;
    };
    pick.clear();
    if (search(search, 0, BitVector(target.size()))) return pick;
    if (steps > kStepCap) break;
  }
  return pool;
}

CoverSolution greedy_cover(const CoverInstance& inst) {
  check_feasible(inst);
  std::vector<BitVector> coverage(inst.targets.size(), BitVector(inst.width));
  std::vector<std::size_t> chosen;
  std::vector<char> used(inst.candidates.size(), 0);
  while (true) {
    std::size_t best = inst.candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
      if (used[c]) continue;
      std::size_t gain = 0;
      for (std::size_t t = 0; t < inst.targets.size(); ++t) {
        if (!inst.candidates[c].is_submask_of(inst.targets[t])) continue;
        BitVector fresh = inst.candidates[c];
        fresh.subtract(coverage[t]);
        gain += fresh.count();
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == inst.candidates.size()) break;
    used[best] = 1;
    chosen.push_back(best);
    for (std::size_t t = 0; t < inst.targets.size(); ++t)
      if (inst.candidates[best].is_submask_of(inst.targets[t])) coverage[t] |= inst.candidates[best];
  }

  // drop elements the rest already make redundant, latest picks first
  std::vector<BitVector> elements;
  for (std::size_t c : chosen) elements.push_back(inst.candidates[c]);
  for (std::size_t i = elements.size(); i-- > 0;) {
    std::vector<BitVector> rest = elements;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (std::all_of(inst.targets.begin(), inst.targets.end(), [&](const BitVector& t) { return is_cover(rest, t); }))
      elements = std::move(rest);
  }
  return finish(inst, std::move(elements), false, 0);
}

CoverSolution min_cover(const CoverInstance& inst, std::uint64_t budget) {
  CoverSolution upper = greedy_cover(inst);
  if (upper.size() <= 1) {
    upper.certified_minimal = true;
    return upper;
  }
  ExactSearch search(inst, budget);
  for (std::size_t limit = 1; limit < upper.size(); ++limit) {
    if (search.run(limit)) return finish(inst, search.solution(), true, search.nodes());
    if (search.exhausted()) {
      upper.nodes = search.nodes();
      throw CoverBudgetExceeded(budget, std::move(upper));
    }
  }
  upper.certified_minimal = true;
  upper.nodes = search.nodes();
  return upper;
}

std::string write_cov1(const CoverInstance& inst) {
  std::ostringstream out;
  out << "COV1 " << inst.width << '\n';
  for (const BitVector& t : inst.targets) out << "target " << t.to_string() << '\n';
  for (const BitVector& c : inst.candidates) out << "cand " << c.to_string() << '\n';
  return out.str();
}

CoverInstance parse_cov1(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  std::size_t width = 0;
  if (!(in >> tag >> width) || tag != "COV1") throw Error(ErrorCode::Parse, "missing COV1 header");
  std::vector<BitVector> targets, candidates;
  std::string bits;
  while (in >> tag) {
    if (!(in >> bits)) throw Error(ErrorCode::Parse, "line '" + tag + "' without bits");
    BitVector v = BitVector::from_string(bits);
    if (v.size() != width) throw Error(ErrorCode::Parse, "vector '" + bits + "' has wrong width");
    if (tag == "target") {
      targets.push_back(std::move(v));
    } else if (tag == "cand") {
      candidates.push_back(std::move(v));
    } else {
      throw Error(ErrorCode::Parse, "unknown line tag '" + tag + "'");
    }
  }
  return make_cover_instance(width, std::move(targets), std::move(candidates));
}

}  // namespace blocklang
