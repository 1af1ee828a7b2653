#pragma once

// Reference implementations that share no code with the library: words are
// plain strings over 'a'.., languages are std::set<std::string>.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Language = std::set<std::string>;

inline std::vector<std::string> all_words(unsigned k, unsigned len) {
  std::vector<std::string> out{""};
  for (unsigned i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (unsigned s = 0; s < k; ++s) next.push_back(w + static_cast<char>('a' + s));
    out = std::move(next);
  }
  return out;
}

inline Language language_of(const std::string& bits, unsigned k, unsigned len) {
  const auto words = all_words(k, len);
  Language l;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '1') l.insert(words.at(i));
  return l;
}

inline std::string bits_of(const Language& l, unsigned k, unsigned len) {
  std::string out;
  for (const auto& w : all_words(k, len)) out.push_back(l.count(w) ? '1' : '0');
  return out;
}

inline std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

/// Moves bit ind(w) to ind(reverse(w)).
inline std::string reverse_by_index(const std::string& bits, unsigned k, unsigned len) {
  Language r;
  for (const auto& w : language_of(bits, k, len)) r.insert(reversed(w));
  return bits_of(r, k, len);
}

/// Number of states of the minimal complete DFA: one state per distinct
/// non-empty residual language of a prefix-tree state, plus the sink.
inline std::size_t dsc_by_residuals(const Language& l) {
  std::set<Language> residuals;
  std::set<std::string> prefixes;
  for (const auto& w : l)
    for (std::size_t i = 0; i <= w.size(); ++i) prefixes.insert(w.substr(0, i));
  for (const auto& p : prefixes) {
    Language res;
    for (const auto& w : l)
      if (w.compare(0, p.size(), p) == 0) res.insert(w.substr(p.size()));
    residuals.insert(res);
  }
  return residuals.size() + 1;
}

/// Widths of the trim minimal DFA by rank (rank = remaining length).
inline std::vector<std::size_t> dfa_widths_by_residuals(const Language& l, unsigned len) {
  std::vector<std::set<Language>> per_rank(len + 1);
  std::set<std::string> prefixes;
  for (const auto& w : l)
    for (std::size_t i = 0; i <= w.size(); ++i) prefixes.insert(w.substr(0, i));
  for (const auto& p : prefixes) {
    Language res;
    for (const auto& w : l)
      if (w.compare(0, p.size(), p) == 0) res.insert(w.substr(p.size()));
    per_rank[len - p.size()].insert(res);
  }
  std::vector<std::size_t> out;
  for (const auto& s : per_rank) out.push_back(s.size());
  return out;
}

/// Smallest number of candidates whose submask-ORs rebuild every target,
/// found by enumerating subsets in increasing size.
inline std::size_t brute_force_min_cover(const std::vector<std::uint32_t>& targets,
                                         const std::vector<std::uint32_t>& candidates) {
  const std::size_t n = candidates.size();
  auto covers = [&](std::uint32_t mask_of_chosen) {
    for (std::uint32_t t : targets) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask_of_chosen >> i) & 1U)
          if ((candidates[i] & ~t) == 0) acc |= candidates[i];
      if (acc != t) return false;
    }
    return true;
  };
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) m |= 1U << i;
      if (covers(m)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return SIZE_MAX;
}

/// MAX witness straight from its membership condition, with words as strings
/// and binary numbers built by hand.
inline Language max_language(unsigned len, unsigned tail) {
  Language l;
  for (const auto& w : all_words(2, len)) {
    std::uint64_t head_value = 0, tail_value = 0;
    for (unsigned i = 0; i < len - tail; ++i) head_value = head_value * 2 + (w[i] == 'b');
    for (unsigned i = len - tail; i < len; ++i) tail_value = tail_value * 2 + (w[i] == 'b');
    const std::uint64_t n = head_value + 1;
    // t-th rightmost binary digit of n
    std::string bin;
    for (std::uint64_t v = n; v > 0; v /= 2) bin.insert(bin.begin(), static_cast<char>('0' + v % 2));
    if (tail_value < bin.size() && bin[bin.size() - 1 - tail_value] == '1') l.insert(w);
  }
  return l;
}

}  // namespace oracle
