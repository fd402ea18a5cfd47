#include "rsld/weights.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace rsld {

SetSystem::SetSystem(unsigned ground, std::vector<std::vector<unsigned>> s)
    : n(ground), sets(std::move(s)) {
  if (sets.empty()) throw std::invalid_argument("need at least one set");
  for (auto& one : sets) {
    std::sort(one.begin(), one.end());
    if (std::adjacent_find(one.begin(), one.end()) != one.end())
      throw std::invalid_argument("sets must not repeat elements");
    for (unsigned e : one)
      if (e < 1 || e > n)
        throw std::invalid_argument("element outside the ground set");
  }
}

AtomProfile atoms(const SetSystem& s) {
  AtomProfile out;
  for (unsigned e = 1; e <= s.n; ++e) {
    IndexMask mask = 0;
    for (unsigned i = 0; i < s.t(); ++i)
      if (std::binary_search(s.sets[i].begin(), s.sets[i].end(), e))
        mask |= IndexMask{1} << i;
    if (mask) ++out[mask];
  }
  return out;
}

int weight(const SetSystem& s, IndexMask J) {
  if (J == 0) throw std::invalid_argument("weight of the empty index set");
  if (J >> s.t()) throw std::invalid_argument("index outside [t]");
  int size_sum = 0;
  std::set<unsigned> uni;
  for (unsigned i = 0; i < s.t(); ++i) {
    if (!(J & (IndexMask{1} << i))) continue;
    size_sum += static_cast<int>(s.sets[i].size());
    uni.insert(s.sets[i].begin(), s.sets[i].end());
  }
  return size_sum - static_cast<int>(uni.size());
}

int weight_all(const SetSystem& s) {
  return weight(s, (IndexMask{1} << s.t()) - 1);
}

int weight_from_atoms(const AtomProfile& p, IndexMask J) {
  if (J == 0) throw std::invalid_argument("weight of the empty index set");
  int acc = 0;
  for (const auto& [U, x] : p) {
    unsigned overlap = std::popcount(U & J);
    if (overlap >= 1) acc += static_cast<int>(overlap - 1) * static_cast<int>(x);
  }
  return acc;
}

int weight_lower_bound(const SetSystem& s) {
  int size_sum = 0;
  for (const auto& one : s.sets) size_sum += static_cast<int>(one.size());
  return size_sum - static_cast<int>(s.n);
}

bool check_weight_hypotheses(const SetSystem& s, unsigned k) {
  if (s.t() < 3) throw std::invalid_argument("need at least three sets");
  const IndexMask full = (IndexMask{1} << s.t()) - 1;
  for (IndexMask J = 1; J <= full; ++J) {
    int bound = (std::popcount(J) - 1) * static_cast<int>(k);
    int w = weight(s, J);
    if (w > bound) return false;
    if (J == full && w != bound) return false;
  }
  return true;
}

namespace {

// Weight of a sub-collection restricted to `chosen` (0-based positions).
int weight_of_selection(const SetSystem& s, const std::vector<unsigned>& chosen) {
  int size_sum = 0;
  std::set<unsigned> uni;
  for (unsigned i : chosen) {
    size_sum += static_cast<int>(s.sets[i].size());
    uni.insert(s.sets[i].begin(), s.sets[i].end());
  }
  return size_sum - static_cast<int>(uni.size());
}

// All size-`r` index subsets of {0..t-1} in lexicographic order.
void for_each_subset(unsigned t, unsigned r,
                     const std::function<bool(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return;
    // next combination
    int pos = static_cast<int>(r) - 1;
    while (pos >= 0 && idx[pos] == t - r + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (unsigned j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TrimResult trim_to_minimal_t(const SetSystem& y, unsigned k) {
  const unsigned t_all = y.t();
  if (t_all < 3) throw std::invalid_argument("need at least three sets");
  const int lk = static_cast<int>(t_all - 1) * static_cast<int>(k);
  if (weight_all(y) < lk)
    throw std::invalid_argument("full weight below (t-1)k");
  for (unsigned i = 0; i < t_all; ++i)
    for (unsigned j = i + 1; j < t_all; ++j) {
      IndexMask pair = (IndexMask{1} << i) | (IndexMask{1} << j);
      if (weight(y, pair) > static_cast<int>(k) - 1)
        throw std::invalid_argument("pair weight must be at most k-1");
    }

  // Smallest t* >= 3 such that some t*-subset reaches weight (t*-1)k;
  // subsets scanned in lexicographic order within each size.
  unsigned t_star = 0;
  std::vector<unsigned> chosen;
  for (unsigned r = 3; r <= t_all && t_star == 0; ++r) {
    for_each_subset(t_all, r, [&](const std::vector<unsigned>& idx) {
      if (weight_of_selection(y, idx) >=
          static_cast<int>(r - 1) * static_cast<int>(k)) {
        t_star = r;
        chosen = idx;
        return true;
      }
      return false;
    });
  }
  if (t_star == 0) throw std::logic_error("no qualifying subset found");

  std::vector<std::vector<unsigned>> work;
  for (unsigned i : chosen) work.push_back(y.sets[i]);
  SetSystem current(y.n, work);

  const int target = static_cast<int>(t_star - 1) * static_cast<int>(k);
  while (weight_all(current) > target) {
    // Remove one occurrence of an element that lies in at least two sets
    // (removal then lowers the weight by exactly one).  Choice: the largest
    // set first, ties by lowest set index, then lowest element.
    int best_set = -1;
    unsigned best_elem = 0;
    for (unsigned i = 0; i < current.t(); ++i) {
      for (unsigned e : current.sets[i]) {
        unsigned occurrences = 0;
        for (const auto& other : current.sets)
          if (std::binary_search(other.begin(), other.end(), e)) ++occurrences;
        if (occurrences < 2) continue;
        if (best_set < 0 ||
            current.sets[i].size() >
                current.sets[static_cast<size_t>(best_set)].size()) {
          best_set = static_cast<int>(i);
          best_elem = e;
        }
        break;  // elements are sorted: the first multi-occurrence is lowest
      }
    }
    if (best_set < 0) throw std::logic_error("positive weight without overlap");
    auto& target_set = current.sets[static_cast<size_t>(best_set)];
    target_set.erase(
        std::find(target_set.begin(), target_set.end(), best_elem));
  }

  return {t_star, chosen, current};
}

}  // namespace rsld
