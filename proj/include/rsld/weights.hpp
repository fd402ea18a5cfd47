#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace rsld {

// t subsets of the ground set [n].  Sets are stored as sorted vectors of
// 1-based elements.
struct SetSystem {
  unsigned n = 0;
  std::vector<std::vector<unsigned>> sets;

  SetSystem() = default;
  SetSystem(unsigned ground, std::vector<std::vector<unsigned>> s);
  unsigned t() const { return static_cast<unsigned>(sets.size()); }
};

// Index subset of [t] as a bitmask (bit i-1 = set i included).
using IndexMask = uint32_t;

// x_J for every nonempty J: the number of ground elements belonging to
// exactly the sets indexed by J.
using AtomProfile = std::map<IndexMask, unsigned>;

AtomProfile atoms(const SetSystem& s);

// wt(I_J) = sum of |I_j| over j in J minus |union of I_j over j in J|.
int weight(const SetSystem& s, IndexMask J);
int weight_all(const SetSystem& s);

// Same weight computed from an atom profile:
// sum over U with U∩J nonempty of (|U∩J|-1) * x_U.
int weight_from_atoms(const AtomProfile& p, IndexMask J);

// sum |I_i| - n; always a lower bound for weight over the full index set.
int weight_lower_bound(const SetSystem& s);

// True iff wt(I_J) <= (|J|-1)k for every nonempty J of [t] and equality holds
// at J = [t].  Requires t >= 3.
bool check_weight_hypotheses(const SetSystem& s, unsigned k);

struct TrimResult {
  unsigned t_star = 0;
  std::vector<unsigned> chosen;  // indices (0-based) of the selected sets
  SetSystem trimmed;             // the t_star trimmed subsets, reindexed
};

// Given t = L+1 sets with wt(full) >= L*k and every pair weight <= k-1,
// selects the smallest t* in {3..L+1} for which some t*-subset has weight at
// least (t*-1)k, then removes one overlap occurrence at a time (largest set
// first, ties by lowest set index then lowest element) until the full weight
// equals exactly (t*-1)k.  The result satisfies check_weight_hypotheses.
TrimResult trim_to_minimal_t(const SetSystem& y, unsigned k);

}  // namespace rsld
