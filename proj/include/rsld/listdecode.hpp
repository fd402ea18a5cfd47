#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsld/rscode.hpp"

namespace rsld {

// Exact rational with small components.
struct Rational {
  long long num = 0;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d);
  double to_double() const { return static_cast<double>(num) / den; }
  bool operator==(const Rational&) const = default;
};

struct LDVerdict {
  bool decodable = true;
  // Present when decodable is false: a center and L+1 codewords within the
  // radius around it.
  std::optional<std::vector<Elem>> center;
  std::vector<Codeword> witness;
};

// Exact search for a vector y with max_i d(y, c_i) <= radius.  Coordinate
// values are restricted to the values appearing among the codewords plus one
// "match none" value (available when the field is larger than the number of
// distinct values at that coordinate); this loses no generality.  Branch and
// bound: coordinates are processed in descending branching factor with a
// guaranteed-future-misses prune.
std::optional<std::vector<Elem>> exists_common_center(
    const std::vector<std::vector<Elem>>& codewords, unsigned radius);

// Ground-truth list-decodability by exhaustive (L+1)-subset search over the
// code (q^k <= guard) or over an explicitly supplied codeword subset.
LDVerdict is_list_decodable(const RSCode& code, unsigned radius, unsigned L,
                            unsigned threads = 1,
                            const std::vector<Codeword>* subset = nullptr,
                            uint64_t enumeration_guard = 100000);

// L * q^(n - floor((L+1)rn/L)), or q^(n - floor((L+1)rn/L)) for linear codes
// with q > L.  Throws on overflow past 64 bits and on linear=true with q<=L.
uint64_t generalized_singleton_max_size(unsigned n, uint64_t q, unsigned rn,
                                        unsigned L, bool linear);

struct OptimalRadius {
  Rational radius;     // L(n-k) / ((L+1)n)
  Rational rn_exact;   // L(n-k) / (L+1)
  unsigned rn_floor;
  bool divisible;      // true iff (L+1) | L(n-k)
};
OptimalRadius optimal_radius(unsigned n, unsigned k, unsigned L);

// Constructive pigeonhole witness: given more than L*q^(n-a) codewords with
// a = rn + floor(rn/L), produces a center y and L+1 distinct codewords at
// distance <= rn from it.  The last a coordinates are split into consecutive
// blocks, larger blocks first.
struct SingletonWitness {
  std::vector<Elem> center;
  std::vector<std::vector<Elem>> codewords;  // L+1 of them
};
SingletonWitness singleton_violation_witness(
    const std::vector<std::vector<Elem>>& codewords, unsigned n, unsigned rn,
    unsigned L);

// For an [n,k]-RS code: radius 1 - sqrt((k-1)/n) (returned via the exact
// radicand) and list bound q*n*(n-k+1).
struct JohnsonBound {
  Rational radicand;   // (k-1)/n; the radius is 1 - sqrt(radicand)
  uint64_t list_bound;
  double radius() const;
};
JohnsonBound johnson_bound(unsigned n, unsigned k, uint64_t q);

}  // namespace rsld
