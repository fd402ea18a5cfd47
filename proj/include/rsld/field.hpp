#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rsld/rng.hpp"

namespace rsld {

class Field;
class Elem;
class UniPoly;
using FieldPtr = std::shared_ptr<const Field>;

// Exact finite field arithmetic.  Three representations share one interface:
//   Prime  - GF(p), residues mod p
//   Binary - GF(2^m) as bit-packed polynomials over GF(2) modulo a fixed
//            irreducible modulus
//   Tower  - an extension of degree `step` over another Field, elements
//            stored as coordinate vectors over the immediate base
//
// Towers keep the nested representation (rather than one flat modulus) so a
// chain GF(2) < GF(2^k) < GF(2^{k^2}) < ... mirrors the construction it is
// used for; flatten_gf2() exposes absolute GF(2) coordinates for rank tests.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Prime, Binary, Tower };

  // GF(p), p prime.
  static FieldPtr prime(uint64_t p);

  // GF(p^m).  If modulus is empty a deterministic irreducible is selected:
  // the monic degree-m polynomial whose coefficient tuple
  // (c_{m-1},...,c_1,c_0) is lexicographically smallest among irreducibles.
  // Only p = 2 is supported for m >= 2 (packed representation); a supplied
  // modulus is given low-degree-first including the leading 1.
  static FieldPtr create(uint64_t p, unsigned m,
                         const std::vector<uint64_t>& modulus = {});

  // Degree-`step` extension of `base` together with a generator gamma whose
  // minimal polynomial over `base` has degree exactly `step`.  Requires
  // characteristic 2 and step >= 2.
  static std::pair<FieldPtr, Elem> tower_extend(const FieldPtr& base,
                                                unsigned step);

  Kind kind() const { return kind_; }
  uint64_t characteristic() const { return p_; }
  unsigned abs_degree() const { return abs_degree_; }
  // log2(q); exact for characteristic 2.
  double log2_order() const;
  // q when it fits in 64 bits.
  std::optional<uint64_t> order_u64() const;

  const FieldPtr& base() const { return base_; }
  unsigned step() const { return step_; }
  // Tower modulus (monic, length step+1, coefficients in the base field).
  const std::vector<Elem>& tower_modulus() const { return tower_mod_; }
  // Binary modulus bits; bit i of word i/64 is the coefficient of x^i.
  const std::vector<uint64_t>& binary_modulus() const { return mod_bits_; }
  unsigned binary_m() const { return m_; }

  Elem zero() const;
  Elem one() const;
  // Element with the given enumeration index (mixed-radix over coordinates,
  // coordinate 0 least significant).  Index must be < q.
  Elem elem(uint64_t index) const;
  uint64_t index_of(const Elem& e) const;
  Elem uniform(Rng& rng) const;

  static bool same_spec(const Field& a, const Field& b);

  ~Field() = default;

 private:
  Field() = default;
  friend class Elem;

  Kind kind_ = Kind::Prime;
  uint64_t p_ = 2;
  unsigned abs_degree_ = 1;
  // Binary
  std::vector<uint64_t> mod_bits_;
  unsigned m_ = 0;
  // Tower
  FieldPtr base_;
  unsigned step_ = 0;
  std::vector<Elem> tower_mod_;
};

class Elem {
 public:
  Elem() = default;  // detached; usable only after assignment

  const FieldPtr& field() const { return f_; }
  bool valid() const { return f_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator-() const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }

  Elem inv() const;
  Elem pow(uint64_t e) const;

  // Coordinates over the immediate base, low index = constant term.
  std::vector<Elem> coords() const;
  // Absolute GF(2) coordinates (characteristic 2 only), length abs_degree().
  std::vector<uint8_t> flatten_gf2() const;

  uint64_t prime_value() const;         // Prime fields
  std::vector<uint64_t> bits() const;   // Binary fields

  std::string to_string() const;

 private:
  friend class Field;
  using Rep =
      std::variant<std::monostate, uint64_t, std::vector<uint64_t>,
                   std::vector<Elem>>;
  Elem(FieldPtr f, Rep v) : f_(std::move(f)), v_(std::move(v)) {}

  FieldPtr f_;
  Rep v_;
};

// Dense univariate polynomial, coefficients low-degree-first with no stored
// trailing zeros.  Degree of the zero polynomial is -1.
class UniPoly {
 public:
  explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}
  UniPoly(FieldPtr f, std::vector<Elem> coeffs);

  static UniPoly from_indices(const FieldPtr& f,
                              const std::vector<uint64_t>& coeff_indices);

  const FieldPtr& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(size_t i) const;  // zero beyond degree

  Elem eval(const Elem& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly monic() const;
  // Division with remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;
  UniPoly mod(const UniPoly& divisor) const { return divrem(divisor).second; }
  UniPoly derivative() const;

  static UniPoly gcd(UniPoly a, UniPoly b);
  // base^e mod modulus
  static UniPoly powmod(const UniPoly& base, uint64_t e,
                        const UniPoly& modulus);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<Elem> c_;
};

// True iff the monic polynomial f (over any supported field) is irreducible.
// Rabin's test; cheap structural rejections (zero constant term, nontrivial
// gcd with the derivative) run first.
bool is_irreducible(const UniPoly& f);

// The k^n products a_1^{i_1}...a_n^{i_n} with 0 <= i_j <= k-1 are tested for
// GF(2)-linear independence via the rank of their flattened coordinate
// matrix.  All alphas must live in one characteristic-2 field of absolute
// degree exactly k^n.
bool monomial_products_independent(const std::vector<Elem>& alphas,
                                   unsigned k);

}  // namespace rsld
