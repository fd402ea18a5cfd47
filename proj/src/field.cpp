#include "rsld/field.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rsld {

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
  };
  auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) -> uint64_t {
    uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int64_t inv_mod_i64(int64_t a, int64_t m) {
  int64_t t = 0, new_t = 1, r = m, new_r = a % m;
  if (new_r < 0) new_r += m;
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw std::domain_error("inverse of zero or non-unit");
  return t < 0 ? t + m : t;
}

// ---- bit-polynomial helpers for Binary fields ------------------------------

int bp_degree(const std::vector<uint64_t>& a) {
  for (size_t w = a.size(); w-- > 0;) {
    if (a[w]) return static_cast<int>(w * 64 + 63 - __builtin_clzll(a[w]));
  }
  return -1;
}

bool bp_get(const std::vector<uint64_t>& a, unsigned i) {
  unsigned w = i / 64;
  return w < a.size() && ((a[w] >> (i % 64)) & 1);
}

void bp_flip(std::vector<uint64_t>& a, unsigned i) {
  unsigned w = i / 64;
  if (w >= a.size()) a.resize(w + 1, 0);
  a[w] ^= uint64_t{1} << (i % 64);
}

// a ^= b << shift
void bp_xor_shifted(std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                    unsigned shift) {
  unsigned ws = shift / 64, bs = shift % 64;
  size_t need = b.size() + ws + 1;
  if (a.size() < need) a.resize(need, 0);
  for (size_t i = 0; i < b.size(); ++i) {
    a[i + ws] ^= b[i] << bs;
    if (bs) a[i + ws + 1] ^= b[i] >> (64 - bs);
  }
}

std::vector<uint64_t> bp_mul(const std::vector<uint64_t>& a,
                             const std::vector<uint64_t>& b) {
  std::vector<uint64_t> out(a.size() + b.size() + 1, 0);
  for (size_t w = 0; w < a.size(); ++w) {
    uint64_t word = a[w];
    while (word) {
      unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
      word &= word - 1;
      bp_xor_shifted(out, b, static_cast<unsigned>(w * 64 + bit));
    }
  }
  return out;
}

void bp_reduce(std::vector<uint64_t>& a, const std::vector<uint64_t>& mod,
               int mod_deg) {
  for (int d = bp_degree(a); d >= mod_deg; d = bp_degree(a)) {
    bp_xor_shifted(a, mod, static_cast<unsigned>(d - mod_deg));
  }
}

void bp_trim(std::vector<uint64_t>& a, size_t words) {
  a.resize(words, 0);
}

std::vector<uint64_t> bp_inv(const std::vector<uint64_t>& a,
                             const std::vector<uint64_t>& mod, int mod_deg) {
  // Extended Euclid in GF(2)[x].
  std::vector<uint64_t> r0 = mod, r1 = a;
  std::vector<uint64_t> t0, t1 = {1};
  int d1 = bp_degree(r1);
  if (d1 < 0) throw std::domain_error("inverse of zero");
  while (d1 > 0) {
    int d0 = bp_degree(r0);
    while (d0 >= d1) {
      bp_xor_shifted(r0, r1, static_cast<unsigned>(d0 - d1));
      bp_xor_shifted(t0, t1, static_cast<unsigned>(d0 - d1));
      d0 = bp_degree(r0);
    }
    std::swap(r0, r1);
    std::swap(t0, t1);
    d1 = bp_degree(r1);
  }
  if (d1 != 0) throw std::domain_error("element not invertible");
  bp_reduce(t1, mod, mod_deg);
  return t1;
}

}  // namespace

// ---- Field -----------------------------------------------------------------

FieldPtr Field::prime(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Prime;
  f->p_ = p;
  f->abs_degree_ = 1;
  return f;
}

namespace {

// Monic degree-m candidate over GF(2) with the given lower-coefficient index
// (bit i of index = coefficient of x^i).
std::vector<uint64_t> binary_candidate(unsigned m, uint64_t index) {
  std::vector<uint64_t> bits((m + 64) / 64 + 1, 0);
  bits[0] = index;
  bp_flip(bits, m);
  bits.resize((m / 64) + 1);
  return bits;
}

UniPoly bits_to_unipoly(const FieldPtr& gf2, const std::vector<uint64_t>& bits) {
  std::vector<Elem> c;
  int d = bp_degree(bits);
  for (int i = 0; i <= d; ++i) c.push_back(gf2->elem(bp_get(bits, i) ? 1 : 0));
  return UniPoly(gf2, std::move(c));
}

}  // namespace

FieldPtr Field::create(uint64_t p, unsigned m,
                       const std::vector<uint64_t>& modulus) {
  if (m == 0) throw std::invalid_argument("degree must be positive");
  if (m == 1) {
    if (!modulus.empty())
      throw std::invalid_argument("prime fields take no modulus");
    return prime(p);
  }
  if (p != 2)
    throw std::invalid_argument(
        "direct extensions are implemented for characteristic 2 only");
  auto gf2 = prime(2);

  std::vector<uint64_t> bits((m / 64) + 1, 0);
  if (!modulus.empty()) {
    if (modulus.size() != m + 1 || modulus[m] != 1)
      throw std::invalid_argument("modulus must be monic of degree m");
    for (unsigned i = 0; i <= m; ++i) {
      if (modulus[i] > 1) throw std::invalid_argument("modulus bits must be 0/1");
      if (modulus[i]) bp_flip(bits, i);
    }
    if (!is_irreducible(bits_to_unipoly(gf2, bits)))
      throw std::invalid_argument("modulus is reducible");
  } else {
    // Indices enumerate the low 64 coefficients; irreducibles with only
    // low-order terms exist at every degree used here.
    bool found = false;
    for (uint64_t idx = 1; idx < (m >= 63 ? ~uint64_t{0} : (uint64_t{1} << m));
         ++idx) {
      auto cand = binary_candidate(m, idx);
      if (is_irreducible(bits_to_unipoly(gf2, cand))) {
        bits = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("no irreducible modulus found");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Binary;
  f->p_ = 2;
  f->abs_degree_ = m;
  f->m_ = m;
  f->mod_bits_ = std::move(bits);
  return f;
}

std::pair<FieldPtr, Elem> Field::tower_extend(const FieldPtr& base,
                                              unsigned step) {
  if (step < 2) throw std::invalid_argument("tower step must be at least 2");
  if (base->characteristic() != 2)
    throw std::invalid_argument("towers are built over characteristic 2");
  auto q_opt = base->order_u64();
  if (!q_opt)
    throw std::invalid_argument("tower base is too large to search over");
  const uint64_t q = *q_opt;

  // Deterministic modulus: smallest coefficient tuple (c_{step-1},...,c_0)
  // in lexicographic order, digits compared by element index.
  std::vector<uint64_t> digits(step, 0);
  auto bump = [&]() -> bool {
    for (unsigned i = 0; i < step; ++i) {
      if (++digits[i] < q) return true;
      digits[i] = 0;
    }
    return false;
  };
  // Start from all-zero digits; x^step is reducible so the loop always bumps.
  for (;;) {
    std::vector<Elem> c(step + 1, base->zero());
    for (unsigned i = 0; i < step; ++i) c[i] = base->elem(digits[i]);
    c[step] = base->one();
    UniPoly cand(base, c);
    if (is_irreducible(cand)) {
      auto f = std::shared_ptr<Field>(new Field());
      f->kind_ = Kind::Tower;
      f->p_ = 2;
      f->abs_degree_ = base->abs_degree() * step;
      f->base_ = base;
      f->step_ = step;
      f->tower_mod_ = cand.coeffs();
      // gamma = the residue class of x.
      std::vector<Elem> coords(step, base->zero());
      coords[1] = base->one();
      Elem gamma(f, Elem::Rep(std::move(coords)));
      return {f, gamma};
    }
    if (!bump()) throw std::runtime_error("no irreducible modulus found");
  }
}

double Field::log2_order() const {
  if (p_ == 2) return static_cast<double>(abs_degree_);
  return abs_degree_ * std::log2(static_cast<double>(p_));
}

std::optional<uint64_t> Field::order_u64() const {
  if (p_ == 2)
    return abs_degree_ < 64 ? std::optional<uint64_t>(uint64_t{1} << abs_degree_)
                            : std::nullopt;
  __uint128_t q = 1;
  for (unsigned i = 0; i < abs_degree_; ++i) {
    q *= p_;
    if (q > ~uint64_t{0}) return std::nullopt;
  }
  return static_cast<uint64_t>(q);
}

Elem Field::zero() const {
  return elem(0);
}

Elem Field::one() const {
  return elem(1);
}

Elem Field::elem(uint64_t index) const {
  auto self = shared_from_this();
  switch (kind_) {
    case Kind::Prime:
      if (index >= p_) throw std::out_of_range("element index out of range");
      return Elem(self, Elem::Rep(index));
    case Kind::Binary: {
      if (m_ < 64 && index >= (uint64_t{1} << m_))
        throw std::out_of_range("element index out of range");
      std::vector<uint64_t> bits((m_ / 64) + 1, 0);
      bits[0] = index;
      return Elem(self, Elem::Rep(std::move(bits)));
    }
    case Kind::Tower: {
      auto qb = base_->order_u64();
      std::vector<Elem> coords;
      coords.reserve(step_);
      for (unsigned i = 0; i < step_; ++i) {
        if (qb) {
          coords.push_back(base_->elem(index % *qb));
          index /= *qb;
        } else {
          coords.push_back(base_->elem(index));
          index = 0;
        }
      }
      if (index != 0) throw std::out_of_range("element index out of range");
      return Elem(self, Elem::Rep(std::move(coords)));
    }
  }
  throw std::logic_error("unreachable");
}

uint64_t Field::index_of(const Elem& e) const {
  switch (kind_) {
    case Kind::Prime:
      return e.prime_value();
    case Kind::Binary: {
      auto b = e.bits();
      for (size_t w = 1; w < b.size(); ++w)
        if (b[w]) throw std::overflow_error("element index exceeds 64 bits");
      return b.empty() ? 0 : b[0];
    }
    case Kind::Tower: {
      auto qb = base_->order_u64();
      if (!qb) throw std::overflow_error("base order exceeds 64 bits");
      auto coords = e.coords();
      uint64_t idx = 0;
      for (size_t i = coords.size(); i-- > 0;) {
        idx = idx * *qb + base_->index_of(coords[i]);
      }
      return idx;
    }
  }
  throw std::logic_error("unreachable");
}

Elem Field::uniform(Rng& rng) const {
  auto self = shared_from_this();
  switch (kind_) {
    case Kind::Prime:
      return Elem(self, Elem::Rep(rng.below(p_)));
    case Kind::Binary: {
      std::vector<uint64_t> bits((m_ / 64) + 1, 0);
      for (auto& w : bits) w = rng.next();
      // Mask off everything at or above bit m_.
      unsigned top_word = m_ / 64, top_bit = m_ % 64;
      bits[top_word] &= top_bit ? (uint64_t{1} << top_bit) - 1 : 0;
      return Elem(self, Elem::Rep(std::move(bits)));
    }
    case Kind::Tower: {
      std::vector<Elem> coords;
      coords.reserve(step_);
      for (unsigned i = 0; i < step_; ++i) coords.push_back(base_->uniform(rng));
      return Elem(self, Elem::Rep(std::move(coords)));
    }
  }
  throw std::logic_error("unreachable");
}

bool Field::same_spec(const Field& a, const Field& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.p_ != b.p_ || a.abs_degree_ != b.abs_degree_)
    return false;
  switch (a.kind_) {
    case Kind::Prime:
      return true;
    case Kind::Binary:
      return a.mod_bits_ == b.mod_bits_;
    case Kind::Tower: {
      if (a.step_ != b.step_) return false;
      if (!same_spec(*a.base_, *b.base_)) return false;
      for (unsigned i = 0; i <= a.step_; ++i)
        if (a.tower_mod_[i] != b.tower_mod_[i]) return false;
      return true;
    }
  }
  return false;
}

// ---- Elem ------------------------------------------------------------------

namespace {

void check_fields(const Elem& a, const Elem& b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("detached element");
  if (a.field() != b.field() && !Field::same_spec(*a.field(), *b.field()))
    throw std::invalid_argument("elements from different fields");
}

}  // namespace

bool Elem::is_zero() const {
  if (auto* v = std::get_if<uint64_t>(&v_)) return *v == 0;
  if (auto* b = std::get_if<std::vector<uint64_t>>(&v_))
    return bp_degree(*b) < 0;
  if (auto* c = std::get_if<std::vector<Elem>>(&v_)) {
    for (const auto& e : *c)
      if (!e.is_zero()) return false;
    return true;
  }
  throw std::invalid_argument("detached element");
}

bool Elem::is_one() const {
  return *this == f_->one();
}

bool Elem::operator==(const Elem& o) const {
  check_fields(*this, o);
  return v_ == o.v_;
}

Elem Elem::operator+(const Elem& o) const {
  check_fields(*this, o);
  switch (f_->kind()) {
    case Field::Kind::Prime: {
      uint64_t s = std::get<uint64_t>(v_) + std::get<uint64_t>(o.v_);
      if (s >= f_->characteristic()) s -= f_->characteristic();
      return Elem(f_, Rep(s));
    }
    case Field::Kind::Binary: {
      auto a = std::get<std::vector<uint64_t>>(v_);
      const auto& b = std::get<std::vector<uint64_t>>(o.v_);
      for (size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
      return Elem(f_, Rep(std::move(a)));
    }
    case Field::Kind::Tower: {
      auto a = std::get<std::vector<Elem>>(v_);
      const auto& b = std::get<std::vector<Elem>>(o.v_);
      for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
      return Elem(f_, Rep(std::move(a)));
    }
  }
  throw std::logic_error("unreachable");
}

Elem Elem::operator-() const {
  if (f_->characteristic() == 2) return *this;
  uint64_t v = std::get<uint64_t>(v_);
  return Elem(f_, Rep(v == 0 ? 0 : f_->characteristic() - v));
}

Elem Elem::operator-(const Elem& o) const {
  if (f_->characteristic() == 2) return *this + o;
  return *this + (-o);
}

Elem Elem::operator*(const Elem& o) const {
  check_fields(*this, o);
  switch (f_->kind()) {
    case Field::Kind::Prime: {
      __uint128_t prod = static_cast<__uint128_t>(std::get<uint64_t>(v_)) *
                         std::get<uint64_t>(o.v_);
      return Elem(f_, Rep(static_cast<uint64_t>(prod % f_->characteristic())));
    }
    case Field::Kind::Binary: {
      auto prod = bp_mul(std::get<std::vector<uint64_t>>(v_),
                         std::get<std::vector<uint64_t>>(o.v_));
      bp_reduce(prod, f_->binary_modulus(), f_->binary_m());
      bp_trim(prod, (f_->binary_m() / 64) + 1);
      return Elem(f_, Rep(std::move(prod)));
    }
    case Field::Kind::Tower: {
      const auto& a = std::get<std::vector<Elem>>(v_);
      const auto& b = std::get<std::vector<Elem>>(o.v_);
      const unsigned s = f_->step();
      std::vector<Elem> prod(2 * s - 1, f_->base()->zero());
      for (unsigned i = 0; i < s; ++i) {
        if (a[i].is_zero()) continue;
        for (unsigned j = 0; j < s; ++j) prod[i + j] += a[i] * b[j];
      }
      // Reduce by the monic tower modulus.
      const auto& mod = f_->tower_modulus();
      for (size_t d = prod.size(); d-- > s;) {
        if (prod[d].is_zero()) continue;
        Elem lead = prod[d];
        for (unsigned i = 0; i < s; ++i) prod[d - s + i] += lead * mod[i];
        prod[d] = f_->base()->zero();
      }
      prod.resize(s, f_->base()->zero());
      return Elem(f_, Rep(std::move(prod)));
    }
  }
  throw std::logic_error("unreachable");
}

Elem Elem::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  switch (f_->kind()) {
    case Field::Kind::Prime: {
      int64_t v = static_cast<int64_t>(std::get<uint64_t>(v_));
      return Elem(f_, Rep(static_cast<uint64_t>(inv_mod_i64(
                       v, static_cast<int64_t>(f_->characteristic())))));
    }
    case Field::Kind::Binary: {
      auto r = bp_inv(std::get<std::vector<uint64_t>>(v_), f_->binary_modulus(),
                      f_->binary_m());
      bp_trim(r, (f_->binary_m() / 64) + 1);
      return Elem(f_, Rep(std::move(r)));
    }
    case Field::Kind::Tower: {
      // Extended Euclid over the base field.
      UniPoly a(f_->base(), std::get<std::vector<Elem>>(v_));
      UniPoly m(f_->base(), f_->tower_modulus());
      UniPoly r0 = m, r1 = a;
      UniPoly t0(f_->base()), t1(f_->base(), {f_->base()->one()});
      while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r] = r0.divrem(r1);
        UniPoly nt = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = nt;
      }
      if (r1.is_zero()) throw std::domain_error("element not invertible");
      Elem scale = r1.coeff(0).inv();
      UniPoly res = (t1 * UniPoly(f_->base(), {scale})).mod(m);
      std::vector<Elem> coords(f_->step(), f_->base()->zero());
      for (unsigned i = 0; i < f_->step(); ++i) coords[i] = res.coeff(i);
      return Elem(f_, Rep(std::move(coords)));
    }
  }
  throw std::logic_error("unreachable");
}

Elem Elem::operator/(const Elem& o) const { return *this * o.inv(); }

Elem Elem::pow(uint64_t e) const {
  Elem result = f_->one();
  Elem b = *this;
  while (e) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::vector<Elem> Elem::coords() const {
  switch (f_->kind()) {
    case Field::Kind::Prime:
      return {*this};
    case Field::Kind::Binary: {
      auto gf2 = Field::prime(2);
      std::vector<Elem> out;
      const auto& b = std::get<std::vector<uint64_t>>(v_);
      for (unsigned i = 0; i < f_->binary_m(); ++i)
        out.push_back(gf2->elem(bp_get(b, i) ? 1 : 0));
      return out;
    }
    case Field::Kind::Tower:
      return std::get<std::vector<Elem>>(v_);
  }
  throw std::logic_error("unreachable");
}

std::vector<uint8_t> Elem::flatten_gf2() const {
  if (f_->characteristic() != 2)
    throw std::domain_error("flattening requires characteristic 2");
  switch (f_->kind()) {
    case Field::Kind::Prime:
      return {static_cast<uint8_t>(std::get<uint64_t>(v_))};
    case Field::Kind::Binary: {
      std::vector<uint8_t> out(f_->binary_m());
      const auto& b = std::get<std::vector<uint64_t>>(v_);
      for (unsigned i = 0; i < f_->binary_m(); ++i) out[i] = bp_get(b, i);
      return out;
    }
    case Field::Kind::Tower: {
      std::vector<uint8_t> out;
      out.reserve(f_->abs_degree());
      for (const auto& c : std::get<std::vector<Elem>>(v_)) {
        auto part = c.flatten_gf2();
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

uint64_t Elem::prime_value() const { return std::get<uint64_t>(v_); }

std::vector<uint64_t> Elem::bits() const {
  return std::get<std::vector<uint64_t>>(v_);
}

std::string Elem::to_string() const {
  std::ostringstream os;
  switch (f_->kind()) {
    case Field::Kind::Prime:
      os << std::get<uint64_t>(v_);
      break;
    case Field::Kind::Binary: {
      const auto& b = std::get<std::vector<uint64_t>>(v_);
      os << "0x" << std::hex;
      bool started = false;
      for (size_t w = b.size(); w-- > 0;) {
        if (!started) {
          if (b[w] == 0 && w != 0) continue;
          os << b[w];
          started = true;
        } else {
          char buf[17];
          std::snprintf(buf, sizeof buf, "%016llx",
                        static_cast<unsigned long long>(b[w]));
          os << buf;
        }
      }
      break;
    }
    case Field::Kind::Tower: {
      os << "[";
      const auto& c = std::get<std::vector<Elem>>(v_);
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].to_string();
      }
      os << "]";
      break;
    }
  }
  return os.str();
}

// ---- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(FieldPtr f, std::vector<Elem> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::from_indices(const FieldPtr& f,
                              const std::vector<uint64_t>& coeff_indices) {
  std::vector<Elem> c;
  c.reserve(coeff_indices.size());
  for (uint64_t idx : coeff_indices) c.push_back(f->elem(idx));
  return UniPoly(f, std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Elem UniPoly::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : f_->zero();
}

Elem UniPoly::eval(const Elem& x) const {
  Elem acc = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(f_);
  std::vector<Elem> c(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Elem lead_inv = c_.back().inv();
  std::vector<Elem> c = c_;
  for (auto& e : c) e *= lead_inv;
  return UniPoly(f_, std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  UniPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {UniPoly(f_), rem};
  std::vector<Elem> q(rem.degree() - divisor.degree() + 1, f_->zero());
  Elem lead_inv = divisor.c_.back().inv();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Elem factor = rem.c_.back() * lead_inv;
    q[shift] = factor;
    for (size_t i = 0; i < divisor.c_.size(); ++i)
      rem.c_[i + shift] -= factor * divisor.c_[i];
    rem.trim();
  }
  return {UniPoly(f_, std::move(q)), rem};
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(f_);
  std::vector<Elem> c(c_.size() - 1, f_->zero());
  for (size_t i = 1; i < c_.size(); ++i) {
    uint64_t r = i % f_->characteristic();
    c[i - 1] = r == 0 ? f_->zero() : c_[i] * f_->elem(r);
  }
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.mod(b);
    a = b;
    b = r;
  }
  return a.monic();
}

UniPoly UniPoly::powmod(const UniPoly& base, uint64_t e,
                        const UniPoly& modulus) {
  UniPoly result(base.field(), {base.field()->one()});
  UniPoly b = base.mod(modulus);
  while (e) {
    if (e & 1) result = (result * b).mod(modulus);
    b = (b * b).mod(modulus);
    e >>= 1;
  }
  return result;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c_[i].is_one()) os << c_[i].to_string();
    if (i >= 1) {
      if (!c_[i].is_one()) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

// ---- irreducibility --------------------------------------------------------

bool is_irreducible(const UniPoly& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const auto& field = f.field();
  if (f.coeff(0).is_zero()) return false;  // root at 0
  // Repeated factors (and perfect p-th powers, where f' == 0).
  UniPoly der = f.derivative();
  if (der.is_zero()) return false;
  if (UniPoly::gcd(f, der).degree() > 0) return false;

  auto q_opt = field->order_u64();
  if (!q_opt) throw std::invalid_argument("coefficient field too large");
  const uint64_t q = *q_opt;

  UniPoly x(field, {field->zero(), field->one()});
  UniPoly fm = f.monic();

  // Rabin: x^(q^d) == x mod f, and gcd(x^(q^(d/r)) - x, f) == 1 for each
  // prime r | d.  Frobenius powers are built by iterating ^q.
  std::vector<int> prime_divs;
  {
    int n = d;
    for (int r = 2; r * r <= n; ++r) {
      if (n % r == 0) {
        prime_divs.push_back(r);
        while (n % r == 0) n /= r;
      }
    }
    if (n > 1) prime_divs.push_back(n);
  }

  std::vector<UniPoly> frob_pow;  // frob_pow[i] = x^(q^(i+1)) mod f
  frob_pow.push_back(UniPoly::powmod(x, q, fm));
  for (int i = 1; i < d; ++i)
    frob_pow.push_back(UniPoly::powmod(frob_pow.back(), q, fm));

  if (frob_pow[d - 1] != x.mod(fm)) return false;
  for (int r : prime_divs) {
    const UniPoly& g = frob_pow[d / r - 1];
    if (UniPoly::gcd(g - x, fm).degree() != 0) return false;
  }
  return true;
}

// ---- monomial-product basis test --------------------------------------------

bool monomial_products_independent(const std::vector<Elem>& alphas,
                                   unsigned k) {
  if (alphas.empty()) throw std::invalid_argument("empty alpha list");
  const auto& field = alphas.front().field();
  if (field->characteristic() != 2)
    throw std::invalid_argument("basis test requires characteristic 2");
  uint64_t expected = 1;
  for (size_t i = 0; i < alphas.size(); ++i) {
    expected *= k;
    if (expected > 4096) throw std::invalid_argument("k^n too large");
  }
  if (field->abs_degree() != expected)
    throw std::invalid_argument("field degree must equal k^n");

  const size_t dim = expected;
  // Row r encodes the product over alphas[i]^{digit_i(r)} in base k.
  std::vector<std::vector<uint64_t>> rows;
  rows.reserve(dim);
  for (uint64_t r = 0; r < dim; ++r) {
    Elem prod = field->one();
    uint64_t rr = r;
    for (const auto& a : alphas) {
      unsigned e = static_cast<unsigned>(rr % k);
      rr /= k;
      if (e) prod *= a.pow(e);
    }
    auto flat = prod.flatten_gf2();
    std::vector<uint64_t> packed((dim + 63) / 64, 0);
    for (size_t i = 0; i < flat.size(); ++i)
      if (flat[i]) packed[i / 64] ^= uint64_t{1} << (i % 64);
    rows.push_back(std::move(packed));
  }

  // GF(2) rank via elimination.
  size_t rank = 0;
  for (size_t col = 0; col < dim && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() &&
           !((rows[pivot][col / 64] >> (col % 64)) & 1))
      ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r][col / 64] >> (col % 64)) & 1)) {
        for (size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  return rank == dim;
}

}  // namespace rsld
