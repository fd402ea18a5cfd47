#include "rsld/rscode.hpp"

#include <stdexcept>

namespace rsld {

EvalVector::EvalVector(std::vector<Elem> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("empty evaluation vector");
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw std::invalid_argument("evaluation points must be distinct");
}

RSCode::RSCode(EvalVector alpha, unsigned k) : alpha_(std::move(alpha)), k_(k) {
  if (k_ < 1 || k_ >= alpha_.size())
    throw std::invalid_argument("require 1 <= k < n");
}

Codeword RSCode::encode(const UniPoly& f) const {
  if (f.degree() >= static_cast<int>(k_))
    throw std::invalid_argument("message degree must be below k");
  std::vector<Elem> symbols;
  symbols.reserve(n());
  for (size_t i = 0; i < n(); ++i) symbols.push_back(f.eval(alpha_[i]));
  return Codeword(std::move(symbols), f);
}

std::vector<Codeword> RSCode::enumerate(uint64_t guard) const {
  auto q_opt = field()->order_u64();
  if (!q_opt) throw std::invalid_argument("field too large to enumerate");
  __uint128_t total = 1;
  for (unsigned i = 0; i < k_; ++i) {
    total *= *q_opt;
    if (total > guard)
      throw std::invalid_argument("codeword enumeration guard exceeded");
  }
  std::vector<Codeword> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<uint64_t> digits(k_, 0);
  for (;;) {
    out.push_back(encode(UniPoly::from_indices(field(), digits)));
    unsigned pos = 0;
    while (pos < k_ && ++digits[pos] == *q_opt) digits[pos++] = 0;
    if (pos == k_) break;
  }
  return out;
}

size_t hamming_distance(const std::vector<Elem>& u,
                        const std::vector<Elem>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  size_t d = 0;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

size_t hamming_distance(const Codeword& u, const Codeword& v) {
  return hamming_distance(u.symbols(), v.symbols());
}

std::vector<size_t> agreement_set(
    const std::vector<std::vector<Elem>>& vectors) {
  if (vectors.size() < 2)
    throw std::invalid_argument("agreement set needs at least two vectors");
  const size_t n = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("length mismatch");
  std::vector<size_t> out;
  for (size_t i = 0; i < n; ++i) {
    bool all_equal = true;
    for (size_t j = 1; j < vectors.size() && all_equal; ++j)
      all_equal = vectors[j][i] == vectors[0][i];
    if (all_equal) out.push_back(i);
  }
  return out;
}

FieldMatrix vandermonde(unsigned s, const std::vector<Elem>& points) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  FieldMatrix m;
  m.reserve(points.size());
  for (const auto& x : points) {
    std::vector<Elem> row;
    row.reserve(s);
    Elem p = x.field()->one();
    for (unsigned j = 0; j < s; ++j) {
      row.push_back(p);
      p *= x;
    }
    m.push_back(std::move(row));
  }
  return m;
}

bool vandermonde_kernel_check(unsigned s, const std::vector<size_t>& I,
                              const EvalVector& alpha, const UniPoly& f) {
  if (f.degree() >= static_cast<int>(s))
    throw std::invalid_argument("polynomial degree must be below s");
  for (size_t i : I) {
    if (i >= alpha.size()) throw std::out_of_range("index outside [n]");
    if (!f.eval(alpha[i]).is_zero()) return false;
  }
  return true;
}

}  // namespace rsld
