#pragma once

#include <optional>
#include <vector>

#include "rsld/field.hpp"
#include "rsld/multipoly.hpp"

namespace rsld {

// n distinct evaluation points in one field.  Coordinates are 0-indexed in
// code, 1-indexed in serialized artifacts and reports.
class EvalVector {
 public:
  explicit EvalVector(std::vector<Elem> points);
  size_t size() const { return points_.size(); }
  const Elem& operator[](size_t i) const { return points_[i]; }
  const std::vector<Elem>& points() const { return points_; }
  const FieldPtr& field() const { return points_.front().field(); }

 private:
  std::vector<Elem> points_;
};

class Codeword;

// [n,k]-RS code given by an evaluation vector, 1 <= k < n.
class RSCode {
 public:
  RSCode(EvalVector alpha, unsigned k);
  const EvalVector& alpha() const { return alpha_; }
  unsigned k() const { return k_; }
  size_t n() const { return alpha_.size(); }
  const FieldPtr& field() const { return alpha_.field(); }

  // Evaluate a message polynomial of degree < k at the n points.
  Codeword encode(const UniPoly& f) const;

  // All q^k codewords in message-index order; guarded to small codes.
  std::vector<Codeword> enumerate(uint64_t guard = 100000) const;

 private:
  EvalVector alpha_;
  unsigned k_;
};

class Codeword {
 public:
  Codeword(std::vector<Elem> symbols, std::optional<UniPoly> message)
      : symbols_(std::move(symbols)), message_(std::move(message)) {}
  size_t size() const { return symbols_.size(); }
  const Elem& operator[](size_t i) const { return symbols_[i]; }
  const std::vector<Elem>& symbols() const { return symbols_; }
  // Message polynomial, cached when the codeword came out of encode().
  const std::optional<UniPoly>& message() const { return message_; }

  bool operator==(const Codeword& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<Elem> symbols_;
  std::optional<UniPoly> message_;
};

size_t hamming_distance(const std::vector<Elem>& u,
                        const std::vector<Elem>& v);
size_t hamming_distance(const Codeword& u, const Codeword& v);

// Indices (0-based) where all given vectors hold one common value.
std::vector<size_t> agreement_set(
    const std::vector<std::vector<Elem>>& vectors);

// n x s matrix with rows (1, x_i, ..., x_i^{s-1}).
FieldMatrix vandermonde(unsigned s, const std::vector<Elem>& points);

// True iff V_s(alpha_i : i in I) * f == 0, i.e. every alpha_i with i in I is
// a root of f.  Requires deg(f) < s.
bool vandermonde_kernel_check(unsigned s, const std::vector<size_t>& I,
                              const EvalVector& alpha, const UniPoly& f);

}  // namespace rsld
