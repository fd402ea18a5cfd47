#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsld/field.hpp"

namespace rsld {

// Exponent vector for a monomial in n variables.
using ExpVec = std::vector<uint16_t>;

// Graded lexicographic order: compare total degree first, then exponents
// left to right.  Used as the canonical term order throughout.
struct GradedLex {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over a fixed field.  Invariant: no stored
// coefficient is zero; all exponent vectors have length nvars.
class SparseMultiPoly {
 public:
  SparseMultiPoly(FieldPtr f, size_t nvars)
      : f_(std::move(f)), nvars_(nvars) {}

  static SparseMultiPoly constant(const FieldPtr& f, size_t nvars,
                                  const Elem& c);
  static SparseMultiPoly monomial(const FieldPtr& f, size_t nvars, size_t var,
                                  uint16_t exp, const Elem& c);

  const FieldPtr& field() const { return f_; }
  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Elem, GradedLex>& terms() const { return terms_; }

  int total_degree() const;          // -1 for the zero polynomial
  int degree_in(size_t var) const;   // max exponent of one variable

  void add_term(const ExpVec& e, const Elem& c);

  SparseMultiPoly operator+(const SparseMultiPoly& o) const;
  SparseMultiPoly operator-(const SparseMultiPoly& o) const;
  SparseMultiPoly operator*(const SparseMultiPoly& o) const;
  SparseMultiPoly negate() const;
  bool operator==(const SparseMultiPoly& o) const {
    return terms_ == o.terms_;
  }

  // Exact division; throws if the divisor does not divide evenly.
  SparseMultiPoly divide_exact(const SparseMultiPoly& divisor) const;

  Elem eval(const std::vector<Elem>& point) const;

  std::string to_string() const;

 private:
  FieldPtr f_;
  size_t nvars_;
  std::map<ExpVec, Elem, GradedLex> terms_;
};

// Entry of a variable matrix: 0, 1, or x_i^j.
struct VarEntry {
  enum class Kind { Zero, One, Monomial };
  Kind kind = Kind::Zero;
  uint32_t var = 0;   // 0-based variable index
  uint16_t exp = 0;   // exponent >= 1 for Kind::Monomial

  static VarEntry zero() { return {}; }
  static VarEntry one() { return {Kind::One, 0, 0}; }
  static VarEntry monomial(uint32_t var, uint16_t exp) {
    if (exp == 0) return one();
    return {Kind::Monomial, var, exp};
  }
  bool operator==(const VarEntry&) const = default;
};

// Dense grid of VarEntry with optional row/column labels (used by the
// intersection-matrix builders to carry edge labels).
class VarMatrix {
 public:
  VarMatrix(size_t rows, size_t cols, size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars),
        grid_(rows * cols, VarEntry::zero()) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t nvars() const { return nvars_; }

  VarEntry& at(size_t r, size_t c) { return grid_[r * cols_ + c]; }
  const VarEntry& at(size_t r, size_t c) const { return grid_[r * cols_ + c]; }

  std::vector<int>& row_labels() { return row_labels_; }
  std::vector<int>& col_labels() { return col_labels_; }
  const std::vector<int>& row_labels() const { return row_labels_; }
  const std::vector<int>& col_labels() const { return col_labels_; }

  VarMatrix submatrix(const std::vector<size_t>& row_idx,
                      const std::vector<size_t>& col_idx) const;

  // Evaluate every entry at the point (length nvars).
  std::vector<std::vector<Elem>> eval(const std::vector<Elem>& point) const;

  std::string to_string() const;
  bool operator==(const VarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && grid_ == o.grid_;
  }

 private:
  size_t rows_, cols_, nvars_;
  std::vector<VarEntry> grid_;
  std::vector<int> row_labels_, col_labels_;
};

// Exact symbolic determinant with coefficients in `field`.
// Order <= 8: cofactor expansion with zero pruning; order 9..12:
// fraction-free Gaussian elimination; larger orders throw.
SparseMultiPoly multipoly_det(const VarMatrix& m, const FieldPtr& field);

// Plain Leibniz expansion (independent oracle path used by tests; exported
// so the test suites can cross-check the production routes above).
SparseMultiPoly multipoly_det_leibniz(const VarMatrix& m,
                                      const FieldPtr& field);

// Numeric helpers over a field.
using FieldMatrix = std::vector<std::vector<Elem>>;
size_t matrix_rank(FieldMatrix m);
Elem matrix_det(FieldMatrix m, const FieldPtr& field);
// Indices of a row subset forming a basis of the row space (greedy in row
// order); size equals the rank.
std::vector<size_t> independent_rows(const FieldMatrix& m);

}  // namespace rsld
