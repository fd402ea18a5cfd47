#include "rsld/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rsld {

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparseMultiPoly SparseMultiPoly::constant(const FieldPtr& f, size_t nvars,
                                          const Elem& c) {
  SparseMultiPoly p(f, nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

SparseMultiPoly SparseMultiPoly::monomial(const FieldPtr& f, size_t nvars,
                                          size_t var, uint16_t exp,
                                          const Elem& c) {
  SparseMultiPoly p(f, nvars);
  ExpVec e(nvars, 0);
  e[var] = exp;
  p.add_term(e, c);
  return p;
}

int SparseMultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Graded order: the last term has maximal total degree.
  const ExpVec& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int SparseMultiPoly::degree_in(size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
  return d;
}

void SparseMultiPoly::add_term(const ExpVec& e, const Elem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparseMultiPoly SparseMultiPoly::operator+(const SparseMultiPoly& o) const {
  SparseMultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

SparseMultiPoly SparseMultiPoly::operator-(const SparseMultiPoly& o) const {
  SparseMultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

SparseMultiPoly SparseMultiPoly::negate() const {
  SparseMultiPoly out(f_, nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SparseMultiPoly SparseMultiPoly::operator*(const SparseMultiPoly& o) const {
  SparseMultiPoly out(f_, nvars_);
  ExpVec sum(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < nvars_; ++i)
        sum[i] = static_cast<uint16_t>(ea[i] + eb[i]);
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

SparseMultiPoly SparseMultiPoly::divide_exact(
    const SparseMultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  SparseMultiPoly rem = *this;
  SparseMultiPoly quo(f_, nvars_);
  const auto& lead = *divisor.terms_.rbegin();
  const Elem lead_inv = lead.second.inv();
  while (!rem.is_zero()) {
    const auto& top = *rem.terms_.rbegin();
    ExpVec qe(nvars_);
    for (size_t i = 0; i < nvars_; ++i) {
      if (top.first[i] < lead.first[i])
        throw std::domain_error("inexact polynomial division");
      qe[i] = static_cast<uint16_t>(top.first[i] - lead.first[i]);
    }
    Elem qc = top.second * lead_inv;
    SparseMultiPoly t(f_, nvars_);
    t.add_term(qe, qc);
    quo.add_term(qe, qc);
    rem = rem - t * divisor;
  }
  return quo;
}

Elem SparseMultiPoly::eval(const std::vector<Elem>& point) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Elem acc = f_->zero();
  for (const auto& [e, c] : terms_) {
    Elem term = c;
    for (size_t i = 0; i < nvars_; ++i)
      if (e[i]) term *= point[i].pow(e[i]);
    acc += term;
  }
  return acc;
}

std::string SparseMultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    bool creal = !c.is_one();
    bool any_var = false;
    if (creal) os << c.to_string();
    for (size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (creal || any_var) os << "*";
      any_var = true;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
    if (!any_var && !creal) os << "1";
  }
  return os.str();
}

// ---- VarMatrix --------------------------------------------------------------

VarMatrix VarMatrix::submatrix(const std::vector<size_t>& row_idx,
                               const std::vector<size_t>& col_idx) const {
  VarMatrix out(row_idx.size(), col_idx.size(), nvars_);
  for (size_t r = 0; r < row_idx.size(); ++r)
    for (size_t c = 0; c < col_idx.size(); ++c)
      out.at(r, c) = at(row_idx[r], col_idx[c]);
  return out;
}

std::vector<std::vector<Elem>> VarMatrix::eval(
    const std::vector<Elem>& point) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  if (point.empty()) throw std::invalid_argument("empty evaluation point");
  const auto& f = point[0].field();
  std::vector<std::vector<Elem>> out(rows_,
                                     std::vector<Elem>(cols_, f->zero()));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      const VarEntry& e = at(r, c);
      switch (e.kind) {
        case VarEntry::Kind::Zero:
          break;
        case VarEntry::Kind::One:
          out[r][c] = f->one();
          break;
        case VarEntry::Kind::Monomial:
          out[r][c] = point[e.var].pow(e.exp);
          break;
      }
    }
  return out;
}

std::string VarMatrix::to_string() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (c) os << " ";
      const VarEntry& e = at(r, c);
      switch (e.kind) {
        case VarEntry::Kind::Zero: os << "."; break;
        case VarEntry::Kind::One: os << "1"; break;
        case VarEntry::Kind::Monomial:
          os << "x" << (e.var + 1);
          if (e.exp > 1) os << "^" << e.exp;
          break;
      }
    }
    os << "\n";
  }
  return os.str();
}

// ---- determinants -----------------------------------------------------------

namespace {

SparseMultiPoly entry_poly(const VarEntry& e, const FieldPtr& f,
                           size_t nvars) {
  switch (e.kind) {
    case VarEntry::Kind::Zero:
      return SparseMultiPoly(f, nvars);
    case VarEntry::Kind::One:
      return SparseMultiPoly::constant(f, nvars, f->one());
    case VarEntry::Kind::Monomial:
      return SparseMultiPoly::monomial(f, nvars, e.var, e.exp, f->one());
  }
  throw std::logic_error("unreachable");
}

// Recursive cofactor expansion along the live row with the fewest live
// nonzero entries; zero entries are skipped entirely.
class CofactorDet {
 public:
  CofactorDet(const VarMatrix& m, const FieldPtr& f)
      : m_(m), f_(f), live_col_(m.cols(), true) {
    rows_.resize(m.rows());
    std::iota(rows_.begin(), rows_.end(), size_t{0});
  }

  SparseMultiPoly run() { return expand(rows_); }

 private:
  SparseMultiPoly expand(std::vector<size_t>& rows) {
    if (rows.empty())
      return SparseMultiPoly::constant(f_, m_.nvars(), f_->one());
    size_t best_pos = 0, best_count = SIZE_MAX;
    for (size_t pos = 0; pos < rows.size(); ++pos) {
      size_t count = 0;
      for (size_t c = 0; c < m_.cols(); ++c)
        if (live_col_[c] && m_.at(rows[pos], c).kind != VarEntry::Kind::Zero)
          ++count;
      if (count < best_count) {
        best_count = count;
        best_pos = pos;
      }
    }
    if (best_count == 0) return SparseMultiPoly(f_, m_.nvars());

    const size_t row = rows[best_pos];
    std::vector<size_t> rest = rows;
    rest.erase(rest.begin() + static_cast<long>(best_pos));

    SparseMultiPoly acc(f_, m_.nvars());
    size_t live_col_pos = 0;
    for (size_t c = 0; c < m_.cols(); ++c) {
      if (!live_col_[c]) continue;
      const VarEntry& entry = m_.at(row, c);
      if (entry.kind != VarEntry::Kind::Zero) {
        live_col_[c] = false;
        SparseMultiPoly minor = expand(rest);
        live_col_[c] = true;
        if (!minor.is_zero()) {
          SparseMultiPoly term = entry_poly(entry, f_, m_.nvars()) * minor;
          if ((best_pos + live_col_pos) % 2) term = term.negate();
          acc = acc + term;
        }
      }
      ++live_col_pos;
    }
    return acc;
  }

  const VarMatrix& m_;
  FieldPtr f_;
  std::vector<size_t> rows_;
  std::vector<bool> live_col_;
};

// Bareiss fraction-free elimination over the polynomial ring; every division
// is exact by construction.
SparseMultiPoly det_bareiss(const VarMatrix& m, const FieldPtr& f) {
  const size_t n = m.rows();
  std::vector<std::vector<SparseMultiPoly>> a;
  a.reserve(n);
  for (size_t r = 0; r < n; ++r) {
    std::vector<SparseMultiPoly> row;
    row.reserve(n);
    for (size_t c = 0; c < n; ++c)
      row.push_back(entry_poly(m.at(r, c), f, m.nvars()));
    a.push_back(std::move(row));
  }
  SparseMultiPoly prev = SparseMultiPoly::constant(f, m.nvars(), f->one());
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return SparseMultiPoly(f, m.nvars());
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        SparseMultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.is_zero() ? num : num.divide_exact(prev);
      }
      a[i][k] = SparseMultiPoly(f, m.nvars());
    }
    prev = a[k][k];
  }
  SparseMultiPoly det = a[n - 1][n - 1];
  return negate ? det.negate() : det;
}

}  // namespace

SparseMultiPoly multipoly_det(const VarMatrix& m, const FieldPtr& field) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0)
    return SparseMultiPoly::constant(field, m.nvars(), field->one());
  if (m.rows() <= 8) return CofactorDet(m, field).run();
  if (m.rows() <= 12) return det_bareiss(m, field);
  throw std::invalid_argument("matrix order above the exact-determinant cap");
}

SparseMultiPoly multipoly_det_leibniz(const VarMatrix& m,
                                      const FieldPtr& field) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const size_t n = m.rows();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  SparseMultiPoly acc(field, m.nvars());
  do {
    int inv = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    ExpVec e(m.nvars(), 0);
    bool zero = false;
    for (size_t i = 0; i < n && !zero; ++i) {
      const VarEntry& entry = m.at(i, perm[i]);
      switch (entry.kind) {
        case VarEntry::Kind::Zero: zero = true; break;
        case VarEntry::Kind::One: break;
        case VarEntry::Kind::Monomial:
          e[entry.var] = static_cast<uint16_t>(e[entry.var] + entry.exp);
          break;
      }
    }
    if (!zero) acc.add_term(e, inv % 2 ? -field->one() : field->one());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

size_t matrix_rank(FieldMatrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Elem inv = m[rank][c].inv();
    for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Elem factor = m[r][c];
      for (size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Elem matrix_det(FieldMatrix m, const FieldPtr& field) {
  const size_t n = m.size();
  if (n == 0) return field->one();
  Elem det = field->one();
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return field->zero();
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      det = -det;
    }
    det *= m[c][c];
    Elem inv = m[c][c].inv();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      Elem factor = m[r][c] * inv;
      for (size_t j = c; j < n; ++j) m[r][j] -= factor * m[c][j];
    }
  }
  return det;
}

std::vector<size_t> independent_rows(const FieldMatrix& m) {
  std::vector<size_t> chosen;
  if (m.empty()) return chosen;
  const size_t cols = m[0].size();
  // The basis is kept in reduced row echelon form so a single reduction pass
  // decides membership.
  FieldMatrix basis;
  std::vector<size_t> lead;
  for (size_t r = 0; r < m.size() && basis.size() < cols; ++r) {
    std::vector<Elem> row = m[r];
    for (size_t b = 0; b < basis.size(); ++b) {
      if (row[lead[b]].is_zero()) continue;
      Elem factor = row[lead[b]];
      for (size_t j = 0; j < cols; ++j) row[j] -= factor * basis[b][j];
    }
    size_t piv = 0;
    while (piv < cols && row[piv].is_zero()) ++piv;
    if (piv == cols) continue;
    Elem inv = row[piv].inv();
    for (size_t j = 0; j < cols; ++j) row[j] *= inv;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b][piv].is_zero()) continue;
      Elem factor = basis[b][piv];
      for (size_t j = 0; j < cols; ++j) basis[b][j] -= factor * row[j];
    }
    basis.push_back(std::move(row));
    lead.push_back(piv);
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace rsld
