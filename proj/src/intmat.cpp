#include "bcw/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace bcw {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void IntMatrix::append_row(const std::vector<Int>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

int IntMatrix::compare(const IntMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
  if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    int c = cmp(a_[i], o.a_[i]);
    if (c != 0) return c;
  }
  return 0;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  // Bareiss fraction-free elimination
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  // row_dst -= q * row_src
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_negate(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// Unimodular combination of rows p and i making m[i][col] = 0 and
// m[p][col] = gcd of the two entries.
void row_gcd_combine(IntMatrix& m, IntMatrix& u, std::size_t p, std::size_t i,
                     std::size_t col) {
  Int a = m.at(p, col), b = m.at(i, col), g, s, t;
  if (a != 0 && b % a == 0) {
    // plain elimination keeps the pivot row intact (termination relies on it)
    Int q = b / a;
    row_axpy(m, i, p, q);
    row_axpy(u, i, p, q);
    return;
  }
  xgcd(a, b, g, s, t);
  Int am = a / g, bm = b / g;
  auto combine = [&](IntMatrix& mat) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      Int rp = mat.at(p, j), ri = mat.at(i, j);
      mat.at(p, j) = s * rp + t * ri;
      mat.at(i, j) = am * ri - bm * rp;
    }
  };
  combine(m);
  combine(u);
}

}  // namespace

HnfTransform hnf_transform(const IntMatrix& m) {
  HnfTransform r{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    std::size_t nz = pivot;
    while (nz < h.rows() && h.at(nz, col) == 0) ++nz;
    if (nz == h.rows()) continue;
    if (nz != pivot) {
      row_swap(h, pivot, nz);
      row_swap(u, pivot, nz);
    }
    for (std::size_t i = pivot + 1; i < h.rows(); ++i)
      if (h.at(i, col) != 0) row_gcd_combine(h, u, pivot, i, col);
    if (h.at(pivot, col) < 0) {
      row_negate(h, pivot);
      row_negate(u, pivot);
    }
    for (std::size_t i = 0; i < pivot; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(),
                 h.at(pivot, col).get_mpz_t());
      if (q != 0) {
        row_axpy(h, i, pivot, q);
        row_axpy(u, i, pivot, q);
      }
    }
    ++pivot;
  }
  r.rank = pivot;
  return r;
}

IntMatrix hnf(const IntMatrix& m) {
  HnfTransform t = hnf_transform(m);
  IntMatrix out(t.rank, m.cols());
  for (std::size_t i = 0; i < t.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = t.h.at(i, j);
  return out;
}

IntMatrix left_kernel(const IntMatrix& m) {
  HnfTransform t = hnf_transform(m);
  IntMatrix ker(0, m.rows());
  for (std::size_t i = t.rank; i < m.rows(); ++i) ker.append_row(t.u.row(i));
  return hnf(ker);
}

namespace {

// pivot column of row i of an HNF matrix
std::size_t pivot_col(const IntMatrix& h, std::size_t i) {
  std::size_t j = 0;
  while (j < h.cols() && h.at(i, j) == 0) ++j;
  return j;
}

}  // namespace

bool hnf_solve(const IntMatrix& h, const std::vector<Int>& v,
               std::vector<Int>& x) {
  if (v.size() != h.cols()) throw std::invalid_argument("dimension mismatch");
  std::vector<Int> w = v;
  x.assign(h.rows(), Int(0));
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = pivot_col(h, i);
    if (j == h.cols()) continue;
    if (w[j] % h.at(i, j) != 0) return false;
    x[i] = w[j] / h.at(i, j);
    if (x[i] != 0)
      for (std::size_t k = j; k < h.cols(); ++k) w[k] -= x[i] * h.at(i, k);
  }
  for (const Int& c : w)
    if (c != 0) return false;
  return true;
}

bool hnf_contains(const IntMatrix& h, const std::vector<Int>& v) {
  std::vector<Int> x;
  return hnf_solve(h, v, x);
}

namespace {

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void col_negate(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

void col_gcd_combine(IntMatrix& m, IntMatrix& v, std::size_t p, std::size_t j,
                     std::size_t row) {
  Int a = m.at(row, p), b = m.at(row, j), g, s, t;
  if (a != 0 && b % a == 0) {
    Int q = b / a;
    col_axpy(m, j, p, q);
    col_axpy(v, j, p, q);
    return;
  }
  xgcd(a, b, g, s, t);
  Int am = a / g, bm = b / g;
  auto combine = [&](IntMatrix& mat) {
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      Int cp = mat.at(i, p), cj = mat.at(i, j);
      mat.at(i, p) = s * cp + t * cj;
      mat.at(i, j) = am * cj - bm * cp;
    }
  };
  combine(m);
  combine(v);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = r.d;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // locate a nonzero pivot in the trailing submatrix
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < d.rows() && !found; ++i)
      for (std::size_t j = t; j < d.cols() && !found; ++j)
        if (d.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) {
      row_swap(d, t, pi);
      row_swap(u, t, pi);
    }
    if (pj != t) {
      col_swap(d, t, pj);
      col_swap(v, t, pj);
    }
    for (;;) {
      for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) row_gcd_combine(d, u, t, i, t);
      bool row_clear = true;
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) {
          col_gcd_combine(d, v, t, j, t);
          row_clear = false;
        }
      if (row_clear) {
        bool col_clear = true;
        for (std::size_t i = t + 1; i < d.rows(); ++i)
          if (d.at(i, t) != 0) col_clear = false;
        if (col_clear) {
          // enforce divisibility of the remaining block by the pivot
          bool divides = true;
          for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
            for (std::size_t j = t + 1; j < d.cols() && divides; ++j)
              if (d.at(i, j) % d.at(t, t) != 0) {
                row_axpy(d, t, i, Int(-1));
                row_axpy(u, t, i, Int(-1));
                divides = false;
              }
          if (divides) break;
        }
      }
    }
    if (d.at(t, t) < 0) {
      row_negate(d, t);
      row_negate(u, t);
    }
  }
  return r;
}

}  // namespace bcw
