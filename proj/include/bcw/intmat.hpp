#pragma once

#include <cstddef>
#include <vector>

#include "bcw/numtheory.hpp"

namespace bcw {

// Dense matrix over Z, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  void append_row(const std::vector<Int>& r);

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  // lexicographic on (rows, cols, entries row-major)
  int compare(const IntMatrix& o) const;

  Int det() const;          // square only, fraction-free Gaussian elimination
  IntMatrix transpose() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Row-style Hermite normal form: upper echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
// result has rank-many rows and the same row span as m.
IntMatrix hnf(const IntMatrix& m);

// Same, also returning the unimodular transform u with u * m = h
// (u is square of size m.rows(); zero rows of the echelon are kept here
// so the identity u*m = h_full holds; hnf_rows gives the rank).
struct HnfTransform {
  IntMatrix h;       // full m.rows() x m.cols(), zero rows at the bottom
  IntMatrix u;       // unimodular, u * m = h
  std::size_t rank;  // number of nonzero rows of h
};
HnfTransform hnf_transform(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMatrix u;  // |det u| = 1
  IntMatrix v;  // |det v| = 1, u * m * v = d
};
SnfResult snf(const IntMatrix& m);

// Z-basis for {x : x * m = 0}, as rows.
IntMatrix left_kernel(const IntMatrix& m);

// Does v lie in the row span (over Z) of the HNF matrix h?
// h must be a matrix returned by hnf().
bool hnf_contains(const IntMatrix& h, const std::vector<Int>& v);

// Solve x * h = v over Z for h in HNF; false if no integer solution.
bool hnf_solve(const IntMatrix& h, const std::vector<Int>& v,
               std::vector<Int>& x);

}  // namespace bcw
