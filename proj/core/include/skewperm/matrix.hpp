#pragma once

#include <vector>

#include "skewperm/arith.hpp"
#include "skewperm/graph.hpp"

namespace skewperm {

// Dense square matrix with exact rational entries, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n);
  // entries.size() must equal n*n; throws std::invalid_argument otherwise.
  Matrix(int n, std::vector<Rat> entries);

  int order() const { return n_; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<Rat>& entries() const { return e_; }

  Matrix transposed() const;
  // Rows/columns restricted to the given sorted index set.
  Matrix principal_submatrix(const std::vector<int>& indices) const;
  bool is_integer() const;
  bool is_skew_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<Rat> e_;
};

// 0/1 adjacency matrix of an undirected graph.
Matrix adjacency_matrix(const Graph& g);

// Matrix wrapper whose constructor enforces a[i][i] = 0 and
// a[j][i] = -a[i][j] exactly.
class SkewMatrix {
 public:
  // Throws std::invalid_argument naming the offending entry.
  explicit SkewMatrix(Matrix m);

  int order() const { return m_.order(); }
  const Rat& at(int i, int j) const { return m_.at(i, j); }
  const Matrix& matrix() const { return m_; }

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  Matrix m_;
};

}  // namespace skewperm
