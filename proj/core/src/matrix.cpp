#include "skewperm/matrix.hpp"

#include <stdexcept>
#include <string>

namespace skewperm {

Matrix::Matrix(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("matrix order must be non-negative");
  e_.assign(static_cast<std::size_t>(n) * n, Rat(0));
}

Matrix::Matrix(int n, std::vector<Rat> entries) : n_(n), e_(std::move(entries)) {
  if (n < 0) throw std::invalid_argument("matrix order must be non-negative");
  if (e_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix of order " + std::to_string(n) + " needs " +
                                std::to_string(static_cast<long long>(n) * n) +
                                " entries, got " + std::to_string(e_.size()));
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::principal_submatrix(const std::vector<int>& indices) const {
  const int k = static_cast<int>(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] < 0 || indices[r] >= n_)
      throw std::invalid_argument("submatrix index out of range");
    if (r > 0 && indices[r] <= indices[r - 1])
      throw std::invalid_argument("submatrix indices must be strictly increasing");
  }
  Matrix s(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s.at(i, j) = at(indices[i], indices[j]);
  return s;
}

bool Matrix::is_integer() const {
  for (const Rat& x : e_)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

bool Matrix::is_skew_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0) return false;
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.vertex_count());
  for (const Edge& e : g.edges()) {
    a.at(e.u, e.v) = 1;
    a.at(e.v, e.u) = 1;
  }
  return a;
}

SkewMatrix::SkewMatrix(Matrix m) : m_(std::move(m)) {
  for (int i = 0; i < m_.order(); ++i) {
    if (m_.at(i, i) != 0)
      throw std::invalid_argument("skew-symmetric matrix needs a zero diagonal, entry (" +
                                  std::to_string(i) + ", " + std::to_string(i) + ") is not");
    for (int j = i + 1; j < m_.order(); ++j)
      if (m_.at(i, j) != -m_.at(j, i))
        throw std::invalid_argument("entries (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") and (" + std::to_string(j) + ", " + std::to_string(i) +
                                    ") are not negatives of each other");
  }
}

}  // namespace skewperm
