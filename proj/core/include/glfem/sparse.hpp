#pragma once

#include <complex>
#include <span>
#include <vector>

namespace glfem {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Square complex matrix in compressed sparse-row layout.
///
/// Column indices are strictly increasing within each row. Entries are never
/// dropped for being zero, so two matrices assembled over the same mesh share
/// their sparsity pattern exactly.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  /// Validates the CSR invariants; throws InvalidArgument on violation.
  SparseMatrix(int n, std::vector<int> row_offsets, std::vector<int> columns,
               std::vector<Complex> values);

  static SparseMatrix identity(int n);

  int rows() const { return n_; }
  std::size_t nonzeros() const { return values_.size(); }

  std::span<const int> row_offsets() const { return row_offsets_; }
  std::span<const int> columns() const { return columns_; }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }

  /// Stored value at (i, j), zero when (i, j) is outside the pattern.
  Complex at(int i, int j) const;

  /// Position of (i, j) in values(), or -1.
  int find(int i, int j) const;

  bool same_pattern(const SparseMatrix& other) const;

 private:
  int n_ = 0;
  std::vector<int> row_offsets_{0};
  std::vector<int> columns_;
  std::vector<Complex> values_;
};

/// Accumulates (row, col, value) contributions and compresses them.
///
/// Duplicates are summed in insertion order, so the result is bit-for-bit
/// reproducible for a fixed insertion sequence.
class TripletBuilder {
 public:
  explicit TripletBuilder(int n) : n_(n) {}

  void reserve(std::size_t count) { entries_.reserve(count); }
  void add(int row, int col, Complex value);

  SparseMatrix build() const;

 private:
  struct Entry {
    int row;
    int col;
    Complex value;
  };
  int n_;
  std::vector<Entry> entries_;
};

/// alpha * A + beta * B on the union of the two patterns.
SparseMatrix axpy_matrix(Complex alpha, const SparseMatrix& a, Complex beta, const SparseMatrix& b);

ComplexVector matvec(const SparseMatrix& a, std::span<const Complex> x);

/// Euclidean norm of a complex vector.
double norm2(std::span<const Complex> x);

}  // namespace glfem
