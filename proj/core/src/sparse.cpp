#include "glfem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "glfem/exceptions.hpp"

namespace glfem {

SparseMatrix::SparseMatrix(int n, std::vector<int> row_offsets, std::vector<int> columns,
                           std::vector<Complex> values)
    : n_(n),
      row_offsets_(std::move(row_offsets)),
      columns_(std::move(columns)),
      values_(std::move(values)) {
  if (n_ < 0 || row_offsets_.size() != static_cast<std::size_t>(n_) + 1) {
    throw InvalidArgument("SparseMatrix: row_offsets must have n + 1 entries");
  }
  if (row_offsets_.front() != 0 ||
      static_cast<std::size_t>(row_offsets_.back()) != columns_.size() ||
      columns_.size() != values_.size()) {
    throw InvalidArgument("SparseMatrix: inconsistent offsets/columns/values sizes");
  }
  for (int i = 0; i < n_; ++i) {
    const int begin = row_offsets_[static_cast<std::size_t>(i)];
    const int end = row_offsets_[static_cast<std::size_t>(i) + 1];
    if (end < begin) {
      throw InvalidArgument("SparseMatrix: row offsets must be nondecreasing");
    }
    for (int k = begin; k < end; ++k) {
      const int c = columns_[static_cast<std::size_t>(k)];
      if (c < 0 || c >= n_ || (k > begin && c <= columns_[static_cast<std::size_t>(k) - 1])) {
        throw InvalidArgument("SparseMatrix: column indices must be in range and strictly "
                              "increasing in row " + std::to_string(i));
      }
    }
  }
}

SparseMatrix SparseMatrix::identity(int n) {
  std::vector<int> offsets(static_cast<std::size_t>(n) + 1);
  std::iota(offsets.begin(), offsets.end(), 0);
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  return SparseMatrix(n, std::move(offsets), std::move(cols),
                      std::vector<Complex>(static_cast<std::size_t>(n), Complex{1.0, 0.0}));
}

int SparseMatrix::find(int i, int j) const {
  if (i < 0 || i >= n_) {
    return -1;
  }
  const auto begin = columns_.begin() + row_offsets_[static_cast<std::size_t>(i)];
  const auto end = columns_.begin() + row_offsets_[static_cast<std::size_t>(i) + 1];
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) {
    return -1;
  }
  return static_cast<int>(it - columns_.begin());
}

Complex SparseMatrix::at(int i, int j) const {
  const int k = find(i, j);
  return k < 0 ? Complex{} : values_[static_cast<std::size_t>(k)];
}

bool SparseMatrix::same_pattern(const SparseMatrix& other) const {
  return n_ == other.n_ && row_offsets_ == other.row_offsets_ && columns_ == other.columns_;
}

void TripletBuilder::add(int row, int col, Complex value) {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) {
    throw InvalidArgument("TripletBuilder::add: index out of range");
  }
  entries_.push_back({row, col, value});
}

SparseMatrix TripletBuilder::build() const {
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    const Entry& ea = entries_[a];
    const Entry& eb = entries_[b];
    return ea.row != eb.row ? ea.row < eb.row : ea.col < eb.col;
  });

  std::vector<int> offsets(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<int> cols;
  std::vector<Complex> vals;
  cols.reserve(entries_.size());
  vals.reserve(entries_.size());
  int last_row = -1;
  int last_col = -1;
  for (const std::size_t idx : order) {
    const Entry& e = entries_[idx];
    if (e.row == last_row && e.col == last_col) {
      vals.back() += e.value;
      continue;
    }
    cols.push_back(e.col);
    vals.push_back(e.value);
    ++offsets[static_cast<std::size_t>(e.row) + 1];
    last_row = e.row;
    last_col = e.col;
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return SparseMatrix(n_, std::move(offsets), std::move(cols), std::move(vals));
}

SparseMatrix axpy_matrix(Complex alpha, const SparseMatrix& a, Complex beta,
                         const SparseMatrix& b) {
  if (a.rows() != b.rows()) {
    throw InvalidArgument("axpy_matrix: dimension mismatch (" + std::to_string(a.rows()) +
                          " vs " + std::to_string(b.rows()) + ")");
  }
  const int n = a.rows();
  std::vector<int> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> cols;
  std::vector<Complex> vals;
  cols.reserve(std::max(a.nonzeros(), b.nonzeros()));
  vals.reserve(cols.capacity());

  const auto ao = a.row_offsets();
  const auto bo = b.row_offsets();
  const auto ac = a.columns();
  const auto bc = b.columns();
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    auto ka = static_cast<std::size_t>(ao[i]);
    auto kb = static_cast<std::size_t>(bo[i]);
    const auto ea = static_cast<std::size_t>(ao[i + 1]);
    const auto eb = static_cast<std::size_t>(bo[i + 1]);
    while (ka < ea || kb < eb) {
      const int ca = ka < ea ? ac[ka] : n;
      const int cb = kb < eb ? bc[kb] : n;
      if (ca == cb) {
        cols.push_back(ca);
        vals.push_back(alpha * av[ka++] + beta * bv[kb++]);
      } else if (ca < cb) {
        cols.push_back(ca);
        vals.push_back(alpha * av[ka++]);
      } else {
        cols.push_back(cb);
        vals.push_back(beta * bv[kb++]);
      }
    }
    offsets[i + 1] = static_cast<int>(cols.size());
  }
  return SparseMatrix(n, std::move(offsets), std::move(cols), std::move(vals));
}

ComplexVector matvec(const SparseMatrix& a, std::span<const Complex> x) {
  if (x.size() != static_cast<std::size_t>(a.rows())) {
    throw InvalidArgument("matvec: vector length " + std::to_string(x.size()) +
                          " does not match matrix dimension " + std::to_string(a.rows()));
  }
  ComplexVector y(x.size());
  const auto offsets = a.row_offsets();
  const auto cols = a.columns();
  const auto vals = a.values();
  for (std::size_t i = 0; i < y.size(); ++i) {
    Complex sum{};
    for (auto k = static_cast<std::size_t>(offsets[i]); k < static_cast<std::size_t>(offsets[i + 1]);
         ++k) {
      sum += vals[k] * x[static_cast<std::size_t>(cols[k])];
    }
    y[i] = sum;
  }
  return y;
}

double norm2(std::span<const Complex> x) {
  double sum = 0.0;
  for (const Complex& v : x) {
    sum += std::norm(v);
  }
  return std::sqrt(sum);
}

}  // namespace glfem
