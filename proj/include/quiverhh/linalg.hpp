#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quiverhh {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Sparse vector with entries sorted by index and no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector unit(std::size_t i) {
    SparseVector v;
    v.entries_.emplace_back(i, Rational(1));
    return v;
  }
  static SparseVector from_dense(const std::vector<Rational>& dense);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  // Index of the first nonzero entry; undefined on the zero vector.
  std::size_t leading() const { return entries_.front().first; }
  const Rational& leading_value() const { return entries_.front().second; }
  Rational at(std::size_t i) const;
  // Largest index + 1, or 0 for the zero vector.
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  // Accumulates s * e_i. Out-of-order insertions are fine but cost O(n).
  void add(std::size_t i, const Rational& s);
  // this += s * other
  void add_scaled(const SparseVector& other, const Rational& s);
  void scale(const Rational& s);

  std::vector<Rational> to_dense(std::size_t dim) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

SparseVector operator-(const SparseVector& a, const SparseVector& b);
SparseVector operator+(const SparseVector& a, const SparseVector& b);

// Exact sparse matrix; rows are sparse vectors over the column index.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  const SparseVector& row(std::size_t r) const { return data_.at(r); }
  SparseVector column(std::size_t c) const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  RationalMatrix transpose() const;
  SparseVector apply(const SparseVector& x) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

// Incremental row echelon form. Inserted vectors are reduced against the
// current pivots on their leading entries; independent remainders become new
// pivots, normalized to leading coefficient one. With tracking on, each pivot
// also records its expression in terms of the inserted vectors (numbered by
// insertion order, counting dependent insertions too), which gives exact
// coordinates for span membership queries.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Returns true iff v was independent of everything inserted so far.
  bool insert(SparseVector v);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t insertions() const { return insertions_; }

  // Remainder of v after reduction; zero iff v lies in the span. When
  // tracking and coords is non-null, coords receives c with
  // v - remainder = sum_k c_k * (k-th inserted vector).
  SparseVector reduce(SparseVector v, SparseVector* coords = nullptr) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  // Pivot columns in increasing order.
  std::vector<std::size_t> pivot_columns() const;
  // Fully reduced basis (RREF rows), ordered by pivot column.
  std::vector<SparseVector> reduced_basis() const;

 private:
  struct Pivot {
    SparseVector row;
    SparseVector combo;
  };
  bool track_;
  std::size_t insertions_ = 0;
  std::map<std::size_t, Pivot> pivots_;
};

std::size_t rank(const RationalMatrix& m);

// Basis of {x : M x = 0}: one vector per free column of the RREF, with a one
// in that column.
std::vector<SparseVector> kernel(const RationalMatrix& m);

// Basis of the column space, as the RREF rows of the transpose.
std::vector<SparseVector> image(const RationalMatrix& m);

// Kernel, image and a set of quotient representatives inside one ambient
// space. quotient_reps are the kernel vectors that extend the reduced image
// basis to a basis of the kernel, scanned in kernel order.
struct SubquotientBasis {
  std::size_t ambient_dim = 0;
  std::vector<SparseVector> kernel_basis;
  std::vector<SparseVector> image_basis;
  std::vector<SparseVector> quotient_reps;
  std::size_t dimension() const { return quotient_reps.size(); }
};

// Throws DimensionMismatch if a vector lies outside the ambient space and
// ImageNotInKernel if some image vector is not in the span of the kernel.
SubquotientBasis quotient(std::vector<SparseVector> kernel_basis, std::vector<SparseVector> image_basis,
                          std::size_t ambient_dim);

// Coordinates of v in an independent family; nullopt if v is outside the span.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<SparseVector>& basis);
  std::optional<SparseVector> coordinates(const SparseVector& v) const;
  std::size_t size() const { return size_; }

 private:
  Echelon echelon_{true};
  std::size_t size_ = 0;
};

}  // namespace quiverhh
