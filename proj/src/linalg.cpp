#include "quiverhh/linalg.hpp"

#include <algorithm>

#include "quiverhh/errors.hpp"

namespace quiverhh {

std::string to_string(const Rational& q) { return q.get_str(); }

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) v.entries_.emplace_back(i, dense[i]);
  return v;
}

Rational SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return 0;
}

void SparseVector::add(std::size_t i, const Rational& s) {
  if (sgn(s) == 0) return;
  if (entries_.empty() || entries_.back().first < i) {
    entries_.emplace_back(i, s);
    return;
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += s;
    if (sgn(it->second) == 0) entries_.erase(it);
  } else {
    entries_.emplace(it, i, s);
  }
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& s) {
  if (sgn(s) == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, b->second * s);
      ++b;
    } else {
      Rational sum = a->second + b->second * s;
      if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& s) {
  if (sgn(s) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= s;
}

std::vector<Rational> SparseVector::to_dense(std::size_t dim) const {
  std::vector<Rational> out(dim);
  for (const auto& [i, v] : entries_) out.at(i) = v;
  return out;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  out.add_scaled(b, -1);
  return out;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  out.add_scaled(b, 1);
  return out;
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  data_[r].add(c, v);
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const { return data_.at(r).at(c); }

SparseVector RationalMatrix::column(std::size_t c) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) out.add(r, data_[r].at(c));
  return out;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.nonzeros();
  return n;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].entries()) t.data_[c].add(r, v);
  return t;
}

SparseVector RationalMatrix::apply(const SparseVector& x) const {
  if (x.extent() > cols_) throw DimensionMismatch("vector does not fit matrix columns");
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (const auto& [c, v] : data_[r].entries()) {
      Rational xc = x.at(c);
      if (sgn(xc) != 0) acc += v * xc;
    }
    out.add(r, acc);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimensions differ");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    SparseVector acc;
    for (const auto& [k, v] : a.data_[r].entries()) acc.add_scaled(b.data_[k], v);
    out.data_[r] = std::move(acc);
  }
  return out;
}

SparseVector Echelon::reduce(SparseVector v, SparseVector* coords) const {
  // Pivot rows lead at their own column, so eliminating pivots in increasing
  // column order never reintroduces an earlier pivot column.
  std::size_t from = 0;
  while (true) {
    const auto& e = v.entries();
    auto it = std::lower_bound(e.begin(), e.end(), from,
                               [](const SparseVector::Entry& x, std::size_t k) { return x.first < k; });
    typename std::map<std::size_t, Pivot>::const_iterator piv = pivots_.end();
    for (; it != e.end(); ++it) {
      piv = pivots_.find(it->first);
      if (piv != pivots_.end()) break;
    }
    if (it == e.end()) break;
    Rational coef = it->second;
    from = it->first + 1;
    v.add_scaled(piv->second.row, -coef);
    if (coords && track_) coords->add_scaled(piv->second.combo, coef);
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  const std::size_t k = insertions_++;
  SparseVector coords;
  SparseVector rem = reduce(std::move(v), track_ ? &coords : nullptr);
  if (rem.empty()) return false;
  Pivot p;
  Rational inv = 1 / rem.leading_value();
  if (track_) {
    p.combo = SparseVector::unit(k);
    p.combo.add_scaled(coords, -1);
    p.combo.scale(inv);
  }
  rem.scale(inv);
  std::size_t col = rem.leading();
  p.row = std::move(rem);
  pivots_.emplace(col, std::move(p));
  return true;
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> cols;
  for (const auto& [c, p] : pivots_) cols.push_back(c);
  return cols;
}

std::vector<SparseVector> Echelon::reduced_basis() const {
  std::map<std::size_t, SparseVector> done;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseVector row = it->second.row;
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [c, v] : row.entries())
      if (c != it->first && done.count(c)) hits.emplace_back(c, v);
    for (const auto& [c, v] : hits) row.add_scaled(done.at(c), -v);
    done.emplace(it->first, std::move(row));
  }
  std::vector<SparseVector> out;
  out.reserve(done.size());
  for (auto& [c, r] : done) out.push_back(std::move(r));
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

std::vector<SparseVector> kernel(const RationalMatrix& m) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  auto rref = e.reduced_basis();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& row : rref) is_pivot[row.leading()] = true;

  std::vector<std::size_t> slot(m.cols(), 0);
  std::vector<SparseVector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    slot[c] = basis.size();
    basis.push_back(SparseVector::unit(c));
  }
  for (const auto& row : rref) {
    const std::size_t p = row.leading();
    for (const auto& [c, v] : row.entries())
      if (c != p) basis[slot[c]].add(p, -v);
  }
  return basis;
}

std::vector<SparseVector> image(const RationalMatrix& m) {
  Echelon e;
  RationalMatrix t = m.transpose();
  for (std::size_t r = 0; r < t.rows(); ++r) e.insert(t.row(r));
  return e.reduced_basis();
}

SubquotientBasis quotient(std::vector<SparseVector> kernel_basis, std::vector<SparseVector> image_basis,
                          std::size_t ambient_dim) {
  for (const auto* family : {&kernel_basis, &image_basis})
    for (const auto& v : *family)
      if (v.extent() > ambient_dim) throw DimensionMismatch("vector exceeds ambient dimension");

  Echelon ker;
  for (const auto& v : kernel_basis) ker.insert(v);
  for (const auto& v : image_basis)
    if (!ker.contains(v)) throw ImageNotInKernel("image vector outside the kernel span");

  Echelon span;
  for (const auto& v : image_basis) span.insert(v);
  SubquotientBasis out;
  out.ambient_dim = ambient_dim;
  for (const auto& v : kernel_basis)
    if (span.insert(v)) out.quotient_reps.push_back(v);
  out.kernel_basis = std::move(kernel_basis);
  out.image_basis = std::move(image_basis);
  return out;
}

SpanSolver::SpanSolver(const std::vector<SparseVector>& basis) : size_(basis.size()) {
  for (const auto& v : basis)
    if (!echelon_.insert(v)) throw DimensionMismatch("span solver basis is linearly dependent");
}

std::optional<SparseVector> SpanSolver::coordinates(const SparseVector& v) const {
  SparseVector coords;
  if (!echelon_.reduce(v, &coords).empty()) return std::nullopt;
  return coords;
}

}  // namespace quiverhh
