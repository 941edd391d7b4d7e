#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spherahall/errors.hpp"
#include "spherahall/prime_field.hpp"

namespace spherahall {

template <class F>
concept ExactField = requires(const F f, typename F::value_type a) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
};

/// Dense row-major matrix over an exact field.
template <ExactField Field>
class FieldMatrix {
 public:
  using value_type = typename Field::value_type;

  FieldMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static FieldMatrix identity(Field field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  FieldMatrix operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidArgument("matrix shape mismatch in product");
    FieldMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const value_type& x = (*this)(i, k);
        if (field_.is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) = field_.add(r(i, j), field_.mul(x, o(k, j)));
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && field_.is_zero((*this)(piv, c))) ++piv;
      if (piv == rows_) continue;
      swap_rows(piv, r);
      value_type inv = field_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        value_type f = (*this)(i, c);
        if (field_.is_zero(f)) continue;
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(f, (*this)(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    FieldMatrix m = *this;
    return m.rref().size();
  }

  /// Basis of {x : M x = 0}; exactly cols - rank vectors.
  std::vector<std::vector<value_type>> nullspace() const {
    FieldMatrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<value_type>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<value_type> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_.neg(m(r, free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> a_;
};

template <ExactField Field>
std::size_t rank(const FieldMatrix<Field>& m) {
  return m.rank();
}

template <ExactField Field>
std::vector<std::vector<typename Field::value_type>> solve_nullspace(const FieldMatrix<Field>& m) {
  return m.nullspace();
}

/// Incremental span over a field: insert vectors, learn whether each one
/// enlarged the span.
template <ExactField Field>
class SpanBuilder {
 public:
  using value_type = typename Field::value_type;
  SpanBuilder(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Reduces v against the current basis; adds it if independent.
  bool insert(std::vector<value_type> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const value_type& c = v[pivots_[k]];
      if (field_.is_zero(c)) continue;
      value_type f = c;
      for (std::size_t j = 0; j < dim_; ++j) v[j] = field_.sub(v[j], field_.mul(f, rows_[k][j]));
    }
    std::size_t p = 0;
    while (p < dim_ && field_.is_zero(v[p])) ++p;
    if (p == dim_) return false;
    value_type inv = field_.inv(v[p]);
    for (auto& x : v) x = field_.mul(x, inv);
    // Keep rows fully reduced so the pivot test above stays valid.
    for (auto& row : rows_) {
      value_type f = row[p];
      if (field_.is_zero(f)) continue;
      for (std::size_t j = 0; j < dim_; ++j) row[j] = field_.sub(row[j], field_.mul(f, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace spherahall
