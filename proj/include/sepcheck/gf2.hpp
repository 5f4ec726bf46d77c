#pragma once

// Dense linear algebra over GF(2), with a small exact integer matrix on the
// side for signed coboundaries.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepcheck/errors.hpp"

namespace sepcheck {

/// A vector over GF(2), packed 64 bits per word. Bits past size() are kept 0.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + word_bits - 1) / word_bits, 0) {}
  BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
  }

  static BitVector unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  std::span<const word_type> words() const noexcept { return words_; }

  bool get(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value)
      words_[i / word_bits] |= mask;
    else
      words_[i / word_bits] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  void resize(std::size_t n) {
    words_.resize((n + word_bits - 1) / word_bits, 0);
    size_ = n;
    trim();
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  /// XOR of `other` into this vector, touching only words at or after `from_bit`.
  void xor_tail(const BitVector& other, std::size_t from_bit) noexcept {
    for (std::size_t w = from_bit / word_bits; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }

  bool dot(const BitVector& other) const {
    check_same_size(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the first set bit at or after `from`, or size() if there is none.
  std::size_t find_next(std::size_t from = 0) const noexcept {
    if (from >= size_) return size_;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (cur != 0) return std::min(size_, w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
      if (++w == words_.size()) return size_;
      cur = words_[w];
    }
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) out.push_back(i);
    return out;
  }

  /// Concatenation (this, other).
  BitVector concat(const BitVector& other) const {
    BitVector out(size_ + other.size_);
    for (std::size_t i : support()) out.set(i);
    for (std::size_t i : other.support()) out.set(size_ + i);
    return out;
  }

  BitVector slice(std::size_t offset, std::size_t length) const {
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i)
      if (get(offset + i)) out.set(i);
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
  }
  void check_same_size(const BitVector& other) const {
    if (other.size_ != size_) throw InputError("BitVector size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// Dense rows x cols matrix over GF(2), stored row-major as BitVectors.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged BitMatrix literal");
      rows_.emplace_back(r);
    }
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows) {
    for (const auto& r : rows)
      if (r.size() != cols) throw InputError("row length does not match column count");
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
  }
  static BitMatrix from_columns(std::size_t rows, const std::vector<BitVector>& cols) {
    BitMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw InputError("column length does not match row count");
      for (std::size_t r : cols[c].support()) m.set(r, c);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
  const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

  BitVector column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (get(r, c)) v.set(r);
    return v;
  }
  std::vector<BitVector> columns() const {
    std::vector<BitVector> out(cols_, BitVector(rows()));
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c : rows_[r].support()) out[c].set(r);
    return out;
  }

  bool is_zero() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c : rows_[r].support()) t.set(c, r);
    return t;
  }

  BitVector operator*(const BitVector& x) const {
    if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].dot(x)) y.set(r);
    return y;
  }

  BitMatrix operator*(const BitMatrix& rhs) const {
    if (rhs.rows() != cols_) throw InputError("matrix product dimension mismatch");
    BitMatrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t k : rows_[r].support()) out.rows_[r] ^= rhs.rows_[k];
    return out;
  }

  BitMatrix& operator+=(const BitMatrix& rhs) {
    if (rhs.rows() != rows() || rhs.cols_ != cols_) throw InputError("matrix sum dimension mismatch");
    for (std::size_t r = 0; r < rows(); ++r) rows_[r] ^= rhs.rows_[r];
    return *this;
  }
  friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) { return lhs += rhs; }

  /// Block matrix [lhs | rhs].
  static BitMatrix hstack(const BitMatrix& lhs, const BitMatrix& rhs) {
    if (lhs.rows() != rhs.rows()) throw InputError("hstack row mismatch");
    BitMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) out.rows_[r] = lhs.rows_[r].concat(rhs.rows_[r]);
    return out;
  }
  /// Block matrix [top ; bottom].
  static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw InputError("vstack column mismatch");
    BitMatrix out = top;
    out.rows_.insert(out.rows_.end(), bottom.rows_.begin(), bottom.rows_.end());
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Linearly independent vectors of a common length.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<BitVector> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }

  /// The ambient_dim x size() matrix whose columns are the basis vectors.
  BitMatrix as_columns() const { return BitMatrix::from_columns(ambient_dim, vectors); }
};

/// Incremental row-echelon basis. Each stored row has its pivot at its first
/// set bit; reducing a vector scans it left to right and clears every bit
/// that sits on a pivot. Optionally tracks which inserted vectors combine to
/// each stored row, so membership queries can return coordinates.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim, bool track_coordinates = true)
      : ambient_(ambient_dim), track_(track_coordinates), pivot_row_(ambient_dim, npos) {}

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Inserts v; returns true when v was independent of what came before.
  /// The inserted vector is numbered inserted()-1 for coordinate purposes
  /// whether or not it was independent.
  bool insert(const BitVector& v) {
    const std::size_t id = inserted_++;
    if (track_ && inserted_ > capacity_) grow();
    auto [residual, combo] = reduce_impl(v);
    const std::size_t p = residual.find_next(0);
    if (p == residual.size()) return false;
    if (track_) combo.flip(id);
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(residual));
    combos_.push_back(std::move(combo));
    return true;
  }

  bool contains(const BitVector& v) const { return reduce_impl(v).first.none(); }

  /// Coefficients over the inserted vectors expressing v, if v is in the span.
  std::optional<BitVector> express(const BitVector& v) const {
    if (!track_) throw InputError("EchelonBasis: coordinates were not tracked");
    auto [residual, combo] = reduce_impl(v);
    if (residual.any()) return std::nullopt;
    combo.resize(inserted_);
    return combo;
  }

  /// v with every pivot position cleared.
  BitVector residual(const BitVector& v) const { return reduce_impl(v).first; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void grow() {
    capacity_ = std::max<std::size_t>(64, 2 * capacity_);
    for (auto& c : combos_) c.resize(capacity_);
  }

  std::pair<BitVector, BitVector> reduce_impl(const BitVector& v) const {
    if (v.size() != ambient_) throw InputError("EchelonBasis: vector length mismatch");
    BitVector x = v;
    BitVector combo(track_ ? capacity_ : 0);
    for (std::size_t p = x.find_next(0); p < ambient_; p = x.find_next(p + 1)) {
      const std::size_t r = pivot_row_[p];
      if (r == npos) continue;
      x.xor_tail(rows_[r], p);
      if (track_) combo ^= combos_[r];
    }
    return {std::move(x), std::move(combo)};
  }

  std::size_t ambient_;
  bool track_;
  std::size_t inserted_ = 0;
  std::size_t capacity_ = 0;
  std::vector<std::size_t> pivot_row_;
  std::vector<BitVector> rows_;
  std::vector<BitVector> combos_;
};

namespace detail {

/// Reduced row echelon form of m (optionally with an augmented right-hand
/// side carried in a parallel vector). Pivots are chosen as the first row
/// with a nonzero entry in the current column.
struct Rref {
  std::vector<BitVector> rows;
  std::vector<bool> rhs;
  std::vector<std::size_t> pivot_cols;  // pivot column of rows[i], i < rank
};

inline Rref rref(const BitMatrix& m, const BitVector* b = nullptr) {
  Rref out;
  out.rows = m.row_vectors();
  out.rhs.assign(m.rows(), false);
  if (b)
    for (std::size_t r = 0; r < m.rows(); ++r) out.rhs[r] = b->get(r);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !out.rows[pivot].get(c)) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(out.rows[pivot], out.rows[rank]);
    std::swap(out.rhs[pivot], out.rhs[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && out.rows[r].get(c)) {
        out.rows[r].xor_tail(out.rows[rank], c);
        out.rhs[r] = out.rhs[r] != out.rhs[rank];
      }
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  return out;
}

}  // namespace detail

/// Row rank over GF(2). Rows are folded one at a time into a pivot table
/// keyed by first set bit; a row stops reducing at its first free position.
inline std::size_t rank(const BitMatrix& m) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_row(m.cols(), npos);
  std::vector<BitVector> rows;
  for (const auto& row : m.row_vectors()) {
    BitVector x = row;
    for (std::size_t p = x.find_next(0); p < m.cols(); p = x.find_next(p + 1)) {
      if (pivot_row[p] == npos) {
        pivot_row[p] = rows.size();
        rows.push_back(std::move(x));
        break;
      }
      x.xor_tail(rows[pivot_row[p]], p);
    }
  }
  return rows.size();
}

/// Some x with m x = b, free coordinates set to 0; empty if inconsistent.
inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  const auto red = detail::rref(m, &b);
  const std::size_t rank = red.pivot_cols.size();
  for (std::size_t r = rank; r < red.rows.size(); ++r)
    if (red.rhs[r]) return std::nullopt;
  BitVector x(m.cols());
  for (std::size_t r = 0; r < rank; ++r)
    if (red.rhs[r]) x.set(red.pivot_cols[r]);
  return x;
}

inline SubspaceBasis kernel_basis(const BitMatrix& m) {
  const auto red = detail::rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  SubspaceBasis out{m.cols(), {}};
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v = BitVector::unit(m.cols(), free);
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
      if (red.rows[r].get(free)) v.set(red.pivot_cols[r]);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

inline std::size_t cokernel_dim(const BitMatrix& m) { return m.rows() - rank(m); }

inline std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto aug = detail::rref(BitMatrix::hstack(m, BitMatrix::identity(n)));
  if (aug.pivot_cols.size() < n || (n > 0 && aug.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  std::vector<BitVector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) rows.push_back(aug.rows[r].slice(n, n));
  return BitMatrix::from_rows(n, std::move(rows));
}

/// Columns of m spanning its image, chosen greedily left to right.
inline SubspaceBasis image_basis(const BitMatrix& m) {
  SubspaceBasis out{m.rows(), {}};
  EchelonBasis eb(m.rows());
  for (auto& col : m.columns())
    if (eb.insert(col)) out.vectors.push_back(std::move(col));
  return out;
}

/// Exact integer matrix. Entries stay tiny here (signed incidence numbers and
/// their sums), so a 64-bit signed entry never overflows.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  value_type at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  value_type& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::vector<value_type> operator*(std::span<const value_type> x) const {
    if (x.size() != cols_) throw InputError("IntMatrix: dimension mismatch");
    std::vector<value_type> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
    return y;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  BitMatrix mod2() const {
    BitMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) % 2 != 0) m.set(r, c);
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<value_type> data_;
};

// ---------------------------------------------------------------------------
// Ladder lemma: two exact rows joined by vertical maps, the middle one an
// isomorphism,
//
//        A --a--> B --b--> C --> 0
//        |f       |g       |h
//   D -l-> A' -a'-> B' -b'-> C'
//
// then ker h is isomorphic to coker (f + l): A (+) D -> A'.
// ---------------------------------------------------------------------------

struct LadderDiagram {
  BitMatrix top_first;        // A  -> B
  BitMatrix top_second;       // B  -> C
  BitMatrix bottom_lambda;    // D  -> A'
  BitMatrix bottom_first;     // A' -> B'
  BitMatrix bottom_second;    // B' -> C'
  BitMatrix f;                // A  -> A'
  BitMatrix g;                // B  -> B'
  BitMatrix h;                // C  -> C'
};

struct LadderCheck {
  std::size_t ker_h_dim = 0;
  std::size_t coker_fplus_lambda_dim = 0;
  bool commutes = false;
  bool rows_exact = false;
};

/// Checks the diagram's shape, commutativity and row exactness, then reports
/// both sides of the ladder lemma. Throws InputError on inconsistent shapes
/// or a singular middle map.
inline LadderCheck lemma31_check(const LadderDiagram& d) {
  const std::size_t dim_a = d.top_first.cols(), dim_b = d.top_first.rows(), dim_c = d.top_second.rows();
  const std::size_t dim_a2 = d.bottom_lambda.rows();
  const std::size_t dim_b2 = d.bottom_first.rows(), dim_c2 = d.bottom_second.rows();
  auto expect = [](const BitMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) throw InputError(std::string("ladder: bad shape for ") + what);
  };
  expect(d.top_second, dim_c, dim_b, "B->C");
  expect(d.bottom_first, dim_b2, dim_a2, "A'->B'");
  expect(d.bottom_second, dim_c2, dim_b2, "B'->C'");
  expect(d.f, dim_a2, dim_a, "f");
  expect(d.g, dim_b2, dim_b, "g");
  expect(d.h, dim_c2, dim_c, "h");
  if (dim_b != dim_b2 || rank(d.g) != dim_b) throw InputError("ladder: middle map g is not invertible");

  LadderCheck out;
  out.commutes = (d.bottom_first * d.f == d.g * d.top_first) && (d.bottom_second * d.g == d.h * d.top_second);

  const std::size_t r_a = rank(d.top_first), r_b = rank(d.top_second);
  const std::size_t r_l = rank(d.bottom_lambda), r_a2 = rank(d.bottom_first), r_b2 = rank(d.bottom_second);
  const bool top_exact = (d.top_second * d.top_first).is_zero() && r_a + r_b == dim_b && r_b == dim_c;
  const bool bottom_exact = (d.bottom_first * d.bottom_lambda).is_zero() && r_l + r_a2 == dim_a2 &&
                            (d.bottom_second * d.bottom_first).is_zero() && r_a2 + r_b2 == dim_b2;
  out.rows_exact = top_exact && bottom_exact;

  out.ker_h_dim = dim_c - rank(d.h);
  out.coker_fplus_lambda_dim = cokernel_dim(BitMatrix::hstack(d.f, d.bottom_lambda));
  if (out.commutes && out.rows_exact && out.ker_h_dim != out.coker_fplus_lambda_dim)
    throw AssertionFailure("ladder lemma violated: dim ker h != dim coker(f + lambda)");
  return out;
}

namespace detail {

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1u) m.set(r, c);
  return m;
}

inline BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    BitMatrix m = random_matrix(n, n, rng);
    if (rank(m) == n) return m;
  }
}

/// Random rows x cols matrix of full rank min(rows, cols).
inline BitMatrix random_full_rank(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  while (true) {
    BitMatrix m = random_matrix(rows, cols, rng);
    if (rank(m) == std::min(rows, cols)) return m;
  }
}

/// Invertible n x n matrix whose first columns are the given independent vectors.
inline BitMatrix extend_to_basis(const std::vector<BitVector>& start, std::size_t n) {
  std::vector<BitVector> cols;
  EchelonBasis eb(n);
  for (const auto& v : start)
    if (eb.insert(v)) cols.push_back(v);
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    BitVector e = BitVector::unit(n, i);
    if (eb.insert(e)) cols.push_back(std::move(e));
  }
  return BitMatrix::from_columns(n, cols);
}

}  // namespace detail

/// Random diagram meeting the ladder lemma's hypotheses by construction:
/// the bottom row is built around a random invertible change of basis of B',
/// the top row is pulled back through a random invertible g.
inline LadderDiagram random_exact_ladder(std::mt19937_64& rng, std::size_t max_dim = 6) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t nb = pick(0, max_dim);
  const std::size_t r = pick(0, nb);           // rank of A' -> B'
  const std::size_t na2 = r + pick(0, 3);      // dim A'
  const std::size_t extra_c2 = pick(0, 2);     // C' may be bigger than B'/im a'
  const std::size_t nc2 = nb - r + extra_c2;

  LadderDiagram d;
  const BitMatrix p = detail::random_invertible(nb, rng);
  const BitMatrix p_inv = *inverse(p);

  // a' = P [S; 0], S an r x na2 surjection
  BitMatrix stacked(nb, na2);
  const BitMatrix s = detail::random_full_rank(r, na2, rng);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < na2; ++j)
      if (s.get(i, j)) stacked.set(i, j);
  d.bottom_first = p * stacked;

  // b' = J [0 | I] P^-1, J injective: kernel is exactly P span(e_1..e_r)
  BitMatrix proj(nb - r, nb);
  for (std::size_t i = 0; i < nb - r; ++i) proj.set(i, r + i);
  const BitMatrix j = detail::random_full_rank(nc2, nb - r, rng);
  d.bottom_second = j * proj * p_inv;

  // lambda hits exactly ker a'
  const SubspaceBasis ker_a2 = kernel_basis(d.bottom_first);
  const std::size_t nd = ker_a2.size() + pick(0, 2);
  d.bottom_lambda = ker_a2.as_columns() * detail::random_full_rank(ker_a2.size(), nd, rng);
  if (ker_a2.empty()) d.bottom_lambda = BitMatrix(na2, nd);

  // top row: a = g^-1 a' Q, so g a = a' f with f = Q + (ker a' noise)
  d.g = detail::random_invertible(nb, rng);
  const BitMatrix g_inv = *inverse(d.g);
  const std::size_t na = pick(0, 4);
  const BitMatrix q = detail::random_matrix(na2, na, rng);
  d.top_first = g_inv * d.bottom_first * q;
  d.f = q;
  if (!ker_a2.empty()) d.f += ker_a2.as_columns() * detail::random_matrix(ker_a2.size(), na, rng);

  // C = B / im a, b the quotient map in a basis extending im a
  const SubspaceBasis im_a = image_basis(d.top_first);
  const BitMatrix basis_b = detail::extend_to_basis(im_a.vectors, nb);
  const BitMatrix basis_b_inv = *inverse(basis_b);
  const std::size_t sa = im_a.size();
  BitMatrix quotient(nb - sa, nb);
  for (std::size_t i = 0; i < nb - sa; ++i) quotient.set(i, sa + i);
  d.top_second = quotient * basis_b_inv;

  // h(e_i) = b' g (basis_b column sa + i)
  const BitMatrix image_of_complement = d.bottom_second * d.g * basis_b;
  BitMatrix h(nc2, nb - sa);
  for (std::size_t i = 0; i < nb - sa; ++i)
    for (std::size_t row = 0; row < nc2; ++row)
      if (image_of_complement.get(row, sa + i)) h.set(row, i);
  d.h = std::move(h);
  return d;
}

}  // namespace sepcheck
