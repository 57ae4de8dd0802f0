#include "morse/bitmatrix.hpp"

#include <bit>
#include <utility>

namespace morse {

bool BitVector::any() const noexcept {
  for (std::uint64_t w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return size_;
    w = words_[wi];
  }
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].test(c)) v.set(r);
  }
  return v;
}

void BitMatrix::set_column(std::size_t c, const BitVector& v) {
  for (std::size_t r = 0; r < rows_; ++r) data_[r].set(c, v.test(r));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : data_[r].support()) t.set(c, r);
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k : data_[r].support()) out.data_[r] ^= other.data_[k];
  }
  return out;
}

BitVector BitMatrix::apply(const BitVector& x) const {
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t parity = 0;
    const auto& rw = data_[r].words();
    const auto& xw = x.words();
    for (std::size_t i = 0; i < rw.size(); ++i) parity += static_cast<std::size_t>(std::popcount(rw[i] & xw[i]));
    if (parity & 1u) y.set(r);
  }
  return y;
}

bool BitMatrix::is_zero() const noexcept {
  for (const BitVector& r : data_) {
    if (r.any()) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form in place. Columns are scanned left to right and
// the pivot is the lowest-index row still available. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t pr = next;
    while (pr < rows.size() && !rows[pr].test(c)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].test(c)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  std::vector<BitVector> rows = data_;
  return rref(rows, cols_).size();
}

std::vector<BitVector> BitMatrix::kernel_basis() const {
  std::vector<BitVector> rows = data_;
  const std::vector<std::size_t> pivots = rref(rows, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector x(cols_);
    x.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].test(free)) x.set(pivots[i]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitVector> BitMatrix::solve(const BitVector& b) const {
  // Augment with b as an extra column and eliminate.
  std::vector<BitVector> rows(rows_, BitVector(cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : data_[r].support()) rows[r].set(c);
    if (b.test(r)) rows[r].set(cols_);
  }
  const std::vector<std::size_t> pivots = rref(rows, cols_);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rows[r].test(cols_)) return std::nullopt;
  }
  BitVector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (rows[i].test(cols_)) x.set(pivots[i]);
  }
  return x;
}

bool SpanReducer::insert(BitVector v) {
  v = reduce(std::move(v));
  const std::size_t lead = v.find_next(0);
  if (lead == v.size()) return false;
  pivot_of_[lead] = basis_.size();
  basis_.push_back(std::move(v));
  return true;
}

BitVector SpanReducer::reduce(BitVector v) const {
  for (std::size_t i = v.find_next(0); i < v.size(); i = v.find_next(i + 1)) {
    if (pivot_of_[i] != kNone) v ^= basis_[pivot_of_[i]];
  }
  return v;
}

}  // namespace morse
