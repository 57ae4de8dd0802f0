#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace morse {

/// Dense vector over Z/2, packed 64 entries per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool any() const noexcept;
  std::size_t count() const noexcept;
  /// Index of the lowest set entry at or after `from`, or size() when none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other) noexcept;
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector&) const = default;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over Z/2 stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const noexcept { return data_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { data_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r].flip(c); }
  const BitVector& row(std::size_t r) const noexcept { return data_[r]; }
  BitVector column(std::size_t c) const;
  void set_column(std::size_t c, const BitVector& v);

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& other) const;
  BitVector apply(const BitVector& x) const;
  bool is_zero() const noexcept;

  std::size_t rank() const;
  /// A basis of {x : M x = 0}.
  std::vector<BitVector> kernel_basis() const;
  /// Some x with M x = b, if one exists.
  std::optional<BitVector> solve(const BitVector& b) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Gaussian elimination state for testing membership in a span. Vectors are
/// reduced against an echelon basis keyed by lowest set index.
class SpanReducer {
 public:
  explicit SpanReducer(std::size_t size) : pivot_of_(size, kNone) {}

  /// Adds v to the span; returns false when v was already in it.
  bool insert(BitVector v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return !reduce(v).any(); }
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivot_of_;
};

}  // namespace morse
