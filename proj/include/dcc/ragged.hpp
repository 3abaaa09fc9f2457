#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace dcc {

// Compact array of variable-length rows (offsets + flat values).
template <class T>
class Ragged {
 public:
  Ragged() : offsets_{0} {}

  template <class Rows>
  static Ragged from_rows(const Rows& rows) {
    Ragged r;
    std::size_t total = 0;
    for (const auto& row : rows) total += row.size();
    r.values_.reserve(total);
    r.offsets_.reserve(rows.size() + 1);
    for (const auto& row : rows) r.push_row(std::span<const T>(row.data(), row.size()));
    return r;
  }

  void push_row(std::span<const T> row) {
    values_.insert(values_.end(), row.begin(), row.end());
    offsets_.push_back(values_.size());
  }

  std::size_t rows() const { return offsets_.size() - 1; }
  std::size_t total() const { return values_.size(); }
  std::size_t row_size(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  std::span<const T> operator[](std::size_t i) const {
    return {values_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<T> mutable_row(std::size_t i) {
    return {values_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const T> at(std::size_t i) const {
    if (i >= rows()) throw std::out_of_range("row index out of range");
    return (*this)[i];
  }

  const std::vector<std::size_t>& offsets() const { return offsets_; }
  const std::vector<T>& values() const { return values_; }

  friend bool operator==(const Ragged&, const Ragged&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<T> values_;
};

}  // namespace dcc
