#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace seqspace {

struct VectorEntry {
  std::size_t index;  // 1-based
  double value;
};

// A finitely supported real sequence stored as (index, value) pairs with
// strictly increasing indices. Explicit zeros are dropped on construction.
class FiniteVector {
public:
  FiniteVector() = default;
  explicit FiniteVector(std::vector<VectorEntry> entries);

  // Dense constructor: values at indices 1..n.
  static FiniteVector dense(std::initializer_list<double> values);
  static FiniteVector dense(const std::vector<double>& values);

  // Indicator of the index set {1, ..., n}.
  static FiniteVector indicator(std::size_t n);
  static FiniteVector indicator(const std::vector<std::size_t>& indices);

  static FiniteVector unit(std::size_t index) {
    return FiniteVector(std::vector<VectorEntry>{{index, 1.0}});
  }

  const std::vector<VectorEntry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t max_index() const;

  double max_abs() const;
  double sum_abs() const;

  FiniteVector scaled(double factor) const;
  // Entries whose positions (0-based within entries()) are in `keep` / not in `drop`.
  FiniteVector keep_positions(const std::vector<std::size_t>& keep) const;
  FiniteVector drop_positions(const std::vector<std::size_t>& drop) const;

  friend FiniteVector operator+(const FiniteVector& a, const FiniteVector& b);

private:
  std::vector<VectorEntry> entries_;
};

}  // namespace seqspace
