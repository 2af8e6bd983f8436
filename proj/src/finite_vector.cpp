#include "seqspace/finite_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqspace {

FiniteVector::FiniteVector(std::vector<VectorEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const VectorEntry& a, const VectorEntry& b) { return a.index < b.index; });
  entries_.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.index == 0) throw std::invalid_argument("vector indices are 1-based");
    if (!entries_.empty() && entries_.back().index == e.index)
      throw std::invalid_argument("duplicate vector index");
    if (e.value != 0.0) entries_.push_back(e);
  }
}

FiniteVector FiniteVector::dense(std::initializer_list<double> values) {
  return dense(std::vector<double>(values));
}

FiniteVector FiniteVector::dense(const std::vector<double>& values) {
  std::vector<VectorEntry> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0.0) entries.push_back({i + 1, values[i]});
  return FiniteVector(std::move(entries));
}

FiniteVector FiniteVector::indicator(std::size_t n) {
  std::vector<VectorEntry> entries;
  entries.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) entries.push_back({i, 1.0});
  return FiniteVector(std::move(entries));
}

FiniteVector FiniteVector::indicator(const std::vector<std::size_t>& indices) {
  std::vector<VectorEntry> entries;
  entries.reserve(indices.size());
  for (std::size_t idx : indices) entries.push_back({idx, 1.0});
  return FiniteVector(std::move(entries));
}

std::size_t FiniteVector::max_index() const {
  return entries_.empty() ? 0 : entries_.back().index;
}

double FiniteVector::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::fabs(e.value));
  return m;
}

double FiniteVector::sum_abs() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::fabs(e.value);
  return s;
}

FiniteVector FiniteVector::scaled(double factor) const {
  std::vector<VectorEntry> entries = entries_;
  for (auto& e : entries) e.value *= factor;
  return FiniteVector(std::move(entries));
}

FiniteVector FiniteVector::keep_positions(const std::vector<std::size_t>& keep) const {
  std::vector<VectorEntry> entries;
  entries.reserve(keep.size());
  for (std::size_t pos : keep) entries.push_back(entries_.at(pos));
  return FiniteVector(std::move(entries));
}

FiniteVector FiniteVector::drop_positions(const std::vector<std::size_t>& drop) const {
  std::vector<bool> dropped(entries_.size(), false);
  for (std::size_t pos : drop) dropped.at(pos) = true;
  std::vector<VectorEntry> entries;
  entries.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!dropped[i]) entries.push_back(entries_[i]);
  return FiniteVector(std::move(entries));
}

FiniteVector operator+(const FiniteVector& a, const FiniteVector& b) {
  std::vector<VectorEntry> entries;
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() ||
        (i < a.entries_.size() && a.entries_[i].index < b.entries_[j].index)) {
      entries.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || b.entries_[j].index < a.entries_[i].index) {
      entries.push_back(b.entries_[j++]);
    } else {
      entries.push_back({a.entries_[i].index, a.entries_[i].value + b.entries_[j].value});
      ++i;
      ++j;
    }
  }
  return FiniteVector(std::move(entries));
}

}  // namespace seqspace
