#pragma once

#include <stdexcept>
#include <string>

namespace seqspace {

// A space/weight/exponent descriptor does not carry enough data to answer
// the query (for example, an index beyond the prefix of a sequence whose
// tail has no closed form).
class DescriptorError : public std::runtime_error {
public:
  explicit DescriptorError(const std::string& what) : std::runtime_error(what) {}
};

// A combinatorial budget was exceeded (subset enumeration, block totals).
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver hit its iteration cap before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Input data has the wrong shape (non-monotone where monotone is required,
// increasing weight where a nonincreasing one is needed, ...).
class ShapeError : public std::runtime_error {
public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace seqspace
