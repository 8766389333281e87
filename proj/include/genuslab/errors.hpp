#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "genuslab/numeric.hpp"

namespace genuslab {

/// Raised when an exhaustive search would visit more states than the
/// configured budget allows. Carries the exact size of the search space.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, BigInt required, std::uint64_t budget)
      : std::runtime_error(what + ": " + required.str() + " states exceed budget " +
                           std::to_string(budget)),
        required_(std::move(required)),
        budget_(budget) {}

  const BigInt& required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

/// A state that the mathematics says cannot happen. Seeing one means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A recorded insertion schedule disagrees with the corner counts observed
/// while replaying it.
class ScheduleMismatch : public std::runtime_error {
 public:
  ScheduleMismatch(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace genuslab
