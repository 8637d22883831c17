#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dtc {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration (e.g. all M^Q associated symbols) exceeds the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A search exceeded its evaluation budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Sequences that must have equal length do not.
struct LengthMismatch : Error {
  using Error::Error;
};

// Binary partition anchors have zero distance, so they cannot split T.
struct ZeroDistanceAnchors : Error {
  using Error::Error;
};

// A symbol cannot be placed in any class of a partition.
struct SymbolNotInPartition : Error {
  using Error::Error;
};

// An edge labeling does not cover every edge of the graph.
struct UnlabeledEdge : Error {
  using Error::Error;
};

// An argument lies outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

// Input text could not be parsed at all.
struct ParseError : Error {
  using Error::Error;
};

// A structurally valid input violates one of its invariants. `field` is the
// dotted path of the offending field, e.g. "interference.pmf".
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace dtc
