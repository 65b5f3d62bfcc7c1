#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Input outside an operation's domain (negative argument, invalid shape,
/// non-positive-semidefinite matrix, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine failed outright (eigensolver breakdown and similar).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finiteness could neither be certified nor refuted: quadrature ran out of
/// budget, or no comparison test covers the (kernel, profile) combination.
/// Distinct from a +infinity verdict.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orlicz
