#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flownet {

/// Thrown when a year or node lies outside the network's domain.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Unreadable input, missing header, or a bad row under strict parsing.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The configuration model could not produce a self-loop-free matching.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A problem with one input record. Collected rather than thrown.
struct RecordError {
  std::size_t line = 0;  // 1-based; 0 when the record did not come from a file
  std::string message;
};

}  // namespace flownet
