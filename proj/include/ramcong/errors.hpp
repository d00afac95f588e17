// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_ERRORS_HPP
#define RAMCONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramcong {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured work budget (terms, tuples, vector length) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity that must always hold was violated. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ramcong

#endif  // RAMCONG_ERRORS_HPP
