#pragma once

#include <stdexcept>
#include <string>

namespace halfrep {

/// Input outside an operation's domain (non-coprime pair, bad index, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class NoInverseError : public DomainError {
public:
  explicit NoInverseError(const std::string& what) : DomainError(what) {}
};

/// An enumeration or allocation would exceed its configured bound.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical invariant that must hold was observed to fail.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace halfrep
