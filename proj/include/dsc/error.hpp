#pragma once

#include <stdexcept>
#include <string>

namespace dsc {

// Algebraic input that fails a validation axiom (associativity, identity,
// homomorphism law, ...).  The message names the violated law and a witness.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::string const& msg) : std::runtime_error(msg) {}
};

// A value outside an operation's documented domain (alpha not in (0,1),
// subgroup not proper, relation not a diagonal subsemigroup, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(std::string const& msg) : std::runtime_error(msg) {}
};

// An input exceeding a hard enumeration or materialization cap.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(std::string const& msg) : std::runtime_error(msg) {}
};

// Malformed file or text input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string const& msg) : std::runtime_error(msg) {}
};

// A guaranteed internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(std::string const& msg) : std::logic_error(msg) {}
};

}  // namespace dsc
