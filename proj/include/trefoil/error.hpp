#pragma once

#include <stdexcept>
#include <string>

namespace trefoil {

/// Malformed text input: fractions, words, continued fractions, quandle specs.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed input outside an operation's domain (zero pair, 1/0 has no
/// continued fraction, non-automorphism, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace trefoil
