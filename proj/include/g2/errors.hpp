#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

/// Base class for the mathematical precondition failures this library reports.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgebraMismatch : public MathError {
 public:
  AlgebraMismatch() : MathError("elements belong to different algebras") {}
};

/// x̄x came out with a nonzero imaginary part; only possible for broken tables.
class NonRealNorm : public MathError {
 public:
  using MathError::MathError;
};

class NullVector : public MathError {
 public:
  NullVector() : MathError("null vector: Q(x) = 0 for nonzero x has no inverse") {}
};

class ZeroElement : public MathError {
 public:
  ZeroElement() : MathError("zero element has no inverse") {}
};

class DegenerateMetric : public MathError {
 public:
  using MathError::MathError;
};

class NotRegular : public MathError {
 public:
  using MathError::MathError;
};

class FanoAxiomError : public MathError {
 public:
  FanoAxiomError(const std::string& message, int a, int b) : MathError(message), first(a), second(b) {}
  int first;
  int second;
};

/// Malformed input text; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

}  // namespace g2
