#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jperf {

enum class ErrorKind {
  DimensionMismatch,
  NegativeCount,
  NonFiniteCount,
  DuplicateId,
  EmptyId,
  IndexOutOfRange,
  ZeroArticles,
  ZeroArticlesT2,
  ZeroOutgoing,
  NotIrreducible,
  NoConvergence,
  PreconditionViolated,
  DegenerateInput,
  GenerationFailed,
  InvalidParameter,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Base error for everything the library throws. `journal` and `cell`
/// point at the offending entity when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> journal = std::nullopt)
      : std::runtime_error(message), kind_(kind), journal_(journal) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> journal() const noexcept { return journal_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> journal_;
};

struct Violation {
  ErrorKind kind;
  std::string message;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
};

/// Thrown by validate() with every violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(std::size_t iterations, double residual);

  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

}  // namespace jperf
