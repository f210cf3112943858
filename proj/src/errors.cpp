#include "jperf/errors.hpp"

#include <fmt/format.h>

namespace jperf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::NonFiniteCount: return "NonFiniteCount";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::EmptyId: return "EmptyId";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroArticles: return "ZeroArticles";
    case ErrorKind::ZeroArticlesT2: return "ZeroArticlesT2";
    case ErrorKind::ZeroOutgoing: return "ZeroOutgoing";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = fmt::format("{} validation error(s)", violations.size());
  for (const auto& v : violations) {
    out += fmt::format("; {}: {}", to_string(v.kind), v.message);
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorKind::PreconditionViolated : violations.front().kind,
            summarize(violations)),
      violations_(std::move(violations)) {}

NoConvergenceError::NoConvergenceError(std::size_t iterations, double residual)
    : Error(ErrorKind::NoConvergence,
            fmt::format("no convergence after {} iterations (residual {:.3e})", iterations,
                        residual)),
      iterations_(iterations),
      residual_(residual) {}

}  // namespace jperf
