#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagcolor {

enum class ErrorCode {
  io,
  syntax,
  duplicate_vertex,
  unknown_vertex,
  self_loop,
  disconnected,
  invalid_grid,
  illegal_move,
  invalid_spec,
  negative_literal,
  empty_clause,
  header_mismatch,
  capacity_exhausted,
  guard_exceeded,
  nimber_overflow,
};

const char* to_string(ErrorCode code) noexcept;

/// True for the codes that describe malformed user input (CLI exit status 2).
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  /// 1-based source line for parse errors, 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace flagcolor
