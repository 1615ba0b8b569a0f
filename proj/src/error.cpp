#include "flagcolor/error.hpp"

namespace flagcolor {

namespace {

std::string format_message(ErrorCode code, const std::string& message, std::size_t line) {
  std::string out = to_string(code);
  if (line != 0) out += " at line " + std::to_string(line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::io: return "i/o error";
    case ErrorCode::syntax: return "syntax error";
    case ErrorCode::duplicate_vertex: return "duplicate vertex";
    case ErrorCode::unknown_vertex: return "unknown vertex";
    case ErrorCode::self_loop: return "self-loop";
    case ErrorCode::disconnected: return "disconnected graph";
    case ErrorCode::invalid_grid: return "invalid grid";
    case ErrorCode::illegal_move: return "illegal move";
    case ErrorCode::invalid_spec: return "invalid family spec";
    case ErrorCode::negative_literal: return "negative literal";
    case ErrorCode::empty_clause: return "empty clause";
    case ErrorCode::header_mismatch: return "header mismatch";
    case ErrorCode::capacity_exhausted: return "transposition table capacity exhausted";
    case ErrorCode::guard_exceeded: return "resource guard exceeded";
    case ErrorCode::nimber_overflow: return "nimber overflow";
  }
  return "error";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::capacity_exhausted:
    case ErrorCode::guard_exceeded:
    case ErrorCode::nimber_overflow:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line) {}

}  // namespace flagcolor
