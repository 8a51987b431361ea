#pragma once

#include <stdexcept>
#include <string>

namespace f2v {

// Categories mirror the status codes of the C API one to one.
enum class ErrorCode {
  InvalidArgument,
  Parse,
  Shape,
  Singular,
  InvalidModel,
  CapExceeded,
  DuplicateEdge,
  OutOfRange,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace f2v
