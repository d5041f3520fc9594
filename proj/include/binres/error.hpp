#pragma once

#include <stdexcept>
#include <string>

namespace binres {

enum class ErrorKind {
  Input,             // malformed input, precondition violation by the caller
  Budget,            // blow-up budget exhausted
  Invariant,         // an algorithm invariant the theory guarantees was violated
  Unsupported,       // outside the implemented domain (e.g. missing field roots)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace binres
