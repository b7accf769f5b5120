#pragma once

#include <stdexcept>
#include <string>

namespace h1lat {

enum class ErrorKind {
  invalid_input,        // malformed data, failed preconditions
  search_exhausted,     // randomized search ran out of trials
  verification_failed,  // an internal consistency check did not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorKind::invalid_input, what);
}

[[noreturn]] inline void fail_verification(const std::string& what) {
  throw Error(ErrorKind::verification_failed, what);
}

}  // namespace h1lat
