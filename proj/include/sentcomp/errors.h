#ifndef SENTCOMP_ERRORS_H_
#define SENTCOMP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentcomp {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller-supplied parameters (maps to CLI exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data that cannot be processed (maps to CLI exit code 2).
class DataError : public Error {
 public:
  using Error::Error;
};

// Malformed file contents, tagged with the offending line.
class ParseError : public DataError {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : DataError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sentcomp

#endif  // SENTCOMP_ERRORS_H_
