#pragma once

#include <stdexcept>
#include <string>

namespace semicircle {

enum class ErrorKind {
  config,     // unknown names, invalid experiment parameters
  domain,     // argument outside an operation's domain
  numeric,    // root not bracketed, solver did not converge
  parse,      // malformed input file
  io,         // file could not be opened or written
  tolerance,  // a checked identity exceeded its tolerance
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorKind::config, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::parse, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorKind::io, w) {}
};
struct ToleranceError : Error {
  explicit ToleranceError(const std::string& w) : Error(ErrorKind::tolerance, w) {}
};

}  // namespace semicircle
