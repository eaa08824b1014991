#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gujhin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed line in one of the tab-separated data files.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two rule rows share the same (suffix, tag pattern) key or rule id.
class DuplicateRule : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotInvertible : public Error {
 public:
  NotInvertible(char32_t codepoint, std::size_t offset, const std::string& what)
      : Error(what), codepoint_(codepoint), offset_(offset) {}

  char32_t codepoint() const noexcept { return codepoint_; }
  /// Codepoint index of the offending character in the input.
  std::size_t offset() const noexcept { return offset_; }

 private:
  char32_t codepoint_;
  std::size_t offset_;
};

class MalformedToken : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyEvaluation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gujhin
