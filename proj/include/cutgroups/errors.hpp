// Exception types shared by every module.

#ifndef CUTGROUPS_ERRORS_HPP_
#define CUTGROUPS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutgroups {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parameter relations of a group specification are violated.
class InvalidSpec : public Error {
public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
public:
  using Error::Error;
};

class PNotDividing : public Error {
public:
  using Error::Error;
};

class JNotCoprime : public Error {
public:
  using Error::Error;
};

class NOutOfRange : public Error {
public:
  using Error::Error;
};

class NotApplicable : public Error {
public:
  using Error::Error;
};

class NoSuitablePrime : public Error {
public:
  using Error::Error;
};

// Dixon-Schneider could not separate the characters. Always a bug.
class SplitFailure : public Error {
public:
  using Error::Error;
};

// An index-2 unit subgroup had no matching quadratic field. Always a bug.
class NoQuadraticFound : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& message)
      : Error(message), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

} // namespace cutgroups

#endif // CUTGROUPS_ERRORS_HPP_
