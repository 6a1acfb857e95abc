#pragma once

#include <stdexcept>
#include <string>

namespace lucasbinom {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can map families of failures onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Polynomial long division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// t = 0 collapses the recurrence to first order.
class DegenerateRecurrence : public Error {
 public:
  explicit DegenerateRecurrence(const std::string& what) : Error(what) {}
};

class InvalidRoots : public Error {
 public:
  explicit InvalidRoots(const std::string& what) : Error(what) {}
};

// A factorial factor H_i vanished, so the coefficient is undefined.
class ZeroTerm : public Error {
 public:
  explicit ZeroTerm(std::size_t index)
      : Error("sequence term " + std::to_string(index) + " is zero"), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what) : Error(what) {}
};

}  // namespace lucasbinom
