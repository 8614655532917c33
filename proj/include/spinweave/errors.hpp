#pragma once

#include <stdexcept>
#include <string>

namespace spinweave {

// Base for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class PathErrorKind { InvalidStart, InvalidStep, NegativeSpin };

// Rejected coupling history (bad first spin, bad step, or negative spin).
class PathError : public Error {
  public:
    PathError(PathErrorKind kind, const std::string& msg) : Error(msg), kind_(kind) {}
    PathErrorKind kind() const { return kind_; }

  private:
    PathErrorKind kind_;
};

// Magnetic quantum number outside {-S, -S+1, ..., S}.
class MOutOfRange : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

// Lower coupling branch requested at j1 = 0.
class InvalidBranch : public Error {
  public:
    using Error::Error;
};

class InvalidExplicitLayout : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

// Brute-force evaluator asked to run beyond its configured size cap.
class CapExceeded : public Error {
  public:
    CapExceeded(int n, int cap, const std::string& msg) : Error(msg), n_(n), cap_(cap) {}
    int n() const { return n_; }
    int cap() const { return cap_; }

  private:
    int n_;
    int cap_;
};

// Malformed textual or JSON input; carries the offending token.
class ParseError : public Error {
  public:
    ParseError(const std::string& token, const std::string& msg) : Error(msg), token_(token) {}
    const std::string& token() const { return token_; }

  private:
    std::string token_;
};

} // namespace spinweave
