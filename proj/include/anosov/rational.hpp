#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace anosov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (CLI exit code 2).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A numeric decision fell inside the uncertainty band (CLI exit code 3).
class Undecided : public Error {
public:
  using Error::Error;
};

/// Internal consistency check failed (e.g. decomposition produced an impossible profile).
class InconsistentResult : public Error {
public:
  using Error::Error;
};

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace anosov
