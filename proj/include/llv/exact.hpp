#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace llv {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong lengths, mixed parity, non-positive b2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside an operation's domain (non-dominant weight, bad k).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// b2 = 2 gives the non-simple algebra so(4).
class UnsupportedRank : public DomainError {
 public:
  using DomainError::DomainError;
};

/// s(W) requested for a module with vanishing signed Euler characteristic.
class UndefinedInvariant : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enumeration would exceed its configured size ceiling.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InternalError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

inline bool fits_int64(const BigInt& z) {
  return z.fits_slong_p() && sizeof(long) == sizeof(std::int64_t);
}

}  // namespace llv
