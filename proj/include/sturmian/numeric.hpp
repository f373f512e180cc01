#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sturmian {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind { InvalidInput, Horizon, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, std::optional<long> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const { return kind_; }
  std::optional<long> index() const { return index_; }

private:
  ErrorKind kind_;
  std::optional<long> index_;
};

[[noreturn]] inline void fail_input(const std::string& msg, std::optional<long> index = std::nullopt) {
  throw Error(ErrorKind::InvalidInput, msg, index);
}
[[noreturn]] inline void fail_horizon(const std::string& msg) { throw Error(ErrorKind::Horizon, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

Integer ipow(const Integer& base, unsigned long exp);
Integer ipow(const Integer& base, const Integer& exp);

// floor and ceiling of a rational
Integer floor_q(const Rational& x);
Integer ceil_q(const Rational& x);

std::string to_dec(const Integer& x);
std::string to_dec(const Rational& x);
Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);

// value as uint64, throwing Horizon if it does not fit
std::uint64_t to_u64(const Integer& x, const char* what);

// x = u*theta + v with rational coefficients
struct LinearForm {
  Rational u;
  Rational v;

  LinearForm operator+(const LinearForm& o) const { return {u + o.u, v + o.v}; }
  LinearForm operator-(const LinearForm& o) const { return {u - o.u, v - o.v}; }
  LinearForm operator-() const { return {-u, -v}; }
  LinearForm operator*(const Rational& c) const { return {u * c, v * c}; }
  bool operator==(const LinearForm& o) const { return u == o.u && v == o.v; }
  bool is_zero() const { return u == 0 && v == 0; }
};

struct Interval {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  Rational width() const { return upper - lower; }
};

}  // namespace sturmian
