#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsvsi {

enum class Mode { Float, Rational };

inline const char* mode_name(Mode m) { return m == Mode::Float ? "float" : "rational"; }

using Rational = mpq_class;

enum class ErrorKind {
  Syntax,
  UnknownSymbol,
  Arity,
  DivisionByZero,
  Domain,
  RationalTranscendental,
  OrderMismatch,
  ModeMismatch,
  SingularMetric,
  InsufficientOrder,
  Family,
  Config,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // exit-code contract: 2 = config error, 3 = evaluation error
  int exit_code() const { return kind_ == ErrorKind::Config ? 2 : 3; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr Mode mode = Mode::Float;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_ratio(long long n, long long d) {
    return static_cast<double>(n) / static_cast<double>(d);
  }
  static double to_double(double x) { return x; }
  static bool is_zero(double x) { return x == 0.0; }
  static double abs(double x) { return std::fabs(x); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr Mode mode = Mode::Rational;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_ratio(long long n, long long d) {
    Rational r(static_cast<long>(n), static_cast<long>(d));
    r.canonicalize();
    return r;
  }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational abs(const Rational& x) { return ::abs(x); }
};

}  // namespace nsvsi
