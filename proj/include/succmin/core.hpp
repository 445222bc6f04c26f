#pragma once

// Scalar types, dense aliases and the error hierarchy shared by every module.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace succmin {

namespace bmp = boost::multiprecision;

/// Exact integers and rationals (GMP), variable-precision reals (MPFR).
using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;
using VectorZ = Vector<Integer>;
using MatrixZ = Matrix<Integer>;
using VectorR = Vector<Real>;
using MatrixR = Matrix<Real>;

using Index = Eigen::Index;

// ---------------------------------------------------------------------------
// Errors. Every failure mode named by an operation contract maps to one type
// so that callers (and the CLI exit-code logic) can dispatch on it.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad degree, bad modulus, non-divisor...).
struct InvalidInput : Error {
  using Error::Error;
};

/// Index or digit outside its admissible range.
struct RangeError : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Basis elements are dependent or do not start with 1.
struct InvalidFlag : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// A search that a theorem guarantees to succeed did not.
struct ContradictionError : Error {
  using Error::Error;
};

/// Floating computation could not certify its result at the working precision.
struct PrecisionError : Error {
  using Error::Error;
};

/// An enumeration or subdivision exceeded its configured budget.
struct ResourceLimit : Error {
  using Error::Error;
};

struct EmptyPolytope : Error {
  using Error::Error;
};

struct UnboundedPolytope : Error {
  using Error::Error;
};

/// Degenerate numeric input (e.g. log base Delta with Delta <= 1).
struct DegenerateInput : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// A family exponent vector fails the necessary polytope condition.
struct ConstructionError : InvalidInput {
  using InvalidInput::InvalidInput;
};

// ---------------------------------------------------------------------------

/// Parses "p/q", "p" or "-p/q" (whitespace tolerant). Throws InvalidInput.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const Real& x, int digits = 20);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Rounds to nearest integer (ties away from zero).
Integer round_to_integer(const Real& x);
Integer floor_rational(const Rational& q);
bool is_integer(const Rational& q);

/// Decimal digits MPFR needs to carry `bits` binary digits.
unsigned digits10_for_bits(unsigned bits);

/// RAII guard over MPFR's default precision; new Real values created inside
/// the scope carry `bits` of mantissa.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

Real to_real(const Rational& q);
Real to_real(const Integer& z);
Real pi_real();

/// Volume of the Euclidean unit ball in dimension n.
Real unit_ball_volume(int n);

}  // namespace succmin
