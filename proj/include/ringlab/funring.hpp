#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

/// Exact rational scalar.
using Rat = mpq_class;

Rat rat_parse(const std::string& text);  // "p/q" or "p"
std::string rat_str(const Rat& q);

/// Dense univariate polynomial over Q, constant term first, no trailing
/// zero coefficients (the zero polynomial has no coefficients at all).
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

  Rat eval(const Rat& x) const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const Poly& other) const { return !(*this == other); }

private:
  std::vector<Rat> coeffs_;
};

/// A continuous compactly supported piecewise-polynomial function on the
/// real line, with rational breakpoints b_0 < ... < b_m and one polynomial
/// per interval [b_i, b_{i+1}]; the value is 0 outside [b_0, b_m].
///
/// Construction enforces continuity at every breakpoint and value 0 at both
/// support ends, then canonicalizes: adjacent pieces with equal polynomials
/// are merged and zero pieces at the ends are trimmed, so equal functions
/// have identical representations and == is exact function equality.
class PiecewisePolynomial {
public:
  /// The zero function.
  PiecewisePolynomial() = default;

  /// Validating constructor; throws DiscontinuousInput on a jump or a
  /// nonzero boundary value, BadShape on malformed breakpoints.
  static PiecewisePolynomial from_pieces(std::vector<Rat> breakpoints,
                                         std::vector<Poly> pieces);

  bool is_zero() const { return pieces_.empty(); }
  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  /// Support endpoints; only valid for nonzero functions.
  const Rat& support_min() const { return breaks_.front(); }
  const Rat& support_max() const { return breaks_.back(); }

  Rat eval(const Rat& x) const;

  PiecewisePolynomial operator+(const PiecewisePolynomial& other) const;
  PiecewisePolynomial operator-(const PiecewisePolynomial& other) const;
  PiecewisePolynomial operator-() const;
  PiecewisePolynomial operator*(const PiecewisePolynomial& other) const;
  PiecewisePolynomial scaled(const Rat& c) const;

  bool operator==(const PiecewisePolynomial& other) const {
    return breaks_ == other.breaks_ && pieces_ == other.pieces_;
  }
  bool operator!=(const PiecewisePolynomial& other) const {
    return !(*this == other);
  }

  /// One `piece [a,b] c0 c1 ...` line per piece; "0" for the zero function.
  std::string str() const;
  static PiecewisePolynomial parse(const std::string& text);

private:
  std::vector<Rat> breaks_;
  std::vector<Poly> pieces_;
};

PiecewisePolynomial pp_add(const PiecewisePolynomial& f, const PiecewisePolynomial& g);
PiecewisePolynomial pp_mul(const PiecewisePolynomial& f, const PiecewisePolynomial& g);

/// True iff f*f == f.  Within this ring that forces f == 0: on each piece
/// p^2 = p means p is constantly 0 or 1, and continuity with value 0 at the
/// support ends rules out any piece equal to 1.
bool pp_is_idempotent(const PiecewisePolynomial& f);

/// Trapezoid: 0 at a-1, rises linearly to 1 at a, stays 1 on [a,b], falls
/// to 0 at b+1.  Fixes (on both sides) every function supported in [a,b].
PiecewisePolynomial bump(const Rat& a, const Rat& b);

/// A multiplicative unit for finitely many functions at once: the bump over
/// the union of their supports.  All-zero input gets bump(0,1).
PiecewisePolynomial s_unit_for(std::span<const PiecewisePolynomial> elements);

}  // namespace ringlab
