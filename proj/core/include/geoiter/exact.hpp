#pragma once

// Exact arithmetic for the angle ratios that drive index iteration: the
// floor [a], ceiling E(a) and integrality indicator phi(a) = E(a) - [a]
// evaluated at integer multiples of rational or quadratic-irrational ratios.
// Everything here is integer arithmetic; no floating point is involved.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "geoiter/errors.hpp"

namespace geoiter {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor/ceiling division with d > 0 (truncation in C++ rounds toward zero,
// which is the wrong direction for negative numerators).
Int floor_div(const Int& n, const Int& d);
Int ceil_div(const Int& n, const Int& d);

// Largest s with s*s <= n (n >= 0).
Int isqrt_floor(const Int& n);

// true iff n is a perfect square.
bool is_square(const Int& n);

// Splits n > 0 as s*s*f with f square-free; returns (s, f).
std::pair<Int, Int> square_free_split(const Int& n);

// Sign of x + y*sqrt(D) for D > 0 (returns -1, 0, or +1).
int sign_plus_root(const Int& x, const Int& y, const Int& D);

// Floor of (a + b*sqrt(D))/c with c > 0; exact via integer square roots.
Int floor_linear_root(const Int& a, const Int& b, const Int& c, const Int& D);

Int floor_rat(const Rat& x);
Rat frac_rat(const Rat& x); // x - [x], in [0,1)

// (a + b*sqrt(D))/c in canonical form: c > 0, gcd(a,b,c) = 1, D square-free,
// b != 0.  Construction fails if the value degenerates to a rational
// (b = 0 or D a perfect square); use a plain rational for those.
struct QuadRatio {
    Int a;
    Int b;
    Int c;
    Int D;

    static QuadRatio make(Int a, Int b, Int c, Int D);

    bool operator==(const QuadRatio&) const = default;
};

// A rotation-angle ratio in the open interval (0,1).  The rational/quadratic
// distinction is part of the value: it decides integrality of every multiple.
class AngleRatio {
public:
    static AngleRatio rational(Int num, Int den);
    static AngleRatio quadratic(Int a, Int b, Int c, Int D);
    static AngleRatio of(Rat r);
    static AngleRatio of(QuadRatio q);

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_quadratic() const { return !is_rational(); }

    const Rat& rat() const { return std::get<Rat>(v_); }
    const QuadRatio& quad() const { return std::get<QuadRatio>(v_); }

    bool operator==(const AngleRatio&) const = default;

private:
    explicit AngleRatio(std::variant<Rat, QuadRatio> v) : v_(std::move(v)) {}
    std::variant<Rat, QuadRatio> v_;
};

// [m*x], exact.
Int floor_scaled(const Int& m, const AngleRatio& x);

// E(m*x) = min{ k in Z : k >= m*x }, exact.
Int upper_E(const Int& m, const AngleRatio& x);

// E(-m*x); with upper_E this witnesses E(b) + E(-b) = 1 for non-integer b.
Int upper_E_negated(const Int& m, const AngleRatio& x);

// phi(m*x) = E(m*x) - [m*x]: 0 iff m*x is an integer, else 1.
int phi_indicator(const Int& m, const AngleRatio& x);

// {m*x} for rational x, as an exact rational in [0,1).
Rat frac_scaled(const Int& m, const Rat& x);

// An exact value  rational_part + sum_i coeff_i * sqrt(D_i)  with the D_i
// distinct square-free integers >= 2 and all coefficients nonzero.  This is
// the carrier for mean indices and for certified comparisons against
// rationals.  Sign evaluation is decidable: such a value is zero only when
// it has no root terms and zero rational part.
struct QuadExpr {
    Rat rational_part;
    std::vector<std::pair<Rat, Int>> quadratic_part; // (coeff, D), D ascending

    QuadExpr() = default;
    explicit QuadExpr(Rat r) : rational_part(std::move(r)) {}

    static QuadExpr root(const Rat& coeff, const Int& D); // coeff * sqrt(D)

    bool is_rational() const { return quadratic_part.empty(); }
    const Rat& rational_value() const; // requires is_rational()

    void add_rational(const Rat& r);
    void add_root(Rat coeff, Int D); // folds square factors of D into coeff

    QuadExpr& operator+=(const QuadExpr& o);
    QuadExpr& operator-=(const QuadExpr& o);
    QuadExpr operator*(const Rat& s) const;
    QuadExpr operator-() const;

    int sign() const; // -1, 0, +1, exact
    bool is_positive() const { return sign() > 0; }
    bool is_zero() const { return sign() == 0; }

    // Largest integer <= value (requires at most one root term).
    Int floor() const;

    // Certified enclosure lo <= value <= hi with denominator 10^digits.
    std::pair<Rat, Rat> bounds(unsigned digits) const;

    std::string str() const;
};

QuadExpr operator+(QuadExpr a, const QuadExpr& b);
QuadExpr operator-(QuadExpr a, const QuadExpr& b);

// Exact value of an angle ratio as a QuadExpr.
QuadExpr angle_value(const AngleRatio& x);

// Comparison helpers against exact rationals.
int compare(const QuadExpr& v, const Rat& r); // sign of v - r

std::string to_string(const Rat& r);       // "num/den" (or "num" when den=1)
std::string to_string(const QuadRatio& q); // "(a+b*sqrt(D))/c"
std::string to_string(const AngleRatio& x);

} // namespace geoiter
