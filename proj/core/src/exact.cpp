#include "geoiter/exact.hpp"

#include <algorithm>
#include <sstream>

namespace geoiter {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int gcd3(const Int& a, const Int& b, const Int& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(abs_int(a), abs_int(b)), abs_int(c));
}

} // namespace

Int floor_div(const Int& n, const Int& d) {
    if (d == 0) throw Error("floor_div: zero divisor");
    if (d < 0) return floor_div(-n, -d);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

Int ceil_div(const Int& n, const Int& d) {
    return -floor_div(-n, d);
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw Error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    Int s = isqrt_floor(n);
    return s * s == n;
}

std::pair<Int, Int> square_free_split(const Int& n) {
    if (n <= 0) throw Error("square_free_split: argument must be positive");
    Int rest = n, square = 1, free = 1;
    auto take = [&](const Int& p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= p;
        if (e % 2) free *= p;
    };
    take(2);
    for (Int p = 3; p * p <= rest; p += 2) take(p);
    if (rest > 1) free *= rest;
    return {square, free};
}

int sign_plus_root(const Int& x, const Int& y, const Int& D) {
    if (D <= 0) throw Error("sign_plus_root: D must be positive");
    if (y == 0) return x == 0 ? 0 : (x > 0 ? 1 : -1);
    if (y < 0) return -sign_plus_root(-x, -y, D);
    if (x >= 0) return 1;
    // x < 0 < y: compare x^2 against y^2 D.
    Int lhs = x * x, rhs = y * y * D;
    if (lhs == rhs) return 0;
    return lhs < rhs ? 1 : -1;
}

Int floor_linear_root(const Int& a, const Int& b, const Int& c, const Int& D) {
    if (c <= 0) throw Error("floor_linear_root: denominator must be positive");
    if (b == 0) return floor_div(a, c);
    // [b*sqrt(D)]: for non-square D the product is irrational, so the
    // negative branch is one below the negated positive floor.
    Int s = isqrt_floor(b * b * D);
    Int fb = (b > 0) ? s : Int(-s - 1);
    if (b < 0 && is_square(D)) ++fb; // exact integer: floor(-k) = -k
    return floor_div(a + fb, c);
}

Int floor_rat(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

Rat frac_rat(const Rat& x) {
    return x - Rat(floor_rat(x));
}

// ---------------------------------------------------------------- QuadRatio

QuadRatio QuadRatio::make(Int a, Int b, Int c, Int D) {
    if (c == 0) throw ValidationError("quadratic ratio: zero denominator");
    if (D <= 0) throw ValidationError("quadratic ratio: D must be positive");
    if (b == 0) throw ValidationError("quadratic ratio: zero root coefficient is rational");
    auto [sq, fr] = square_free_split(D);
    b *= sq;
    D = fr;
    if (D == 1)
        throw ValidationError("quadratic ratio: perfect-square D is rational");
    if (c < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    Int g = gcd3(a, b, c);
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    return QuadRatio{std::move(a), std::move(b), std::move(c), std::move(D)};
}

// ---------------------------------------------------------------- AngleRatio

AngleRatio AngleRatio::rational(Int num, Int den) {
    if (den == 0) throw ValidationError("angle ratio: zero denominator");
    return of(Rat(std::move(num), std::move(den)));
}

AngleRatio AngleRatio::of(Rat r) {
    if (!(r > 0 && r < 1))
        throw ValidationError("angle ratio must lie strictly between 0 and 1");
    return AngleRatio(std::variant<Rat, QuadRatio>(std::move(r)));
}

AngleRatio AngleRatio::quadratic(Int a, Int b, Int c, Int D) {
    return of(QuadRatio::make(std::move(a), std::move(b), std::move(c), std::move(D)));
}

AngleRatio AngleRatio::of(QuadRatio q) {
    if (sign_plus_root(q.a, q.b, q.D) <= 0 ||
        sign_plus_root(q.a - q.c, q.b, q.D) >= 0)
        throw ValidationError("angle ratio must lie strictly between 0 and 1");
    return AngleRatio(std::variant<Rat, QuadRatio>(std::move(q)));
}

// ------------------------------------------------------------- floor family

Int floor_scaled(const Int& m, const AngleRatio& x) {
    if (m < 1) throw Error("floor_scaled: m must be >= 1");
    if (x.is_rational()) {
        const Rat& r = x.rat();
        return floor_div(m * numerator(r), denominator(r));
    }
    const QuadRatio& q = x.quad();
    return floor_linear_root(m * q.a, m * q.b, q.c, q.D);
}

Int upper_E(const Int& m, const AngleRatio& x) {
    if (m < 1) throw Error("upper_E: m must be >= 1");
    if (x.is_rational()) {
        const Rat& r = x.rat();
        return ceil_div(m * numerator(r), denominator(r));
    }
    const QuadRatio& q = x.quad();
    return -floor_linear_root(-m * q.a, -m * q.b, q.c, q.D);
}

Int upper_E_negated(const Int& m, const AngleRatio& x) {
    if (m < 1) throw Error("upper_E_negated: m must be >= 1");
    // E(-a) = -[a]
    return -floor_scaled(m, x);
}

int phi_indicator(const Int& m, const AngleRatio& x) {
    if (m < 1) throw Error("phi_indicator: m must be >= 1");
    if (x.is_rational())
        return (m * numerator(x.rat())) % denominator(x.rat()) == 0 ? 0 : 1;
    return 1; // irrational multiples are never integral
}

Rat frac_scaled(const Int& m, const Rat& x) {
    return frac_rat(Rat(m) * x);
}

// ----------------------------------------------------------------- QuadExpr

QuadExpr QuadExpr::root(const Rat& coeff, const Int& D) {
    QuadExpr e;
    e.add_root(coeff, D);
    return e;
}

const Rat& QuadExpr::rational_value() const {
    if (!is_rational()) throw Error("QuadExpr: value is not rational");
    return rational_part;
}

void QuadExpr::add_rational(const Rat& r) { rational_part += r; }

void QuadExpr::add_root(Rat coeff, Int D) {
    if (coeff == 0) return;
    auto [sq, fr] = square_free_split(D);
    coeff *= Rat(sq);
    if (fr == 1) {
        rational_part += coeff;
        return;
    }
    auto it = std::lower_bound(quadratic_part.begin(), quadratic_part.end(), fr,
                               [](const auto& p, const Int& d) { return p.second < d; });
    if (it != quadratic_part.end() && it->second == fr) {
        it->first += coeff;
        if (it->first == 0) quadratic_part.erase(it);
    } else {
        quadratic_part.insert(it, {std::move(coeff), std::move(fr)});
    }
}

QuadExpr& QuadExpr::operator+=(const QuadExpr& o) {
    rational_part += o.rational_part;
    for (const auto& [c, d] : o.quadratic_part) add_root(c, d);
    return *this;
}

QuadExpr& QuadExpr::operator-=(const QuadExpr& o) {
    rational_part -= o.rational_part;
    for (const auto& [c, d] : o.quadratic_part) add_root(-c, d);
    return *this;
}

QuadExpr QuadExpr::operator*(const Rat& s) const {
    QuadExpr out;
    if (s == 0) return out;
    out.rational_part = rational_part * s;
    out.quadratic_part = quadratic_part;
    for (auto& [c, d] : out.quadratic_part) c *= s;
    return out;
}

QuadExpr QuadExpr::operator-() const { return *this * Rat(-1); }

QuadExpr operator+(QuadExpr a, const QuadExpr& b) { return a += b; }
QuadExpr operator-(QuadExpr a, const QuadExpr& b) { return a -= b; }

std::pair<Rat, Rat> QuadExpr::bounds(unsigned digits) const {
    Int t = boost::multiprecision::pow(Int(10), digits);
    Rat lo = rational_part, hi = rational_part;
    for (const auto& [c, d] : quadratic_part) {
        Int u = isqrt_floor(d * t * t); // u/t <= sqrt(d) <= (u+1)/t
        Rat rlo(u, t), rhi(u + 1, t);
        if (c > 0) {
            lo += c * rlo;
            hi += c * rhi;
        } else {
            lo += c * rhi;
            hi += c * rlo;
        }
    }
    return {lo, hi};
}

int QuadExpr::sign() const {
    if (quadratic_part.empty())
        return rational_part == 0 ? 0 : (rational_part > 0 ? 1 : -1);
    if (quadratic_part.size() == 1) {
        const auto& [c, d] = quadratic_part.front();
        // q + c*sqrt(d): clear denominators (all positive in canonical form).
        const Int& qd = denominator(rational_part);
        const Int& cd = denominator(c);
        return sign_plus_root(numerator(rational_part) * cd, numerator(c) * qd, d);
    }
    // Distinct square-free roots are linearly independent over Q, so a value
    // with root terms is never zero; interval refinement must terminate.
    for (unsigned digits = 32; digits <= 4096; digits *= 2) {
        auto [lo, hi] = bounds(digits);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw Error("QuadExpr::sign: refinement failed to separate value from zero");
}

Int QuadExpr::floor() const {
    if (quadratic_part.empty()) return floor_rat(rational_part);
    if (quadratic_part.size() != 1)
        throw Error("QuadExpr::floor: more than one root term");
    const auto& [c, d] = quadratic_part.front();
    // (p/q) + (cn/cd)*sqrt(d) = (p*cd + cn*q*sqrt(d)) / (q*cd)
    const Int& p = numerator(rational_part);
    const Int& q = denominator(rational_part);
    const Int& cn = numerator(c);
    const Int& cd = denominator(c);
    return floor_linear_root(p * cd, cn * q, q * cd, d);
}

std::string QuadExpr::str() const {
    std::ostringstream os;
    os << to_string(rational_part);
    for (const auto& [c, d] : quadratic_part) {
        os << (c < 0 ? " - " : " + ");
        Rat ac = c < 0 ? Rat(-c) : c;
        if (ac != 1) os << to_string(ac) << "*";
        os << "sqrt(" << d << ")";
    }
    return os.str();
}

QuadExpr angle_value(const AngleRatio& x) {
    QuadExpr e;
    if (x.is_rational()) {
        e.add_rational(x.rat());
    } else {
        const QuadRatio& q = x.quad();
        e.add_rational(Rat(q.a, q.c));
        e.add_root(Rat(q.b, q.c), q.D);
    }
    return e;
}

int compare(const QuadExpr& v, const Rat& r) {
    QuadExpr d = v;
    d.add_rational(-r);
    return d.sign();
}

// --------------------------------------------------------------- formatting

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string to_string(const QuadRatio& q) {
    std::ostringstream os;
    os << "(" << q.a << (q.b < 0 ? "-" : "+");
    Int ab = q.b < 0 ? Int(-q.b) : q.b;
    if (ab != 1) os << ab << "*";
    os << "sqrt(" << q.D << "))/" << q.c;
    return os.str();
}

std::string to_string(const AngleRatio& x) {
    return x.is_rational() ? to_string(x.rat()) : to_string(x.quad());
}

} // namespace geoiter
