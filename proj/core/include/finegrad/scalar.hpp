#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace finegrad {

using Rational = mpq_class;

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// c0 + c1 z + c2 z^2 + c3 z^3 with z a primitive 12th root of unity,
// reduced modulo z^4 - z^2 + 1.
class CycNumber {
public:
    CycNumber() = default;
    CycNumber(long v) { c_[0] = v; }
    CycNumber(const Rational& v) { c_[0] = v; }
    CycNumber(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3)
        : c_{c0, c1, c2, c3} {}

    static CycNumber zeta_power(long k);

    const Rational& coeff(int k) const { return c_[k]; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
    CycNumber inv() const;
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inv(); }
    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    // total order on coefficient tuples, used only for canonical sorting
    friend bool operator<(const CycNumber& a, const CycNumber& b);

    std::string str() const;

private:
    std::array<Rational, 4> c_{};
};

// n must divide 12; returns z^(12/n).
CycNumber root_of_unity(int n);
CycNumber imag_unit();   // z^3
CycNumber cube_root();   // z^4

// Polynomials in the indeterminate a (the parameter alpha) over CycNumber.
// Coefficient vectors are little-endian and never carry trailing zeros.
using CycPoly = std::vector<CycNumber>;

namespace poly {
void trim(CycPoly& p);
CycPoly add(const CycPoly& a, const CycPoly& b);
CycPoly sub(const CycPoly& a, const CycPoly& b);
CycPoly mul(const CycPoly& a, const CycPoly& b);
CycPoly scale(const CycPoly& a, const CycNumber& s);
void divmod(const CycPoly& a, const CycPoly& b, CycPoly& q, CycPoly& r);
CycPoly gcd(CycPoly a, CycPoly b);  // monic, or empty if both zero
CycNumber eval(const CycPoly& p, const CycNumber& x);
}  // namespace poly

// Element of Q(z)(a): num/den with den monic and gcd(num, den) = 1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : Scalar(CycNumber(v)) {}
    Scalar(const Rational& v) : Scalar(CycNumber(v)) {}
    Scalar(const CycNumber& c);
    Scalar(CycPoly num, CycPoly den);

    static Scalar alpha();
    static Scalar rational(long p, long q) { return Scalar(Rational(p, q)); }
    static Scalar zeta(long k) { return Scalar(CycNumber::zeta_power(k)); }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_constant() const { return num_.size() <= 1 && den_.empty(); }
    // requires is_constant()
    CycNumber constant() const;

    const CycPoly& num() const { return num_; }
    const CycPoly& den() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inv() const;
    Scalar pow(long e) const;
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // evaluate at a = a0; throws ArithmeticError if the denominator vanishes
    CycNumber specialize(const CycNumber& a0) const;

    std::string str() const;

private:
    void normalize();
    CycPoly num_;
    CycPoly den_;
};

std::ostream& operator<<(std::ostream& os, const CycNumber& c);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grammar: integers, '/', 'z', 'a', '+ - * ^ ( )'.
Scalar parse_scalar(const std::string& text);

}  // namespace finegrad
