#include "finegrad/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace finegrad {

// ---------------------------------------------------------------- CycNumber

CycNumber CycNumber::zeta_power(long k) {
    k %= 12;
    if (k < 0) k += 12;
    CycNumber r(1);
    CycNumber z(0, 1, 0, 0);
    for (long i = 0; i < k; ++i) r *= z;
    return r;
}

bool CycNumber::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycNumber::is_one() const {
    return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycNumber::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

CycNumber CycNumber::operator-() const {
    return CycNumber(-c_[0], -c_[1], -c_[2], -c_[3]);
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    if (o.is_rational()) {
        if (o.c_[0] == 1) return *this;
        for (int k = 0; k < 4; ++k) c_[k] *= o.c_[0];
        return *this;
    }
    if (is_rational()) {
        Rational s = c_[0];
        for (int k = 0; k < 4; ++k) c_[k] = o.c_[k] * s;
        return *this;
    }
    Rational p[7];
    for (int i = 0; i < 4; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            p[i + j] += c_[i] * o.c_[j];
        }
    }
    // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    c_[0] = p[0] - p[4] - p[6];
    c_[1] = p[1] - p[5];
    c_[2] = p[2] + p[4];
    c_[3] = p[3] + p[5];
    return *this;
}

CycNumber CycNumber::inv() const {
    if (is_zero()) throw ArithmeticError("zero inverse");
    if (is_rational()) return CycNumber(Rational(1) / c_[0]);
    // Solve (this * x = 1) through the 4x4 multiplication matrix.
    Rational m[4][5];
    CycNumber col(1);
    CycNumber z(0, 1, 0, 0);
    for (int j = 0; j < 4; ++j) {
        CycNumber prod = *this * col;
        for (int i = 0; i < 4; ++i) m[i][j] = prod.c_[i];
        col *= z;
    }
    for (int i = 0; i < 4; ++i) m[i][4] = (i == 0) ? 1 : 0;
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        while (sgn(m[piv][c]) == 0) ++piv;
        if (piv != c)
            for (int k = 0; k < 5; ++k) std::swap(m[piv][k], m[c][k]);
        Rational d = m[c][c];
        for (int k = c; k < 5; ++k) m[c][k] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c];
            for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return CycNumber(m[0][4], m[1][4], m[2][4], m[3][4]);
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    for (int k = 0; k < 4; ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

bool operator<(const CycNumber& a, const CycNumber& b) {
    for (int k = 0; k < 4; ++k) {
        if (a.c_[k] < b.c_[k]) return true;
        if (b.c_[k] < a.c_[k]) return false;
    }
    return false;
}

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

bool is_simple_rational(const Rational& q) { return q.get_den() == 1; }

}  // namespace

std::string CycNumber::str() const {
    std::string out;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const Rational& c = c_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        bool neg = sgn(c) < 0;
        std::string term;
        if (k == 0) {
            term = rat_str(mag);
        } else {
            std::string zp = (k == 1) ? "z" : "z^" + std::to_string(k);
            if (mag == 1)
                term = zp;
            else if (is_simple_rational(mag))
                term = rat_str(mag) + "*" + zp;
            else
                term = "(" + rat_str(mag) + ")*" + zp;
        }
        if (first) {
            out = neg ? "-" + term : term;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    }
    return first ? "0" : out;
}

CycNumber root_of_unity(int n) {
    if (n <= 0 || 12 % n != 0) throw ArithmeticError("unsupported root of unity order " + std::to_string(n));
    return CycNumber::zeta_power(12 / n);
}

CycNumber imag_unit() { return CycNumber::zeta_power(3); }
CycNumber cube_root() { return CycNumber::zeta_power(4); }

// ---------------------------------------------------------------- polynomials

namespace poly {

void trim(CycPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CycPoly add(const CycPoly& a, const CycPoly& b) {
    CycPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

CycPoly sub(const CycPoly& a, const CycPoly& b) {
    CycPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

CycPoly mul(const CycPoly& a, const CycPoly& b) {
    if (a.empty() || b.empty()) return {};
    CycPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

CycPoly scale(const CycPoly& a, const CycNumber& s) {
    if (s.is_zero()) return {};
    CycPoly r(a);
    for (auto& c : r) c *= s;
    return r;
}

void divmod(const CycPoly& a, const CycPoly& b, CycPoly& q, CycPoly& r) {
    if (b.empty()) throw ArithmeticError("polynomial division by zero");
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, CycNumber());
    CycNumber lead_inv = b.back().inv();
    while (r.size() >= b.size() && !r.empty()) {
        size_t shift = r.size() - b.size();
        CycNumber f = r.back() * lead_inv;
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        r.pop_back();
        trim(r);
    }
    trim(q);
}

CycPoly gcd(CycPoly a, CycPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        CycPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return scale(a, a.back().inv());
}

CycNumber eval(const CycPoly& p, const CycNumber& x) {
    CycNumber acc;
    for (size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

}  // namespace poly

// ---------------------------------------------------------------- Scalar

// den_ empty stands for the constant polynomial 1
Scalar::Scalar(const CycNumber& c) {
    if (!c.is_zero()) num_.push_back(c);
}

const CycPoly& Scalar::den() const {
    static const CycPoly one{CycNumber(1)};
    return den_.empty() ? one : den_;
}

Scalar::Scalar(CycPoly num, CycPoly den) : num_(std::move(num)), den_(std::move(den)) {
    poly::trim(num_);
    poly::trim(den_);
    if (den_.empty()) throw ArithmeticError("zero inverse");
    if (den_.size() == 1 && den_[0].is_one()) den_.clear();
    normalize();
}

Scalar Scalar::alpha() {
    Scalar s;
    s.num_ = {CycNumber(0), CycNumber(1)};
    return s;
}

bool Scalar::is_one() const { return num_.size() == 1 && den_.empty() && num_[0].is_one(); }

CycNumber Scalar::constant() const {
    if (!is_constant()) throw ArithmeticError("scalar is not a constant: " + str());
    return num_.empty() ? CycNumber() : num_[0];
}

void Scalar::normalize() {
    if (num_.empty() || den_.empty()) {
        den_.clear();
        return;
    }
    if (den_.size() > 1) {
        CycPoly g = poly::gcd(num_, den_);
        if (g.size() > 1) {
            CycPoly q, r;
            poly::divmod(num_, g, q, r);
            num_ = std::move(q);
            poly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    if (!den_.back().is_one()) {
        CycNumber li = den_.back().inv();
        num_ = poly::scale(num_, li);
        den_ = poly::scale(den_, li);
    }
    if (den_.size() == 1) den_.clear();
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.num_.empty()) return *this;
    if (num_.empty()) return *this = o;
    if (den_.empty() && o.den_.empty()) {
        if (num_.size() == 1 && o.num_.size() == 1) {
            num_[0] += o.num_[0];
            if (num_[0].is_zero()) num_.clear();
            return *this;
        }
        num_ = poly::add(num_, o.num_);
        return *this;
    }
    if (den_ == o.den_) {
        num_ = poly::add(num_, o.num_);
    } else {
        num_ = poly::add(poly::mul(num_, o.den()), poly::mul(o.num_, den()));
        den_ = poly::mul(den(), o.den());
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (num_.empty()) return *this;
    if (o.num_.empty()) return *this = Scalar();
    if (den_.empty() && o.den_.empty()) {
        if (num_.size() == 1 && o.num_.size() == 1) {
            num_[0] *= o.num_[0];
            return *this;
        }
        num_ = poly::mul(num_, o.num_);
        return *this;
    }
    num_ = poly::mul(num_, o.num_);
    den_ = poly::mul(den(), o.den());
    normalize();
    return *this;
}

Scalar Scalar::inv() const {
    if (num_.empty()) throw ArithmeticError("zero inverse");
    if (num_.size() == 1 && den_.empty()) return Scalar(num_[0].inv());
    Scalar r;
    r.num_ = den();
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r(1), b(*this);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

CycNumber Scalar::specialize(const CycNumber& a0) const {
    CycNumber d = poly::eval(den(), a0);
    if (d.is_zero()) throw ArithmeticError("pole at a = " + a0.str());
    return poly::eval(num_, a0) / d;
}

namespace {

std::string poly_str(const CycPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        std::string cs = p[k].str();
        bool compound = cs.find(' ') != std::string::npos;
        bool neg = false;
        std::string mag = cs;
        if (!compound && cs[0] == '-') {
            neg = true;
            mag = cs.substr(1);
        }
        std::string term;
        if (k == 0) {
            term = compound ? cs : mag;
        } else {
            std::string ap = (k == 1) ? "a" : "a^" + std::to_string(k);
            if (compound)
                term = "(" + cs + ")*" + ap;
            else if (mag == "1")
                term = ap;
            else if (mag.find('/') != std::string::npos)
                term = "(" + mag + ")*" + ap;
            else
                term = mag + "*" + ap;
        }
        if (compound && k == 0) {
            term = "(" + cs + ")";
            neg = false;
        }
        if (first) {
            out = neg ? "-" + term : term;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

}  // namespace

std::string Scalar::str() const {
    std::string n = poly_str(num_);
    if (den_.empty()) {
        if (num_.size() == 1) return num_[0].str();
        return n;
    }
    return "(" + n + ")/(" + poly_str(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const CycNumber& c) { return os << c.str(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------- parser

namespace {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("scalar parse error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Scalar power() {
        Scalar b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            long e = integer();
            if (neg && b.is_zero()) fail("zero to a negative power");
            return b.pow(neg ? -e : e);
        }
        return b;
    }
    long integer() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        return std::stol(s_.substr(start, pos_ - start));
    }
    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return Scalar::zeta(1);
        }
        if (c == 'a') {
            ++pos_;
            return Scalar::alpha();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

}  // namespace finegrad
