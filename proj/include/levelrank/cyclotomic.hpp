#pragma once

// Exact arithmetic in the 8th cyclotomic field Q(zeta), zeta^4 = -1.
//
// Every scalar appearing in the fermionic current constructions lies in
// Q(i, 1/sqrt(2)), which equals Q(zeta) for a primitive 8th root of unity:
//   zeta^2        = sqrt(-1)
//   zeta - zeta^3 = sqrt(2)
// Components are arbitrary-precision rationals, so arithmetic never rounds
// and never overflows.

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace levelrank {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

class CycScalar {
  public:
    CycScalar() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
    CycScalar(long n) : CycScalar() { c_[0] = n; }
    CycScalar(const Rational& r) : CycScalar() { c_[0] = r; }
    CycScalar(Rational r0, Rational r1, Rational r2, Rational r3)
        : c_{std::move(r0), std::move(r1), std::move(r2), std::move(r3)} {}

    static CycScalar zero() { return CycScalar(); }
    static CycScalar one() { return CycScalar(1); }
    static CycScalar zeta() { return CycScalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
    // sqrt(-1) = zeta^2
    static CycScalar i() { return CycScalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
    // sqrt(2) = zeta - zeta^3
    static CycScalar sqrt2() { return CycScalar(Rational(0), Rational(1), Rational(0), Rational(-1)); }
    // 1/sqrt(2) = (zeta - zeta^3)/2
    static CycScalar inv_sqrt2() {
        return CycScalar(Rational(0), make_rational(1, 2), Rational(0), make_rational(-1, 2));
    }
    static CycScalar half() { return CycScalar(make_rational(1, 2)); }

    const Rational& component(int k) const { return c_[k]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        return CycScalar(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
    }
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
        return CycScalar(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
    }
    CycScalar operator-() const { return CycScalar(-c_[0], -c_[1], -c_[2], -c_[3]); }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        // Convolution in Q[zeta]/(zeta^4 + 1): zeta^{k+4} = -zeta^k.
        std::array<Rational, 4> r{Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int p = 0; p < 4; ++p) {
            if (a.c_[p] == 0) continue;
            for (int q = 0; q < 4; ++q) {
                if (b.c_[q] == 0) continue;
                int k = p + q;
                if (k < 4)
                    r[k] += a.c_[p] * b.c_[q];
                else
                    r[k - 4] -= a.c_[p] * b.c_[q];
            }
        }
        return CycScalar(std::move(r[0]), std::move(r[1]), std::move(r[2]), std::move(r[3]));
    }

    CycScalar& operator+=(const CycScalar& b) { *this = *this + b; return *this; }
    CycScalar& operator-=(const CycScalar& b) { *this = *this - b; return *this; }
    CycScalar& operator*=(const CycScalar& b) { *this = *this * b; return *this; }

    // Galois conjugate zeta -> zeta^k, k in {1,3,5,7}.
    CycScalar galois(int k) const {
        switch (k) {
            case 1: return *this;
            case 3: return CycScalar(c_[0], c_[3], -c_[2], c_[1]);
            case 5: return CycScalar(c_[0], -c_[1], c_[2], -c_[3]);
            case 7: return CycScalar(c_[0], -c_[3], -c_[2], -c_[1]);
        }
        throw std::invalid_argument("galois exponent must be odd mod 8");
    }

    CycScalar inverse() const {
        if (is_zero()) throw std::domain_error("CycScalar: division by zero");
        // a^{-1} = (product of the other Galois conjugates) / Norm(a).
        CycScalar t = galois(3) * galois(5) * galois(7);
        CycScalar n = *this * t;
        // The full conjugate product lands in Q.
        if (!n.is_rational()) throw std::logic_error("CycScalar: norm not rational");
        Rational inv_norm = 1 / n.c_[0];
        return CycScalar(t.c_[0] * inv_norm, t.c_[1] * inv_norm, t.c_[2] * inv_norm,
                         t.c_[3] * inv_norm);
    }

    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // "c0,c1,c2,c3" with each component "p/q" in lowest terms.
    std::string str() const {
        std::string out;
        for (int k = 0; k < 4; ++k) {
            if (k) out += ',';
            out += c_[k].get_num().get_str();
            out += '/';
            out += c_[k].get_den().get_str();
        }
        return out;
    }

  private:
    Rational c_[4];
};

inline CycScalar operator*(long a, const CycScalar& b) { return CycScalar(a) * b; }

}  // namespace levelrank
