#pragma once

#include "octostokes/cayley_table.hpp"
#include "octostokes/scalar.hpp"

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>

namespace octostokes {

/// An octonion over the scalar ring S: coefficients c_0..c_7 of
/// c_0 e_0 + ... + c_7 e_7. Value type; all arithmetic is componentwise
/// except the table-driven product.
template <ScalarRing S>
class Octonion {
public:
    Octonion() {
        coeff_.fill(S(0));
    }
    explicit Octonion(std::array<S, 8> coeff) : coeff_(std::move(coeff)) {}

    static Octonion zero() { return Octonion{}; }

    static Octonion basis(BasisIndex k, S coefficient = S(1)) {
        Octonion o;
        o.coeff_[k] = std::move(coefficient);
        return o;
    }

    const S& operator[](std::size_t k) const { return coeff_[k]; }
    S& operator[](std::size_t k) { return coeff_[k]; }

    bool is_zero() const {
        for (const S& c : coeff_) {
            if (!(c == S(0))) return false;
        }
        return true;
    }

    S norm_sq() const {
        S sum(0);
        for (const S& c : coeff_) sum = sum + c * c;
        return sum;
    }

    Octonion& operator+=(const Octonion& rhs) {
        for (std::size_t k = 0; k < 8; ++k) coeff_[k] = coeff_[k] + rhs.coeff_[k];
        return *this;
    }
    Octonion& operator-=(const Octonion& rhs) {
        for (std::size_t k = 0; k < 8; ++k) coeff_[k] = coeff_[k] - rhs.coeff_[k];
        return *this;
    }

    friend Octonion operator+(Octonion lhs, const Octonion& rhs) { return lhs += rhs; }
    friend Octonion operator-(Octonion lhs, const Octonion& rhs) { return lhs -= rhs; }
    friend Octonion operator-(const Octonion& a) {
        Octonion r;
        for (std::size_t k = 0; k < 8; ++k) r.coeff_[k] = -a.coeff_[k];
        return r;
    }
    friend Octonion operator*(const S& s, const Octonion& a) {
        Octonion r;
        for (std::size_t k = 0; k < 8; ++k) r.coeff_[k] = s * a.coeff_[k];
        return r;
    }
    friend Octonion operator*(const Octonion& a, const S& s) { return s * a; }

    /// Bilinear extension of the basis table: (ab)_t = sum over (i,j) with
    /// e_i e_j = +-e_t of sign * a_i b_j. Non-commutative, non-associative.
    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        const CayleyTable& t = CayleyTable::instance();
        Octonion r;
        for (BasisIndex i = 0; i < 8; ++i) {
            if (a.coeff_[i] == S(0)) continue;
            for (BasisIndex j = 0; j < 8; ++j) {
                if (b.coeff_[j] == S(0)) continue;
                const SignedBasis p = t.product(i, j);
                const S term = a.coeff_[i] * b.coeff_[j];
                if (p.sign > 0) {
                    r.coeff_[p.index] = r.coeff_[p.index] + term;
                } else {
                    r.coeff_[p.index] = r.coeff_[p.index] - term;
                }
            }
        }
        return r;
    }

    friend bool operator==(const Octonion&, const Octonion&) = default;

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < 8; ++k) {
            if (coeff_[k] == S(0)) continue;
            os << (first ? "" : " + ") << scalar_to_string(coeff_[k]) << "*e" << k;
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    std::array<S, 8> coeff_;
};

/// (ab)c - a(bc), evaluated with two independent products per bracketing.
template <ScalarRing S>
Octonion<S> associator(const Octonion<S>& a, const Octonion<S>& b, const Octonion<S>& c) {
    return (a * b) * c - a * (b * c);
}

/// Componentwise |a - b| <= tol, the float-mode equality.
inline bool approx_equal(const Octonion<double>& a, const Octonion<double>& b, double tol) {
    for (std::size_t k = 0; k < 8; ++k) {
        const double d = a[k] - b[k];
        if (!(d <= tol && -d <= tol)) return false;
    }
    return true;
}

} // namespace octostokes
