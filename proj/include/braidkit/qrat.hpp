/*
   Copyright 2026 braidkit contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAIDKIT_QRAT_HPP
#define BRAIDKIT_QRAT_HPP

#include "qpoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace braidkit {

/// Element of Q(q): normalized quotient of integer polynomials in q.
///
/// Canonical form: gcd(num, den) = 1 (including integer content) and the
/// leading coefficient of den is positive; zero is (0, 1).  Equality is
/// therefore structural.
class QRat {
  public:
    QRat() : num_(), den_(1) {}
    QRat(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    QRat(const QPoly& p) : num_(p), den_(1) {} // NOLINT(google-explicit-constructor)
    QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static QRat q() { return QRat(QPoly::q()); }
    static QRat q_inv() { return QRat(QPoly(1), QPoly::q()); }
    /// q - q^{-1} = (q^2-1)/q
    static QRat q_minus_qinv() {
        return QRat(QPoly(std::vector<mpz_class>{-1, 0, 1}), QPoly::q());
    }
    /// Laurent monomial q^e for any integer e.
    static QRat q_pow(long e) {
        if (e >= 0) return QRat(QPoly::monomial(1, static_cast<std::size_t>(e)));
        return QRat(QPoly(1), QPoly::monomial(1, static_cast<std::size_t>(-e)));
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly(1) && den_ == QPoly(1); }

    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat operator-() const {
        QRat r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }
    friend QRat operator*(const QRat& a, const QRat& b) {
        if (a.is_zero() || b.is_zero()) return QRat();
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw std::domain_error("division by zero element of Q(q)");
        if (a.is_zero()) return QRat();
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    QRat inv() const { return QRat(1) / *this; }
    QRat pow(long e) const {
        if (e < 0) return inv().pow(-e);
        QRat r(1), base(*this);
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Value at q = 1 of the canonical form; throws on a genuine pole.
    mpq_class eval_q1() const {
        mpz_class d = den_.eval_int(1);
        if (d == 0) throw std::domain_error("pole at q=1");
        mpq_class r(num_.eval_int(1), d);
        r.canonicalize();
        return r;
    }
    bool has_pole_q1() const { return den_.eval_int(1) == 0; }

    mpq_class eval_rat(const mpq_class& x) const {
        mpq_class d = den_.eval_rat(x);
        if (d == 0) throw std::domain_error("pole at evaluation point");
        mpq_class r = num_.eval_rat(x) / d;
        r.canonicalize();
        return r;
    }

    /// True if the element is a Laurent polynomial in q (denominator a
    /// power of q).  Coefficients arising inside braided-integer
    /// divisions must stay of this form.
    bool is_laurent() const { return den_.is_monomial() && den_.leading() == 1; }

    /// Rendered as a Laurent polynomial when possible ("q-q^-1"),
    /// otherwise "(num)/(den)".
    std::string str() const {
        if (is_zero()) return "0";
        if (den_ == QPoly(1)) return num_.str();
        if (is_laurent()) {
            int shift = den_.degree();
            std::string s;
            for (int i = num_.degree(); i >= 0; --i) {
                mpz_class c = num_.coeff(static_cast<std::size_t>(i));
                if (c == 0) continue;
                if (!s.empty()) s += (c > 0 ? "+" : "-");
                else if (c < 0) s += "-";
                mpz_class a = abs(c);
                int e = i - shift;
                if (a != 1 || e == 0) s += a.get_str();
                if (e != 0) {
                    if (a != 1) s += "*";
                    s += "q";
                    if (e != 1) s += "^" + std::to_string(e);
                }
            }
            return s;
        }
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        QPoly g = poly_gcd(num_, den_);
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
    QPoly num_;
    QPoly den_;
};

/// Normalized element num/den of Q(q); throws on a zero denominator.
inline QRat qrat_normalize(const QPoly& num, const QPoly& den) { return QRat(num, den); }

} // namespace braidkit

#endif // BRAIDKIT_QRAT_HPP
