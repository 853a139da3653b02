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

#ifndef BRAIDKIT_QPOLY_HPP
#define BRAIDKIT_QPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

/// Integer-coefficient polynomial in the deformation parameter q,
/// stored as coefficients in ascending degree.  The zero polynomial is
/// the empty coefficient vector.
class QPoly {
  public:
    QPoly() = default;
    QPoly(const mpz_class& c) { // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.push_back(c);
    }
    QPoly(long c) : QPoly(mpz_class(c)) {} // NOLINT(google-explicit-constructor)
    explicit QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// Monomial c*q^e, e >= 0.
    static QPoly monomial(const mpz_class& c, std::size_t e) {
        if (c == 0) return QPoly();
        std::vector<mpz_class> v(e + 1, mpz_class(0));
        v[e] = c;
        return QPoly(std::move(v));
    }
    static QPoly q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    mpz_class coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
    }

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly operator-() const {
        QPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return QPoly(std::move(v));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPoly(std::move(v));
    }

    /// Exact division; throws if the remainder is nonzero.
    friend QPoly exact_div(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        if (a.is_zero()) return QPoly();
        if (a.degree() < b.degree()) throw std::logic_error("exact_div: non-exact division");
        std::vector<mpz_class> rem = a.coeffs_;
        std::vector<mpz_class> quo(a.coeffs_.size() - b.coeffs_.size() + 1, mpz_class(0));
        for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
            mpz_class top = rem[i + b.degree()];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
                throw std::logic_error("exact_div: non-exact division");
            mpz_class f = top / b.leading();
            quo[i] = f;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[i + j] -= f * b.coeffs_[j];
        }
        for (const auto& c : rem)
            if (c != 0) throw std::logic_error("exact_div: non-exact division");
        return QPoly(std::move(quo));
    }

    /// gcd of the integer coefficients (nonnegative); 0 for the zero polynomial.
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    QPoly primitive_part() const {
        if (is_zero()) return QPoly();
        mpz_class g = content();
        if (leading() < 0) g = -g;
        QPoly r(*this);
        for (auto& c : r.coeffs_) c /= g;
        return r;
    }

    mpz_class eval_int(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    mpq_class eval_rat(const mpq_class& x) const {
        mpq_class acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
        return acc;
    }

    QPoly pow(unsigned e) const {
        QPoly r(1), base(*this);
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    /// True if the polynomial is c*q^e for some single term.
    bool is_monomial() const {
        if (is_zero()) return false;
        for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const mpz_class& c = coeffs_[i];
            if (c == 0) continue;
            if (!s.empty()) s += (c > 0 ? "+" : "-");
            else if (c < 0) s += "-";
            mpz_class a = abs(c);
            if (a != 1 || i == 0) s += a.get_str();
            if (i > 0) {
                if (a != 1) s += "*";
                s += "q";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<mpz_class> coeffs_;
};

/// Primitive pseudo-remainder sequence gcd over Z[q]; result is primitive
/// with positive leading coefficient (times the content gcd).
inline QPoly poly_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * QPoly(b.content());
    if (b.is_zero()) return poly_gcd(b, a);
    mpz_class ca = a.content(), cb = b.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        QPoly r = a;
        int shift = r.degree() - b.degree();
        if (shift < 0) {
            std::swap(a, b);
            continue;
        }
        const mpz_class& lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            mpz_class lr = r.leading();
            r = r * QPoly(lb) - b * QPoly::monomial(lr, static_cast<std::size_t>(d));
        }
        a = b;
        b = r.is_zero() ? QPoly() : r.primitive_part();
    }
    return a.primitive_part() * QPoly(cg);
}

} // namespace braidkit

#endif // BRAIDKIT_QPOLY_HPP
