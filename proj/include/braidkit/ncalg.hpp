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

#ifndef BRAIDKIT_NCALG_HPP
#define BRAIDKIT_NCALG_HPP

#include "rmatrix.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidkit {

/// Monomial in noncommuting generators: sequence of 1-based indices.
using Word = std::vector<int>;

/// Degree-lexicographic order with x1 < x2 < ... < xn.
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline Word word_cat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

/// Sparse linear combination of words over Q(q).  Used both for raw
/// (free-algebra) combinations and for reduced normal forms; reduction
/// status is a property of how the value was produced.
class NCPoly {
  public:
    using Terms = std::map<Word, QRat, DeglexLess>;

    NCPoly() = default;
    explicit NCPoly(Word w, QRat c = QRat(1)) {
        if (!c.is_zero()) terms_[std::move(w)] = std::move(c);
    }
    static NCPoly one() { return NCPoly(Word{}); }
    static NCPoly generator(int i) { return NCPoly(Word{i}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

    void add_term(const Word& w, const QRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) terms_[w] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    QRat coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? QRat() : it->second;
    }

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    NCPoly operator-() const { return *this * QRat(-1); }
    friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
        NCPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }
    friend NCPoly operator*(const NCPoly& a, const QRat& s) {
        NCPoly r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : a.terms_) r.terms_[w] = c * s;
        return r;
    }
    friend NCPoly operator*(const QRat& s, const NCPoly& a) { return a * s; }
    /// Free (concatenation) product; no reduction.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(word_cat(wa, wb), ca * cb);
        return r;
    }
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

    /// All coefficients evaluated at q=1 (throws on a pole).
    std::map<Word, mpq_class, DeglexLess> eval_q1() const {
        std::map<Word, mpq_class, DeglexLess> r;
        for (const auto& [w, c] : terms_) {
            mpq_class v = c.eval_q1();
            if (v != 0) r[w] = v;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (!w.empty()) {
                s += "*";
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (i) s += ".";
                    s += "x" + std::to_string(w[i]);
                }
            }
        }
        return s;
    }

  private:
    Terms terms_;
};

/// Which side of the quadratic exchange relation is rewritten: the
/// coordinate algebra, its momentum twin, and the conformal twin orient
/// the same R'-commutator three different ways.
enum class Orientation { Space, Momentum, Conformal };

/// Echelonized degree-2 rewrite system for one exchange algebra.
/// Pivot monomials are the order-largest words of the echelon rows;
/// each pivot rewrites to a combination of strictly smaller words.
class RelationSet {
  public:
    RelationSet() = default;
    RelationSet(int n, std::vector<NCPoly> rows) : n_(n) {
        for (NCPoly& row : rows) insert_row(std::move(row));
        for (const auto& [piv, row] : echelon_) {
            NCPoly rep;
            for (const auto& [w, c] : row.terms())
                if (w != piv) rep.add_term(w, -c);
            pivots_[piv] = std::move(rep);
        }
    }

    int n() const { return n_; }
    int dimension() const { return static_cast<int>(echelon_.size()); }
    bool is_pivot(int a, int b) const { return pivots_.count(Word{a, b}) > 0; }
    const std::map<Word, NCPoly, DeglexLess>& pivots() const { return pivots_; }
    std::vector<NCPoly> rows() const {
        std::vector<NCPoly> r;
        for (const auto& [piv, row] : echelon_) r.push_back(row);
        return r;
    }

  private:
    void insert_row(NCPoly row) {
        for (;;) {
            if (row.is_zero()) return;
            Word piv = row.terms().rbegin()->first;
            auto it = echelon_.find(piv);
            if (it == echelon_.end()) break;
            row -= it->second * row.coeff(piv);
        }
        Word piv = row.terms().rbegin()->first;
        row = row * row.coeff(piv).inv();
        for (auto& [p, r] : echelon_) {
            QRat c = r.coeff(piv);
            if (!c.is_zero()) r -= row * c;
        }
        echelon_[piv] = std::move(row);
    }

    int n_ = 0;
    std::map<Word, NCPoly, DeglexLess> echelon_; // pivot word -> full row, pivot coeff 1
    std::map<Word, NCPoly, DeglexLess> pivots_;  // pivot word -> replacement (smaller words)
};

/// Degree-2 exchange relations of the chosen orientation, echelonized.
inline RelationSet build_relations(const RMatrixData& r_prime, Orientation o = Orientation::Space) {
    int n = r_prime.n;
    std::vector<NCPoly> rows;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            NCPoly rel;
            switch (o) {
                case Orientation::Space:
                    // x_i x_j = x_b x_a R'^a_i^b_j
                    rel.add_term(Word{i, j}, QRat(1));
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) rel.add_term(Word{b, a}, -r_prime.at(a, i, b, j));
                    break;
                case Orientation::Momentum:
                    // p^i p^j = R'^i_a^j_b p^b p^a
                    rel.add_term(Word{i, j}, QRat(1));
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) rel.add_term(Word{b, a}, -r_prime.at(i, a, j, b));
                    break;
                case Orientation::Conformal:
                    // c_j c_i = c_a c_b R'^a_i^b_j
                    rel.add_term(Word{j, i}, QRat(1));
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) rel.add_term(Word{a, b}, -r_prime.at(a, i, b, j));
                    break;
            }
            if (!rel.is_zero()) rows.push_back(std::move(rel));
        }
    return RelationSet(n, std::move(rows));
}

namespace detail {
/// One rewrite of the pivot pair at position pos; pair must be a pivot.
inline NCPoly rewrite_at(const Word& w, std::size_t pos, const RelationSet& rels) {
    const NCPoly& rep = rels.pivots().at(Word{w[pos], w[pos + 1]});
    NCPoly out;
    for (const auto& [pair, c] : rep.terms()) {
        Word nw(w.begin(), w.begin() + static_cast<long>(pos));
        nw.insert(nw.end(), pair.begin(), pair.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
        out.add_term(nw, c);
    }
    return out;
}
} // namespace detail

/// Normal form: repeatedly rewrites the leftmost pivot pair of each
/// word until none remains.  Each step strictly decreases the word in
/// the monomial order, so this terminates.
inline NCPoly reduce(const NCPoly& p, const RelationSet& rels) {
    NCPoly result;
    std::vector<std::pair<Word, QRat>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t pos = 0;
        bool found = false;
        for (; pos + 1 < w.size(); ++pos)
            if (rels.is_pivot(w[pos], w[pos + 1])) {
                found = true;
                break;
            }
        if (!found) {
            result.add_term(w, c);
            continue;
        }
        NCPoly step = detail::rewrite_at(w, pos, rels);
        for (const auto& [nw, nc] : step.terms()) work.emplace_back(nw, nc * c);
    }
    return result;
}

/// Diamond-lemma style overlap check: every degree-3 word with two
/// admissible first rewrites must reduce to the same normal form.
inline VerificationReport check_confluence(const RelationSet& rels) {
    int n = rels.n();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                if (!rels.is_pivot(a, b) || !rels.is_pivot(b, c)) continue;
                Word w{a, b, c};
                NCPoly left = reduce(detail::rewrite_at(w, 0, rels), rels);
                NCPoly right = reduce(detail::rewrite_at(w, 1, rels), rels);
                if (left != right)
                    return VerificationReport::fail("confluence",
                                                    "ambiguous word x" + std::to_string(a) + ".x" + std::to_string(b) +
                                                        ".x" + std::to_string(c));
            }
    return VerificationReport::pass("confluence");
}

/// All degree-d words containing no pivot pair, in monomial order.
inline std::vector<Word> normal_words(const RelationSet& rels, int d) {
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == d) {
            out.push_back(w);
            return;
        }
        for (int i = 1; i <= rels.n(); ++i) {
            if (!w.empty() && rels.is_pivot(w.back(), i)) continue;
            w.push_back(i);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
    return out;
}

/// Tensor combination with two word slots; used for braiding output.
struct PairLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        DeglexLess less;
        if (a.first != b.first) return less(a.first, b.first);
        return less(a.second, b.second);
    }
};
using TensorTerms = std::map<std::pair<Word, Word>, QRat, PairLess>;

inline void tensor_add(TensorTerms& t, const Word& a, const Word& b, const QRat& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end()) t[key] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

namespace detail {
/// One letter crossing a whole word from the left:
/// Psi(x_i (x) v) as pairs (left word, surviving right letter).
inline std::map<std::pair<Word, int>, QRat> cross_letter(int i, const Word& v, std::size_t at,
                                                         const RMatrixData& R) {
    std::map<std::pair<Word, int>, QRat> out;
    if (at == v.size()) {
        out[{Word{}, i}] = QRat(1);
        return out;
    }
    int j = v[at];
    for (int a = 1; a <= R.n; ++a)
        for (int b = 1; b <= R.n; ++b) {
            QRat c = R.at(a, i, b, j); // Psi(x_i (x) x_j) = x_b (x) x_a R^a_i^b_j
            if (c.is_zero()) continue;
            for (const auto& [rest, rc] : cross_letter(a, v, at + 1, R)) {
                Word w{b};
                w.insert(w.end(), rest.first.begin(), rest.first.end());
                auto key = std::make_pair(std::move(w), rest.second);
                auto it = out.find(key);
                if (it == out.end()) out[key] = c * rc;
                else {
                    it->second += c * rc;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    return out;
}

/// Psi(u (x) v) in the free algebra, extended by iterated crossings.
inline TensorTerms psi_free(const Word& u, const Word& v, const RMatrixData& R) {
    TensorTerms out;
    if (u.empty()) {
        tensor_add(out, v, Word{}, QRat(1));
        return out;
    }
    Word tail(u.begin() + 1, u.end());
    TensorTerms inner = psi_free(tail, v, R);
    for (const auto& [slots, c] : inner) {
        for (const auto& [cross, cc] : cross_letter(u[0], slots.first, 0, R)) {
            Word right{cross.second};
            right.insert(right.end(), slots.second.begin(), slots.second.end());
            tensor_add(out, cross.first, right, c * cc);
        }
    }
    return out;
}
} // namespace detail

/// Braiding Psi(a (x) b) with both output slots reduced to normal form.
inline TensorTerms braiding(const NCPoly& a, const NCPoly& b, const RMatrixData& R, const RelationSet& rels) {
    TensorTerms out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            TensorTerms raw = detail::psi_free(wa, wb, R);
            for (const auto& [slots, c] : raw) {
                NCPoly left = reduce(NCPoly(slots.first), rels);
                NCPoly right = reduce(NCPoly(slots.second), rels);
                for (const auto& [wl, cl] : left.terms())
                    for (const auto& [wr, cr] : right.terms()) tensor_add(out, wl, wr, ca * cb * c * cl * cr);
            }
        }
    return out;
}

/// Braided antipode: S(x_i) = -x_i, extended braided-antimultiplicatively
/// by S(ab) = mult(Psi(S(a) (x) S(b))).
inline NCPoly braided_antipode(const NCPoly& p, const RMatrixData& R, const RelationSet& rels) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() <= 1) {
            out.add_term(w, w.empty() ? c : -c);
            continue;
        }
        Word tail(w.begin() + 1, w.end());
        NCPoly stail = braided_antipode(reduce(NCPoly(tail), rels), R, rels);
        TensorTerms crossed = braiding(NCPoly(Word{w[0]}, QRat(-1)), stail, R, rels);
        NCPoly prod;
        for (const auto& [slots, cc] : crossed) prod.add_term(word_cat(slots.first, slots.second), cc);
        out += reduce(prod, rels) * c;
    }
    return out;
}

/// The quadratic element x.x = x_a x_b eta^{ba}, reduced; throws if it
/// fails to commute with some generator.
inline NCPoly metric_square(const MetricData& eta, const RelationSet& rels) {
    NCPoly xx;
    for (int a = 1; a <= eta.n; ++a)
        for (int b = 1; b <= eta.n; ++b)
            xx.add_term(Word{a, b}, eta.eta_upper[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)]);
    xx = reduce(xx, rels);
    for (int i = 1; i <= eta.n; ++i) {
        NCPoly comm = reduce(xx * NCPoly::generator(i) - NCPoly::generator(i) * xx, rels);
        if (!comm.is_zero()) throw std::domain_error("x.x not central");
    }
    return xx;
}

// ---------------------------------------------------------------------
// Text format: "(q-q^-1)*x1.x3 + (-1)*x2.x2".  The parser accepts a
// superset: +, -, *, ., ^ with integer exponents, parentheses, integer
// literals, q, and x<k>.  Output is a free combination; callers reduce.
// ---------------------------------------------------------------------

class NCParser {
  public:
    explicit NCParser(std::string text) : s_(std::move(text)) {}

    NCPoly parse() {
        NCPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw std::invalid_argument("unexpected trailing input at offset " + std::to_string(pos_));
        return p;
    }

  private:
    NCPoly expr() {
        NCPoly acc;
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        acc = term() * QRat(neg ? -1 : 1);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            NCPoly t = term();
            acc += (c == '-') ? -t : t;
        }
        return acc;
    }
    NCPoly term() {
        NCPoly acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '.') {
                get();
                acc = acc * factor();
            } else if (c == '(' || c == 'q' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor(); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }
    NCPoly factor() {
        NCPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            get();
            long e = integer();
            if (base.terms().size() != 1) throw std::invalid_argument("exponent on a sum");
            const auto& [w, c] = *base.terms().begin();
            if (w.empty()) return NCPoly(Word{}, c.pow(e));
            if (e < 0) throw std::invalid_argument("negative exponent on a generator");
            NCPoly r = NCPoly::one();
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }
    NCPoly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            NCPoly p = expr();
            skip_ws();
            if (get() != ')') throw std::invalid_argument("expected ')'");
            return p;
        }
        if (c == '-') {
            get();
            return -primary();
        }
        if (c == 'q') {
            get();
            return NCPoly(Word{}, QRat::q());
        }
        if (c == 'x') {
            get();
            long idx = integer();
            if (idx < 1) throw std::invalid_argument("generator index must be positive");
            return NCPoly::generator(static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly(Word{}, QRat(integer()));
        throw std::invalid_argument("unexpected character '" + std::string(1, c) + "'");
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw std::invalid_argument("expected integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
        return neg ? -v : v;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    std::string s_;
    std::size_t pos_ = 0;
};

inline NCPoly parse_ncpoly(const std::string& text) { return NCParser(text).parse(); }

} // namespace braidkit

#endif // BRAIDKIT_NCALG_HPP
