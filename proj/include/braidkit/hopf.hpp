// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Hopf-level structure over the generator actions: coproducts, formal
// antipodes, counits, the star operation, the duality pairing between
// the momentum and degree-raising sectors, the truncated braided
// exponential, and the conjugated-coproduct identity built from them.

#pragma once

#include "braidkit/actions.hpp"

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace braidkit {

/// One formal generator letter.  SLplus/SLminus are antipode markers
/// for the rotation sector; they are never expanded into generator
/// words and act through inverse representation matrices.
struct UGen {
    enum class Kind { P, Lplus, Lminus, SigmaP, SigmaM, C, SLplus, SLminus };
    Kind kind = Kind::P;
    int i = 0;
    int j = 0;

    friend bool operator==(const UGen& a, const UGen& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const UGen& a, const UGen& b) {
        return std::tie(a.kind, a.i, a.j) < std::tie(b.kind, b.i, b.j);
    }
};

inline UGen u_p(int i) { return UGen{UGen::Kind::P, i, 0}; }
inline UGen u_lp(int i, int j) { return UGen{UGen::Kind::Lplus, i, j}; }
inline UGen u_lm(int i, int j) { return UGen{UGen::Kind::Lminus, i, j}; }
inline UGen u_sig() { return UGen{UGen::Kind::SigmaP, 0, 0}; }
inline UGen u_sig_inv() { return UGen{UGen::Kind::SigmaM, 0, 0}; }
inline UGen u_c(int i) { return UGen{UGen::Kind::C, i, 0}; }
inline UGen u_slp(int i, int j) { return UGen{UGen::Kind::SLplus, i, j}; }
inline UGen u_slm(int i, int j) { return UGen{UGen::Kind::SLminus, i, j}; }

using UWord = std::vector<UGen>;

inline std::string ugen_str(const UGen& g) {
    switch (g.kind) {
        case UGen::Kind::P: return "p" + std::to_string(g.i);
        case UGen::Kind::Lplus: return "l+" + std::to_string(g.i) + "_" + std::to_string(g.j);
        case UGen::Kind::Lminus: return "l-" + std::to_string(g.i) + "_" + std::to_string(g.j);
        case UGen::Kind::SigmaP: return "sig";
        case UGen::Kind::SigmaM: return "sig^-1";
        case UGen::Kind::C: return "c" + std::to_string(g.i);
        case UGen::Kind::SLplus: return "S[l+" + std::to_string(g.i) + "_" + std::to_string(g.j) + "]";
        case UGen::Kind::SLminus: return "S[l-" + std::to_string(g.i) + "_" + std::to_string(g.j) + "]";
    }
    return "?";
}

inline std::string uword_str(const UWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "." : "") + ugen_str(w[t]);
    return s;
}

namespace detail {

inline bool is_sigma(const UGen& g) { return g.kind == UGen::Kind::SigmaP || g.kind == UGen::Kind::SigmaM; }
inline bool is_rotation(const UGen& g) {
    return g.kind == UGen::Kind::Lplus || g.kind == UGen::Kind::Lminus || g.kind == UGen::Kind::SLplus ||
           g.kind == UGen::Kind::SLminus;
}

} // namespace detail

/// The dilaton letters commute with the rotation sector: pull them
/// left across l/Sl letters and cancel inverse pairs.  This is the only
/// rewriting done on formal words; everything else is operational.
inline UWord canonicalize(UWord w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < w.size(); ++t) {
            if (detail::is_rotation(w[t]) && detail::is_sigma(w[t + 1])) {
                std::swap(w[t], w[t + 1]);
                changed = true;
            } else if (detail::is_sigma(w[t]) && detail::is_sigma(w[t + 1]) && w[t].kind != w[t + 1].kind) {
                w.erase(w.begin() + static_cast<long>(t), w.begin() + static_cast<long>(t) + 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

struct UWordLess {
    bool operator()(const UWord& a, const UWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Linear combination of formal generator words.  No canonical form
/// beyond the dilaton normalization; equality of the underlying algebra
/// elements is tested operationally through the module action.
class UElement {
  public:
    UElement() = default;
    explicit UElement(UWord w) { add_term(std::move(w), QRat(1)); }
    static UElement one() { return UElement(UWord{}); }

    void add_term(UWord w, const QRat& c) {
        if (c.is_zero()) return;
        w = canonicalize(std::move(w));
        QRat& slot = terms_[w];
        slot += c;
        if (slot.is_zero()) terms_.erase(w);
    }
    const std::map<UWord, QRat, UWordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UElement& operator+=(const UElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator*(const QRat& s, const UElement& a) {
        UElement r;
        for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
        return r;
    }
    friend UElement operator*(const UElement& a, const UElement& b) {
        UElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                UWord w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(std::move(w), ca * cb);
            }
        return r;
    }
    friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + uword_str(w);
        }
        return s;
    }

  private:
    std::map<UWord, QRat, UWordLess> terms_;
};

struct UPairLess {
    bool operator()(const std::pair<UWord, UWord>& a, const std::pair<UWord, UWord>& b) const {
        UWordLess lt;
        if (lt(a.first, b.first)) return true;
        if (lt(b.first, a.first)) return false;
        return lt(a.second, b.second);
    }
};

/// Linear combination of word pairs: elements of the tensor square.
class UTensor {
  public:
    void add_term(UWord a, UWord b, const QRat& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(canonicalize(std::move(a)), canonicalize(std::move(b)));
        QRat& slot = terms_[key];
        slot += c;
        if (slot.is_zero()) terms_.erase(key);
    }
    const std::map<std::pair<UWord, UWord>, QRat, UPairLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UTensor& operator+=(const UTensor& o) {
        for (const auto& [p, c] : o.terms_) add_term(p.first, p.second, c);
        return *this;
    }
    friend UTensor operator*(const QRat& s, const UTensor& t) {
        UTensor r;
        for (const auto& [p, c] : t.terms_) r.add_term(p.first, p.second, s * c);
        return r;
    }
    friend UTensor operator*(const UTensor& a, const UTensor& b) {
        UTensor r;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) {
                UWord l = pa.first, rr = pa.second;
                l.insert(l.end(), pb.first.begin(), pb.first.end());
                rr.insert(rr.end(), pb.second.begin(), pb.second.end());
                r.add_term(std::move(l), std::move(rr), ca * cb);
            }
        return r;
    }
    friend bool operator==(const UTensor& a, const UTensor& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + uword_str(p.first) + " (x) " + uword_str(p.second);
        }
        return s;
    }

  private:
    std::map<std::pair<UWord, UWord>, QRat, UPairLess> terms_;
};

namespace detail {

/// Gauss-Jordan inverse of a dense matrix over Q(q); throws on a
/// singular input with the supplied message.
inline std::vector<std::vector<QRat>> invert_dense(std::vector<std::vector<QRat>> a, const std::string& err) {
    std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        a[r].resize(2 * n);
        a[r][n + r] = QRat(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error(err);
        std::swap(a[piv], a[col]);
        QRat inv = a[col][col].inv();
        for (auto& v : a[col]) v = v * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            QRat f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    std::vector<std::vector<QRat>> out(n, std::vector<QRat>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r][c] = a[r][n + c];
    return out;
}

} // namespace detail

/// Context for the Hopf-level operations: the action context plus the
/// momentum-sector relation set, the swapped braiding used in the
/// pairing, and lazy caches for the rotation-antipode matrices.
struct HopfContext {
    ActionContext ctx;
    RelationSet p_rels;
    RMatrixData r21;
    bool p_confluent = false;

    const std::vector<Word>& basis(int d) const {
        auto it = bases_.find(d);
        if (it == bases_.end()) it = bases_.emplace(d, normal_words(ctx.rels, d)).first;
        return it->second;
    }

    /// Inverse of the degree-d representation matrix of l+ or l- taken
    /// jointly over the matrix index and the module basis.
    const std::vector<std::vector<QRat>>& rotation_antipode_matrix(int sign, int d) const {
        auto key = std::make_pair(sign, d);
        auto it = sl_inv_.find(key);
        if (it != sl_inv_.end()) return it->second;
        const std::vector<Word>& bs = basis(d);
        std::size_t nb = bs.size(), n = static_cast<std::size_t>(ctx.n);
        std::vector<std::vector<QRat>> a(n * nb, std::vector<QRat>(n * nb));
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t col = 0; col < nb; ++col)
                for (std::size_t i = 1; i <= n; ++i) {
                    NCPoly img = act_l(ctx, sign, static_cast<int>(i), static_cast<int>(j), NCPoly(bs[col]));
                    for (std::size_t row = 0; row < nb; ++row)
                        a[(i - 1) * nb + row][(j - 1) * nb + col] = img.coeff(bs[row]);
                }
        return sl_inv_.emplace(key, detail::invert_dense(std::move(a), "rotation sector not invertible at degree " +
                                                                           std::to_string(d)))
            .first->second;
    }

  private:
    mutable std::map<int, std::vector<Word>> bases_;
    mutable std::map<std::pair<int, int>, std::vector<std::vector<QRat>>> sl_inv_;
};

inline HopfContext make_hopf(const ActionContext& ctx) {
    HopfContext h;
    h.ctx = ctx;
    h.p_rels = build_relations(ctx.pair.r_prime, Orientation::Momentum);
    h.r21 = ctx.r.swap_factors();
    h.p_confluent = check_confluence(h.p_rels).status == CheckStatus::Pass;
    return h;
}

/// Action of the rotation-antipode markers: the inverse of the l+/l-
/// representation on each graded component.
inline NCPoly act_rotation_antipode(const HopfContext& h, int sign, int i, int j, const NCPoly& m) {
    std::map<int, NCPoly> by_deg;
    for (const auto& [w, c] : m.terms()) by_deg[static_cast<int>(w.size())].add_term(w, c);
    NCPoly out;
    for (const auto& [d, part] : by_deg) {
        const std::vector<Word>& bs = h.basis(d);
        std::size_t nb = bs.size();
        const auto& inv = h.rotation_antipode_matrix(sign, d);
        std::vector<QRat> coeffs(nb);
        for (std::size_t col = 0; col < nb; ++col) coeffs[col] = part.coeff(bs[col]);
        for (std::size_t row = 0; row < nb; ++row) {
            QRat v;
            for (std::size_t col = 0; col < nb; ++col) {
                if (coeffs[col].is_zero()) continue;
                v += inv[static_cast<std::size_t>(i - 1) * nb + row][static_cast<std::size_t>(j - 1) * nb + col] *
                     coeffs[col];
            }
            if (!v.is_zero()) out.add_term(bs[row], v);
        }
    }
    return out;
}

inline NCPoly act_U(const HopfContext& h, const UGen& g, const NCPoly& m) {
    switch (g.kind) {
        case UGen::Kind::P: return act_p(h.ctx, g.i, m);
        case UGen::Kind::Lplus: return act_l(h.ctx, +1, g.i, g.j, m);
        case UGen::Kind::Lminus: return act_l(h.ctx, -1, g.i, g.j, m);
        case UGen::Kind::SigmaP: return act_varsigma(h.ctx, +1, m);
        case UGen::Kind::SigmaM: return act_varsigma(h.ctx, -1, m);
        case UGen::Kind::C: return act_c(h.ctx, g.i, m);
        case UGen::Kind::SLplus: return act_rotation_antipode(h, +1, g.i, g.j, m);
        case UGen::Kind::SLminus: return act_rotation_antipode(h, -1, g.i, g.j, m);
    }
    return NCPoly();
}

/// Words act by composing letters right to left.
inline NCPoly act_U(const HopfContext& h, const UWord& w, const NCPoly& m) {
    NCPoly r = m;
    for (auto it = w.rbegin(); it != w.rend() && !r.is_zero(); ++it) r = act_U(h, *it, r);
    return r;
}

inline NCPoly act_U(const HopfContext& h, const UElement& u, const NCPoly& m) {
    NCPoly out;
    for (const auto& [w, c] : u.terms()) out += c * act_U(h, w, m);
    return out;
}

/// Generator coproducts; the degree-raising and momentum sectors are
/// bosonised against the rotation/dilation block.
inline UTensor coproduct(const HopfContext& h, const UGen& g) {
    UTensor t;
    switch (g.kind) {
        case UGen::Kind::P:
            t.add_term(UWord{g}, UWord{}, QRat(1));
            for (int a = 1; a <= h.ctx.n; ++a) t.add_term(UWord{u_sig(), u_lm(g.i, a)}, UWord{u_p(a)}, QRat(1));
            break;
        case UGen::Kind::C:
            for (int a = 1; a <= h.ctx.n; ++a) t.add_term(UWord{u_c(a)}, UWord{u_lp(a, g.i), u_sig_inv()}, QRat(1));
            t.add_term(UWord{}, UWord{g}, QRat(1));
            break;
        case UGen::Kind::Lplus:
            for (int a = 1; a <= h.ctx.n; ++a) t.add_term(UWord{u_lp(g.i, a)}, UWord{u_lp(a, g.j)}, QRat(1));
            break;
        case UGen::Kind::Lminus:
            for (int a = 1; a <= h.ctx.n; ++a) t.add_term(UWord{u_lm(g.i, a)}, UWord{u_lm(a, g.j)}, QRat(1));
            break;
        case UGen::Kind::SigmaP:
        case UGen::Kind::SigmaM:
            t.add_term(UWord{g}, UWord{g}, QRat(1));
            break;
        default:
            throw std::runtime_error("no coproduct for antipode markers");
    }
    return t;
}

inline UTensor coproduct(const HopfContext& h, const UWord& w) {
    UTensor t;
    t.add_term(UWord{}, UWord{}, QRat(1));
    for (const UGen& g : w) t = t * coproduct(h, g);
    return t;
}

inline UTensor coproduct(const HopfContext& h, const UElement& u) {
    UTensor t;
    for (const auto& [w, c] : u.terms()) t += c * coproduct(h, w);
    return t;
}

inline QRat counit(const UGen& g) {
    switch (g.kind) {
        case UGen::Kind::P:
        case UGen::Kind::C: return QRat();
        case UGen::Kind::Lplus:
        case UGen::Kind::Lminus:
        case UGen::Kind::SLplus:
        case UGen::Kind::SLminus: return g.i == g.j ? QRat(1) : QRat();
        case UGen::Kind::SigmaP:
        case UGen::Kind::SigmaM: return QRat(1);
    }
    return QRat();
}

inline QRat counit(const UWord& w) {
    QRat r(1);
    for (const UGen& g : w) {
        r = r * counit(g);
        if (r.is_zero()) break;
    }
    return r;
}

inline QRat counit(const UElement& u) {
    QRat r;
    for (const auto& [w, c] : u.terms()) r += c * counit(w);
    return r;
}

/// Formal antipode: kept as marker words for the rotation sector and
/// as the displayed generator combinations otherwise.
inline UElement antipode(const HopfContext& h, const UGen& g) {
    UElement e;
    switch (g.kind) {
        case UGen::Kind::P:
            for (int a = 1; a <= h.ctx.n; ++a) e.add_term(UWord{u_slm(g.i, a), u_sig_inv(), u_p(a)}, QRat(-1));
            break;
        case UGen::Kind::C:
            for (int a = 1; a <= h.ctx.n; ++a) e.add_term(UWord{u_c(a), u_sig(), u_slp(a, g.i)}, QRat(-1));
            break;
        case UGen::Kind::Lplus: e.add_term(UWord{u_slp(g.i, g.j)}, QRat(1)); break;
        case UGen::Kind::Lminus: e.add_term(UWord{u_slm(g.i, g.j)}, QRat(1)); break;
        case UGen::Kind::SigmaP: e.add_term(UWord{u_sig_inv()}, QRat(1)); break;
        case UGen::Kind::SigmaM: e.add_term(UWord{u_sig()}, QRat(1)); break;
        default: throw std::runtime_error("no antipode for antipode markers");
    }
    return e;
}

inline UElement antipode(const HopfContext& h, const UWord& w) {
    UElement r = UElement::one();
    for (const UGen& g : w) r = antipode(h, g) * r;
    return r;
}

inline UElement antipode(const HopfContext& h, const UElement& u) {
    UElement r;
    for (const auto& [w, c] : u.terms()) r += c * antipode(h, w);
    return r;
}

/// Reality data for the star operation.
struct StarContext {
    RealityType reality = RealityType::None;
    std::optional<MetricData> metric;
    std::vector<int> involution;
};

inline StarContext make_star(const PairData& pair) {
    StarContext s;
    s.reality = pair.reality;
    s.metric = pair.metric;
    s.involution = pair.involution;
    if (s.reality == RealityType::TypeI && !s.metric) throw std::runtime_error("type I star requires a metric");
    return s;
}

namespace detail {

inline UElement star_gen(const StarContext& s, const UGen& g, int n) {
    UElement e;
    if (s.reality == RealityType::TypeI) {
        const auto& lo = s.metric->eta_lower;
        const auto& up = s.metric->eta_upper;
        switch (g.kind) {
            case UGen::Kind::P:
                for (int a = 1; a <= n; ++a) e.add_term(UWord{u_p(a)}, lo[static_cast<std::size_t>(g.i - 1)][static_cast<std::size_t>(a - 1)]);
                return e;
            case UGen::Kind::C:
                for (int a = 1; a <= n; ++a) e.add_term(UWord{u_c(a)}, up[static_cast<std::size_t>(g.i - 1)][static_cast<std::size_t>(a - 1)]);
                return e;
            case UGen::Kind::Lplus:
            case UGen::Kind::Lminus: {
                UGen::Kind flip = g.kind == UGen::Kind::Lplus ? UGen::Kind::Lminus : UGen::Kind::Lplus;
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b) {
                        QRat co = lo[static_cast<std::size_t>(g.i - 1)][static_cast<std::size_t>(b - 1)] *
                                  up[static_cast<std::size_t>(g.j - 1)][static_cast<std::size_t>(a - 1)];
                        if (!co.is_zero()) e.add_term(UWord{UGen{flip, b, a}}, co);
                    }
                return e;
            }
            case UGen::Kind::SigmaP: e.add_term(UWord{u_sig_inv()}, QRat(1)); return e;
            case UGen::Kind::SigmaM: e.add_term(UWord{u_sig()}, QRat(1)); return e;
            default: throw std::runtime_error("no star for antipode markers");
        }
    }
    if (s.reality == RealityType::TypeII) {
        auto bar = [&](int i) { return s.involution[static_cast<std::size_t>(i - 1)]; };
        switch (g.kind) {
            case UGen::Kind::P: e.add_term(UWord{u_p(bar(g.i))}, QRat(1)); return e;
            case UGen::Kind::C: e.add_term(UWord{u_c(bar(g.i))}, QRat(1)); return e;
            case UGen::Kind::Lplus: e.add_term(UWord{u_lm(bar(g.i), bar(g.j))}, QRat(1)); return e;
            case UGen::Kind::Lminus: e.add_term(UWord{u_lp(bar(g.i), bar(g.j))}, QRat(1)); return e;
            case UGen::Kind::SigmaP: e.add_term(UWord{u_sig_inv()}, QRat(1)); return e;
            case UGen::Kind::SigmaM: e.add_term(UWord{u_sig()}, QRat(1)); return e;
            default: throw std::runtime_error("no star for antipode markers");
        }
    }
    throw std::runtime_error("no reality type declared");
}

} // namespace detail

/// Antimultiplicative star on formal elements.
inline UElement star_map(const StarContext& s, const UElement& u, int n) {
    UElement out;
    for (const auto& [w, c] : u.terms()) {
        UElement prod = UElement::one();
        for (const UGen& g : w) prod = detail::star_gen(s, g, n) * prod;
        out += c * prod;
    }
    return out;
}

/// Star on coordinates: x_i maps through the raised metric, words
/// reverse, coefficients stay (q is real).
inline NCPoly star_map(const StarContext& s, const NCPoly& p, const RelationSet& rels) {
    int n = rels.n();
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly prod = NCPoly::one();
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            NCPoly letter;
            if (s.reality == RealityType::TypeI) {
                for (int a = 1; a <= n; ++a) {
                    QRat co = s.metric->eta_upper[static_cast<std::size_t>(*it - 1)][static_cast<std::size_t>(a - 1)];
                    if (!co.is_zero()) letter.add_term(Word{a}, co);
                }
            } else if (s.reality == RealityType::TypeII) {
                letter.add_term(Word{s.involution[static_cast<std::size_t>(*it - 1)]}, QRat(1));
            } else {
                throw std::runtime_error("no reality type declared");
            }
            prod = prod * letter;
        }
        out += c * prod;
    }
    return reduce(out, rels);
}

/// Duality pairing of a momentum word against a degree-raising word.
/// The second argument is given in word order of the enveloping
/// algebra; its coordinate realization is the reversed letter sequence.
/// The value is the constant term of the derivation chain of the
/// braided antipode of the momentum word (crossing: swapped braiding),
/// scaled by (q - q^-1)^{-degree}.
inline QRat pairing(const HopfContext& h, const Word& pw, const Word& cw) {
    if (pw.size() != cw.size()) return QRat();
    if (pw.empty()) return QRat(1);
    Word xw(cw.rbegin(), cw.rend());
    NCPoly m = reduce(NCPoly(xw), h.ctx.rels);
    NCPoly tb = braided_antipode(NCPoly(pw), h.r21, h.p_rels);
    NCPoly acted;
    for (const auto& [w, co] : tb.terms()) {
        NCPoly t = m;
        for (auto it = w.rbegin(); it != w.rend() && !t.is_zero(); ++it) t = act_p(h.ctx, *it, t);
        acted += co * t;
    }
    return QRat::q_minus_qinv().pow(-static_cast<long>(pw.size())) * acted.coeff(Word{});
}

/// The canonical element of the pairing, truncated by degree, together
/// with its convolution inverse (braided antipode on the first leg).
struct BraidedExp {
    int degree = 0;
    UTensor exp;
    UTensor exp_inv;
};

inline BraidedExp braided_exp_truncated(const HopfContext& h, int N) {
    if (!h.p_confluent) throw std::runtime_error("momentum relations are not confluent");
    BraidedExp be;
    be.degree = N;
    be.exp.add_term(UWord{}, UWord{}, QRat(1));
    be.exp_inv.add_term(UWord{}, UWord{}, QRat(1));
    for (int d = 1; d <= N; ++d) {
        std::vector<Word> cb = normal_words(h.ctx.rels, d);
        std::vector<Word> pb = normal_words(h.p_rels, d);
        if (cb.size() != pb.size()) throw std::runtime_error("degenerate pairing at degree " + std::to_string(d));
        std::size_t sz = cb.size();
        std::vector<std::vector<QRat>> gram(sz, std::vector<QRat>(sz));
        for (std::size_t b = 0; b < sz; ++b)
            for (std::size_t a = 0; a < sz; ++a) {
                Word cw(cb[a].rbegin(), cb[a].rend());
                gram[b][a] = pairing(h, pb[b], cw);
            }
        std::vector<std::vector<QRat>> dual =
            detail::invert_dense(std::move(gram), "degenerate pairing at degree " + std::to_string(d));
        auto p_leg = [&](std::size_t a, std::size_t b) {
            UWord w;
            for (int idx : pb[b]) w.push_back(u_p(idx));
            return std::make_pair(w, dual[a][b]);
        };
        for (std::size_t a = 0; a < sz; ++a) {
            UWord cleg;
            for (auto it = cb[a].rbegin(); it != cb[a].rend(); ++it) cleg.push_back(u_c(*it));
            NCPoly sa = braided_antipode(NCPoly(cb[a]), h.ctx.r, h.ctx.rels);
            for (std::size_t b = 0; b < sz; ++b) {
                auto [pleg, co] = p_leg(a, b);
                if (co.is_zero()) continue;
                be.exp.add_term(cleg, pleg, co);
                for (const auto& [w, sco] : sa.terms()) {
                    UWord scleg;
                    for (auto it = w.rbegin(); it != w.rend(); ++it) scleg.push_back(u_c(*it));
                    be.exp_inv.add_term(std::move(scleg), pleg, co * sco);
                }
            }
        }
    }
    return be;
}

/// A tensor element acting legwise on a two-sided state.
inline TensorTerms apply_tensor(const HopfContext& h, const UTensor& t, const TensorTerms& state) {
    TensorTerms out;
    for (const auto& [legs, co] : t.terms())
        for (const auto& [pr, c0] : state) {
            NCPoly la = act_U(h, legs.first, NCPoly(pr.first));
            if (la.is_zero()) continue;
            NCPoly rb = act_U(h, legs.second, NCPoly(pr.second));
            if (rb.is_zero()) continue;
            for (const auto& [wa, ca] : la.terms())
                for (const auto& [wb, cb] : rb.terms()) tensor_add(out, wa, wb, co * c0 * ca * cb);
        }
    return out;
}

/// Checks g acting on products against the coproduct legs acting on
/// the factors, over all normal-word pairs within the degree budget.
inline VerificationReport verify_module_algebra(const HopfContext& h, const UGen& g, int max_degree) {
    auto start = std::chrono::steady_clock::now();
    const std::string name = "module-algebra:" + ugen_str(g);
    VerificationReport r = VerificationReport::pass(name);
    UTensor cop = coproduct(h, g);
    for (int da = 0; da <= max_degree - 1 && r.status == CheckStatus::Pass; ++da)
        for (int db = 0; db <= max_degree - 1 && da + db <= max_degree && r.status == CheckStatus::Pass; ++db)
            for (const Word& wa : h.basis(da)) {
                for (const Word& wb : h.basis(db)) {
                    NCPoly a(wa), b(wb);
                    NCPoly lhs = act_U(h, g, reduce(a * b, h.ctx.rels));
                    NCPoly rhs;
                    for (const auto& [legs, co] : cop.terms())
                        rhs += co * reduce(act_U(h, legs.first, a) * act_U(h, legs.second, b), h.ctx.rels);
                    if (lhs != rhs) {
                        r = VerificationReport::fail(name, "product rule fails on (" + a.str() + ", " + b.str() + ")");
                        break;
                    }
                }
                if (r.status != CheckStatus::Pass) break;
            }
    r.params["degree"] = std::to_string(max_degree);
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace detail {

/// Composition of two memoized generator actions on a polynomial.
class MemoAction {
  public:
    MemoAction(const HopfContext& h, UGen g) : h_(&h), g_(g) {}
    NCPoly operator()(const NCPoly& m) {
        NCPoly out;
        for (const auto& [w, c] : m.terms()) {
            auto it = memo_.find(w);
            if (it == memo_.end()) it = memo_.emplace(w, act_U(*h_, g_, NCPoly(w))).first;
            out += c * it->second;
        }
        return out;
    }

  private:
    const HopfContext* h_;
    UGen g_;
    std::map<Word, NCPoly, DeglexLess> memo_;
};

} // namespace detail

/// Operator-level check of the defining relations of the enveloping
/// algebra: both quadratic sectors, the rotation exchange relations,
/// and all cross relations, evaluated on normal words up to the degree.
inline VerificationReport verify_algebra_relations(const HopfContext& h, int max_degree) {
    auto start = std::chrono::steady_clock::now();
    const std::string name = "algebra-relations";
    int n = h.ctx.n;
    QRat lam = h.ctx.lambda, qq = QRat::q_minus_qinv();
    std::vector<Word> words;
    for (int d = 0; d <= max_degree; ++d)
        for (const Word& w : h.basis(d)) words.push_back(w);

    std::map<std::tuple<int, int, int>, detail::MemoAction> lcache;
    auto lact = [&](int sign, int i, int j) -> detail::MemoAction& {
        auto key = std::make_tuple(sign, i, j);
        auto it = lcache.find(key);
        if (it == lcache.end())
            it = lcache.emplace(key, detail::MemoAction(h, sign > 0 ? u_lp(i, j) : u_lm(i, j))).first;
        return it->second;
    };
    std::map<std::pair<int, int>, detail::MemoAction> gcache;
    auto gact = [&](const UGen& g) -> detail::MemoAction& {
        auto key = std::make_pair(static_cast<int>(g.kind), g.i);
        auto it = gcache.find(key);
        if (it == gcache.end()) it = gcache.emplace(key, detail::MemoAction(h, g)).first;
        return it->second;
    };
    auto pact = [&](int a) -> detail::MemoAction& { return gact(u_p(a)); };
    auto cact = [&](int a) -> detail::MemoAction& { return gact(u_c(a)); };
    auto sact = [&](int sign) -> detail::MemoAction& { return gact(sign > 0 ? u_sig() : u_sig_inv()); };
    auto finish = [&](VerificationReport r) {
        r.params["degree"] = std::to_string(max_degree);
        r.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        return r;
    };

    // quadratic sectors: every echelon row annihilates the module
    for (int sector = 0; sector < 2; ++sector) {
        const RelationSet& rs = sector == 0 ? h.p_rels : build_relations(h.ctx.pair.r_prime, Orientation::Conformal);
        for (const NCPoly& row : rs.rows())
            for (const Word& w : words) {
                NCPoly acc;
                for (const auto& [pair_w, co] : row.terms()) {
                    NCPoly t(w);
                    for (auto it = pair_w.rbegin(); it != pair_w.rend(); ++it)
                        t = sector == 0 ? pact(*it)(t) : cact(*it)(t);
                    acc += co * t;
                }
                if (!acc.is_zero())
                    return finish(VerificationReport::fail(
                        name, std::string(sector == 0 ? "momentum" : "conformal") + " sector relation fails on " +
                                  NCPoly(w).str()));
            }
    }

    // rotation sector exchange relations
    const std::array<std::pair<int, int>, 3> signs{{{+1, +1}, {-1, -1}, {-1, +1}}};
    for (auto [s1, s2] : signs)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        for (const Word& w : words) {
                            NCPoly wp(w), lhs, rhs;
                            for (int a = 1; a <= n; ++a)
                                for (int b = 1; b <= n; ++b) {
                                    QRat cl = h.ctx.r.at(a, j, b, l);
                                    if (!cl.is_zero()) lhs += cl * lact(s1, i, a)(lact(s2, k, b)(wp));
                                    QRat cr = h.ctx.r.at(i, a, k, b);
                                    if (!cr.is_zero()) rhs += cr * lact(s2, b, l)(lact(s1, a, j)(wp));
                                }
                            if (lhs != rhs)
                                return finish(VerificationReport::fail(
                                    name, "rotation exchange fails at (" + std::to_string(i) + "," +
                                              std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                                              ") on " + wp.str()));
                        }

    // cross relations with the momentum and degree-raising sectors
    for (const Word& w : words) {
        NCPoly wp(w);
        std::vector<NCPoly> pw(static_cast<std::size_t>(n)), cw(static_cast<std::size_t>(n));
        for (int a = 1; a <= n; ++a) {
            pw[static_cast<std::size_t>(a - 1)] = pact(a)(wp);
            cw[static_cast<std::size_t>(a - 1)] = cact(a)(wp);
        }
        for (int i = 1; i <= n; ++i) {
            if (sact(+1)(pw[static_cast<std::size_t>(i - 1)]) != lam.inv() * pact(i)(sact(+1)(wp)))
                return finish(VerificationReport::fail(name, "dilaton-momentum relation fails on " + wp.str()));
            if (sact(+1)(cw[static_cast<std::size_t>(i - 1)]) != lam * cact(i)(sact(+1)(wp)))
                return finish(VerificationReport::fail(name, "dilaton-conformal relation fails on " + wp.str()));
            for (int j = 1; j <= n; ++j) {
                if (lact(+1, i, j)(sact(+1)(wp)) != sact(+1)(lact(+1, i, j)(wp)) ||
                    lact(-1, i, j)(sact(+1)(wp)) != sact(+1)(lact(-1, i, j)(wp)))
                    return finish(VerificationReport::fail(name, "dilaton-rotation relation fails on " + wp.str()));
                for (int k = 1; k <= n; ++k) {
                    NCPoly lhs_p = lact(+1, i, j)(pw[static_cast<std::size_t>(k - 1)]);
                    NCPoly rhs_p;
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            QRat co = h.ctx.r21_inv.at(i, a, k, b);
                            if (!co.is_zero()) co = co * lam.inv();
                            if (!co.is_zero()) rhs_p += co * pact(b)(lact(+1, a, j)(wp));
                        }
                    if (lhs_p != rhs_p)
                        return finish(VerificationReport::fail(
                            name, "rotation-momentum relation fails at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ") on " + wp.str()));
                    NCPoly lhs_m = lact(-1, i, j)(pw[static_cast<std::size_t>(k - 1)]);
                    NCPoly rhs_m;
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            QRat co = h.ctx.r.at(i, a, k, b);
                            if (!co.is_zero()) rhs_m += lam * co * pact(b)(lact(-1, a, j)(wp));
                        }
                    if (lhs_m != rhs_m)
                        return finish(VerificationReport::fail(
                            name, "rotation-momentum minus relation fails at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ") on " + wp.str()));
                    NCPoly lhs_pc = lact(+1, i, j)(cw[static_cast<std::size_t>(k - 1)]);
                    NCPoly rhs_pc;
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            QRat co = h.ctx.r.at(b, k, a, j);
                            if (!co.is_zero()) rhs_pc += lam * co * cact(b)(lact(+1, i, a)(wp));
                        }
                    if (lhs_pc != rhs_pc)
                        return finish(VerificationReport::fail(
                            name, "rotation-conformal relation fails at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ") on " + wp.str()));
                    NCPoly lhs_mc = lact(-1, i, j)(cw[static_cast<std::size_t>(k - 1)]);
                    NCPoly rhs_mc;
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            QRat co = h.ctx.r_inv.at(a, j, b, k);
                            if (!co.is_zero()) rhs_mc += lam.inv() * co * cact(b)(lact(-1, i, a)(wp));
                        }
                    if (lhs_mc != rhs_mc)
                        return finish(VerificationReport::fail(
                            name, "rotation-conformal minus relation fails at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ") on " + wp.str()));
                }
                NCPoly comm = pact(i)(cw[static_cast<std::size_t>(j - 1)]) -
                              cact(j)(pw[static_cast<std::size_t>(i - 1)]);
                NCPoly want =
                    (lact(+1, i, j)(sact(-1)(wp)) - lact(-1, i, j)(sact(+1)(wp))) * qq.inv();
                if (comm != want)
                    return finish(VerificationReport::fail(name, "momentum-conformal commutator fails at (" +
                                                                     std::to_string(i) + "," + std::to_string(j) +
                                                                     ") on " + wp.str()));
            }
        }
    }
    return finish(VerificationReport::pass(name));
}

/// Two-part check of the conjugated coproduct on the degree raisers:
/// symbolically through the star operation, and operationally against
/// conjugation by the truncated canonical element.
inline VerificationReport verify_conjugation_identity(const HopfContext& h, int test_degree) {
    auto start = std::chrono::steady_clock::now();
    const std::string name = "conjugation";
    auto finish = [&](VerificationReport r) {
        r.params["degree"] = std::to_string(test_degree);
        r.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        return r;
    };
    StarContext star;
    try {
        star = make_star(h.ctx.pair);
        if (star.reality != RealityType::TypeI) throw std::runtime_error("conjugation check needs a type I star");
    } catch (const std::exception& e) {
        return finish(VerificationReport::error(name, e.what()));
    }
    int n = h.ctx.n;

    auto bar_delta = [&](int i) {
        UTensor t;
        for (int a = 1; a <= n; ++a) t.add_term(UWord{u_c(a)}, UWord{u_lm(a, i), u_sig()}, QRat(1));
        t.add_term(UWord{}, UWord{u_c(i)}, QRat(1));
        return t;
    };

    // (1) symbolic: star (x) star of the coproduct of the starred
    // generator must reproduce the conjugated coproduct verbatim.
    for (int i = 1; i <= n; ++i) {
        UElement ci;
        ci.add_term(UWord{u_c(i)}, QRat(1));
        UTensor cop = coproduct(h, star_map(star, ci, n));
        UTensor starred;
        for (const auto& [legs, co] : cop.terms()) {
            UElement l = star_map(star, UElement(legs.first), n);
            UElement r = star_map(star, UElement(legs.second), n);
            for (const auto& [wl, cl] : l.terms())
                for (const auto& [wr, cr] : r.terms()) starred.add_term(wl, wr, co * cl * cr);
        }
        if (!(starred == bar_delta(i)))
            return finish(VerificationReport::fail(name, "symbolic conjugated coproduct differs at c" +
                                                             std::to_string(i) + ": " + starred.str()));
    }

    // (2) operational: the canonical element conjugates one coproduct
    // into the other on every normal-word pair within the budget.
    BraidedExp be;
    try {
        be = braided_exp_truncated(h, test_degree + 1);
    } catch (const std::exception& e) {
        return finish(VerificationReport::error(name, e.what()));
    }
    for (int i = 1; i <= n; ++i) {
        UTensor dci = coproduct(h, u_c(i));
        UTensor bdci = bar_delta(i);
        for (int da = 0; da <= test_degree; ++da)
            for (int db = 0; da + db <= test_degree; ++db)
                for (const Word& wa : h.basis(da))
                    for (const Word& wb : h.basis(db)) {
                        TensorTerms st;
                        tensor_add(st, wa, wb, QRat(1));
                        TensorTerms lhs = apply_tensor(h, be.exp_inv, apply_tensor(h, dci, apply_tensor(h, be.exp, st)));
                        TensorTerms rhs = apply_tensor(h, bdci, st);
                        if (lhs != rhs)
                            return finish(VerificationReport::fail(
                                name, "operational conjugation fails at c" + std::to_string(i) + " on (" +
                                          NCPoly(wa).str() + ", " + NCPoly(wb).str() + ")"));
                    }
    }
    return finish(VerificationReport::pass(name));
}

} // namespace braidkit
