// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Representations of the conformal-type generators on the braided
// coordinate algebra: momentum derivations, rotation/dilation actions,
// the degree-raising special generators, their conjugate and spinorial
// variants, and the verification sweeps built on top of them.

#pragma once

#include "braidkit/metric.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidkit {

/// Everything an action needs: the (R', R) pair, the echelonized
/// coordinate relations, cached inverses of the big R, and optionally
/// the small spinorial R the pair was built from.
struct ActionContext {
    PairData pair;
    RelationSet rels;
    RMatrixData r;
    RMatrixData r_inv;
    RMatrixData r21_inv;
    QRat lambda;
    std::optional<MetricData> metric;
    std::optional<RMatrixData> small;
    int n = 0;
};

inline ActionContext make_context(const PairData& pair, std::optional<RMatrixData> small = std::nullopt) {
    ActionContext c;
    c.pair = pair;
    c.rels = build_relations(pair.r_prime, Orientation::Space);
    c.r = pair.r;
    c.r_inv = pair.r.inverse();
    c.r21_inv = pair.r.swap_factors().inverse();
    c.lambda = pair.lambda;
    c.metric = pair.metric;
    c.small = std::move(small);
    c.n = pair.n();
    return c;
}

struct GeneratorAction {
    enum class Kind { P, Lplus, Lminus, Varsigma, C };
    Kind kind;
    int i = 0;
    int j = 0;
    int power = 1; // Varsigma only: +1 or -1
};

namespace detail {

/// p^i on all momenta at once for one free word; returns the vector
/// indexed by i (1-based in slot i-1).
inline std::vector<NCPoly> act_p_word(const ActionContext& c, const Word& w) {
    std::vector<NCPoly> out(static_cast<std::size_t>(c.n));
    if (w.empty()) return out;
    int k = w.front();
    Word tail(w.begin() + 1, w.end());
    NCPoly tail_poly{tail};
    std::vector<NCPoly> sub = act_p_word(c, tail);
    for (int i = 1; i <= c.n; ++i) {
        NCPoly& r = out[static_cast<std::size_t>(i - 1)];
        if (i == k) r -= tail_poly;
        for (int m = 1; m <= c.n; ++m) {
            const NCPoly& s = sub[static_cast<std::size_t>(m - 1)];
            if (s.is_zero()) continue;
            for (int a = 1; a <= c.n; ++a) {
                QRat co = c.r_inv.at(i, m, a, k);
                if (!co.is_zero()) r += co * (NCPoly::generator(a) * s);
            }
        }
    }
    return out;
}

inline NCPoly act_l_word(const ActionContext& c, int sign, int i, int j, const Word& w) {
    if (w.empty()) return i == j ? NCPoly::one() : NCPoly();
    int k = w.front();
    Word tail(w.begin() + 1, w.end());
    NCPoly out;
    for (int a = 1; a <= c.n; ++a) {
        NCPoly rest = act_l_word(c, sign, a, j, tail);
        if (rest.is_zero()) continue;
        NCPoly head;
        for (int m = 1; m <= c.n; ++m) {
            QRat co = sign > 0 ? c.lambda * c.r.at(m, k, i, a) : c.lambda.inv() * c.r_inv.at(i, a, m, k);
            if (!co.is_zero()) head.add_term(Word{m}, co);
        }
        out += head * rest;
    }
    return out;
}

/// Divide every coefficient by (q - q^-1); a Laurent coefficient whose
/// quotient leaves the Laurent ring signals a broken braided integer.
inline NCPoly divide_braided(const NCPoly& p) {
    QRat d = QRat::q_minus_qinv();
    NCPoly out;
    for (const auto& [w, co] : p.terms()) {
        QRat quo = co / d;
        if (co.is_laurent() && !quo.is_laurent()) throw std::runtime_error("braided integer not divisible");
        out.add_term(w, quo);
    }
    return out;
}

/// Closed-form degree raiser: append x_i, apply
/// (1 - (PR)_{12}(PR)_{23}...(PR)_{d,d+1})/(q - q^-1), reduce.
inline NCPoly act_c_closed(const ActionContext& c, const RMatrixData& R, int i, const Word& w) {
    Word ext = w;
    ext.push_back(i);
    std::map<Word, QRat, DeglexLess> vec{{ext, QRat(1)}};
    for (int t = static_cast<int>(w.size()); t >= 1; --t) {
        std::map<Word, QRat, DeglexLess> next;
        for (const auto& [u, co] : vec) {
            int j = u[static_cast<std::size_t>(t - 1)];
            int l = u[static_cast<std::size_t>(t)];
            for (int a = 1; a <= c.n; ++a)
                for (int b = 1; b <= c.n; ++b) {
                    QRat e = R.at(b, j, a, l); // (PR)^{(a,b)}_{(j,l)}
                    if (e.is_zero()) continue;
                    Word u2 = u;
                    u2[static_cast<std::size_t>(t - 1)] = a;
                    u2[static_cast<std::size_t>(t)] = b;
                    QRat& slot = next[u2];
                    slot += co * e;
                    if (slot.is_zero()) next.erase(u2);
                }
        }
        vec = std::move(next);
    }
    NCPoly num(ext);
    for (const auto& [u, co] : vec) num.add_term(u, -co);
    return divide_braided(reduce(num, c.rels));
}

/// Right-derivation expansion of the same action (proof-side recursion).
inline NCPoly act_c_rec(const ActionContext& c, const RMatrixData& R, int i, const Word& w) {
    if (w.empty()) return NCPoly();
    Word head(w.begin(), w.end() - 1);
    int j = w.back();
    NCPoly gen;
    gen.add_term(Word{j, i}, QRat(1));
    for (int a = 1; a <= c.n; ++a)
        for (int b = 1; b <= c.n; ++b) {
            QRat co = R.at(a, j, b, i);
            if (!co.is_zero()) gen.add_term(Word{b, a}, -co);
        }
    NCPoly out = NCPoly(head) * divide_braided(reduce(gen, c.rels));
    for (int a = 1; a <= c.n; ++a)
        for (int b = 1; b <= c.n; ++b) {
            QRat co = R.at(a, j, b, i);
            if (co.is_zero()) continue;
            NCPoly inner = act_c_rec(c, R, b, head);
            if (!inner.is_zero()) out += co * (inner * NCPoly::generator(a));
        }
    return reduce(out, c.rels);
}

inline NCPoly act_c_with(const ActionContext& c, const RMatrixData& R, int i, const NCPoly& m) {
    NCPoly out;
    for (const auto& [w, co] : m.terms()) {
        NCPoly part = act_c_closed(c, R, i, w);
        if (w.size() <= 3) assert(part == act_c_rec(c, R, i, w));
        assert(part.is_zero() || part.degree() == static_cast<int>(w.size()) + 1);
        out += co * part;
    }
    return out;
}

} // namespace detail

/// Braided momentum derivation p^i.
inline NCPoly act_p(const ActionContext& c, int i, const NCPoly& m) {
    NCPoly out;
    for (const auto& [w, co] : m.terms()) {
        NCPoly part = reduce(detail::act_p_word(c, w)[static_cast<std::size_t>(i - 1)], c.rels);
        assert(part.is_zero() || part.degree() == static_cast<int>(w.size()) - 1);
        out += co * part;
    }
    return out;
}

/// Rotation sector l+/l- (sign +1 / -1), matrix coproduct on products.
inline NCPoly act_l(const ActionContext& c, int sign, int i, int j, const NCPoly& m) {
    NCPoly out;
    for (const auto& [w, co] : m.terms()) {
        NCPoly part = reduce(detail::act_l_word(c, sign, i, j, w), c.rels);
        assert(part.is_zero() || part.degree() == static_cast<int>(w.size()));
        out += co * part;
    }
    return out;
}

/// Dilaton: scales a degree-d word by lambda^{power*d}.
inline NCPoly act_varsigma(const ActionContext& c, int power, const NCPoly& m) {
    NCPoly out;
    for (const auto& [w, co] : m.terms())
        out.add_term(w, co * c.lambda.pow(power * static_cast<long>(w.size())));
    return out;
}

/// Special conformal generator c_i.
inline NCPoly act_c(const ActionContext& c, int i, const NCPoly& m) { return detail::act_c_with(c, c.r, i, m); }

/// Conjugate action: big R replaced by R21^{-1} throughout.
inline NCPoly act_c_conjugate(const ActionContext& c, int i, const NCPoly& m) {
    return detail::act_c_with(c, c.r21_inv, i, m);
}

/// Spinorial form of c_i in a square gauge: generators via the small
/// s x s R-matrix, products via the same crossing as act_c.
inline NCPoly act_c_spinorial(const ActionContext& c, int i, const NCPoly& m) {
    if (!c.small) throw std::runtime_error("no spinorial gauge data in context");
    const RMatrixData& sm = *c.small;
    if (check_hecke(sm).status != CheckStatus::Pass) throw std::runtime_error("small R is not q-Hecke");
    int s = sm.n;
    auto gen = [&](int ci, int xj) {
        int i0 = (ci - 1) / s + 1, i1 = (ci - 1) % s + 1;
        int j0 = (xj - 1) / s + 1, j1 = (xj - 1) % s + 1;
        NCPoly g;
        for (int a1 = 1; a1 <= s; ++a1)
            for (int b1 = 1; b1 <= s; ++b1) {
                QRat co = sm.at(a1, j1, b1, i1);
                if (!co.is_zero()) g.add_term(Word{flatten_index(s, j0, b1), flatten_index(s, i0, a1)}, -co);
            }
        return reduce(g, c.rels);
    };
    std::function<NCPoly(int, const Word&)> rec = [&](int ci, const Word& w) -> NCPoly {
        if (w.empty()) return NCPoly();
        Word head(w.begin(), w.end() - 1);
        int j = w.back();
        NCPoly out = NCPoly(head) * gen(ci, j);
        for (int a = 1; a <= c.n; ++a)
            for (int b = 1; b <= c.n; ++b) {
                QRat co = c.r.at(a, j, b, ci);
                if (co.is_zero()) continue;
                NCPoly inner = rec(b, head);
                if (!inner.is_zero()) out += co * (inner * NCPoly::generator(a));
            }
        return reduce(out, c.rels);
    };
    NCPoly out;
    for (const auto& [w, co] : m.terms()) {
        NCPoly part = rec(i, w);
        assert(part.is_zero() || part.degree() == static_cast<int>(w.size()) + 1);
        out += co * part;
    }
    return out;
}

inline NCPoly apply(const ActionContext& c, const GeneratorAction& g, const NCPoly& m) {
    switch (g.kind) {
        case GeneratorAction::Kind::P: return act_p(c, g.i, m);
        case GeneratorAction::Kind::Lplus: return act_l(c, +1, g.i, g.j, m);
        case GeneratorAction::Kind::Lminus: return act_l(c, -1, g.i, g.j, m);
        case GeneratorAction::Kind::Varsigma: return act_varsigma(c, g.power, m);
        case GeneratorAction::Kind::C: return act_c(c, g.i, m);
    }
    return NCPoly();
}

/// Degree-graded matrices of one generator on the normal-word basis.
struct OperatorTable {
    GeneratorAction action;
    std::vector<std::vector<Word>> bases;                   // normal words per degree 0..D
    std::vector<std::vector<std::vector<QRat>>> matrices;   // per input degree: rows out-basis, cols in-basis
};

inline OperatorTable operator_table(const ActionContext& c, const GeneratorAction& g, int max_degree) {
    OperatorTable t;
    t.action = g;
    int shift = g.kind == GeneratorAction::Kind::P ? -1 : g.kind == GeneratorAction::Kind::C ? 1 : 0;
    for (int d = 0; d <= max_degree + (shift > 0 ? 1 : 0); ++d) t.bases.push_back(normal_words(c.rels, d));
    for (int d = 0; d <= max_degree; ++d) {
        int od = d + shift;
        const std::vector<Word>& in = t.bases[static_cast<std::size_t>(d)];
        std::vector<Word> out_basis = od < 0 ? std::vector<Word>{} : t.bases[static_cast<std::size_t>(od)];
        std::vector<std::vector<QRat>> mat(out_basis.size(), std::vector<QRat>(in.size()));
        for (std::size_t col = 0; col < in.size(); ++col) {
            NCPoly image = apply(c, g, NCPoly(in[col]));
            for (std::size_t row = 0; row < out_basis.size(); ++row)
                mat[row][col] = image.coeff(out_basis[row]);
        }
        t.matrices.push_back(std::move(mat));
    }
    return t;
}

/// Operator identities between left multiplication, the momentum
/// derivations, the rotation/dilation sector and c_i, checked on every
/// normal word up to the requested degree.
inline VerificationReport verify_cross_relations(const ActionContext& c, int max_degree) {
    auto start = std::chrono::steady_clock::now();
    QRat qq = QRat::q_minus_qinv();
    auto xmul = [&](int k, const NCPoly& p) { return reduce(NCPoly::generator(k) * p, c.rels); };
    auto word_str = [](const Word& w) {
        std::string s;
        for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "." : "") + ("x" + std::to_string(w[t]));
        return s.empty() ? std::string("1") : s;
    };
    auto fail = [&](const std::string& what, int i, int k, const Word& w) {
        VerificationReport r = VerificationReport::fail(
            "cross-relations", what + " residual at (" + std::to_string(i) + "," + std::to_string(k) + ") on " + word_str(w));
        r.params["degree"] = std::to_string(max_degree);
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        return r;
    };
    for (int d = 0; d <= max_degree; ++d) {
        for (const Word& w : normal_words(c.rels, d)) {
            NCPoly wp(w);
            std::vector<NCPoly> pw(static_cast<std::size_t>(c.n)), cw(static_cast<std::size_t>(c.n));
            for (int a = 1; a <= c.n; ++a) {
                pw[static_cast<std::size_t>(a - 1)] = act_p(c, a, wp);
                cw[static_cast<std::size_t>(a - 1)] = act_c(c, a, wp);
            }
            NCPoly sig_inv_w = act_varsigma(c, -1, wp);
            NCPoly sig_w = act_varsigma(c, +1, wp);
            for (int i = 1; i <= c.n; ++i) {
                // (c) dilaton exchange with left multiplication
                if (act_varsigma(c, +1, xmul(i, wp)) != c.lambda * xmul(i, sig_w)) return fail("dilaton", i, i, w);
                for (int k = 1; k <= c.n; ++k) {
                    // (a) x_2 R^{-1} p_1 - p_1 x_2 = id
                    NCPoly lhs;
                    for (int a = 1; a <= c.n; ++a)
                        for (int b = 1; b <= c.n; ++b) {
                            QRat co = c.r_inv.at(i, b, a, k);
                            if (!co.is_zero()) lhs += co * xmul(a, pw[static_cast<std::size_t>(b - 1)]);
                        }
                    lhs -= act_p(c, i, xmul(k, wp));
                    NCPoly rhs = i == k ? wp : NCPoly();
                    if (lhs != rhs) return fail("heisenberg", i, k, w);
                }
            }
            for (int i = 1; i <= c.n; ++i)
                for (int j = 1; j <= c.n; ++j)
                    for (int k = 1; k <= c.n; ++k) {
                        NCPoly lhs_p = act_l(c, +1, i, j, xmul(k, wp));
                        NCPoly rhs_p;
                        for (int a = 1; a <= c.n; ++a)
                            for (int b = 1; b <= c.n; ++b) {
                                QRat co = c.r.at(a, k, i, b);
                                if (!co.is_zero()) rhs_p += co * xmul(a, act_l(c, +1, b, j, wp));
                            }
                        if (lhs_p != c.lambda * rhs_p) return fail("lplus-x", i, k, w);
                        NCPoly lhs_m = act_l(c, -1, i, j, xmul(k, wp));
                        NCPoly rhs_m;
                        for (int a = 1; a <= c.n; ++a)
                            for (int b = 1; b <= c.n; ++b) {
                                QRat co = c.r_inv.at(i, b, a, k);
                                if (!co.is_zero()) rhs_m += co * xmul(a, act_l(c, -1, b, j, wp));
                            }
                        if (lhs_m != c.lambda.inv() * rhs_m) return fail("lminus-x", i, k, w);
                    }
            // (b) the conformal/coordinate cross relation
            for (int i = 1; i <= c.n; ++i) {
                NCPoly yw = cw[static_cast<std::size_t>(i - 1)];
                for (int a = 1; a <= c.n; ++a) yw += xmul(a, act_l(c, +1, a, i, sig_inv_w)) * qq.inv();
                for (int j = 1; j <= c.n; ++j) {
                    NCPoly xjw = xmul(j, wp);
                    NCPoly y_xjw = act_c(c, i, xjw);
                    for (int a = 1; a <= c.n; ++a) y_xjw += xmul(a, act_l(c, +1, a, i, act_varsigma(c, -1, xjw))) * qq.inv();
                    if (y_xjw != xmul(j, yw)) return fail("conformal-x", i, j, w);
                }
            }
            // (d) [p^i, c_j] = (l+ sigma^{-1} - l- sigma)/(q - q^-1)
            for (int i = 1; i <= c.n; ++i)
                for (int j = 1; j <= c.n; ++j) {
                    NCPoly lhs = act_p(c, i, cw[static_cast<std::size_t>(j - 1)]) - act_c(c, j, pw[static_cast<std::size_t>(i - 1)]);
                    NCPoly rhs = (act_l(c, +1, i, j, sig_inv_w) - act_l(c, -1, i, j, sig_w)) * qq.inv();
                    if (lhs != rhs) return fail("momentum-conformal", i, j, w);
                }
        }
    }
    VerificationReport r = VerificationReport::pass("cross-relations");
    r.params["degree"] = std::to_string(max_degree);
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// c_i (x.x)^m = ((1 - lambda^{-2m})/(q - q^-1)) x_i (x.x)^m.
inline VerificationReport verify_metric_scaling(const ActionContext& c, int m_max) {
    auto start = std::chrono::steady_clock::now();
    if (!c.metric) return VerificationReport::error("metric-scaling", "no metric in context");
    NCPoly xx = metric_square(*c.metric, c.rels);
    NCPoly power = NCPoly::one();
    VerificationReport r = VerificationReport::pass("metric-scaling");
    for (int m = 1; m <= m_max && r.status == CheckStatus::Pass; ++m) {
        power = reduce(power * xx, c.rels);
        QRat coeff = (QRat(1) - c.lambda.pow(-2 * m)) / QRat::q_minus_qinv();
        for (int i = 1; i <= c.n; ++i) {
            NCPoly lhs = act_c(c, i, power);
            NCPoly rhs = coeff * reduce(NCPoly::generator(i) * power, c.rels);
            if (lhs != rhs) {
                r = VerificationReport::fail("metric-scaling",
                                             "mismatch at m=" + std::to_string(m) + ", i=" + std::to_string(i));
                break;
            }
        }
    }
    r.params["m_max"] = std::to_string(m_max);
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Truncated Gaussian check: with g = sum alpha^m (x.x)^m/[m;mu]!,
/// mu = lambda^{-2}, the order-1 identity fixes alpha and every higher
/// order must then match c_i g = -q^{-1}((1-lambda^{-2})/(1-q^{-4})) x_i (x.x) g.
inline VerificationReport verify_gaussian(const ActionContext& c, int order) {
    auto start = std::chrono::steady_clock::now();
    if (!c.metric) return VerificationReport::error("gaussian", "no metric in context");
    QRat mu = c.lambda.pow(-2);
    if ((QRat(1) - mu).is_zero()) return VerificationReport::error("gaussian", "mu-factorial denominator vanishes");
    QRat qq = QRat::q_minus_qinv();
    QRat big_k = QRat(-1) * QRat::q_inv() * (QRat(1) - mu) / (QRat(1) - QRat::q_pow(-4));
    QRat alpha = big_k * qq / (QRat(1) - mu); // pinned by the order-1 component
    NCPoly xx = metric_square(*c.metric, c.rels);
    VerificationReport r = VerificationReport::pass("gaussian");
    NCPoly power = NCPoly::one();
    QRat g_prev(1), factorial(1);
    for (int m = 1; m <= order && r.status == CheckStatus::Pass; ++m) {
        power = reduce(power * xx, c.rels);
        factorial *= (QRat(1) - mu.pow(m)) / (QRat(1) - mu);
        QRat g_m = alpha.pow(m) / factorial;
        for (int i = 1; i <= c.n; ++i) {
            NCPoly lhs = g_m * act_c(c, i, power);
            NCPoly rhs = big_k * g_prev * reduce(NCPoly::generator(i) * power, c.rels);
            if (lhs != rhs) {
                r = VerificationReport::fail("gaussian", "graded mismatch at order " + std::to_string(m) +
                                                             ", i=" + std::to_string(i));
                break;
            }
        }
        g_prev = g_m;
    }
    r.params["order"] = std::to_string(order);
    r.params["alpha"] = alpha.str();
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// The full generator-on-coordinate table and its q=1 limit.
struct ConformalTable {
    std::vector<std::vector<NCPoly>> q_table; // [j-1][i-1] = c_j acting on x_i
    std::vector<std::vector<std::map<Word, mpq_class, DeglexLess>>> classical;
};

namespace detail {
inline std::map<Word, mpq_class, DeglexLess> commutative_form(const std::map<Word, mpq_class, DeglexLess>& m) {
    std::map<Word, mpq_class, DeglexLess> out;
    for (const auto& [w, co] : m) {
        Word s = w;
        std::sort(s.begin(), s.end());
        out[s] += co;
        if (out[s] == 0) out.erase(s);
    }
    return out;
}
} // namespace detail

inline ConformalTable conformal_table(const ActionContext& c) {
    ConformalTable t;
    t.q_table.assign(static_cast<std::size_t>(c.n), std::vector<NCPoly>(static_cast<std::size_t>(c.n)));
    t.classical.assign(static_cast<std::size_t>(c.n), {});
    for (int j = 1; j <= c.n; ++j) {
        t.classical[static_cast<std::size_t>(j - 1)].resize(static_cast<std::size_t>(c.n));
        for (int i = 1; i <= c.n; ++i) {
            NCPoly e = act_c(c, j, NCPoly::generator(i));
            t.q_table[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = e;
            t.classical[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] =
                detail::commutative_form(e.eval_q1()); // throws on a q=1 pole
        }
    }
    return t;
}

/// Compares the q=1 limit of the table against (1/2) eta_{ij} x.x - x_i x_j.
inline VerificationReport verify_classical_limit(const ActionContext& c) {
    auto start = std::chrono::steady_clock::now();
    if (!c.metric) return VerificationReport::error("classical-limit", "no metric in context");
    VerificationReport r = VerificationReport::pass("classical-limit");
    try {
        ConformalTable t = conformal_table(c);
        NCPoly xx = metric_square(*c.metric, c.rels);
        auto xx_cl = detail::commutative_form(xx.eval_q1());
        for (int j = 1; j <= c.n && r.status == CheckStatus::Pass; ++j)
            for (int i = 1; i <= c.n; ++i) {
                mpq_class eta = c.metric->eta_lower[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]
                                    .eval_q1();
                std::map<Word, mpq_class, DeglexLess> want;
                for (const auto& [w, co] : xx_cl) {
                    mpq_class v = co * eta / 2;
                    if (v != 0) want[w] = v;
                }
                Word prod{i, j};
                std::sort(prod.begin(), prod.end());
                want[prod] -= 1;
                if (want[prod] == 0) want.erase(prod);
                if (want != t.classical[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]) {
                    r = VerificationReport::fail("classical-limit", "entry (" + std::to_string(j) + "," +
                                                                        std::to_string(i) + ") disagrees at q=1");
                    break;
                }
            }
    } catch (const std::exception& e) {
        r = VerificationReport::error("classical-limit", e.what());
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Conjugate action: degree-one closed form against the R21-inverse
/// commutator, and the braided-antipode intertwining
/// S(conjugate-action of c_i on w) = (action of c_i) on S(w).
inline VerificationReport verify_conjugate_intertwining(const ActionContext& c, int max_degree) {
    auto start = std::chrono::steady_clock::now();
    const std::string name = "conjugate-intertwining";
    VerificationReport r = VerificationReport::pass(name);
    QRat qq = QRat::q_minus_qinv();
    for (int i = 1; i <= c.n && r.status == CheckStatus::Pass; ++i)
        for (int j = 1; j <= c.n; ++j) {
            NCPoly num;
            num.add_term(Word{j, i}, QRat(1));
            for (int a = 1; a <= c.n; ++a)
                for (int b = 1; b <= c.n; ++b) num.add_term(Word{b, a}, -c.r21_inv.at(a, j, b, i));
            if (act_c_conjugate(c, i, NCPoly::generator(j)) != reduce(num, c.rels) * qq.inv()) {
                r = VerificationReport::fail(name, "degree-one conjugate formula fails at (" + std::to_string(i) +
                                                       "," + std::to_string(j) + ")");
                break;
            }
        }
    for (int d = 0; d <= max_degree && r.status == CheckStatus::Pass; ++d)
        for (const Word& w : normal_words(c.rels, d)) {
            NCPoly wp(w);
            bool ok = true;
            for (int i = 1; i <= c.n; ++i)
                if (act_c(c, i, braided_antipode(wp, c.r, c.rels)) !=
                    braided_antipode(act_c_conjugate(c, i, wp), c.r, c.rels)) {
                    r = VerificationReport::fail(name, "intertwining fails at c" + std::to_string(i) + " on " +
                                                           wp.str());
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
    r.params["degree"] = std::to_string(max_degree);
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Spinorial form of the conformal action against the tensor form on
/// every normal word up to the requested degree.
inline VerificationReport verify_spinorial(const ActionContext& c, int max_degree) {
    auto start = std::chrono::steady_clock::now();
    const std::string name = "spinorial";
    VerificationReport r = VerificationReport::pass(name);
    if (!c.small) return VerificationReport::error(name, "no spinorial gauge data in context");
    for (int d = 0; d <= max_degree && r.status == CheckStatus::Pass; ++d)
        for (const Word& w : normal_words(c.rels, d)) {
            bool ok = true;
            for (int i = 1; i <= c.n; ++i)
                if (act_c_spinorial(c, i, NCPoly(w)) != act_c(c, i, NCPoly(w))) {
                    r = VerificationReport::fail(name, "forms disagree at c" + std::to_string(i) + " on " +
                                                           NCPoly(w).str());
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
    r.params["degree"] = std::to_string(max_degree);
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace braidkit
