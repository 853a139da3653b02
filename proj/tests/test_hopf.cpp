// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0

#include "braidkit/hopf.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace braidkit;

namespace {

const HopfContext& euclidean_hopf() {
    static HopfContext h = [] {
        RMatrixData su2 = standard_su2();
        PairData pair = build_euclidean_gauge(su2);
        pair.metric = find_metric(pair);
        return make_hopf(make_context(pair, su2));
    }();
    return h;
}

std::vector<UGen> sample_generators(int n) {
    std::vector<UGen> gs;
    for (int i = 1; i <= n; ++i) {
        gs.push_back(u_p(i));
        gs.push_back(u_c(i));
    }
    gs.push_back(u_lp(1, 2));
    gs.push_back(u_lp(3, 3));
    gs.push_back(u_lm(2, 1));
    gs.push_back(u_lm(4, 4));
    gs.push_back(u_sig());
    gs.push_back(u_sig_inv());
    return gs;
}

} // namespace

TEST_CASE("word canonicalization pulls dilaton letters left and cancels inverses") {
    UWord w{u_lp(1, 2), u_sig(), u_p(1)};
    CHECK(canonicalize(w) == UWord{u_sig(), u_lp(1, 2), u_p(1)});
    UWord cancel{u_sig(), u_sig_inv(), u_c(3)};
    CHECK(canonicalize(cancel) == UWord{u_c(3)});
    UWord nested{u_lm(1, 1), u_sig_inv(), u_lp(2, 2), u_sig()};
    CHECK(canonicalize(nested) == UWord{u_lm(1, 1), u_lp(2, 2)});
}

TEST_CASE("counit axioms on generator coproducts") {
    const HopfContext& h = euclidean_hopf();
    for (const UGen& g : sample_generators(h.ctx.n)) {
        UElement left, right, expect;
        expect.add_term(UWord{g}, QRat(1));
        UTensor cop = coproduct(h, g);
        for (const auto& [legs, co] : cop.terms()) {
            left.add_term(legs.second, co * counit(legs.first));
            right.add_term(legs.first, co * counit(legs.second));
        }
        CHECK(left == expect);
        CHECK(right == expect);
    }
}

TEST_CASE("coassociativity on generator coproducts") {
    const HopfContext& h = euclidean_hopf();
    using Triple = std::map<std::tuple<UWord, UWord, UWord>, QRat>;
    for (const UGen& g : sample_generators(h.ctx.n)) {
        Triple lhs, rhs;
        UTensor cop = coproduct(h, g);
        for (const auto& [legs, co] : cop.terms()) {
            UTensor left_cop = coproduct(h, legs.first);
            UTensor right_cop = coproduct(h, legs.second);
            for (const auto& [inner, ci] : left_cop.terms()) {
                QRat& s = lhs[{inner.first, inner.second, legs.second}];
                s += co * ci;
                if (s.is_zero()) lhs.erase({inner.first, inner.second, legs.second});
            }
            for (const auto& [inner, ci] : right_cop.terms()) {
                QRat& s = rhs[{legs.first, inner.first, inner.second}];
                s += co * ci;
                if (s.is_zero()) rhs.erase({legs.first, inner.first, inner.second});
            }
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("antipode axiom holds operationally on every generator") {
    const HopfContext& h = euclidean_hopf();
    for (const UGen& g : sample_generators(h.ctx.n)) {
        UElement folded;
        UTensor cop = coproduct(h, g);
        for (const auto& [legs, co] : cop.terms())
            folded += co * (antipode(h, legs.first) * UElement(legs.second));
        QRat eps = counit(g);
        for (int d = 0; d <= 2; ++d)
            for (const Word& w : h.basis(d)) CHECK(act_U(h, folded, NCPoly(w)) == NCPoly(w) * eps);
    }
}

TEST_CASE("rotation antipode markers invert the fundamental action degreewise") {
    const HopfContext& h = euclidean_hopf();
    for (int d = 1; d <= 2; ++d)
        for (const Word& w : h.basis(d))
            for (int i = 1; i <= h.ctx.n; ++i) {
                NCPoly acc_p, acc_m;
                for (int a = 1; a <= h.ctx.n; ++a) {
                    acc_p += act_rotation_antipode(h, +1, i, a, act_l(h.ctx, +1, a, i, NCPoly(w)));
                    acc_m += act_rotation_antipode(h, -1, i, a, act_l(h.ctx, -1, a, i, NCPoly(w)));
                }
                CHECK(acc_p == NCPoly(w));
                CHECK(acc_m == NCPoly(w));
            }
}

TEST_CASE("enveloping algebra relations hold as operators") {
    const HopfContext& h = euclidean_hopf();
    VerificationReport r = verify_algebra_relations(h, 2);
    INFO(r.witness);
    CHECK(r.passed());
}

TEST_CASE("module-algebra law for representative generators") {
    const HopfContext& h = euclidean_hopf();
    for (const UGen& g : {u_p(1), u_c(2), u_lp(1, 2), u_sig()}) {
        VerificationReport r = verify_module_algebra(h, g, 3);
        INFO(r.name << ": " << r.witness);
        CHECK(r.passed());
    }
}

TEST_CASE("star is involutive and antimultiplicative on formal elements") {
    const HopfContext& h = euclidean_hopf();
    StarContext s = make_star(h.ctx.pair);
    REQUIRE(s.reality == RealityType::TypeI);
    int n = h.ctx.n;
    for (const UGen& g : sample_generators(n)) {
        UElement u(UWord{g});
        CHECK(star_map(s, star_map(s, u, n), n) == u);
    }
    UElement a(UWord{u_p(1), u_c(2)});
    UElement b(UWord{u_lp(1, 2), u_sig()});
    CHECK(star_map(s, a * b, n) == star_map(s, b, n) * star_map(s, a, n));
}

TEST_CASE("star on coordinates is involutive and preserves the relations") {
    const HopfContext& h = euclidean_hopf();
    StarContext s = make_star(h.ctx.pair);
    for (int d = 0; d <= 3; ++d)
        for (const Word& w : h.basis(d)) {
            NCPoly p(w);
            CHECK(star_map(s, star_map(s, p, h.ctx.rels), h.ctx.rels) == p);
        }
    // antimultiplicative on coordinates: compare against reversed products
    for (int i = 1; i <= h.ctx.n; ++i)
        for (int j = 1; j <= h.ctx.n; ++j) {
            NCPoly lhs = star_map(s, reduce(NCPoly(Word{i, j}), h.ctx.rels), h.ctx.rels);
            NCPoly rhs = reduce(star_map(s, NCPoly(Word{j}), h.ctx.rels) * star_map(s, NCPoly(Word{i}), h.ctx.rels),
                                h.ctx.rels);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("pairing of degree-one words is the scaled Kronecker delta") {
    const HopfContext& h = euclidean_hopf();
    QRat scale = QRat::q_minus_qinv().inv();
    for (int i = 1; i <= h.ctx.n; ++i)
        for (int j = 1; j <= h.ctx.n; ++j)
            CHECK(pairing(h, Word{i}, Word{j}) == (i == j ? scale : QRat()));
    CHECK(pairing(h, Word{}, Word{}) == QRat(1));
    CHECK(pairing(h, Word{1}, Word{1, 1}).is_zero());
}

TEST_CASE("truncated canonical element: dual legs and convolution inverse") {
    const HopfContext& h = euclidean_hopf();
    BraidedExp be = braided_exp_truncated(h, 2);
    QRat qq = QRat::q_minus_qinv();
    for (int j = 1; j <= h.ctx.n; ++j) {
        auto it = be.exp.terms().find({UWord{u_c(j)}, UWord{u_p(j)}});
        REQUIRE(it != be.exp.terms().end());
        CHECK(it->second == qq);
    }
    for (int da = 0; da <= 2; ++da)
        for (int db = 0; da + db <= 2; ++db)
            for (const Word& wa : h.basis(da))
                for (const Word& wb : h.basis(db)) {
                    TensorTerms st;
                    tensor_add(st, wa, wb, QRat(1));
                    CHECK(apply_tensor(h, be.exp_inv, apply_tensor(h, be.exp, st)) == st);
                }
}

TEST_CASE("conjugated coproduct identity, symbolic and operational") {
    const HopfContext& h = euclidean_hopf();
    VerificationReport r = verify_conjugation_identity(h, 2);
    INFO(r.witness);
    CHECK(r.passed());
}
