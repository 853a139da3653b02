// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0

#include "braidkit/actions.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace braidkit;

namespace {

const ActionContext& euclidean_ctx() {
    static ActionContext ctx = [] {
        RMatrixData su2 = standard_su2();
        PairData pair = build_euclidean_gauge(su2);
        pair.metric = find_metric(pair);
        return make_context(pair, su2);
    }();
    return ctx;
}

NCPoly parse_reduced(const ActionContext& c, const std::string& s) { return reduce(parse_ncpoly(s), c.rels); }

} // namespace

TEST_CASE("momentum generators act as braided partial derivatives") {
    const ActionContext& c = euclidean_ctx();
    CHECK(act_p(c, 1, NCPoly::generator(1)) == -NCPoly::one());
    for (int i = 1; i <= 4; ++i) {
        CHECK(act_p(c, i, NCPoly::one()).is_zero());
        for (int j = 1; j <= 4; ++j)
            CHECK(act_p(c, i, NCPoly::generator(j)) == (i == j ? -NCPoly::one() : NCPoly()));
    }
}

TEST_CASE("momentum product rule uses the R21-inverse crossing") {
    const ActionContext& c = euclidean_ctx();
    for (int i = 1; i <= 4; ++i)
        for (int k = 1; k <= 4; ++k)
            for (int j = 1; j <= 4; ++j) {
                NCPoly got = act_p(c, i, reduce(NCPoly(Word{k, j}), c.rels));
                NCPoly want;
                if (i == k) want -= NCPoly::generator(j);
                for (int a = 1; a <= 4; ++a) want.add_term(Word{a}, -c.r_inv.at(i, j, a, k));
                CHECK(got == reduce(want, c.rels));
            }
}

TEST_CASE("rotation and dilation actions on generators and constants") {
    const ActionContext& c = euclidean_ctx();
    CHECK(act_varsigma(c, +1, NCPoly::one()) == NCPoly::one());
    CHECK(act_varsigma(c, -1, NCPoly::one()) == NCPoly::one());
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            QRat delta = i == j ? QRat(1) : QRat();
            CHECK(act_l(c, +1, i, j, NCPoly::one()) == NCPoly::one() * delta);
            CHECK(act_l(c, -1, i, j, NCPoly::one()) == NCPoly::one() * delta);
            for (int k = 1; k <= 4; ++k) {
                NCPoly plus_want, minus_want;
                for (int a = 1; a <= 4; ++a) {
                    plus_want.add_term(Word{a}, c.lambda * c.r.at(a, k, i, j));
                    minus_want.add_term(Word{a}, c.lambda.inv() * c.r_inv.at(i, j, a, k));
                }
                CHECK(act_l(c, +1, i, j, NCPoly::generator(k)) == reduce(plus_want, c.rels));
                CHECK(act_l(c, -1, i, j, NCPoly::generator(k)) == reduce(minus_want, c.rels));
            }
        }
}

TEST_CASE("dilation scales each degree by a power of lambda") {
    const ActionContext& c = euclidean_ctx();
    for (int d = 0; d <= 4; ++d)
        for (const Word& w : normal_words(c.rels, d)) {
            CHECK(act_varsigma(c, +1, NCPoly(w)) == NCPoly(w) * c.lambda.pow(d));
            CHECK(act_varsigma(c, -1, NCPoly(w)) == NCPoly(w) * c.lambda.pow(-d));
        }
}

TEST_CASE("conformal generator action: R-commutator on coordinates") {
    const ActionContext& c = euclidean_ctx();
    QRat qq = QRat::q_minus_qinv();
    for (int i = 1; i <= 4; ++i) {
        CHECK(act_c(c, i, NCPoly::one()).is_zero());
        for (int j = 1; j <= 4; ++j) {
            NCPoly num;
            num.add_term(Word{j, i}, QRat(1));
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b) num.add_term(Word{b, a}, -c.r.at(a, j, b, i));
            CHECK(act_c(c, i, NCPoly::generator(j)) == reduce(num, c.rels) * qq.inv());
        }
    }
}

TEST_CASE("conformal action table on the standard coordinates") {
    const ActionContext& c = euclidean_ctx();
    // Rows index the acting generator, columns the coordinate.
    const char* golden[4][4] = {
        {"(-q)*x1.x1", "(-q^2)*x1.x2", "(-1)*x1.x3", "(-1)*x2.x3"},
        {"(-q)*x1.x2", "(-q)*x2.x2", "(-1)*x1.x4", "(-1)*x2.x4"},
        {"(-q)*x1.x3", "(-1)*x1.x4 + (-q+q^-1)*x2.x3", "(-q)*x3.x3", "(-q^2)*x3.x4"},
        {"(-1)*x2.x3", "(-q)*x2.x4", "(-q)*x3.x4", "(-q)*x4.x4"},
    };
    int matches = 0;
    for (int j = 1; j <= 4; ++j)
        for (int i = 1; i <= 4; ++i) {
            NCPoly got = act_c(c, j, NCPoly::generator(i));
            if (got == parse_reduced(c, golden[j - 1][i - 1])) ++matches;
        }
    CHECK(matches == 16);
}

TEST_CASE("closed formula and right-derivation recursion agree") {
    const ActionContext& c = euclidean_ctx();
    for (int d = 0; d <= 3; ++d)
        for (const Word& w : normal_words(c.rels, d))
            for (int i = 1; i <= 4; ++i)
                CHECK(detail::act_c_closed(c, c.r, i, w) == detail::act_c_rec(c, c.r, i, w));
}

TEST_CASE("broken braiding data trips the divisibility guard") {
    ActionContext bad = euclidean_ctx();
    bad.r.set(1, 1, 1, 1, bad.r.at(1, 1, 1, 1) + QRat(1));
    CHECK_THROWS_WITH(detail::act_c_closed(bad, bad.r, 1, Word{1}), "braided integer not divisible");
}

TEST_CASE("conjugate action and antipode intertwining") {
    const ActionContext& c = euclidean_ctx();
    QRat qq = QRat::q_minus_qinv();
    for (int i = 1; i <= 4; ++i) {
        CHECK(act_c_conjugate(c, i, NCPoly::one()).is_zero());
        for (int j = 1; j <= 4; ++j) {
            NCPoly num;
            num.add_term(Word{j, i}, QRat(1));
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b) num.add_term(Word{b, a}, -c.r21_inv.at(a, j, b, i));
            CHECK(act_c_conjugate(c, i, NCPoly::generator(j)) == reduce(num, c.rels) * qq.inv());
            // degree 1: S(x_j) = -x_j, so the two actions differ by a sign
            CHECK(act_c(c, i, -NCPoly::generator(j)) ==
                  braided_antipode(act_c_conjugate(c, i, NCPoly::generator(j)), c.r, c.rels));
        }
    }
    for (int d = 0; d <= 3; ++d)
        for (const Word& w : normal_words(c.rels, d)) {
            NCPoly wp(w);
            for (int i = 1; i <= 4; ++i)
                CHECK(act_c(c, i, braided_antipode(wp, c.r, c.rels)) ==
                      braided_antipode(act_c_conjugate(c, i, wp), c.r, c.rels));
        }
}

TEST_CASE("spinorial form of the conformal action matches the tensor form") {
    const ActionContext& c = euclidean_ctx();
    for (int i = 1; i <= 4; ++i) {
        CHECK(act_c_spinorial(c, i, NCPoly::one()).is_zero());
        for (int j = 1; j <= 4; ++j)
            CHECK(act_c_spinorial(c, i, NCPoly::generator(j)) == act_c(c, i, NCPoly::generator(j)));
    }
    for (const Word& w : normal_words(c.rels, 2))
        for (int i = 1; i <= 4; ++i) CHECK(act_c_spinorial(c, i, NCPoly(w)) == act_c(c, i, NCPoly(w)));
}

TEST_CASE("spinorial action refuses a non-Hecke base matrix") {
    ActionContext bad = euclidean_ctx();
    bad.small = identity_rmatrix(2);
    CHECK_THROWS_WITH(act_c_spinorial(bad, 1, NCPoly::generator(1)), "small R is not q-Hecke");
}

TEST_CASE("operator cross relations hold on all low-degree words") {
    VerificationReport r = verify_cross_relations(euclidean_ctx(), 3);
    INFO(r.witness);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.params.at("degree") == "3");
}

TEST_CASE("cross relations detect a broken braiding matrix") {
    ActionContext bad = euclidean_ctx();
    bad.r_inv.set(1, 1, 1, 1, bad.r_inv.at(1, 1, 1, 1) + QRat(1));
    VerificationReport r = verify_cross_relations(bad, 1);
    CHECK(r.status == CheckStatus::Fail);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("quadratic central element scales under the conformal action") {
    const ActionContext& c = euclidean_ctx();
    VerificationReport r = verify_metric_scaling(c, 3);
    INFO(r.witness);
    CHECK(r.status == CheckStatus::Pass);
    for (int m = 1; m <= 3; ++m) {
        QRat coeff = (QRat(1) - c.lambda.pow(-2 * m)) / QRat::q_minus_qinv();
        if (m == 1) CHECK(coeff == QRat(-1) * QRat::q());
        CHECK(coeff.eval_q1() == mpq_class(-m));
    }
}

TEST_CASE("gaussian element is preserved up to the stated factor") {
    VerificationReport r = verify_gaussian(euclidean_ctx(), 3);
    INFO(r.witness);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.params.at("alpha") == "(-q^2)/(q^2+1)");
    QRat alpha = QRat(QPoly(std::vector<mpz_class>{0, 0, -1}), QPoly(std::vector<mpz_class>{1, 0, 1}));
    CHECK(alpha.eval_q1() == mpq_class(-1, 2));
}

TEST_CASE("classical limit of the conformal table") {
    const ActionContext& c = euclidean_ctx();
    VerificationReport r = verify_classical_limit(c);
    INFO(r.witness);
    CHECK(r.status == CheckStatus::Pass);

    ConformalTable t = conformal_table(c);
    // (1,1): -x1^2 both before and at q=1
    auto& e11 = t.classical[0][0];
    REQUIRE(e11.size() == 1);
    CHECK(e11.at(Word{1, 1}) == mpq_class(-1));
    // (3,2): -x1.x4 - (q-q^-1)x2.x3 collapses to -x1.x4 at q=1
    auto& e32 = t.classical[2][1];
    REQUIRE(e32.size() == 1);
    CHECK(e32.at(Word{1, 4}) == mpq_class(-1));
    // every q-table coefficient is pole-free at q=1
    for (const auto& row : t.q_table)
        for (const NCPoly& e : row)
            for (const auto& [w, co] : e.terms()) CHECK_FALSE(co.has_pole_q1());
}

TEST_CASE("classical table symmetry at q=1") {
    const ActionContext& c = euclidean_ctx();
    ConformalTable t = conformal_table(c);
    // at q=1 the commutative entries obey entry(j,i) = entry(i,j)
    for (int j = 1; j <= 4; ++j)
        for (int i = 1; i <= 4; ++i) CHECK(t.classical[j - 1][i - 1] == t.classical[i - 1][j - 1]);
}

TEST_CASE("operator tables have matching graded dimensions") {
    const ActionContext& c = euclidean_ctx();
    std::vector<std::size_t> counts;
    for (int d = 0; d <= 4; ++d) counts.push_back(normal_words(c.rels, d).size());
    CHECK(counts == std::vector<std::size_t>{1, 4, 10, 20, 35});

    OperatorTable tp = operator_table(c, {GeneratorAction::Kind::P, 1, 0, 1}, 3);
    OperatorTable tc = operator_table(c, {GeneratorAction::Kind::C, 1, 0, 1}, 3);
    OperatorTable tl = operator_table(c, {GeneratorAction::Kind::Lplus, 1, 2, 1}, 3);
    for (int d = 0; d <= 3; ++d) {
        std::size_t dim = counts[static_cast<std::size_t>(d)];
        CHECK(tp.matrices[static_cast<std::size_t>(d)].size() == (d == 0 ? 0 : counts[static_cast<std::size_t>(d - 1)]));
        CHECK(tc.matrices[static_cast<std::size_t>(d)].size() == counts[static_cast<std::size_t>(d + 1)]);
        CHECK(tl.matrices[static_cast<std::size_t>(d)].size() == dim);
        for (const auto& row : tc.matrices[static_cast<std::size_t>(d)]) CHECK(row.size() == dim);
    }
}

TEST_CASE("momentum-conformal commutator realizes the rotation sector") {
    const ActionContext& c = euclidean_ctx();
    QRat qq = QRat::q_minus_qinv();
    for (int d = 0; d <= 2; ++d)
        for (const Word& w : normal_words(c.rels, d)) {
            NCPoly wp(w);
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j) {
                    NCPoly lhs = act_p(c, i, act_c(c, j, wp)) - act_c(c, j, act_p(c, i, wp));
                    NCPoly rhs = (act_l(c, +1, i, j, act_varsigma(c, -1, wp)) -
                                  act_l(c, -1, i, j, act_varsigma(c, +1, wp))) *
                                 qq.inv();
                    CHECK(lhs == rhs);
                }
        }
}
