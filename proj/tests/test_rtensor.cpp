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

#include "braidkit/rmatrix.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace braidkit;

TEST_CASE("yang-baxter check") {
    CHECK(check_ybe(identity_rmatrix(2)).passed());
    CHECK(check_ybe(permutation_rmatrix(2)).passed());
    CHECK(check_ybe(standard_su2()).passed());

    RMatrixData broken = standard_su2();
    broken.set(1, 2, 2, 1, QRat(1));
    VerificationReport r = check_ybe(broken);
    CHECK(r.status == CheckStatus::Fail);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("hecke check") {
    CHECK(check_hecke(standard_su2()).passed());
    CHECK(check_hecke(identity_rmatrix(2)).status == CheckStatus::Fail);

    RMatrixData qid = identity_rmatrix(2);
    for (auto& [idx, v] : qid.entries) v *= QRat::q();
    CHECK(check_hecke(qid).status == CheckStatus::Fail);
}

TEST_CASE("standard su2 entries") {
    RMatrixData r = standard_su2();
    CHECK(r.n == 2);
    CHECK(r.at(1, 1, 1, 1) == QRat::q());
    CHECK(r.at(1, 1, 2, 2) == QRat(1));
    CHECK(r.at(2, 2, 1, 1) == QRat(1));
    CHECK(r.at(2, 2, 2, 2) == QRat::q());
    CHECK(r.at(1, 2, 2, 1) == QRat::q_minus_qinv());
    CHECK(r.entries.size() == 5);
}

TEST_CASE("tensor inverse") {
    RMatrixData r = standard_su2();
    SparseMat prod = r.to_matrix() * r.inverse().to_matrix();
    SparseMat residual = prod - SparseMat::identity(4);
    CHECK(residual.is_zero());
}

TEST_CASE("second inverse is an involution") {
    RMatrixData r = standard_su2();
    RMatrixData rt = second_inverse(r);
    RMatrixData back = second_inverse(rt);
    CHECK(back.entries == r.entries);
}

TEST_CASE("reality check") {
    PairData none;
    none.r = standard_su2();
    CHECK(check_reality(none).status == CheckStatus::Error);

    PairData sym;
    sym.r = identity_rmatrix(3);
    sym.reality = RealityType::TypeI;
    CHECK(check_reality(sym).passed());

    PairData bad2;
    bad2.r = standard_su2();
    bad2.reality = RealityType::TypeII;
    bad2.involution = {1, 2};
    CHECK(check_reality(bad2).status == CheckStatus::Fail);
}

TEST_CASE("euclidean gauge") {
    PairData pair = build_euclidean_gauge(standard_su2());
    CHECK(pair.n() == 4);
    CHECK(pair.lambda == QRat::q_inv());
    CHECK(check_ybe(pair.r).passed());

    SparseMat prod = pair.r_prime.to_matrix() * pair.r_prime.inverse().to_matrix();
    CHECK((prod - SparseMat::identity(16)).is_zero());

    CHECK(flatten_index(2, 1, 1) == 1);
    CHECK(flatten_index(2, 1, 2) == 2);
    CHECK(flatten_index(2, 2, 1) == 3);
    CHECK(flatten_index(2, 2, 2) == 4);

    CHECK_THROWS(build_euclidean_gauge(identity_rmatrix(2)));
}

TEST_CASE("minkowski gauge") {
    PairData pair = build_minkowski_gauge(standard_su2());
    CHECK(pair.n() == 4);
    CHECK(check_ybe(pair.r).passed());
    SparseMat prod = pair.r_prime.to_matrix() * pair.r_prime.inverse().to_matrix();
    CHECK((prod - SparseMat::identity(16)).is_zero());
}

TEST_CASE("hecke minimal polynomial of the flipped matrix") {
    RMatrixData r = standard_su2();
    SparseMat pr = permutation_matrix(2) * r.to_matrix();
    SparseMat id = SparseMat::identity(4);
    CHECK(((pr - id * QRat::q()) * (pr + id * QRat::q_inv())).is_zero());
    CHECK_FALSE((pr - id * QRat::q()).is_zero());
    CHECK_FALSE((pr + id * QRat::q_inv()).is_zero());
}
