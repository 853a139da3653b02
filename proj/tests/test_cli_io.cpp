// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0

#include "braidkit/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace braidkit;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

struct Capture {
    std::ostringstream out, err;
};

} // namespace

TEST_CASE("polynomial and rational coefficients round-trip through json") {
    QRat r = (QRat::q_pow(2) - QRat(1)) / (QRat::q() + QRat(3));
    json j = qrat_to_json(r);
    CHECK(qrat_from_json(j) == r);

    CHECK(qrat_from_json(json{{"num", {7}}}) == QRat(7));
    CHECK(qrat_from_json(json{{"num", {0, 1}}, {"den", {1}}}) == QRat::q());

    QPoly p(std::vector<mpz_class>{-2, 0, 5});
    CHECK(qpoly_from_json(qpoly_to_json(p)).str() == p.str());

    CHECK_THROWS(qpoly_from_json(json{{"not", "an array"}}));
}

TEST_CASE("r-matrix files round-trip") {
    PairData pair = build_euclidean_gauge(standard_su2());
    json j = pair_to_json(pair);
    PairData back = pair_from_json(j);
    CHECK(back.r.n == pair.r.n);
    CHECK(back.r.entries == pair.r.entries);
    CHECK(back.r_prime.entries == pair.r.entries);
    CHECK(back.lambda == pair.lambda);
    CHECK(back.reality == RealityType::TypeI);

    SECTION("validation failures") {
        json bad = j;
        bad["reality"] = "III";
        CHECK_THROWS_WITH(pair_from_json(bad), Catch::Matchers::ContainsSubstring("reality"));
        bad = j;
        bad["entries"][0]["i"] = 9;
        CHECK_THROWS_WITH(pair_from_json(bad), Catch::Matchers::ContainsSubstring("out of range"));
        bad = j;
        bad["n"] = 0;
        CHECK_THROWS(pair_from_json(bad));
    }
}

TEST_CASE("metric files load through the lower matrix") {
    json j;
    j["n"] = 2;
    j["eta_lower"] = json::array();
    j["eta_lower"].push_back({qrat_to_json(QRat(0)), qrat_to_json(QRat(1))});
    j["eta_lower"].push_back({qrat_to_json(QRat::q()), qrat_to_json(QRat(0))});
    MetricData m = metric_from_json(j);
    CHECK(m.eta_lower[0][1] == QRat(1));
    CHECK(m.eta_upper[0][1] == QRat(1));
    CHECK(m.eta_upper[1][0] == QRat::q_inv());

    j["eta_lower"][0] = {qrat_to_json(QRat(1))};
    CHECK_THROWS_WITH(metric_from_json(j), Catch::Matchers::ContainsSubstring("columns"));
}

TEST_CASE("missing or malformed files raise readable errors") {
    CHECK_THROWS_WITH(parse_json_file("/tmp/no-such-braidkit-file.json"),
                      Catch::Matchers::ContainsSubstring("cannot open"));
    std::string path = write_temp("braidkit_bad.json", "{ not json");
    CHECK_THROWS_WITH(parse_json_file(path), Catch::Matchers::ContainsSubstring("braidkit_bad.json"));
}

TEST_CASE("report records serialize with a stable schema") {
    VerificationReport r = VerificationReport::fail("demo", "first mismatch at x1");
    r.millis = 7;
    r.params["degree"] = "3";
    json j = report_to_json(r);
    CHECK(j.at("check") == "demo");
    CHECK(j.at("status") == "fail");
    CHECK(j.at("witness") == "first mismatch at x1");
    CHECK(j.at("millis") == 7);
    CHECK(j.at("params").at("degree") == "3");

    std::string line = render_report(r);
    CHECK(line.find("[fail] demo degree=3 (7 ms)") == 0);
    CHECK(line.find("first mismatch at x1") != std::string::npos);

    VerificationReport ok = VerificationReport::pass("demo");
    CHECK_FALSE(report_to_json(ok).contains("witness"));
}

TEST_CASE("generator specs parse or are rejected") {
    GeneratorAction g = detail::parse_generator("p3");
    CHECK(g.kind == GeneratorAction::Kind::P);
    CHECK(g.i == 3);
    g = detail::parse_generator("c12");
    CHECK(g.kind == GeneratorAction::Kind::C);
    CHECK(g.i == 12);
    g = detail::parse_generator("l+1_2");
    CHECK(g.kind == GeneratorAction::Kind::Lplus);
    CHECK(g.i == 1);
    CHECK(g.j == 2);
    g = detail::parse_generator("l-4_3");
    CHECK(g.kind == GeneratorAction::Kind::Lminus);
    CHECK(g.i == 4);
    CHECK(g.j == 3);
    CHECK(detail::parse_generator("sig").power == 1);
    CHECK(detail::parse_generator("sig^-1").power == -1);

    for (const char* bad : {"", "p", "q1", "p1x", "l1_2", "l+12", "sig^2", "c"})
        CHECK_THROWS_WITH(detail::parse_generator(bad), Catch::Matchers::ContainsSubstring("bad generator spec"));
}

TEST_CASE("check command exit codes") {
    Capture cap;
    CliOptions o;
    CHECK(cmd_check(o, cap.out, cap.err) == 0);
    CHECK(cap.out.str().find("[pass] ybe:") != std::string::npos);

    SECTION("a non-Hecke input is a verified failure") {
        CliOptions id;
        id.preset = "identity";
        Capture c2;
        CHECK(cmd_check(id, c2.out, c2.err) == 1);
        CHECK(c2.out.str().find("[fail] hecke:") != std::string::npos);
    }

    SECTION("unknown preset is a usage error") {
        CliOptions bad;
        bad.preset = "nope";
        Capture c2;
        CHECK(cmd_check(bad, c2.out, c2.err) == 2);
        CHECK(c2.err.str().find("unknown preset") != std::string::npos);
    }

    SECTION("json output is a parseable array of records") {
        CliOptions jo;
        jo.json = true;
        Capture c2;
        CHECK(cmd_check(jo, c2.out, c2.err) == 0);
        json arr = json::parse(c2.out.str());
        REQUIRE(arr.is_array());
        REQUIRE(!arr.empty());
        for (const auto& rec : arr) {
            CHECK(rec.contains("check"));
            CHECK(rec.contains("status"));
            CHECK(rec.contains("millis"));
            CHECK(rec.contains("params"));
        }
    }
}

TEST_CASE("check command accepts an r-matrix file") {
    PairData pair;
    pair.r = standard_su2();
    pair.r_prime = pair.r;
    pair.lambda = QRat(1);
    std::string path = write_temp("braidkit_pair.json", pair_to_json(pair).dump());
    CliOptions o;
    o.rmatrix_file = path;
    Capture cap;
    CHECK(cmd_check(o, cap.out, cap.err) == 0);
    std::remove(path.c_str());
}

TEST_CASE("act command renders reduced results") {
    auto run = [](const CliOptions& o, const std::string& g, const std::string& m) {
        Capture cap;
        int code = cmd_act(o, g, m, cap.out, cap.err);
        return std::pair<int, std::string>(code, code == 0 ? cap.out.str() : cap.err.str());
    };
    CliOptions o;
    CHECK(run(o, "c1", "x1") == std::pair<int, std::string>(0, "(-q)*x1.x1\n"));
    CHECK(run(o, "p1", "x1") == std::pair<int, std::string>(0, "(-1)\n"));
    CHECK(run(o, "c1", "1") == std::pair<int, std::string>(0, "0\n"));
    CHECK(run(o, "sig", "x2").second == "(q^-1)*x2\n");

    CliOptions q1 = o;
    q1.q1 = true;
    CHECK(run(q1, "c1", "x1").second == "(-1)*x1.x1\n");

    CliOptions conj = o;
    conj.conjugate = true;
    CHECK(run(conj, "c1", "x1").second == "(q^-1)*x1.x1\n");

    CHECK(run(o, "q9", "x1").first == 2);
    CHECK(run(o, "p1", "x1 +").first == 2);
    CliOptions both = o;
    both.conjugate = both.spinorial = true;
    CHECK(run(both, "c1", "x1").first == 2);
}

TEST_CASE("verify command runs the small suites") {
    CliOptions o;
    for (const char* suite : {"metric", "gaussian", "classical-limit"}) {
        Capture cap;
        CHECK(cmd_verify(o, suite, cap.out, cap.err) == 0);
        CHECK(cap.out.str().find("[pass]") != std::string::npos);
    }

    Capture cap;
    CHECK(cmd_verify(o, "no-such-suite", cap.out, cap.err) == 2);
    CHECK(cap.err.str().find("unknown suite") != std::string::npos);
}
