// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization: R-matrix and metric files, and machine-readable
// verification reports.  Polynomials are integer coefficient lists in
// ascending degree; rationals are {"num": [...], "den": [...]}.

#pragma once

#include "braidkit/report.hpp"
#include "braidkit/rmatrix.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

inline QPoly qpoly_from_json(const nlohmann::json& a) {
    if (!a.is_array()) throw std::runtime_error("polynomial must be an integer array");
    std::vector<mpz_class> cs;
    for (const auto& v : a) cs.emplace_back(static_cast<long>(v.get<long long>()));
    return QPoly(std::move(cs));
}

inline QRat qrat_from_json(const nlohmann::json& o) {
    QPoly num = qpoly_from_json(o.at("num"));
    QPoly den = o.contains("den") ? qpoly_from_json(o.at("den")) : QPoly(1);
    return QRat(std::move(num), std::move(den));
}

inline nlohmann::json qpoly_to_json(const QPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const mpz_class& c : p.coeffs()) {
        if (!c.fits_slong_p()) throw std::runtime_error("coefficient too large for the file format");
        a.push_back(static_cast<long long>(c.get_si()));
    }
    return a;
}

inline nlohmann::json qrat_to_json(const QRat& r) {
    return nlohmann::json{{"num", qpoly_to_json(r.num())}, {"den", qpoly_to_json(r.den())}};
}

/// Reads a single-matrix R-matrix file.  The matrix is used both as
/// the exchange matrix and as the relation matrix of the derived pair;
/// omitted entries are zero, indices are 1-based.
inline PairData pair_from_json(const nlohmann::json& j) {
    PairData pair;
    RMatrixData r;
    r.n = j.at("n").get<int>();
    if (r.n <= 0) throw std::runtime_error("n must be positive");
    r.name = j.value("name", std::string("file"));
    for (const auto& e : j.at("entries")) {
        int i = e.at("i").get<int>(), jj = e.at("j").get<int>(), k = e.at("k").get<int>(), l = e.at("l").get<int>();
        if (i < 1 || i > r.n || jj < 1 || jj > r.n || k < 1 || k > r.n || l < 1 || l > r.n)
            throw std::runtime_error("entry index out of range");
        r.set(i, jj, k, l, qrat_from_json(e));
    }
    pair.r = r;
    pair.r_prime = std::move(r);
    pair.lambda = j.contains("lambda") ? qrat_from_json(j.at("lambda")) : QRat(1);
    std::string reality = j.value("reality", std::string("none"));
    if (reality == "I") pair.reality = RealityType::TypeI;
    else if (reality == "II") pair.reality = RealityType::TypeII;
    else if (reality == "none") pair.reality = RealityType::None;
    else throw std::runtime_error("reality must be \"I\", \"II\" or \"none\"");
    if (j.contains("involution")) pair.involution = j.at("involution").get<std::vector<int>>();
    return pair;
}

inline nlohmann::json pair_to_json(const PairData& pair) {
    nlohmann::json j;
    j["n"] = pair.r.n;
    j["name"] = pair.r.name;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [idx, v] : pair.r.entries) {
        nlohmann::json e = qrat_to_json(v);
        e["i"] = idx[0];
        e["j"] = idx[1];
        e["k"] = idx[2];
        e["l"] = idx[3];
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    j["lambda"] = qrat_to_json(pair.lambda);
    j["reality"] = pair.reality == RealityType::TypeI ? "I" : pair.reality == RealityType::TypeII ? "II" : "none";
    if (!pair.involution.empty()) j["involution"] = pair.involution;
    return j;
}

inline MetricData metric_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    const auto& rows = j.at("eta_lower");
    if (static_cast<int>(rows.size()) != n) throw std::runtime_error("eta_lower must have n rows");
    std::vector<std::vector<QRat>> lower;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw std::runtime_error("eta_lower must have n columns");
        std::vector<QRat> out;
        for (const auto& v : row) out.push_back(qrat_from_json(v));
        lower.push_back(std::move(out));
    }
    return metric_from_lower(n, std::move(lower));
}

inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline PairData load_pair(const std::string& path) { return pair_from_json(parse_json_file(path)); }
inline MetricData load_metric(const std::string& path) { return metric_from_json(parse_json_file(path)); }

/// Schema-stable report record: {check, status, witness?, millis, params}.
inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["check"] = r.name;
    j["status"] = r.status_str();
    if (!r.witness.empty()) j["witness"] = r.witness;
    j["millis"] = r.millis;
    j["params"] = r.params;
    return j;
}

inline nlohmann::json bundle_to_json(const ReportBundle& b) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : b) a.push_back(report_to_json(r));
    return a;
}

inline std::string render_report(const VerificationReport& r) {
    std::string line = "[" + r.status_str() + "] " + r.name;
    for (const auto& [k, v] : r.params) line += " " + k + "=" + v;
    line += " (" + std::to_string(r.millis) + " ms)";
    if (!r.witness.empty()) line += "\n    " + r.witness;
    return line;
}

} // namespace braidkit
