// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Embedded golden data for the standard four-dimensional Euclidean
// example: the conformal generator table on coordinates and the
// defining relations of the coordinate algebra, in NCPoly text form.

#pragma once

#include "braidkit/actions.hpp"

#include <array>
#include <string>

namespace braidkit {

/// c_j acting on x_i for the su2-euclidean preset; rows indexed by the
/// generator j, columns by the coordinate i.
inline const std::array<std::array<const char*, 4>, 4>& golden_conformal_table() {
    static const std::array<std::array<const char*, 4>, 4> table = {{
        {"(-q)*x1.x1", "(-q^2)*x1.x2", "(-1)*x1.x3", "(-1)*x2.x3"},
        {"(-q)*x1.x2", "(-q)*x2.x2", "(-1)*x1.x4", "(-1)*x2.x4"},
        {"(-q)*x1.x3", "(-1)*x1.x4 + (-q+q^-1)*x2.x3", "(-q)*x3.x3", "(-q^2)*x3.x4"},
        {"(-1)*x2.x3", "(-q)*x2.x4", "(-q)*x3.x4", "(-q)*x4.x4"},
    }};
    return table;
}

/// Left-minus-right form of the six coordinate relations for the
/// su2-euclidean preset; each entry reduces to zero.
inline const std::array<const char*, 6>& golden_spacetime_relations() {
    static const std::array<const char*, 6> rels = {
        "x2.x1 + (-q)*x1.x2",
        "x3.x1 + (-q^-1)*x1.x3",
        "x3.x2 + (-1)*x2.x3 + (q-q^-1)*x1.x4",
        "x4.x1 + (-1)*x1.x4",
        "x4.x2 + (-q^-1)*x2.x4",
        "x4.x3 + (-q)*x3.x4",
    };
    return rels;
}

/// Compares the computed conformal generator table entrywise against
/// the embedded golden strings.
inline VerificationReport verify_golden_table(const ActionContext& c) {
    auto start = std::chrono::steady_clock::now();
    const std::string name = "golden-table";
    VerificationReport r = VerificationReport::pass(name);
    if (c.n != 4) return VerificationReport::error(name, "golden table is for the n=4 Euclidean preset");
    const auto& table = golden_conformal_table();
    int matched = 0;
    for (int j = 1; j <= 4 && r.status == CheckStatus::Pass; ++j)
        for (int i = 1; i <= 4; ++i) {
            NCPoly got = act_c(c, j, NCPoly::generator(i));
            NCPoly want = reduce(parse_ncpoly(table[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]),
                                 c.rels);
            if (got != want) {
                r = VerificationReport::fail(name, "entry (" + std::to_string(j) + "," + std::to_string(i) +
                                                       "): got " + got.str() + ", want " + want.str());
                break;
            }
            ++matched;
        }
    r.params["matched"] = std::to_string(matched) + "/16";
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Checks that each embedded coordinate relation reduces to zero and
/// that the relation space has exactly these six pivots.
inline VerificationReport verify_golden_relations(const ActionContext& c) {
    auto start = std::chrono::steady_clock::now();
    const std::string name = "golden-relations";
    VerificationReport r = VerificationReport::pass(name);
    if (c.n != 4) return VerificationReport::error(name, "golden relations are for the n=4 Euclidean preset");
    for (const char* s : golden_spacetime_relations()) {
        NCPoly res = reduce(parse_ncpoly(s), c.rels);
        if (!res.is_zero()) {
            r = VerificationReport::fail(name, std::string(s) + " reduces to " + res.str());
            break;
        }
    }
    if (r.status == CheckStatus::Pass && c.rels.dimension() != 6)
        r = VerificationReport::fail(name, "relation space dimension " + std::to_string(c.rels.dimension()) +
                                               ", expected 6");
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace braidkit
