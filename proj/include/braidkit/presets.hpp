// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Built-in R-matrix pairs: the two spinorial gauges of the standard
// su2 matrix plus two degenerate baselines.

#pragma once

#include "braidkit/metric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

struct Preset {
    std::string name;
    PairData pair;
    std::optional<RMatrixData> small;
};

inline std::vector<std::string> preset_names() {
    return {"su2-euclidean", "su2-minkowski", "identity", "permutation"};
}

inline Preset make_preset(const std::string& name) {
    Preset p;
    p.name = name;
    if (name == "su2-euclidean") {
        p.small = standard_su2();
        p.pair = build_euclidean_gauge(*p.small);
        p.pair.metric = find_metric(p.pair);
        return p;
    }
    if (name == "su2-minkowski") {
        p.small = standard_su2();
        p.pair = build_minkowski_gauge(*p.small);
        p.pair.metric = find_metric(p.pair);
        return p;
    }
    if (name == "identity") {
        p.pair.r = identity_rmatrix(2);
        p.pair.r_prime = p.pair.r;
        p.pair.lambda = QRat(1);
        return p;
    }
    if (name == "permutation") {
        p.pair.r = permutation_rmatrix(2);
        p.pair.r_prime = p.pair.r;
        p.pair.lambda = QRat(1);
        return p;
    }
    throw std::runtime_error("unknown preset: " + name);
}

} // namespace braidkit
