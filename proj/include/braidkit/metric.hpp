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

#ifndef BRAIDKIT_METRIC_HPP
#define BRAIDKIT_METRIC_HPP

#include "ncalg.hpp"

#include <stdexcept>
#include <vector>

namespace braidkit {

namespace detail {
/// Nullspace basis of the sparse constraint system (rows over columns
/// 0..ncols-1), via reduced row echelon form.
inline std::vector<std::vector<QRat>> nullspace(std::vector<std::map<int, QRat>> rows, int ncols) {
    std::map<int, std::map<int, QRat>> echelon; // pivot col -> row, pivot coeff 1
    for (auto& row : rows) {
        for (;;) {
            if (row.empty()) break;
            int piv = row.begin()->first;
            auto it = echelon.find(piv);
            if (it == echelon.end()) break;
            QRat f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto jt = row.find(c);
                if (jt == row.end()) row[c] = -f * v;
                else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
        }
        if (row.empty()) continue;
        int piv = row.begin()->first;
        QRat d = row.begin()->second;
        for (auto& [c, v] : row) v /= d;
        for (auto& [p, erow] : echelon) {
            auto jt = erow.find(piv);
            if (jt == erow.end()) continue;
            QRat f = jt->second;
            for (const auto& [c, v] : row) {
                auto kt = erow.find(c);
                if (kt == erow.end()) erow[c] = -f * v;
                else {
                    kt->second -= f * v;
                    if (kt->second.is_zero()) erow.erase(kt);
                }
            }
        }
        echelon[piv] = std::move(row);
    }
    std::vector<std::vector<QRat>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (echelon.count(free)) continue;
        std::vector<QRat> v(static_cast<std::size_t>(ncols));
        v[static_cast<std::size_t>(free)] = QRat(1);
        for (const auto& [piv, row] : echelon) {
            auto it = row.find(free);
            if (it != row.end()) v[static_cast<std::size_t>(piv)] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}
} // namespace detail

/// Solves for the quantum metric eta^{ba}: x.x = x_a x_b eta^{ba} must
/// (a) commute with every generator modulo the relations and
/// (b) braid as Psi(x.x (x) x_i) = lambda^{-2} x_i (x) x.x.
/// Conditions (a) and (b) constrain only the element x.x, so they leave
/// eta free modulo the relation space; the coefficient tensor itself is
/// pinned by (c) rotation invariance,
///   lambda^2 eta^{lk} R^a_k^i_c R^b_l^c_j = delta^i_j eta^{ba},
/// which is a matrix condition and sees no quotient.  The resulting
/// one-dimensional solution is normalized so that the first entry of
/// eta^{ij} (row-major) that is nonzero at q=1 equals 1 exactly.
inline MetricData find_metric(const PairData& pair) {
    int n = pair.n();
    RelationSet rels = build_relations(pair.r_prime, Orientation::Space);
    QRat lam2inv = (pair.lambda * pair.lambda).inv();

    auto unknown = [n](int a, int b) { return (a - 1) * n + (b - 1); };
    std::vector<NCPoly> quad(static_cast<std::size_t>(n * n));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            quad[static_cast<std::size_t>(unknown(a, b))] = reduce(NCPoly(Word{a, b}), rels);

    std::vector<std::map<int, QRat>> rows;
    for (int i = 1; i <= n; ++i) {
        std::map<Word, std::map<int, QRat>, DeglexLess> by_word;
        std::map<std::pair<Word, Word>, std::map<int, QRat>, PairLess> by_tensor;
        NCPoly xi = NCPoly::generator(i);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                int u = unknown(a, b);
                const NCPoly& qab = quad[static_cast<std::size_t>(u)];
                NCPoly comm = reduce(qab * xi - xi * qab, rels);
                for (const auto& [w, c] : comm.terms()) by_word[w][u] += c;
                TensorTerms lhs = braiding(qab, xi, pair.r, rels);
                for (const auto& [slots, c] : lhs) by_tensor[slots][u] += c;
                for (const auto& [w, c] : qab.terms())
                    by_tensor[{Word{i}, w}][u] -= lam2inv * c;
            }
        for (auto& [w, row] : by_word) {
            std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
            if (!row.empty()) rows.push_back(std::move(row));
        }
        for (auto& [slots, row] : by_tensor) {
            std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }

    QRat lam2 = pair.lambda * pair.lambda;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    std::map<int, QRat> row;
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            QRat coeff;
                            for (int c = 1; c <= n; ++c) coeff += pair.r.at(a, k, i, c) * pair.r.at(b, l, c, j);
                            coeff = coeff * lam2;
                            if (!coeff.is_zero()) row[unknown(k, l)] += coeff;
                        }
                    if (i == j) row[unknown(a, b)] -= QRat(1);
                    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
                    if (!row.empty()) rows.push_back(std::move(row));
                }

    auto basis = detail::nullspace(std::move(rows), n * n);
    if (basis.empty()) throw std::domain_error("no quantum metric");
    if (basis.size() > 1) throw std::domain_error("metric not unique");

    std::vector<std::vector<QRat>> upper(static_cast<std::size_t>(n), std::vector<QRat>(static_cast<std::size_t>(n)));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            upper[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] =
                basis[0][static_cast<std::size_t>(unknown(a, b))];

    QRat scale;
    for (int i = 0; i < n && scale.is_zero(); ++i)
        for (int j = 0; j < n && scale.is_zero(); ++j) {
            const QRat& e = upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!e.is_zero() && !e.has_pole_q1() && e.eval_q1() != 0) scale = e.inv();
        }
    if (scale.is_zero()) throw std::domain_error("no quantum metric");
    for (auto& row : upper)
        for (auto& e : row) e *= scale;

    return metric_from_upper(n, std::move(upper));
}

} // namespace braidkit

#endif // BRAIDKIT_METRIC_HPP
