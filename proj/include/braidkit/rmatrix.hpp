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

#ifndef BRAIDKIT_RMATRIX_HPP
#define BRAIDKIT_RMATRIX_HPP

#include "qrat.hpp"
#include "report.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

/// Sparse matrix over Q(q): one column map per row.  No explicit zeros.
class SparseMat {
  public:
    SparseMat() = default;
    explicit SparseMat(int dim) : dim_(dim), rows_(static_cast<std::size_t>(dim)) {}

    static SparseMat identity(int dim) {
        SparseMat m(dim);
        for (int i = 0; i < dim; ++i) m.rows_[i][i] = QRat(1);
        return m;
    }

    int dim() const { return dim_; }
    const std::map<int, QRat>& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }

    void set(int r, int c, const QRat& v) {
        if (v.is_zero()) rows_[static_cast<std::size_t>(r)].erase(c);
        else rows_[static_cast<std::size_t>(r)][c] = v;
    }
    void add(int r, int c, const QRat& v) {
        auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        if (it == row.end()) {
            if (!v.is_zero()) row[c] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) row.erase(it);
        }
    }
    QRat get(int r, int c) const {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? QRat() : it->second;
    }
    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }
    /// One nonzero (row, col, value), if any.
    std::optional<std::array<int, 2>> first_nonzero() const {
        for (int r = 0; r < dim_; ++r)
            if (!rows_[static_cast<std::size_t>(r)].empty())
                return std::array<int, 2>{r, rows_[static_cast<std::size_t>(r)].begin()->first};
        return std::nullopt;
    }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        SparseMat r(a.dim_);
        for (int i = 0; i < a.dim_; ++i)
            for (const auto& [k, av] : a.rows_[static_cast<std::size_t>(i)])
                for (const auto& [j, bv] : b.rows_[static_cast<std::size_t>(k)]) r.add(i, j, av * bv);
        return r;
    }
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        SparseMat r = a;
        for (int i = 0; i < b.dim_; ++i)
            for (const auto& [j, v] : b.rows_[static_cast<std::size_t>(i)]) r.add(i, j, v);
        return r;
    }
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + (b * QRat(-1)); }
    friend SparseMat operator*(const SparseMat& a, const QRat& s) {
        SparseMat r(a.dim_);
        if (s.is_zero()) return r;
        for (int i = 0; i < a.dim_; ++i)
            for (const auto& [j, v] : a.rows_[static_cast<std::size_t>(i)]) r.set(i, j, v * s);
        return r;
    }

    /// Gauss-Jordan inverse; throws on a singular matrix.
    SparseMat inverse() const {
        int n = dim_;
        std::vector<std::vector<QRat>> a(static_cast<std::size_t>(n), std::vector<QRat>(static_cast<std::size_t>(2 * n)));
        for (int i = 0; i < n; ++i) {
            for (const auto& [j, v] : rows_[static_cast<std::size_t>(i)]) a[i][j] = v;
            a[i][static_cast<std::size_t>(n + i)] = QRat(1);
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular matrix over Q(q)");
            std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
            QRat d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (auto& x : a[static_cast<std::size_t>(col)]) x /= d;
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                QRat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (f.is_zero()) continue;
                for (int c2 = col; c2 < 2 * n; ++c2)
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                        f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
            }
        }
        SparseMat inv(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) inv.set(i, j, a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]);
        return inv;
    }

  private:
    int dim_ = 0;
    std::vector<std::map<int, QRat>> rows_;
};

/// Index quadruple (i,j,k,l) of an R-matrix entry R^i_j^k_l, 1-based.
using Idx4 = std::array<int, 4>;

/// n^2 x n^2 Yang-Baxter matrix as a sparse tensor: entry (i,j,k,l) sits
/// at matrix row (i,k), column (j,l).
struct RMatrixData {
    int n = 0;
    std::string name;
    std::map<Idx4, QRat> entries;

    QRat at(int i, int j, int k, int l) const {
        auto it = entries.find(Idx4{i, j, k, l});
        return it == entries.end() ? QRat() : it->second;
    }
    void set(int i, int j, int k, int l, const QRat& v) {
        if (v.is_zero()) entries.erase(Idx4{i, j, k, l});
        else entries[Idx4{i, j, k, l}] = v;
    }

    SparseMat to_matrix() const {
        SparseMat m(n * n);
        for (const auto& [idx, v] : entries)
            m.set((idx[0] - 1) * n + (idx[2] - 1), (idx[1] - 1) * n + (idx[3] - 1), v);
        return m;
    }
    static RMatrixData from_matrix(const SparseMat& m, int n, std::string name) {
        RMatrixData r;
        r.n = n;
        r.name = std::move(name);
        for (int row = 0; row < n * n; ++row)
            for (const auto& [col, v] : m.row(row))
                r.set(row / n + 1, col / n + 1, row % n + 1, col % n + 1, v);
        return r;
    }

    /// Matrix inverse with the same tensor index convention.
    RMatrixData inverse() const { return from_matrix(to_matrix().inverse(), n, name + "^-1"); }

    /// R_21: indices of both tensor factors swapped.
    RMatrixData swap_factors() const {
        RMatrixData r;
        r.n = n;
        r.name = name + "_21";
        for (const auto& [idx, v] : entries) r.set(idx[2], idx[3], idx[0], idx[1], v);
        return r;
    }
};

struct MetricData {
    int n = 0;
    std::vector<std::vector<QRat>> eta_lower; // eta_{ij}
    std::vector<std::vector<QRat>> eta_upper; // eta^{ij}, transposed inverse of eta_lower
};

/// eta^{ij} := transposed inverse of eta_{ij}.
inline MetricData metric_from_lower(int n, std::vector<std::vector<QRat>> lower) {
    SparseMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    SparseMat inv = m.inverse();
    MetricData md;
    md.n = n;
    md.eta_lower = std::move(lower);
    md.eta_upper.assign(static_cast<std::size_t>(n), std::vector<QRat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) md.eta_upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = inv.get(j, i);
    return md;
}
inline MetricData metric_from_upper(int n, std::vector<std::vector<QRat>> upper) {
    SparseMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    SparseMat inv = m.inverse();
    MetricData md;
    md.n = n;
    md.eta_upper = std::move(upper);
    md.eta_lower.assign(static_cast<std::size_t>(n), std::vector<QRat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) md.eta_lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = inv.get(j, i);
    return md;
}

enum class RealityType { None, TypeI, TypeII };

/// The (R', R) pair defining a linear braided group, with its companion
/// data: normalization lambda, optional quantum metric, reality type.
struct PairData {
    RMatrixData r_prime;
    RMatrixData r;
    QRat lambda;
    std::optional<MetricData> metric;
    RealityType reality = RealityType::None;
    std::vector<int> involution; // 1-based self-inverse index map, TypeII only

    int n() const { return r.n; }
};

namespace detail {
/// Lift a tensor R acting on slots (a,b) of a rank-3 index space to an
/// n^3 x n^3 sparse operator; slots are 0-based among {0,1,2}.
inline SparseMat lift3(const RMatrixData& R, int slot_a, int slot_b) {
    int n = R.n;
    int dim = n * n * n;
    SparseMat m(dim);
    auto pos = [n](int a, int b, int c) { return ((a - 1) * n + (b - 1)) * n + (c - 1); };
    int slot_c = 3 - slot_a - slot_b;
    for (const auto& [idx, v] : R.entries) {
        // row indices i (slot_a), k (slot_b); column indices j, l
        for (int m3 = 1; m3 <= n; ++m3) {
            int rtuple[3], ctuple[3];
            rtuple[slot_a] = idx[0];
            rtuple[slot_b] = idx[2];
            rtuple[slot_c] = m3;
            ctuple[slot_a] = idx[1];
            ctuple[slot_b] = idx[3];
            ctuple[slot_c] = m3;
            m.add(pos(rtuple[0], rtuple[1], rtuple[2]), pos(ctuple[0], ctuple[1], ctuple[2]), v);
        }
    }
    return m;
}
} // namespace detail

/// Quantum Yang-Baxter equation: R12 R13 R23 = R23 R13 R12, exactly.
inline VerificationReport check_ybe(const RMatrixData& R) {
    SparseMat r12 = detail::lift3(R, 0, 1);
    SparseMat r13 = detail::lift3(R, 0, 2);
    SparseMat r23 = detail::lift3(R, 1, 2);
    SparseMat residual = r12 * r13 * r23 - r23 * r13 * r12;
    if (residual.is_zero()) return VerificationReport::pass("ybe:" + R.name);
    auto nz = residual.first_nonzero();
    return VerificationReport::fail("ybe:" + R.name,
                                    "residual[" + std::to_string((*nz)[0]) + "," + std::to_string((*nz)[1]) +
                                        "]=" + residual.get((*nz)[0], (*nz)[1]).str());
}

/// Permutation tensor P^i_j^k_l = delta^i_l delta^k_j as a matrix.
inline SparseMat permutation_matrix(int n) {
    SparseMat p(n * n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) p.set((i - 1) * n + (k - 1), (k - 1) * n + (i - 1), QRat(1));
    return p;
}

inline RMatrixData permutation_rmatrix(int n) {
    RMatrixData r;
    r.n = n;
    r.name = "permutation";
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) r.set(i, k, k, i, QRat(1));
    return r;
}

inline RMatrixData identity_rmatrix(int n) {
    RMatrixData r;
    r.n = n;
    r.name = "identity";
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) r.set(i, i, k, k, QRat(1));
    return r;
}

/// q-Hecke condition (PR - q)(PR + q^{-1}) = 0.
inline VerificationReport check_hecke(const RMatrixData& R) {
    int d = R.n * R.n;
    SparseMat pr = permutation_matrix(R.n) * R.to_matrix();
    SparseMat id = SparseMat::identity(d);
    SparseMat residual = (pr - id * QRat::q()) * (pr + id * QRat::q_inv());
    if (residual.is_zero()) return VerificationReport::pass("hecke:" + R.name);
    auto nz = residual.first_nonzero();
    return VerificationReport::fail("hecke:" + R.name,
                                    "residual[" + std::to_string((*nz)[0]) + "," + std::to_string((*nz)[1]) +
                                        "]=" + residual.get((*nz)[0], (*nz)[1]).str());
}

/// Reality-type conditions on R and the metric.  Coefficients live in
/// Q(q) with q real, so conjugation acts trivially on entries and the
/// conditions become index symmetries.
inline VerificationReport check_reality(const PairData& pair) {
    const std::string name = "reality:" + pair.r.name;
    if (pair.reality == RealityType::None) return VerificationReport::error(name, "no reality type declared");
    const RMatrixData& R = pair.r;
    int n = R.n;
    auto mismatch = [&](const Idx4& a, const Idx4& b) {
        return "R[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
               std::to_string(a[3]) + "]=" + R.at(a[0], a[1], a[2], a[3]).str() + " vs R[" + std::to_string(b[0]) +
               "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + "," + std::to_string(b[3]) +
               "]=" + R.at(b[0], b[1], b[2], b[3]).str();
    };
    if (pair.reality == RealityType::TypeI) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        if (R.at(i, j, k, l) != R.at(l, k, j, i))
                            return VerificationReport::fail(name, mismatch({i, j, k, l}, {l, k, j, i}));
        if (pair.metric) {
            const MetricData& m = *pair.metric;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (m.eta_lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                        m.eta_upper[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                        return VerificationReport::fail(name, "eta_{" + std::to_string(i + 1) + std::to_string(j + 1) +
                                                                  "} != eta^{" + std::to_string(j + 1) +
                                                                  std::to_string(i + 1) + "}");
        }
        return VerificationReport::pass(name);
    }
    // Type II
    const auto& inv = pair.involution;
    if (static_cast<int>(inv.size()) != n) return VerificationReport::error(name, "involution size mismatch");
    for (int i = 1; i <= n; ++i)
        if (inv[static_cast<std::size_t>(inv[static_cast<std::size_t>(i - 1)] - 1)] != i)
            return VerificationReport::error(name, "involution is not self-inverse");
    auto bar = [&](int i) { return inv[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    if (R.at(i, j, k, l) != R.at(bar(j), bar(l), bar(i), bar(k)))
                        return VerificationReport::fail(name, mismatch({i, j, k, l}, {bar(j), bar(l), bar(i), bar(k)}));
    if (pair.metric) {
        const MetricData& m = *pair.metric;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (m.eta_lower[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] !=
                    m.eta_lower[static_cast<std::size_t>(bar(j) - 1)][static_cast<std::size_t>(bar(i) - 1)])
                    return VerificationReport::fail(name, "eta_{" + std::to_string(i) + std::to_string(j) +
                                                              "} != eta_{bar(j)bar(i)}");
    }
    return VerificationReport::pass(name);
}

/// Standard su2 R-matrix in the q-Hecke normalization:
/// diag(q,1,1,q) plus (q-q^{-1}) at row (1,2), column (2,1).
inline RMatrixData standard_su2() {
    RMatrixData r;
    r.n = 2;
    r.name = "su2";
    r.set(1, 1, 1, 1, QRat::q());
    r.set(1, 1, 2, 2, QRat(1));
    r.set(2, 2, 1, 1, QRat(1));
    r.set(2, 2, 2, 2, QRat::q());
    r.set(1, 2, 2, 1, QRat::q_minus_qinv());
    return r;
}

/// Row-major multi-index flattening (i0,i1) -> s*(i0-1)+i1, 1-based.
inline int flatten_index(int s, int i0, int i1) { return s * (i0 - 1) + i1; }

/// Euclidean spinorial gauge: builds the n=s^2 pair
///   R'^i_j^k_l = R^{-1 l0}_{k0}^{j0}_{i0} R^{i1}_{j1}^{k1}_{l1}
///   R^i_j^k_l  = R^{j0}_{i0}^{l0}_{k0}   R^{i1}_{j1}^{k1}_{l1}
/// with lambda defaulted to q^{-1} for Hecke input.
inline PairData build_euclidean_gauge(const RMatrixData& small) {
    VerificationReport hecke = check_hecke(small);
    if (!hecke.passed()) throw std::domain_error("euclidean gauge requires a q-Hecke R: " + hecke.witness);
    int s = small.n;
    RMatrixData small_inv = small.inverse();
    PairData pair;
    pair.lambda = QRat::q_inv();
    pair.reality = RealityType::TypeI;
    pair.r_prime.n = s * s;
    pair.r_prime.name = "euclidean_Rprime";
    pair.r.n = s * s;
    pair.r.name = "euclidean_R";
    for (int i0 = 1; i0 <= s; ++i0)
        for (int j0 = 1; j0 <= s; ++j0)
            for (int k0 = 1; k0 <= s; ++k0)
                for (int l0 = 1; l0 <= s; ++l0) {
                    QRat rp0 = small_inv.at(l0, k0, j0, i0);
                    QRat r0 = small.at(j0, i0, l0, k0);
                    if (rp0.is_zero() && r0.is_zero()) continue;
                    for (const auto& [f1, v1] : small.entries) {
                        int i = flatten_index(s, i0, f1[0]);
                        int j = flatten_index(s, j0, f1[1]);
                        int k = flatten_index(s, k0, f1[2]);
                        int l = flatten_index(s, l0, f1[3]);
                        if (!rp0.is_zero()) pair.r_prime.set(i, j, k, l, rp0 * v1);
                        if (!r0.is_zero()) pair.r.set(i, j, k, l, r0 * v1);
                    }
                }
    return pair;
}

/// Second inverse under partial transposition in the second tensor
/// factor: Rtilde = ((R^{t2})^{-1})^{t2}.
inline RMatrixData second_inverse(const RMatrixData& R) {
    int n = R.n;
    RMatrixData t2;
    t2.n = n;
    t2.name = R.name + "^t2";
    for (const auto& [idx, v] : R.entries) t2.set(idx[0], idx[1], idx[3], idx[2], v);
    RMatrixData t2inv = t2.inverse();
    RMatrixData out;
    out.n = n;
    out.name = R.name + "~";
    for (const auto& [idx, v] : t2inv.entries) out.set(idx[0], idx[1], idx[3], idx[2], v);
    return out;
}

/// Minkowski spinorial gauge of the same construction:
///   R'^i_j^k_l = R^{-1 d}_{k0}^{j0}_a R^{k1}_b^a_{i0} R^{i1}_c^b_{l1} Rt^c_{j1}^{l0}_d
///   R^i_j^k_l  = R^{j0}_a^d_{k0}      R^{k1}_b^a_{i0} R^{i1}_c^b_{l1} Rt^c_{j1}^{l0}_d
inline PairData build_minkowski_gauge(const RMatrixData& small) {
    VerificationReport hecke = check_hecke(small);
    if (!hecke.passed()) throw std::domain_error("minkowski gauge requires a q-Hecke R: " + hecke.witness);
    int s = small.n;
    RMatrixData small_inv = small.inverse();
    RMatrixData rt = second_inverse(small);
    PairData pair;
    pair.lambda = QRat::q_inv();
    pair.reality = RealityType::TypeII;
    pair.r_prime.n = s * s;
    pair.r_prime.name = "minkowski_Rprime";
    pair.r.n = s * s;
    pair.r.name = "minkowski_R";
    // iterate over the two shared factors and the sparse rt/small maps
    for (const auto& [fa, va] : small.entries) {
        // R^{k1}_b^a_{i0}: (k1, b, a, i0)
        int k1 = fa[0], b = fa[1], a = fa[2], i0 = fa[3];
        for (const auto& [fb, vb] : small.entries) {
            // R^{i1}_c^b'_{l1}: requires b' == b
            if (fb[2] != b) continue;
            int i1 = fb[0], c = fb[1], l1 = fb[3];
            for (const auto& [fc, vc] : rt.entries) {
                // Rt^{c'}_{j1}^{l0}_d: requires c' == c
                if (fc[0] != c) continue;
                int j1 = fc[1], l0 = fc[2], d = fc[3];
                QRat base = va * vb * vc;
                for (int j0 = 1; j0 <= s; ++j0)
                    for (int k0 = 1; k0 <= s; ++k0) {
                        QRat rp0 = small_inv.at(d, k0, j0, a);
                        QRat r0 = small.at(j0, a, d, k0);
                        if (rp0.is_zero() && r0.is_zero()) continue;
                        int i = flatten_index(s, i0, i1);
                        int j = flatten_index(s, j0, j1);
                        int k = flatten_index(s, k0, k1);
                        int l = flatten_index(s, l0, l1);
                        if (!rp0.is_zero()) {
                            QRat cur = pair.r_prime.at(i, j, k, l);
                            pair.r_prime.set(i, j, k, l, cur + rp0 * base);
                        }
                        if (!r0.is_zero()) {
                            QRat cur = pair.r.at(i, j, k, l);
                            pair.r.set(i, j, k, l, cur + r0 * base);
                        }
                    }
            }
        }
    }
    return pair;
}

} // namespace braidkit

#endif // BRAIDKIT_RMATRIX_HPP
