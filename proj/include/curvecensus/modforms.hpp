// Copyright 2026 The curvecensus authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Classical modular forms for the full modular group at desk scale:
// Eisenstein series, the discriminant cusp form (built two independent ways
// and compared), echelonized bases of cusp spaces, Hecke operators and
// their traces.  Everything is exact rational/integer arithmetic on
// truncated q-expansions; no floating point anywhere.

#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/qseries.hpp"

namespace curvecensus {

// sum of d^k over divisors d of n.
inline BigInt divisor_power_sum(unsigned n, unsigned k) {
    BigInt s = 0;
    for (unsigned long d : divisors(n)) s += bi_pow(BigInt(d), k);
    return s;
}

// Normalized Eisenstein series E_4 or E_6 (constant term 1).
inline QSeries eisenstein(unsigned k, unsigned prec) {
    require_arg(k == 4 || k == 6, "eisenstein: only weights 4 and 6 are used");
    QSeries e(prec);
    e.set_coeff(0, BigRat(1));
    const BigRat factor = (k == 4) ? BigRat(240) : BigRat(-504);
    for (unsigned n = 1; n < prec; ++n)
        e.set_coeff(n, factor * BigRat(divisor_power_sum(n, k - 1)));
    return e;
}

// The discriminant form Delta via (E_4^3 - E_6^2)/1728.
inline QSeries delta_eisenstein(unsigned prec) {
    QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    QSeries d = (e4.pow(3) - e6.pow(2)).scaled(BigRat(1, 1728));
    check_internal(d.all_integral(), "delta_eisenstein: non-integral expansion");
    return d;
}

// The discriminant form via the eta product q prod (1-q^m)^24.
inline QSeries delta_eta(unsigned prec) {
    QSeries d(prec);
    if (prec > 1) d.set_coeff(1, BigRat(1));
    for (unsigned m = 1; m < prec; ++m) {
        // Multiply by (1 - q^m)^24 one binomial factor at a time.
        QSeries factor(prec);
        factor.set_coeff(0, BigRat(1));
        for (unsigned j = 1; j <= 24 && m * j < prec; ++j) {
            const BigInt sign = (j % 2 == 0) ? 1 : -1;
            factor.set_coeff(m * j, BigRat(sign * binomial(BigInt(24), j)));
        }
        d = d * factor;
    }
    return d;
}

// Ramanujan tau from the Eisenstein construction of Delta (the eta-product
// route is compared against it in the test suite).
inline BigInt ramanujan_tau(unsigned n) {
    const unsigned prec = n + 1;
    QSeries d = delta_eisenstein(prec);
    return rat_to_int(d.coeff(n));
}

// dim S_k for the full modular group.
inline unsigned cusp_dim(unsigned k) {
    if (k < 12 || k % 2 == 1) return 0;
    const unsigned r = k % 12;
    if (r == 2) return k / 12 - 1;
    return k / 12;
}

// Echelonized ("Miller") basis of S_k to the given precision: the i-th form
// (1-indexed) has expansion q^i + O(q^{dim+1}) and integer coefficients.
inline std::vector<QSeries> cusp_basis(unsigned k, unsigned prec) {
    const unsigned d = cusp_dim(k);
    std::vector<QSeries> rows;
    if (d == 0) return rows;
    require_arg(prec >= d + 2, "cusp_basis: precision too small for the space");
    // Span: E4^a E6^b Delta^c with 4a + 6b + 12c = k, c >= 1.
    const QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    const QSeries dl = delta_eisenstein(prec);
    for (unsigned c = 1; 12 * c <= k; ++c) {
        const unsigned rest = k - 12 * c;
        for (unsigned b = 0; 6 * b <= rest; ++b) {
            if ((rest - 6 * b) % 4 != 0) continue;
            const unsigned a = (rest - 6 * b) / 4;
            rows.push_back(e4.pow(a) * e6.pow(b) * dl.pow(c));
        }
    }
    // Gaussian elimination to reduced row echelon form.  Cusp forms start
    // at q^1, so pivots land at exponents 1..d.
    std::size_t rank = 0;
    for (unsigned col = 1; col < prec && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot].coeff(col) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        rows[rank] = rows[rank].scaled(BigRat(1) / rows[rank].coeff(col));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const BigRat f = rows[r].coeff(col);
            if (f != 0) rows[r] = rows[r] - rows[rank].scaled(f);
        }
        ++rank;
    }
    check_internal(rank == d, "cusp_basis: rank disagrees with dimension formula");
    rows.resize(d);
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned jj = 1; jj <= d; ++jj)
            check_internal(rows[i].coeff(jj) == ((jj == i + 1) ? 1 : 0),
                           "cusp_basis: echelon pivots misplaced");
        check_internal(rows[i].all_integral(),
                       "cusp_basis: echelon basis is not integral");
    }
    return rows;
}

// Coefficients of T_p f from those of f: a_n(T_p f) = a_{np} + p^{k-1} a_{n/p}.
inline QSeries hecke_apply(const QSeries& f, unsigned k, unsigned p,
                           unsigned out_prec) {
    require_arg(is_prime(p), "hecke_apply: p must be prime");
    require_arg(out_prec * p <= f.prec(),
                "hecke_apply: input precision too small");
    QSeries g(out_prec);
    const BigInt pk1 = bi_pow(BigInt(p), k - 1);
    for (unsigned n = 0; n < out_prec; ++n) {
        BigRat v = f.coeff(n * p);
        if (n % p == 0) v += BigRat(pk1) * f.coeff(n / p);
        g.set_coeff(n, v);
    }
    return g;
}

// Matrix of T_p on the echelon basis of S_k: entry (i, j) is the i-th
// coefficient of T_p applied to the j-th basis form.
inline std::vector<std::vector<BigInt>> hecke_matrix(unsigned k, unsigned p) {
    const unsigned d = cusp_dim(k);
    std::vector<std::vector<BigInt>> M(d, std::vector<BigInt>(d, BigInt(0)));
    if (d == 0) return M;
    const unsigned prec = (d + 2) * p + 2;
    auto basis = cusp_basis(k, prec);
    for (unsigned j = 0; j < d; ++j) {
        QSeries tf = hecke_apply(basis[j], k, p, d + 2);
        for (unsigned i = 0; i < d; ++i) M[i][j] = rat_to_int(tf.coeff(i + 1));
    }
    return M;
}

// Trace of T_p on S_k.
inline BigInt hecke_trace(unsigned k, unsigned p) {
    auto M = hecke_matrix(k, p);
    BigInt t = 0;
    for (std::size_t i = 0; i < M.size(); ++i) t += M[i][i];
    return t;
}

}  // namespace curvecensus
