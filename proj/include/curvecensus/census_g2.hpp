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

// Automorphism-weighted census of genus-2 curves over a finite field of odd
// characteristic.  Every such curve is y^2 = f(x) for a squarefree binary
// sextic form f, i.e. an affine polynomial of degree 5 or 6 that is
// squarefree; two forms give isomorphic curves exactly when they differ by
// the GL_2 substitution action combined with rescaling y.  Orbit-stabilizer
// turns the raw scan into masses:
//
//   sum over curves with invariants (a1, a2) of 1/#Aut
//       = #{squarefree forms with those invariants} / #GL_2(F_q),
//
// and the total over all invariants is q^3.  The class invariants are
//   a1 = q + 1 - N_1,          (Frobenius trace)
//   a2 = (a1^2 - s2) / 2,      s2 = q^2 + 1 - N_2,
// the first two elementary symmetric functions of the Frobenius
// eigenvalues.  N_2 is counted over one representative per Frobenius
// conjugate pair: f has coefficients in F_q, so conjugate arguments give
// equal quadratic-character values and the off-subfield sum doubles.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"

namespace curvecensus {

inline BigInt gl2_order(const BigInt& q) {
    return (q * q - 1) * (q * q - q);
}

// Exact test for the Weil constraints on a genus-2 eigenvalue pair: real
// u, v with u + v = a1, uv = a2 - 2q and |u|, |v| <= 2 sqrt(q).
inline bool weil_feasible_g2(long a1, long a2, unsigned long q) {
    const long long Q = static_cast<long long>(q);
    const long long A1 = a1, A2 = a2;
    if (A1 * A1 > 16 * Q) return false;
    // Real roots of T^2 - a1 T + (a2 - 2q).
    if (A1 * A1 - 4 * A2 + 8 * Q < 0) return false;
    // value >= t * sqrt(q), exactly in integers.
    const auto ge_sqrt = [Q](long long value, long long t) {
        if (t <= 0) return value >= 0 || value * value <= Q * t * t;
        return value > 0 && value * value >= Q * t * t;
    };
    // Quadratic nonnegative at +-2 sqrt(q): 2q + a2 -+ 2 sqrt(q) a1 >= 0.
    return ge_sqrt(2 * Q + A2, 2 * A1) && ge_sqrt(2 * Q + A2, -2 * A1);
}

struct Genus2Census {
    const FieldCtx* F = nullptr;
    // (a1, a2) -> number of squarefree sextic forms with those invariants.
    std::map<std::pair<long, long>, BigInt> form_counts;
    BigInt forms_total = 0;

    BigInt q() const { return BigInt(static_cast<long>(F->q())); }

    BigRat mass(long a1, long a2) const {
        const auto it = form_counts.find({a1, a2});
        if (it == form_counts.end()) return BigRat(0);
        BigRat m(it->second, gl2_order(q()));
        m.canonicalize();
        return m;
    }

    std::map<std::pair<long, long>, BigRat> mass_by_pair() const {
        std::map<std::pair<long, long>, BigRat> out;
        for (const auto& [key, cnt] : form_counts) {
            BigRat m(cnt, gl2_order(q()));
            m.canonicalize();
            out.emplace(key, std::move(m));
        }
        return out;
    }

    BigRat total_mass() const {
        BigRat m(forms_total, gl2_order(q()));
        m.canonicalize();
        return m;
    }
};

namespace detail_g2 {

// Squarefree test for an affine polynomial of degree 5 or 6 given by
// coefficient codes cf[0..6]; gcd(f, f') must be constant.
inline bool squarefree_sextic(const FieldCtx& F, const Fq* cf, int deg) {
    Fq A[7], B[7];
    int da = deg, db = -1;
    for (int i = 0; i <= deg; ++i) A[i] = cf[i];
    for (int i = 1; i <= deg; ++i) {
        B[i - 1] = F.mul(F.from_int(i), cf[i]);
        if (B[i - 1] != 0) db = i - 1;
    }
    // f' == 0 means f is a p-th power, hence not squarefree.
    if (db < 0) return false;
    for (;;) {
        // Reduce A modulo B.
        while (da >= db) {
            const Fq lead = F.div(A[da], B[db]);
            const int shift = da - db;
            for (int j = 0; j <= db; ++j)
                A[j + shift] = F.sub(A[j + shift], F.mul(lead, B[j]));
            while (da >= 0 && A[da] == 0) --da;
            if (da < 0) break;
        }
        if (da < 0) return db == 0;  // gcd is B
        if (da == 0) return true;    // gcd is a nonzero constant
        for (int j = 0; j <= db; ++j) std::swap(A[j], B[j]);
        std::swap(da, db);
    }
}

}  // namespace detail_g2

inline const Genus2Census& census_g2(const FieldCtx& F) {
    require_arg(F.p() != 2,
                "census_g2: this scan needs odd characteristic; the "
                "characteristic-2 census is separate");
    if (F.q() > 13)
        throw CapacityError("census_g2: the q^7 form scan is sized for q <= "
                            "13, got q = " + std::to_string(F.q()));
    static std::map<std::uint32_t, Genus2Census> cache;
    const auto hit = cache.find(F.q());
    if (hit != cache.end()) return hit->second;

    const std::uint32_t q = F.q();
    const FieldCtx& E2 = FieldCtx::get(F.p(), 2 * F.m());
    const Embedding emb(F, E2);
    const std::uint32_t Q2 = E2.q();

    // Character tables and Frobenius-pair representatives.
    std::vector<int> chi1(q), chi2(Q2);
    for (Fq t = 0; t < q; ++t) chi1[t] = F.chi(t);
    for (Fq t = 0; t < Q2; ++t) chi2[t] = E2.chi(t);
    std::vector<char> in_sub(Q2, 0);
    for (Fq a = 0; a < q; ++a) in_sub[emb(a)] = 1;
    const auto conj = [&](Fq x) {
        for (int i = 0; i < F.m(); ++i) x = E2.frobenius(x);
        return x;
    };
    std::vector<Fq> reps;
    for (Fq x = 0; x < Q2; ++x) {
        if (in_sub[x]) continue;
        const Fq c = conj(x);
        check_internal(c != x, "census_g2: fixed point outside the subfield");
        if (x < c) reps.push_back(x);
    }
    const std::size_t R = reps.size();
    check_internal(2 * R + q == Q2, "census_g2: conjugate pairing miscount");

    // Power tables x^i for the evaluation points.
    std::vector<std::vector<Fq>> pw1(7, std::vector<Fq>(q));
    std::vector<std::vector<Fq>> pw2(7, std::vector<Fq>(R));
    for (Fq x = 0; x < q; ++x) {
        Fq acc = F.one();
        for (int i = 0; i <= 6; ++i) {
            pw1[static_cast<std::size_t>(i)][x] = acc;
            acc = F.mul(acc, x);
        }
    }
    for (std::size_t r = 0; r < R; ++r) {
        Fq acc = E2.one();
        for (int i = 0; i <= 6; ++i) {
            pw2[static_cast<std::size_t>(i)][r] = acc;
            acc = E2.mul(acc, reps[r]);
        }
    }
    std::vector<Fq> embc(q);
    for (Fq c = 0; c < q; ++c) embc[c] = emb(c);

    // Invariant buckets on a flat grid; bounds follow from Weil.
    const long a1max = 15, a2max = 6 * static_cast<long>(q) + 8;
    std::vector<unsigned long long> buckets(
        static_cast<std::size_t>((2 * a1max + 1) * (2 * a2max + 1)), 0);
    unsigned long long total = 0;

    // Partial sums S_i[x] = sum_{j >= i} c_j x^j per recursion level.
    std::vector<std::vector<Fq>> lv1(8, std::vector<Fq>(q, 0));
    std::vector<std::vector<Fq>> lv2(8, std::vector<Fq>(R, 0));
    Fq cf[7] = {0, 0, 0, 0, 0, 0, 0};

    const std::function<void(int)> descend = [&](int i) {
        const auto& p1 = lv1[static_cast<std::size_t>(i + 1)];
        const auto& p2 = lv2[static_cast<std::size_t>(i + 1)];
        if (i == 0) {
            const int deg = cf[6] != 0 ? 6 : 5;
            const int inf1 =
                deg == 6 ? (chi1[cf[6]] == 1 ? 2 : 0) : 1;
            const int inf2 = deg == 6 ? 2 : 1;
            for (Fq c0 = 0; c0 < q; ++c0) {
                cf[0] = c0;
                if (!detail_g2::squarefree_sextic(F, cf, deg)) continue;
                ++total;
                long cs1 = 0, z0 = 0;
                for (Fq x = 0; x < q; ++x) {
                    const Fq t = F.add(p1[x], c0);
                    cs1 += chi1[t];
                    z0 += (t == 0);
                }
                long long cs2 = 0;
                const Fq e0 = embc[c0];
                for (std::size_t r = 0; r < R; ++r)
                    cs2 += chi2[E2.add(p2[r], e0)];
                const long long N1 = static_cast<long long>(q) + cs1 + inf1;
                const long long N2 = static_cast<long long>(q) * q +
                                     (static_cast<long long>(q) - z0) +
                                     2 * cs2 + inf2;
                const long long a1 = static_cast<long long>(q) + 1 - N1;
                const long long s2 =
                    static_cast<long long>(q) * q + 1 - N2;
                check_internal(((a1 * a1 - s2) & 1LL) == 0,
                               "census_g2: odd second power-sum defect");
                const long long a2 = (a1 * a1 - s2) / 2;
                check_internal(a1 >= -a1max && a1 <= a1max && a2 >= -a2max &&
                                   a2 <= a2max,
                               "census_g2: invariants left the Weil box");
                ++buckets[static_cast<std::size_t>(
                    (a1 + a1max) * (2 * a2max + 1) + (a2 + a2max))];
            }
            return;
        }
        auto& n1 = lv1[static_cast<std::size_t>(i)];
        auto& n2 = lv2[static_cast<std::size_t>(i)];
        for (Fq ci = 0; ci < q; ++ci) {
            if (i == 5 && cf[6] == 0 && ci == 0) continue;  // need degree >= 5
            cf[i] = ci;
            const auto& pwx = pw1[static_cast<std::size_t>(i)];
            const auto& pwr = pw2[static_cast<std::size_t>(i)];
            if (i == 6 && ci == 0) {
                n1 = p1;
                n2 = p2;
            } else {
                for (Fq x = 0; x < q; ++x)
                    n1[x] = F.add(p1[x], F.mul(ci, pwx[x]));
                const Fq ce = embc[ci];
                for (std::size_t r = 0; r < R; ++r)
                    n2[r] = E2.add(p2[r], E2.mul(ce, pwr[r]));
            }
            descend(i - 1);
        }
    };
    descend(6);

    Genus2Census out;
    out.F = &F;
    for (long a1 = -a1max; a1 <= a1max; ++a1)
        for (long a2 = -a2max; a2 <= a2max; ++a2) {
            const auto c = buckets[static_cast<std::size_t>(
                (a1 + a1max) * (2 * a2max + 1) + (a2 + a2max))];
            if (c != 0)
                out.form_counts.emplace(std::make_pair(a1, a2),
                                        BigInt(static_cast<unsigned long>(c)));
        }
    out.forms_total = BigInt(static_cast<unsigned long>(total));
    const BigInt bq(static_cast<long>(q));
    check_internal(out.forms_total ==
                       (bq - 1) * bq * bq * bq * bq * (bq * bq - 1),
                   "census_g2: squarefree form count disagrees with the "
                   "closed form");
    return cache.emplace(q, std::move(out)).first->second;
}

}  // namespace curvecensus
