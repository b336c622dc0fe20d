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

// Automorphism-weighted census of genus-2 curves in characteristic 2.
// Models are y^2 + h(x) y = f(x) with h a binary cubic form (h != 0) and
// f a binary sextic form, smooth in the weighted-(1,3,1) projective sense:
//   - no affine singularity: gcd(h, h'^2 f + f'^2) is constant, and
//   - the place at infinity is regular: not (h3 == 0 and h2^2 c6 = c5^2).
// The isomorphism groupoid is GL_2 substitutions combined with the shifts
// y -> y + j(x) for cubics j, so masses come out as
//   sum of 1/#Aut over curves with invariants (a1, a2)
//     = #{smooth models (h, f)} / ( #GL_2(F_q) * q^4 ),
// and the total is q^3 again.
//
// Shifts replace f by f + j^2 + h j without touching h, smoothness, or
// point counts, so the scan enumerates one representative per coset of
// W_h = { j^2 + h j } (an F_2-subspace of dimension 4k - 1 for q = 2^k,
// kernel {0, h}) and weights it by |W_h| = q^4 / 2.  That cuts the
// q^11 model space to 2 q^7 evaluations.
//
// Point counts use Artin-Schreier splitting: at h(x) != 0 substitute
// y = h w to get w^2 + w = f / h^2, which has two roots when the absolute
// trace vanishes and none otherwise; at h(x) = 0 there is exactly one y.
// Elements of F_q have absolute trace 0 inside F_{q^2}, which settles the
// subfield part of N_2, and conjugate off-subfield points contribute
// equally, so that sum is doubled over one representative per pair.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/census_g2.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"

namespace curvecensus {

struct Genus2CensusChar2 {
    const FieldCtx* F = nullptr;
    // (a1, a2) -> number of smooth models (h, f) with those invariants.
    std::map<std::pair<long, long>, BigInt> model_counts;
    // 2-rank of the Jacobian -> number of smooth models.  The cover
    // y^2 + h y = f ramifies exactly over the distinct projective roots of
    // the cubic form h, and the Deuring-Shafarevich formula makes the
    // 2-rank one less than the number of branch points.
    std::map<int, BigInt> prank_counts;
    BigInt models_total = 0;

    BigInt q() const { return BigInt(static_cast<long>(F->q())); }
    BigInt groupoid_order() const {
        const BigInt bq = q();
        return gl2_order(bq) * bq * bq * bq * bq;
    }

    BigRat mass(long a1, long a2) const {
        const auto it = model_counts.find({a1, a2});
        if (it == model_counts.end()) return BigRat(0);
        BigRat m(it->second, groupoid_order());
        m.canonicalize();
        return m;
    }

    std::map<std::pair<long, long>, BigRat> mass_by_pair() const {
        std::map<std::pair<long, long>, BigRat> out;
        for (const auto& [key, cnt] : model_counts) {
            BigRat m(cnt, groupoid_order());
            m.canonicalize();
            out.emplace(key, std::move(m));
        }
        return out;
    }

    BigRat total_mass() const {
        BigRat m(models_total, groupoid_order());
        m.canonicalize();
        return m;
    }
};

namespace detail_g2c2 {

// gcd(h, g) constant?  h of degree <= 3, g of degree <= 10, char 2.
inline bool coprime_with_h(const FieldCtx& F, const Fq* h, int dh,
                           const Fq* g, int dgin) {
    Fq A[11], B[11];
    int da = dgin, db = dh;
    for (int i = 0; i <= dgin; ++i) A[i] = g[i];
    for (int i = 0; i <= dh; ++i) B[i] = h[i];
    while (da >= 0 && A[da] == 0) --da;
    while (db >= 0 && B[db] == 0) --db;
    check_internal(db >= 0, "coprime_with_h: h must be nonzero");
    if (db == 0) return true;
    if (da < 0) return false;  // g == 0 and deg h >= 1
    for (;;) {
        while (da >= db) {
            const Fq lead = F.div(A[da], B[db]);
            const int shift = da - db;
            for (int j = 0; j <= db; ++j)
                A[j + shift] = F.sub(A[j + shift], F.mul(lead, B[j]));
            while (da >= 0 && A[da] == 0) --da;
            if (da < 0) break;
        }
        if (da < 0) return false;  // B divides A with deg B >= 1
        if (da == 0) return true;
        for (int j = 0; j <= db; ++j) std::swap(A[j], B[j]);
        std::swap(da, db);
    }
}

}  // namespace detail_g2c2

inline const Genus2CensusChar2& census_g2_char2(const FieldCtx& F) {
    require_arg(F.p() == 2, "census_g2_char2: needs characteristic 2");
    if (F.q() > 8)
        throw CapacityError(
            "census_g2_char2: the coset scan is sized for q <= 8, got q = " +
            std::to_string(F.q()));
    static std::map<std::uint32_t, Genus2CensusChar2> cache;
    const auto hit = cache.find(F.q());
    if (hit != cache.end()) return hit->second;

    const std::uint32_t q = F.q();
    const int k = F.m();  // q = 2^k
    const FieldCtx& E2 = FieldCtx::get(2, 2 * k);
    const Embedding emb(F, E2);
    const std::uint32_t Q2 = E2.q();

    // Absolute-trace-zero tables and Frobenius-pair representatives.
    std::vector<char> tr0_1(q), tr0_2(Q2);
    for (Fq t = 0; t < q; ++t) tr0_1[t] = F.trace(t) == 0;
    for (Fq t = 0; t < Q2; ++t) tr0_2[t] = E2.trace(t) == 0;
    std::vector<char> in_sub(Q2, 0);
    for (Fq a = 0; a < q; ++a) in_sub[emb(a)] = 1;
    const auto conj = [&](Fq x) {
        for (int i = 0; i < k; ++i) x = E2.frobenius(x);
        return x;
    };
    std::vector<Fq> reps;
    for (Fq x = 0; x < Q2; ++x) {
        if (in_sub[x]) continue;
        if (x < conj(x)) reps.push_back(x);
    }
    const std::size_t R = reps.size();
    check_internal(2 * R + q == Q2,
                   "census_g2_char2: conjugate pairing miscount");
    std::vector<Fq> embc(q);
    for (Fq c = 0; c < q; ++c) embc[c] = emb(c);

    // In characteristic 2 the element code is its F_2 coordinate vector and
    // field addition is XOR, so a sextic f packs into 7k bits.
    const int fbits = 7 * k;
    const auto pack = [&](const Fq* cf) {
        std::uint32_t v = 0;
        for (int i = 0; i < 7; ++i)
            v |= static_cast<std::uint32_t>(cf[i]) << (k * i);
        return v;
    };
    const auto unpack = [&](std::uint32_t v, Fq* cf) {
        for (int i = 0; i < 7; ++i)
            cf[i] = static_cast<Fq>((v >> (k * i)) & (q - 1));
    };

    const long a1max = 15, a2max = 6 * static_cast<long>(q) + 8;
    std::vector<unsigned long long> buckets(
        static_cast<std::size_t>((2 * a1max + 1) * (2 * a2max + 1)), 0);
    unsigned long long total_models = 0;
    const unsigned long long coset_size = static_cast<unsigned long long>(q) *
                                          q * q * q / 2;

    Fq h[4], f[7], hd[4], fd[7];
    for (std::uint32_t hcode = 1; hcode < q * q * q * q; ++hcode) {
        for (int i = 0; i < 4; ++i)
            h[i] = static_cast<Fq>((hcode >> (k * i)) & (q - 1));

        // F_2-basis of W_h = { j^2 + h j } and its pivot positions.
        std::vector<std::uint32_t> rows;
        for (int t = 0; t <= 3; ++t)
            for (int bit = 0; bit < k; ++bit) {
                const Fq e = static_cast<Fq>(1u << bit);  // basis element
                Fq w[7] = {0, 0, 0, 0, 0, 0, 0};
                w[2 * t] = F.add(w[2 * t], F.mul(e, e));  // (e x^t)^2
                for (int i = 0; i <= 3; ++i)              // h * e x^t
                    w[i + t] = F.add(w[i + t], F.mul(h[i], e));
                rows.push_back(pack(w));
            }
        std::uint32_t pivot_mask = 0;
        std::vector<std::uint32_t> basis;
        for (std::uint32_t row : rows) {
            for (const std::uint32_t b : basis) {
                const std::uint32_t high = 31u - static_cast<std::uint32_t>(
                                                     __builtin_clz(b));
                if (row & (1u << high)) row ^= b;
            }
            if (row) {
                basis.push_back(row);
                pivot_mask |= 1u << (31u - static_cast<std::uint32_t>(
                                               __builtin_clz(row)));
            }
        }
        check_internal(basis.size() == static_cast<std::size_t>(4 * k - 1),
                       "census_g2_char2: shift subspace has wrong rank");

        // Enumerate coset representatives: all bit patterns supported on
        // the non-pivot positions.
        std::vector<int> free_pos;
        for (int b = 0; b < fbits; ++b)
            if (!(pivot_mask & (1u << b))) free_pos.push_back(b);
        check_internal(free_pos.size() == static_cast<std::size_t>(3 * k + 1),
                       "census_g2_char2: wrong transversal dimension");

        // Derivative of h and the infinity data.
        hd[0] = h[1];
        hd[1] = 0;
        hd[2] = h[3];
        hd[3] = 0;
        const Fq h3 = h[3], h2 = h[2];

        // Evaluations of h at the scan points (f varies faster).
        std::vector<Fq> hv1(q), hv2(R);
        for (Fq x = 0; x < q; ++x) {
            Fq acc = 0;
            for (int i = 3; i >= 0; --i) acc = F.add(F.mul(acc, x), h[i]);
            hv1[x] = acc;
        }
        for (std::size_t r = 0; r < R; ++r) {
            Fq acc = 0;
            for (int i = 3; i >= 0; --i)
                acc = E2.add(E2.mul(acc, reps[r]), embc[h[i]]);
            hv2[r] = acc;
        }

        const std::uint32_t ncosets = 1u << (3 * k + 1);
        for (std::uint32_t cs = 0; cs < ncosets; ++cs) {
            std::uint32_t fcode = 0;
            for (std::size_t b = 0; b < free_pos.size(); ++b)
                if (cs & (1u << b)) fcode |= 1u << free_pos[b];
            unpack(fcode, f);

            // Infinity chart: reject h3 == 0 with h2^2 c6 == c5^2.
            if (h3 == 0 &&
                F.mul(F.mul(h2, h2), f[6]) == F.mul(f[5], f[5]))
                continue;

            // Affine smoothness: gcd(h, h'^2 f + f'^2) constant.
            fd[0] = f[1];
            fd[1] = 0;
            fd[2] = f[3];
            fd[3] = 0;
            fd[4] = f[5];
            fd[5] = 0;
            fd[6] = 0;
            Fq g[11] = {0};
            // h'^2 has terms hd[0]^2, hd[2]^2 at degrees 0 and 4.
            const Fq hd0s = F.mul(hd[0], hd[0]);
            const Fq hd2s = F.mul(hd[2], hd[2]);
            for (int i = 0; i <= 6; ++i) {
                if (hd0s != 0) g[i] = F.add(g[i], F.mul(hd0s, f[i]));
                if (hd2s != 0) g[i + 4] = F.add(g[i + 4], F.mul(hd2s, f[i]));
            }
            for (int i = 0; i <= 4; i += 2) {  // f'^2: degrees 0, 4, 8
                const Fq s = F.mul(fd[i], fd[i]);
                g[2 * i] = F.add(g[2 * i], s);
            }
            if (!detail_g2c2::coprime_with_h(F, h, 3, g, 10)) continue;

            // Point counts.
            long N1 = 0;
            for (Fq x = 0; x < q; ++x) {
                Fq fx = 0;
                for (int i = 6; i >= 0; --i) fx = F.add(F.mul(fx, x), f[i]);
                const Fq hx = hv1[x];
                if (hx == 0) {
                    N1 += 1;
                } else {
                    const Fq ih = F.inv(hx);
                    N1 += tr0_1[F.mul(fx, F.mul(ih, ih))] ? 2 : 0;
                }
            }
            if (h3 != 0) {
                const Fq ih = F.inv(h3);
                N1 += tr0_1[F.mul(f[6], F.mul(ih, ih))] ? 2 : 0;
            } else {
                N1 += 1;
            }

            long long N2 = 0;
            for (Fq x = 0; x < q; ++x)  // subfield part: trace always 0
                N2 += hv1[x] == 0 ? 1 : 2;
            for (std::size_t r = 0; r < R; ++r) {
                Fq fx = 0;
                for (int i = 6; i >= 0; --i)
                    fx = E2.add(E2.mul(fx, reps[r]), embc[f[i]]);
                const Fq hx = hv2[r];
                if (hx == 0) {
                    N2 += 2;  // one point at each conjugate argument
                } else {
                    const Fq ih = E2.inv(hx);
                    N2 += tr0_2[E2.mul(fx, E2.mul(ih, ih))] ? 4 : 0;
                }
            }
            N2 += h3 != 0 ? 2 : 1;  // infinity over F_{q^2}

            const long long a1 = static_cast<long long>(q) + 1 - N1;
            const long long s2 = static_cast<long long>(q) * q + 1 - N2;
            check_internal(((a1 * a1 - s2) & 1LL) == 0,
                           "census_g2_char2: odd second power-sum defect");
            const long long a2 = (a1 * a1 - s2) / 2;
            check_internal(a1 >= -a1max && a1 <= a1max && a2 >= -a2max &&
                               a2 <= a2max,
                           "census_g2_char2: invariants left the Weil box");
            buckets[static_cast<std::size_t>((a1 + a1max) * (2 * a2max + 1) +
                                             (a2 + a2max))] += coset_size;
            total_models += coset_size;
        }
    }

    Genus2CensusChar2 out;
    out.F = &F;
    for (long a1 = -a1max; a1 <= a1max; ++a1)
        for (long a2 = -a2max; a2 <= a2max; ++a2) {
            const auto c = buckets[static_cast<std::size_t>(
                (a1 + a1max) * (2 * a2max + 1) + (a2 + a2max))];
            if (c != 0)
                out.model_counts.emplace(std::make_pair(a1, a2),
                                         BigInt(static_cast<unsigned long>(c)));
        }
    out.models_total = BigInt(static_cast<unsigned long>(total_models));
    check_internal(out.total_mass() == BigRat(out.q() * out.q() * out.q()),
                   "census_g2_char2: total mass must be q^3");
    return cache.emplace(q, std::move(out)).first->second;
}

}  // namespace curvecensus
