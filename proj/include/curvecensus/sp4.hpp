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

// Characters of the irreducible representations of Sp(4), evaluated on the
// Frobenius conjugacy class of a genus-2 curve.  The class of a curve with
// eigenvalue pairs (alpha, q/alpha), (beta, q/beta) is determined by
//   u = alpha + q/alpha,  v = beta + q/beta,
// and only through the symmetric functions a1 = u + v (the trace) and
// a2 = uv + 2q (the second elementary symmetric function of the four
// eigenvalues); census data arrives as (a1, a2) pairs.
//
// Production route.  For highest weight (a, b), a >= b >= 0,
//   chi_{a,b} = ( h_{a+1}(u) h_b(v) - h_{a+1}(v) h_b(u) ) / (u - v),
// where h_k are the two-eigenvalue complete homogeneous sums
// h_k = t h_{k-1} - q h_{k-2}, h_0 = 1, h_{-1} = 0.  The quotient is a
// symmetric polynomial and is stored exactly in the variables
// (A, B, q) = (a1, uv, q); every monomial A^i B^j q^k obeys the weight
// homogeneity i + 2j + 2k = a + b, which pins the q-dependence.
//
// Oracle route (independent).  Weight multiplicities of the irreducible
// with highest weight (a, b) are computed from the C2 root system alone by
// Freudenthal's recursion, giving the character as a Laurent polynomial in
// the compact torus variables (x, y) — no division, no h-polynomials.  A
// further consistency check peels Sym^{a-b}(V) (x) Sym^b(wedge^2 V),
// built by Newton/Adams symmetric-power arithmetic, down to zero against
// the oracle table with nonnegative multiplicities and top multiplicity 1.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"

namespace curvecensus {

// ---------------------------------------------------------------------------
// Exact symmetric-polynomial route.

struct Sp4Character {
    int a = 0, b = 0;
    // (A-degree, B-degree, q-degree) -> coefficient, A = u+v, B = uv.
    std::map<std::array<int, 3>, BigInt> poly;

    // Evaluate at a Frobenius class: B = a2 - 2q.
    BigInt eval(const BigInt& a1, const BigInt& a2, const BigInt& q) const {
        const BigInt B = a2 - 2 * q;
        BigInt acc = 0;
        for (const auto& [mono, c] : poly)
            acc += c * bi_pow(a1, static_cast<unsigned>(mono[0])) *
                   bi_pow(B, static_cast<unsigned>(mono[1])) *
                   bi_pow(q, static_cast<unsigned>(mono[2]));
        return acc;
    }
};

namespace detail_sp4 {

// Univariate h_k over Z[q]: h[x-degree] -> (q-degree -> coeff).
using HPoly = std::vector<std::map<int, BigInt>>;

inline std::vector<HPoly> h_tower(int kmax) {
    std::vector<HPoly> h(static_cast<std::size_t>(kmax) + 1);
    h[0] = HPoly{{{0, BigInt(1)}}};  // h_0 = 1
    if (kmax >= 1) h[1] = HPoly{{}, {{0, BigInt(1)}}};  // h_1 = x
    for (int k = 2; k <= kmax; ++k) {
        HPoly cur(static_cast<std::size_t>(k) + 1);
        const auto& p1 = h[static_cast<std::size_t>(k - 1)];
        const auto& p2 = h[static_cast<std::size_t>(k - 2)];
        for (std::size_t i = 0; i < p1.size(); ++i)
            for (const auto& [qd, c] : p1[i]) cur[i + 1][qd] += c;
        for (std::size_t i = 0; i < p2.size(); ++i)
            for (const auto& [qd, c] : p2[i]) cur[i][qd + 1] -= c;
        for (auto& m : cur)
            for (auto it = m.begin(); it != m.end();)
                it = (it->second == 0) ? m.erase(it) : std::next(it);
        h[static_cast<std::size_t>(k)] = std::move(cur);
    }
    return h;
}

}  // namespace detail_sp4

inline const Sp4Character& sp4_character(int a, int b) {
    require_arg(a >= b && b >= 0,
                "sp4_character: highest weight needs a >= b >= 0");
    static std::map<std::pair<int, int>, Sp4Character> cache;
    const auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const auto h = detail_sp4::h_tower(a + 1);
    // Antisymmetric combination in (u-degree, v-degree, q-degree).
    std::map<std::array<int, 3>, BigInt> anti;
    const auto& ha = h[static_cast<std::size_t>(a + 1)];
    const auto& hb = h[static_cast<std::size_t>(b)];
    for (std::size_t iu = 0; iu < ha.size(); ++iu)
        for (const auto& [qu, cu] : ha[iu])
            for (std::size_t iv = 0; iv < hb.size(); ++iv)
                for (const auto& [qv, cv] : hb[iv]) {
                    anti[{static_cast<int>(iu), static_cast<int>(iv), qu + qv}] +=
                        cu * cv;
                    anti[{static_cast<int>(iv), static_cast<int>(iu), qu + qv}] -=
                        cu * cv;
                }

    // Divide by (u - v) using
    //   (u^i v^j - u^j v^i) / (u - v) = sum_{m=0}^{i-j-1} u^{j+m} v^{i-1-m}.
    std::map<std::array<int, 3>, BigInt> quot;
    for (const auto& [mono, c] : anti) {
        if (c == 0) continue;
        const int i = mono[0], j = mono[1], k = mono[2];
        check_internal(i != j, "sp4_character: diagonal term survived in an "
                               "antisymmetric polynomial");
        if (i < j) continue;  // its mirror handles the pair
        for (int m = 0; m <= i - j - 1; ++m) quot[{j + m, i - 1 - m, k}] += c;
    }

    // Rewrite the symmetric quotient in (A, B) = (u+v, uv) by repeatedly
    // clearing the lexicographically largest monomial.
    Sp4Character out;
    out.a = a;
    out.b = b;
    auto nonzero_max = [&]() {
        for (auto rit = quot.rbegin(); rit != quot.rend(); ++rit)
            if (rit->second != 0) return std::make_pair(rit->first, rit->second);
        return std::make_pair(std::array<int, 3>{-1, -1, -1}, BigInt(0));
    };
    for (;;) {
        const auto [mono, c] = nonzero_max();
        if (mono[0] < 0) break;
        const int i = mono[0], j = mono[1], k = mono[2];
        check_internal(i >= j, "sp4_character: non-symmetric leading term");
        out.poly[{i - j, j, k}] += c;
        // Subtract c * (u+v)^{i-j} (uv)^j q^k.
        for (int m = 0; m <= i - j; ++m)
            quot[{j + m, i - m, k}] -= c * binomial(i - j, m);
    }

    for (auto pit = out.poly.begin(); pit != out.poly.end();) {
        if (pit->second == 0) {
            pit = out.poly.erase(pit);
            continue;
        }
        check_internal(pit->first[0] + 2 * pit->first[1] + 2 * pit->first[2] ==
                           a + b,
                       "sp4_character: weight homogeneity violated");
        ++pit;
    }
    return cache.emplace(key, std::move(out)).first->second;
}

// Convenience: evaluate chi_{a,b} at a Frobenius class.
inline BigInt sp4_character_value(int a, int b, const BigInt& a1,
                                  const BigInt& a2, const BigInt& q) {
    return sp4_character(a, b).eval(a1, a2, q);
}

// ---------------------------------------------------------------------------
// Independent oracle: Freudenthal weight multiplicities for C2.

// Laurent polynomials in the compact torus variables (x, y).
using LaurentXY = std::map<std::pair<int, int>, BigInt>;

namespace detail_sp4 {

inline void lxy_add(LaurentXY& acc, const LaurentXY& other,
                    const BigInt& scale) {
    for (const auto& [m, c] : other) {
        auto& slot = acc[m];
        slot += c * scale;
        if (slot == 0) acc.erase(m);
    }
}

inline LaurentXY lxy_mul(const LaurentXY& a, const LaurentXY& b) {
    LaurentXY r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            const auto key =
                std::make_pair(ma.first + mb.first, ma.second + mb.second);
            auto& slot = r[key];
            slot += ca * cb;
            if (slot == 0) r.erase(key);
        }
    return r;
}

// Adams operation: substitute x -> x^n, y -> y^n.
inline LaurentXY lxy_adams(const LaurentXY& a, int n) {
    LaurentXY r;
    for (const auto& [m, c] : a) r[{m.first * n, m.second * n}] += c;
    return r;
}

// Dominant representative of a weight under the C2 Weyl group
// (coordinate swaps and independent sign flips).
inline std::pair<int, int> dominant_rep(int i, int j) {
    const int ai = std::abs(i), aj = std::abs(j);
    return ai >= aj ? std::make_pair(ai, aj) : std::make_pair(aj, ai);
}

}  // namespace detail_sp4

// Character of Sym^k of a representation from its character, by the Newton
// recurrence k h_k = sum_{i=1}^{k} psi^i(chi) h_{k-i}.  Exposed for the
// peeling consistency check.
inline std::vector<LaurentXY> sp4_sym_tower(const LaurentXY& chi, int kmax) {
    using namespace detail_sp4;
    std::vector<LaurentXY> h(static_cast<std::size_t>(kmax) + 1);
    h[0] = LaurentXY{{{0, 0}, BigInt(1)}};
    for (int k = 1; k <= kmax; ++k) {
        LaurentXY acc;
        for (int i = 1; i <= k; ++i)
            lxy_add(acc,
                    lxy_mul(lxy_adams(chi, i), h[static_cast<std::size_t>(k - i)]),
                    BigInt(1));
        LaurentXY out;
        for (const auto& [m, c] : acc) {
            BigInt quo, rem;
            mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(),
                        BigInt(k).get_mpz_t());
            check_internal(rem == 0,
                           "sp4_sym_tower: Newton recurrence not integral");
            if (quo != 0) out[m] = quo;
        }
        h[static_cast<std::size_t>(k)] = std::move(out);
    }
    return h;
}

// Characters of the standard representation V and of wedge^2 V on the
// compact torus (q = 1 picture).
inline LaurentXY sp4_standard_character() {
    return LaurentXY{{{1, 0}, BigInt(1)},
                     {{-1, 0}, BigInt(1)},
                     {{0, 1}, BigInt(1)},
                     {{0, -1}, BigInt(1)}};
}

inline LaurentXY sp4_wedge2_character() {
    return LaurentXY{{{0, 0}, BigInt(2)},  {{1, 1}, BigInt(1)},
                     {{1, -1}, BigInt(1)}, {{-1, 1}, BigInt(1)},
                     {{-1, -1}, BigInt(1)}};
}

// Compact character of the irreducible with highest weight (a, b) from
// Freudenthal's multiplicity recursion over the C2 root system:
//   (|l+rho|^2 - |m+rho|^2) mult(m)
//       = 2 sum_{alpha > 0} sum_{k >= 1} mult(m + k alpha) <m + k alpha, alpha>
// with rho = (2, 1) and positive roots (1,-1), (0,2), (1,1), (2,0).
inline const LaurentXY& sp4_character_oracle(int a, int b) {
    require_arg(a >= b && b >= 0, "sp4_character_oracle: need a >= b >= 0");
    static std::map<std::pair<int, int>, LaurentXY> cache;
    const auto key = std::make_pair(a, b);
    auto cit = cache.find(key);
    if (cit != cache.end()) return cit->second;

    using namespace detail_sp4;
    static const std::array<std::pair<int, int>, 4> kPositiveRoots = {
        std::make_pair(1, -1), std::make_pair(0, 2), std::make_pair(1, 1),
        std::make_pair(2, 0)};
    const auto ip = [](std::pair<int, int> s, std::pair<int, int> t) {
        return static_cast<long>(s.first) * t.first +
               static_cast<long>(s.second) * t.second;
    };
    const std::pair<int, int> lam{a, b};
    const std::pair<int, int> lam_rho{a + 2, b + 1};
    const long norm_top = ip(lam_rho, lam_rho);

    // Dominant weights below (a, b): 0 <= j <= i <= a, i + j <= a + b,
    // i + j == a + b (mod 2).  Process by increasing distance from the top
    // in the simple-root basis so every mult(m + k alpha) lookup is ready.
    struct Cand {
        int level;
        std::pair<int, int> w;
    };
    std::vector<Cand> cands;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= i; ++j) {
            if (i + j > a + b || ((a + b - i - j) & 1)) continue;
            const int level = (a - i) + (a + b - i - j) / 2;
            cands.push_back({level, {i, j}});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        return x.level < y.level;
    });

    std::map<std::pair<int, int>, BigInt> mult;
    const auto mult_at = [&](int i, int j) -> BigInt {
        const auto rep = dominant_rep(i, j);
        const auto mit = mult.find(rep);
        return mit == mult.end() ? BigInt(0) : mit->second;
    };
    for (const auto& cand : cands) {
        const auto mu = cand.w;
        if (mu == lam) {
            mult[mu] = 1;
            continue;
        }
        BigInt rhs = 0;
        for (const auto& alpha : kPositiveRoots) {
            for (int k = 1;; ++k) {
                const std::pair<int, int> nu{mu.first + k * alpha.first,
                                             mu.second + k * alpha.second};
                if (std::abs(nu.first) + std::abs(nu.second) > a + b &&
                    std::max(std::abs(nu.first), std::abs(nu.second)) > a)
                    break;
                const BigInt m_nu = mult_at(nu.first, nu.second);
                if (m_nu != 0) rhs += m_nu * BigInt(ip(nu, alpha));
            }
        }
        rhs *= 2;
        const std::pair<int, int> mu_rho{mu.first + 2, mu.second + 1};
        const long denom = norm_top - ip(mu_rho, mu_rho);
        check_internal(denom > 0,
                       "sp4_character_oracle: Freudenthal prefactor must be "
                       "positive below the highest weight");
        BigInt quo, rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), rhs.get_mpz_t(),
                    BigInt(denom).get_mpz_t());
        check_internal(rem == 0,
                       "sp4_character_oracle: Freudenthal division not exact");
        check_internal(quo >= 0,
                       "sp4_character_oracle: negative weight multiplicity");
        if (quo != 0) mult[mu] = quo;
    }

    // Expand over the Weyl orbits.
    LaurentXY chi;
    for (const auto& [mu, m] : mult) {
        std::set<std::pair<int, int>> orbit;
        const int i = mu.first, j = mu.second;
        for (const int si : {1, -1})
            for (const int sj : {1, -1}) {
                orbit.insert({si * i, sj * j});
                orbit.insert({sj * j, si * i});
            }
        for (const auto& w : orbit) chi[w] += m;
    }
    return cache.emplace(key, std::move(chi)).first->second;
}

// Greedy decomposition of a Weyl-invariant Laurent character into the
// oracle irreducibles.  Returns highest-weight -> multiplicity and checks
// nonnegativity and exact termination.
inline std::map<std::pair<int, int>, BigInt> sp4_peel(LaurentXY cur) {
    using namespace detail_sp4;
    std::map<std::pair<int, int>, BigInt> parts;
    for (;;) {
        std::pair<int, int> hw{-1, -1};
        BigInt c = 0;
        for (auto rit = cur.rbegin(); rit != cur.rend(); ++rit) {
            if (rit->second == 0) continue;
            hw = rit->first;
            c = rit->second;
            break;
        }
        if (hw.first < 0) break;
        check_internal(hw.first >= hw.second && hw.second >= 0,
                       "sp4_peel: leading monomial of a Weyl-invariant "
                       "character must be dominant");
        check_internal(c > 0, "sp4_peel: negative constituent multiplicity");
        lxy_add(cur, sp4_character_oracle(hw.first, hw.second), -c);
        parts[hw] += c;
    }
    return parts;
}

// Weyl dimension formula for C2, used as a cheap cross-check.
inline BigInt sp4_dimension(int a, int b) {
    require_arg(a >= b && b >= 0, "sp4_dimension: need a >= b >= 0");
    const BigInt prod = BigInt(a - b + 1) * BigInt(b + 1) * BigInt(a + 2) *
                        BigInt(a + b + 3);
    BigInt quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t(),
                BigInt(6).get_mpz_t());
    check_internal(rem == 0, "sp4_dimension: formula must be integral");
    return quo;
}

}  // namespace curvecensus
