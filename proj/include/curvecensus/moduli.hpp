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

// Point counts of moduli spaces of pointed curves of genus 0 and 1 over
// F_q, plain and twisted by a permutation of the markings (only the cycle
// type of the permutation matters).
//
// Genus 0: every genus-0 curve over a finite field is P^1 and PGL_2 acts
// freely on ordered triples, so counts are closed-form products over
// exact-degree point counts of P^1 divided by #PGL_2(F_q).
//
// Genus 1: counts are automorphism-weighted sums over the elliptic census.
// A twisted tuple assigns to each d-cycle of the permutation a point of
// exact degree d, all distinct as Galois orbits; the product
// prod_d prod_{i<m_d} (N^exact_d - i d) counts these tuples on a fixed
// curve.  When the permutation has a fixed point the first fixed marking
// is taken as the origin of the elliptic curve, dropping one factor of
// N_1; this matches the convention in which #M_{1,n}(F_q) with the
// identity twist equals sum 1/#Aut (N_1-1)...(N_1-n+1).
//
// Two independent verification routes are provided: a residue extraction
// against the sigma_k data of the same field (for the identity twist), and
// a brute-force groupoid count over smooth plane cubics weighted by
// 1/#GL_3(F_q) (for arbitrary twists at tiny q), which exercises the
// census, the automorphism counts and the exact-degree machinery at once.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "curvecensus/algebra.hpp"
#include "curvecensus/bigint.hpp"
#include "curvecensus/census_g1.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"
#include "curvecensus/laurent.hpp"

namespace curvecensus {

// #PGL_2(F_q) = q^3 - q.
inline BigInt pgl2_order(const BigInt& q) { return q * q * q - q; }

// #GL_3(F_q).
inline BigInt gl3_order(const BigInt& q) {
    const BigInt q3 = q * q * q;
    return (q3 - 1) * (q3 - q) * (q3 - q * q);
}

// Points of exact degree d on P^1 over F_q (q may itself be a prime power
// passed as an integer; only the count matters).
inline BigInt p1_exact_degree_points(const BigInt& q, unsigned d) {
    std::vector<BigInt> N;
    for (unsigned e = 1; e <= d; ++e) N.push_back(bi_pow(q, e) + 1);
    return exact_degree_count(d, N);
}

// #M_{0,n}(F_q) = (q-2)(q-3)...(q-n+2), the free PGL_2 quotient with the
// first three points pinned to 0, 1, infinity.
inline BigInt m0n_count(const BigInt& q, int n) {
    require_arg(n >= 3, "m0n_count: need n >= 3 markings in genus 0");
    BigInt r = 1;
    for (int i = 2; i <= n - 2; ++i) r *= (q - i);
    return r;
}

// Twisted count #M_{0,n}^sigma(F_q) for a permutation of the markings with
// the given cycle type: tuples of Galois-orbit markings of exact degree d
// per d-cycle, distinct, divided by the free PGL_2(F_q) action.
inline BigInt m0n_equivariant(const BigInt& q, const CycleType& ct) {
    const int n = ct.total();
    require_arg(n >= 3, "m0n_equivariant: need n >= 3 markings in genus 0");
    BigInt prod = 1;
    for (const auto& [d, md] : ct.mult) {
        const BigInt Bd = p1_exact_degree_points(q, static_cast<unsigned>(d));
        for (int i = 0; i < md; ++i) prod *= (Bd - i * d);
    }
    const BigInt den = pgl2_order(q);
    BigInt quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t(),
                den.get_mpz_t());
    check_internal(rem == 0, "m0n_equivariant: tuple count not divisible by "
                             "#PGL_2 despite the action being free");
    return quo;
}

// The full (unanchored) configuration mass in genus 1:
//   sum over the census of 1/#Aut * prod_d prod_{i<m_d} (N^exact_d - i d).
// Rational in general; the building block for both twisted counts and the
// plane-cubic cross-check.
inline BigRat m1n_configuration_mass(const FieldCtx& F, const CycleType& ct) {
    const EllipticCensus& census = census_g1(F);
    BigRat acc(0);
    for (const auto& cls : census.classes) {
        BigInt w = 1;
        for (const auto& [d, md] : ct.mult) {
            const BigInt Nd =
                census.exact_degree_points(cls, static_cast<unsigned>(d));
            for (int i = 0; i < md; ++i) w *= (Nd - i * d);
        }
        acc += cls.mass() * BigRat(w);
    }
    return acc;
}

// Twisted count #M_{1,n}^sigma(F_q).  With at least one fixed marking the
// first fixed marking doubles as the origin; without fixed markings the
// unanchored configuration mass is the defining expression.
inline BigInt m1n_twisted(const FieldCtx& F, const CycleType& ct) {
    const int n = ct.total();
    require_arg(n >= 1, "m1n_twisted: need n >= 1 markings in genus 1");
    const int m1 = ct.count(1);
    BigRat acc(0);
    if (m1 >= 1) {
        const EllipticCensus& census = census_g1(F);
        for (const auto& cls : census.classes) {
            BigInt w = 1;
            for (int i = 0; i < m1 - 1; ++i) w *= (cls.n1 - 1 - i);
            for (const auto& [d, md] : ct.mult) {
                if (d < 2) continue;
                const BigInt Nd =
                    census.exact_degree_points(cls, static_cast<unsigned>(d));
                for (int i = 0; i < md; ++i) w *= (Nd - i * d);
            }
            acc += cls.mass() * BigRat(w);
        }
    } else {
        acc = m1n_configuration_mass(F, ct);
    }
    check_internal(is_integer(acc), "m1n_twisted: non-integer twisted count");
    return rat_to_int(acc);
}

// #M_{1,n}(F_q): the identity twist.
inline BigInt m1n_count(const FieldCtx& F, int n) {
    return m1n_twisted(F, CycleType::identity(n));
}

// Independent route for #M_{1,n}(F_q) by residue extraction: with
// x = q - t - q/t and the census sums sigma_k,
//   #M_{1,n} = -Res_t [ (x)(x-1)...(x-n+2) (t - q/t) sum_{k<n} sigma_k t^{-k-2} ].
// Expanding the falling product of x in the h_k basis via the
// anti-invariance of (t - q/t) under t -> q/t makes this the coefficient
// form of pairing the point-count generating function against sigma.
inline BigInt m1n_residue_route(const FieldCtx& F, int n) {
    require_arg(n >= 1, "m1n_residue_route: need n >= 1");
    const BigRat q(BigInt(static_cast<unsigned long>(F.q())));
    const LaurentSeries t = LaurentSeries::monomial(BigRat(1), 1);
    const LaurentSeries x = LaurentSeries::constant(q) - t -
                            LaurentSeries::monomial(q, -1);
    LaurentSeries prod = LaurentSeries::constant(BigRat(1));
    for (int i = 0; i + 1 < n; ++i)
        prod = prod * (x - LaurentSeries::constant(BigRat(i)));
    prod = prod * (t - LaurentSeries::monomial(q, -1));
    LaurentSeries kernel;
    for (int k = 0; k < n; ++k)
        kernel = kernel +
                 LaurentSeries::monomial(
                     BigRat(sigma_k(F, static_cast<unsigned>(k))), -k - 2);
    const BigRat res = (prod * kernel).residue();
    return rat_to_int(-res);
}

// ---------------------------------------------------------------------------
// Plane-cubic groupoid oracle.
//
// Sums the twisted tuple count over every smooth plane cubic coefficient
// vector and divides by #GL_3(F_q).  Writing the sum over pairs (curve,
// degree-3 line bundle) and using that over a finite field every genus-1
// curve has a rational point, the value equals the unanchored configuration
// mass above -- through a completely different enumeration.  Supported at
// q = 2 (n <= 4) and q = 3 (n <= 3); singular cubics always have a singular
// point of degree at most 3, so scanning P^2 over F_{q^e}, e <= 3, is a
// complete smoothness test.

inline std::vector<BigRat> m1n_cubic_groupoid_masses(
    const FieldCtx& F, const std::vector<CycleType>& cts) {
    require_arg(!cts.empty(), "m1n_cubic_groupoid_masses: no cycle types");
    const unsigned long q = F.q();
    int dmax = 1;
    for (const auto& ct : cts) {
        const int n = ct.total();
        require_arg(n >= 1, "m1n_cubic_groupoid_masses: need n >= 1");
        require_capacity((q == 2 && n <= 4) || (q == 3 && n <= 3),
                         "m1n_cubic_groupoid_masses: supported for q=2 "
                         "(n<=4) and q=3 (n<=3) only");
        for (const auto& [d, md] : ct.mult) dmax = std::max(dmax, d);
    }
    const int emax = std::max(3, dmax);

    // Per-extension tables: projective points with precomputed cubic and
    // quadratic monomial values, plus the embedding of the base field.
    struct Ext {
        const FieldCtx* E;
        Embedding emb;
        std::vector<std::array<Fq, 10>> cub;  // x^3 x^2y x^2z xy^2 xyz xz^2 y^3 y^2z yz^2 z^3
        std::vector<std::array<Fq, 6>> quad;  // x^2 xy xz y^2 yz z^2
        Ext(const FieldCtx& base, const FieldCtx& ext) : E(&ext), emb(base, ext) {}
    };
    std::vector<Ext> exts;
    for (int e = 1; e <= emax; ++e) {
        const FieldCtx& E = FieldCtx::get(F.p(), F.m() * e);
        exts.emplace_back(F, E);
        Ext& X = exts.back();
        std::vector<std::array<Fq, 3>> pts;
        for (Fq xx = 0; xx < E.q(); ++xx)
            for (Fq yy = 0; yy < E.q(); ++yy) pts.push_back({xx, yy, E.one()});
        for (Fq xx = 0; xx < E.q(); ++xx) pts.push_back({xx, E.one(), 0});
        pts.push_back({E.one(), 0, 0});
        for (const auto& P : pts) {
            const Fq xx = P[0], yy = P[1], zz = P[2];
            const Fq x2 = E.mul(xx, xx), y2 = E.mul(yy, yy), z2 = E.mul(zz, zz);
            X.quad.push_back({x2, E.mul(xx, yy), E.mul(xx, zz), y2,
                              E.mul(yy, zz), z2});
            X.cub.push_back({E.mul(x2, xx), E.mul(x2, yy), E.mul(x2, zz),
                             E.mul(xx, y2), E.mul(E.mul(xx, yy), zz),
                             E.mul(xx, z2), E.mul(y2, yy), E.mul(y2, zz),
                             E.mul(yy, z2), E.mul(z2, zz)});
        }
    }

    const Fq two = F.from_int(2), three = F.from_int(3);
    std::vector<BigRat> totals(cts.size(), BigRat(0));
    std::array<Fq, 10> c{};
    const std::uint64_t ncubics = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < 10; ++i) t *= q;
        return t;
    }();
    std::vector<BigInt> N(static_cast<std::size_t>(dmax));

    for (std::uint64_t code = 1; code < ncubics; ++code) {
        {
            std::uint64_t t = code;
            for (int i = 0; i < 10; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<Fq>(t % q);
                t /= q;
            }
        }
        // Partial-derivative coefficient vectors on the quadratic monomials.
        const std::array<Fq, 6> dx{F.mul(three, c[0]), F.mul(two, c[1]),
                                   F.mul(two, c[2]),   c[3],
                                   c[4],               c[5]};
        const std::array<Fq, 6> dy{c[1], F.mul(two, c[3]), c[4],
                                   F.mul(three, c[6]), F.mul(two, c[7]), c[8]};
        const std::array<Fq, 6> dz{c[2], c[4], F.mul(two, c[5]),
                                   c[7], F.mul(two, c[8]), F.mul(three, c[9])};
        bool singular = false;
        for (int e = 1; e <= emax && !singular; ++e) {
            const Ext& X = exts[static_cast<std::size_t>(e - 1)];
            const FieldCtx& E = *X.E;
            std::array<Fq, 10> ce;
            for (int i = 0; i < 10; ++i)
                ce[static_cast<std::size_t>(i)] = X.emb(c[static_cast<std::size_t>(i)]);
            std::array<Fq, 6> dxe, dye, dze;
            for (int i = 0; i < 6; ++i) {
                dxe[static_cast<std::size_t>(i)] = X.emb(dx[static_cast<std::size_t>(i)]);
                dye[static_cast<std::size_t>(i)] = X.emb(dy[static_cast<std::size_t>(i)]);
                dze[static_cast<std::size_t>(i)] = X.emb(dz[static_cast<std::size_t>(i)]);
            }
            long count = 0;
            const std::size_t npts = X.cub.size();
            for (std::size_t pi = 0; pi < npts; ++pi) {
                const auto& cub = X.cub[pi];
                Fq v = 0;
                for (int i = 0; i < 10; ++i)
                    v = E.add(v, E.mul(ce[static_cast<std::size_t>(i)],
                                       cub[static_cast<std::size_t>(i)]));
                if (v != 0) continue;
                ++count;
                if (e <= 3) {
                    const auto& qd = X.quad[pi];
                    Fq vx = 0, vy = 0, vz = 0;
                    for (int i = 0; i < 6; ++i) {
                        const Fq m = qd[static_cast<std::size_t>(i)];
                        vx = E.add(vx, E.mul(dxe[static_cast<std::size_t>(i)], m));
                        vy = E.add(vy, E.mul(dye[static_cast<std::size_t>(i)], m));
                        vz = E.add(vz, E.mul(dze[static_cast<std::size_t>(i)], m));
                    }
                    if (vx == 0 && vy == 0 && vz == 0) {
                        singular = true;
                        break;
                    }
                }
            }
            if (e <= dmax) N[static_cast<std::size_t>(e - 1)] = count;
        }
        if (singular) continue;
        std::vector<BigInt> Nex(static_cast<std::size_t>(dmax));
        for (int d = 1; d <= dmax; ++d) {
            std::vector<BigInt> Nsub(N.begin(), N.begin() + d);
            Nex[static_cast<std::size_t>(d - 1)] =
                exact_degree_count(static_cast<unsigned>(d), Nsub);
        }
        for (std::size_t ci = 0; ci < cts.size(); ++ci) {
            BigInt w = 1;
            for (const auto& [d, md] : cts[ci].mult)
                for (int i = 0; i < md; ++i)
                    w *= (Nex[static_cast<std::size_t>(d - 1)] - i * d);
            totals[ci] += BigRat(w);
        }
    }
    const BigRat order(gl3_order(BigInt(static_cast<unsigned long>(q))));
    for (auto& t : totals) t /= order;
    return totals;
}

inline BigRat m1n_cubic_groupoid_mass(const FieldCtx& F, const CycleType& ct) {
    return m1n_cubic_groupoid_masses(F, {ct})[0];
}

}  // namespace curvecensus
