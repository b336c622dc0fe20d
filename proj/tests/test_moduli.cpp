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

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "curvecensus/algebra.hpp"
#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"
#include "curvecensus/mbar1n.hpp"
#include "curvecensus/modforms.hpp"
#include "curvecensus/moduli.hpp"
#include "curvecensus/polyfit.hpp"

using namespace curvecensus;

namespace {

// Evaluate an integer polynomial given by coefficients in descending degree.
BigInt eval_desc(const std::vector<long long>& coeffs, const BigInt& q) {
    BigInt acc = 0;
    for (long long c : coeffs) acc = acc * q + BigInt(static_cast<long>(c));
    return acc;
}

// A point of P^1 over an extension field: (x : 1) encoded as x, and the
// point at infinity (1 : 0) encoded as E.q().
using P1Point = Fq;

P1Point p1_infinity(const FieldCtx& E) { return E.q(); }

P1Point p1_frobenius_rel(const FieldCtx& E, int base_m, P1Point P) {
    if (P == E.q()) return P;
    Fq r = P;
    for (int i = 0; i < base_m; ++i) r = E.frobenius(r);
    return r;
}

// Moebius action of a GL_2 matrix (entries already in the extension field)
// on a point of P^1 over the extension.
P1Point moebius(const FieldCtx& E, const std::array<Fq, 4>& m, P1Point P) {
    Fq X, Z;
    if (P == E.q()) {
        X = E.one();
        Z = 0;
    } else {
        X = P;
        Z = E.one();
    }
    const Fq nx = E.add(E.mul(m[0], X), E.mul(m[1], Z));
    const Fq nz = E.add(E.mul(m[2], X), E.mul(m[3], Z));
    if (nz == 0) return E.q();
    return E.div(nx, nz);
}

// Golden counting polynomials (descending coefficients) for the open
// genus-1 moduli spaces with 1..7 markings.
const std::vector<std::vector<long long>> kGenus1Polys{
    {1, 0},
    {1, 0, 0},
    {1, 0, 0, -1},
    {1, 0, -1, -3, 3},
    {1, 0, -5, -1, 15, -12},
    {1, 0, -15, 25, 19, -80, 60},
    {1, 0, -35, 125, -126, -155, 490, -360},
};

const std::vector<long long> kGenus1Poly10{
    1, 0, -210, 2274, -11655, 34944, -62140, 42126, 89124, -245664, 181440};

const std::vector<long long> kGenus1Poly11{
    1,       0,       -330,    4575,    -30657, 124992,
    -336820, 584550,  -406769, -865316, 2437776, -1814400};

// Golden counting polynomials for the compactified genus-1 spaces with
// 1..6 markings; all are palindromic.
const std::vector<std::vector<long long>> kCompactPolys{
    {1, 1},
    {1, 2, 1},
    {1, 5, 5, 1},
    {1, 12, 23, 12, 1},
    {1, 27, 102, 102, 27, 1},
    {1, 58, 421, 756, 421, 58, 1},
};

}  // namespace

TEST_CASE("genus-0 counts: closed forms and equivariant products") {
    const std::vector<unsigned long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13};

    SECTION("identity twist matches the closed form") {
        for (unsigned long q : qs)
            for (int n = 3; n <= 8; ++n)
                REQUIRE(m0n_equivariant(BigInt(q), CycleType::identity(n)) ==
                        m0n_count(BigInt(q), n));
    }

    SECTION("pinned values") {
        REQUIRE(m0n_count(BigInt(5), 3) == 1);
        REQUIRE(m0n_count(BigInt(5), 4) == 3);
        REQUIRE(m0n_count(BigInt(2), 4) == 0);
        REQUIRE(m0n_count(BigInt(7), 5) == 20);
        // One full-length cycle or a (2,1) twist leaves exactly one
        // configuration class for every q.
        for (unsigned long q : qs) {
            REQUIRE(m0n_equivariant(BigInt(q), CycleType::from_parts({3})) == 1);
            REQUIRE(m0n_equivariant(BigInt(q), CycleType::from_parts({2, 1})) ==
                    1);
        }
        REQUIRE(m0n_equivariant(BigInt(2), CycleType::from_parts({2, 2})) == 0);
        REQUIRE(m0n_equivariant(BigInt(3), CycleType::from_parts({2, 2})) == 1);
        REQUIRE(m0n_equivariant(BigInt(4), CycleType::from_parts({2, 2})) == 2);
    }

    SECTION("argument validation") {
        REQUIRE_THROWS_AS(m0n_count(BigInt(5), 2), InvalidArgument);
        REQUIRE_THROWS_AS(m0n_equivariant(BigInt(5), CycleType::from_parts({2})),
                          InvalidArgument);
    }
}

TEST_CASE("genus-0 equivariant counts against brute-force Frobenius orbits") {
    for (unsigned long q : {2ul, 3ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        const FieldCtx& E2 = FieldCtx::get(F.p(), 2);
        const FieldCtx& E3 = FieldCtx::get(F.p(), 3);
        const BigInt Q(q);

        std::vector<P1Point> pts2, pts3;
        for (Fq x = 0; x < E2.q(); ++x) pts2.push_back(x);
        pts2.push_back(p1_infinity(E2));
        for (Fq x = 0; x < E3.q(); ++x) pts3.push_back(x);
        pts3.push_back(p1_infinity(E3));
        const auto frob2 = [&](P1Point P) {
            return p1_frobenius_rel(E2, F.m(), P);
        };
        const auto frob3 = [&](P1Point P) {
            return p1_frobenius_rel(E3, F.m(), P);
        };

        SECTION("tuple counts by direct enumeration, q=" + std::to_string(q)) {
            // Type (2,1): a conjugate pair plus a rational point.
            BigInt n21 = 0;
            for (P1Point P : pts2) {
                if (frob2(P) == P) continue;
                for (P1Point R : pts2)
                    if (frob2(R) == R) ++n21;
            }
            REQUIRE(n21 == m0n_equivariant(Q, CycleType::from_parts({2, 1})) *
                               pgl2_order(Q));

            // Type (2,2): two disjoint conjugate pairs, ordered.
            BigInt n22 = 0;
            for (P1Point P : pts2) {
                if (frob2(P) == P) continue;
                const P1Point P2 = frob2(P);
                for (P1Point R : pts2) {
                    if (frob2(R) == R || R == P || R == P2) continue;
                    ++n22;
                }
            }
            REQUIRE(n22 == m0n_equivariant(Q, CycleType::from_parts({2, 2})) *
                               pgl2_order(Q));

            // Type (3): one exact-degree-3 orbit.
            BigInt n3 = 0;
            for (P1Point P : pts3)
                if (frob3(P) != P) ++n3;
            REQUIRE(n3 == m0n_equivariant(Q, CycleType::from_parts({3})) *
                              pgl2_order(Q));
        }

        SECTION("PGL_2 acts freely on triples, q=" + std::to_string(q)) {
            // A configuration of type (2,1) is fixed pointwise only by the
            // scalar matrices.
            Embedding emb(F, E2);
            P1Point P = 0;
            bool found = false;
            for (P1Point cand : pts2)
                if (frob2(cand) != cand) {
                    P = cand;
                    found = true;
                    break;
                }
            REQUIRE(found);
            const std::array<P1Point, 3> config{P, frob2(P), p1_infinity(E2)};
            long fixing = 0;
            for (Fq a = 0; a < F.q(); ++a)
                for (Fq b = 0; b < F.q(); ++b)
                    for (Fq c = 0; c < F.q(); ++c)
                        for (Fq d = 0; d < F.q(); ++d) {
                            if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
                            const std::array<Fq, 4> m{emb(a), emb(b), emb(c),
                                                      emb(d)};
                            bool fixes = true;
                            for (P1Point pt : config)
                                if (moebius(E2, m, pt) != pt) {
                                    fixes = false;
                                    break;
                                }
                            if (fixes) ++fixing;
                        }
            REQUIRE(fixing == static_cast<long>(q) - 1);
        }
    }
}

TEST_CASE("m1n: golden polynomials for up to seven markings") {
    const std::vector<unsigned long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25};
    for (unsigned long q : qs) {
        const FieldCtx& F = FieldCtx::get_q(q);
        const BigInt Q(q);
        for (std::size_t i = 0; i < kGenus1Polys.size(); ++i) {
            const int n = static_cast<int>(i) + 1;
            INFO("q=" << q << " n=" << n);
            REQUIRE(m1n_count(F, n) == eval_desc(kGenus1Polys[i], Q));
        }
    }
    // Spot values quoted directly: one, three and four markings.
    REQUIRE(m1n_count(FieldCtx::get_q(2), 1) == 2);
    REQUIRE(m1n_count(FieldCtx::get_q(5), 1) == 5);
    REQUIRE(m1n_count(FieldCtx::get_q(2), 3) == 7);
    REQUIRE(m1n_count(FieldCtx::get_q(3), 4) == 66);
}

TEST_CASE("m1n at ten and eleven markings brings in the discriminant form") {
    // Ten markings: still a pure polynomial in q.
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        REQUIRE(m1n_count(F, 10) == eval_desc(kGenus1Poly10, BigInt(q)));
    }
    REQUIRE(m1n_count(FieldCtx::get_q(5), 10) == 90720);

    // Eleven markings: the polynomial is corrected by the coefficient of
    // the weight-12 discriminant cusp form (primes only; at prime powers
    // the correction is the eigenvalue power sum, not the q-th
    // coefficient).
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        const FieldCtx& F = FieldCtx::get_q(p);
        const BigInt expected =
            eval_desc(kGenus1Poly11, BigInt(p)) -
            ramanujan_tau(static_cast<unsigned>(p));
        INFO("p=" << p);
        REQUIRE(m1n_count(F, 11) == expected);
    }
    REQUIRE(m1n_count(FieldCtx::get_q(5), 11) == 0);
}

TEST_CASE("m1n: residue extraction agrees with the census route") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 9ul, 16ul, 25ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        for (int n = 1; n <= 7; ++n) {
            INFO("q=" << q << " n=" << n);
            REQUIRE(m1n_residue_route(F, n) == m1n_count(F, n));
        }
    }
    for (unsigned long q : {2ul, 3ul, 5ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        for (int n = 8; n <= 11; ++n) {
            INFO("q=" << q << " n=" << n);
            REQUIRE(m1n_residue_route(F, n) == m1n_count(F, n));
        }
    }
}

TEST_CASE("twisted m1n counts against the plane-cubic groupoid") {
    // Every cycle type with up to 4 markings at q=2 and up to 3 at q=3:
    // the automorphism-weighted census sum must reproduce the smooth
    // plane-cubic count weighted by 1/#GL_3.
    for (unsigned long q : {2ul, 3ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        const int nmax = (q == 2) ? 4 : 3;
        std::vector<CycleType> cts;
        for (int n = 1; n <= nmax; ++n)
            for (const CycleType& ct : cycle_types(n)) cts.push_back(ct);
        const std::vector<BigRat> oracle = m1n_cubic_groupoid_masses(F, cts);
        for (std::size_t i = 0; i < cts.size(); ++i) {
            INFO("q=" << q << " type=" << cts[i].str());
            REQUIRE(oracle[i] == m1n_configuration_mass(F, cts[i]));
        }
    }

    SECTION("twisted counts are integers and nonnegative at small q") {
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
            const FieldCtx& F = FieldCtx::get_q(q);
            for (int n = 1; n <= 5; ++n)
                for (const CycleType& ct : cycle_types(n)) {
                    INFO("q=" << q << " type=" << ct.str());
                    REQUIRE(m1n_twisted(F, ct) >= 0);
                }
        }
    }

    SECTION("capacity guard") {
        REQUIRE_THROWS_AS(
            m1n_cubic_groupoid_mass(FieldCtx::get_q(5), CycleType::identity(2)),
            CapacityError);
        REQUIRE_THROWS_AS(
            m1n_cubic_groupoid_mass(FieldCtx::get_q(3), CycleType::identity(4)),
            CapacityError);
    }
}

TEST_CASE("polyfit: exact interpolation with typed failures") {
    SECTION("fits the four-marking counting polynomial") {
        std::vector<std::pair<BigInt, BigRat>> pts;
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
            const FieldCtx& F = FieldCtx::get_q(q);
            pts.emplace_back(BigInt(q), BigRat(m1n_count(F, 4)));
        }
        const PolyFitResult fit = poly_fit_and_check(pts, 4);
        REQUIRE(fit.ok());
        REQUIRE(fit.coeffs.size() == 5);
        REQUIRE(fit.coeffs[4] == 1);
        REQUIRE(fit.coeffs[3] == 0);
        REQUIRE(fit.coeffs[2] == -1);
        REQUIRE(fit.coeffs[1] == -3);
        REQUIRE(fit.coeffs[0] == 3);
        REQUIRE(poly_str(fit.coeffs) == "q^4 - q^2 - 3*q + 3");
    }

    SECTION("typed failures") {
        std::vector<std::pair<BigInt, BigRat>> pts;
        for (long x = 1; x <= 5; ++x)
            pts.emplace_back(BigInt(x), BigRat(x * x));
        REQUIRE(poly_fit_and_check(pts, 2).ok());
        REQUIRE(poly_fit_and_check(pts, 4).ok());  // exactly determined
        REQUIRE(poly_fit_and_check(pts, 5).status ==
                FitStatus::InsufficientPoints);

        auto bad = pts;
        bad[4].second += 1;
        REQUIRE(poly_fit_and_check(bad, 2).status ==
                FitStatus::ResidualMismatch);

        auto dup = pts;
        dup[1].first = dup[0].first;
        REQUIRE(poly_fit_and_check(dup, 2).status ==
                FitStatus::DuplicateAbscissa);

        std::vector<std::pair<BigInt, BigRat>> half;
        for (long x = 1; x <= 4; ++x)
            half.emplace_back(BigInt(x), BigRat(x * x) / 2);
        REQUIRE(poly_fit_and_check(half, 2).status ==
                FitStatus::NonIntegerCoefficient);
        REQUIRE(poly_fit_and_check(half, 2, false).ok());

        std::vector<std::pair<BigInt, BigRat>> asym;
        for (long x = 1; x <= 4; ++x)
            asym.emplace_back(BigInt(x), BigRat(x * x + x + 2));
        REQUIRE(poly_fit_and_check(asym, 2, true, true).status ==
                FitStatus::SymmetryViolation);
        std::vector<std::pair<BigInt, BigRat>> sym;
        for (long x = 1; x <= 4; ++x)
            sym.emplace_back(BigInt(x), BigRat(x * x + x + 1));
        REQUIRE(poly_fit_and_check(sym, 2, true, true).ok());
    }
}

TEST_CASE("compactified genus-1 counts follow the golden polynomials") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 9ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        const BigInt Q(q);
        for (int n = 1; n <= 4; ++n) {
            INFO("q=" << q << " n=" << n);
            REQUIRE(mbar1n_count(F, n) ==
                    eval_desc(kCompactPolys[static_cast<std::size_t>(n - 1)], Q));
        }
    }
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        REQUIRE(mbar1n_count(F, 5) == eval_desc(kCompactPolys[4], BigInt(q)));
    }
    for (unsigned long q : {2ul, 3ul, 5ul}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        REQUIRE(mbar1n_count(F, 6) == eval_desc(kCompactPolys[5], BigInt(q)));
    }

    SECTION("palindromic fit straight from the graph sum") {
        std::vector<std::pair<BigInt, BigRat>> pts;
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
            const FieldCtx& F = FieldCtx::get_q(q);
            pts.emplace_back(BigInt(q), BigRat(mbar1n_count(F, 4)));
        }
        const PolyFitResult fit = poly_fit_and_check(pts, 4, true, true);
        REQUIRE(fit.ok());
        REQUIRE(poly_str(fit.coeffs) ==
                "q^4 + 12*q^3 + 23*q^2 + 12*q + 1");
    }

    SECTION("capacity guard") {
        REQUIRE_THROWS_AS(mbar1n_count(FieldCtx::get_q(2), 9), CapacityError);
        REQUIRE_THROWS_AS(mbar1n_count(FieldCtx::get_q(2), 0), InvalidArgument);
    }
}
