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

// Foundation tests: exact arithmetic, finite fields, polynomials, Laurent
// polynomials, and the shared algebraic helpers.

#include <catch2/catch_amalgamated.hpp>

#include "curvecensus/algebra.hpp"
#include "curvecensus/bigint.hpp"
#include "curvecensus/field.hpp"
#include "curvecensus/laurent.hpp"
#include "curvecensus/polyfq.hpp"

using namespace curvecensus;

TEST_CASE("big integer helpers") {
    REQUIRE(factorial(0) == 1);
    REQUIRE(factorial(10) == 3628800);
    REQUIRE(falling_factorial(BigInt(7), 3) == 7 * 6 * 5);
    REQUIRE(falling_factorial(BigInt(3), 0) == 1);
    REQUIRE(binomial(BigInt(7), 3) == 35);
    REQUIRE(binomial(BigInt(-1), 3) == -1);
    REQUIRE(binomial(BigInt(0), 0) == 1);
    REQUIRE(bi_pow(BigInt(3), 20) == BigInt("3486784401"));
    REQUIRE(valuation(BigInt(48), BigInt(2)) == 4);
    REQUIRE(valuation(BigInt(45), BigInt(5)) == 1);
}

TEST_CASE("rational serialization is canonical") {
    REQUIRE(rat_str(BigRat(1, 2)) == "1/2");
    REQUIRE(rat_str(BigRat(5)) == "5/1");
    REQUIRE(rat_str(BigRat(-3, 6)) == "-1/2");
    REQUIRE(parse_rat("22/7") == BigRat(22, 7));
    REQUIRE(parse_rat("-10") == BigRat(-10));
    REQUIRE(parse_rat("4/6") == BigRat(2, 3));
    REQUIRE(rat_str(parse_rat("4/6")) == "2/3");
    REQUIRE_THROWS_AS(parse_rat(""), InvalidArgument);
    REQUIRE_THROWS_AS(parse_rat("a/b"), InvalidArgument);
    REQUIRE_THROWS_AS(parse_rat("1/0"), InvalidArgument);
    REQUIRE_THROWS_AS(parse_rat("1/"), InvalidArgument);
    REQUIRE(is_integer(BigRat(8, 4)));
    REQUIRE(rat_to_int(BigRat(8, 4)) == 2);
    REQUIRE(!is_integer(BigRat(1, 3)));
}

TEST_CASE("moebius and divisors") {
    const int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (unsigned long n = 1; n <= 12; ++n) REQUIRE(moebius(n) == mu[n - 1]);
    REQUIRE(divisors(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
    REQUIRE(divisors(1) == std::vector<unsigned long>{1});
    // Moebius sums vanish beyond n = 1.
    for (unsigned long n = 2; n <= 60; ++n) {
        int s = 0;
        for (unsigned long d : divisors(n)) s += moebius(d);
        REQUIRE(s == 0);
    }
}

TEST_CASE("canonical field moduli are the least irreducibles") {
    REQUIRE(FieldCtx::get(2, 2).modulus() == std::vector<std::uint32_t>{1, 1});
    REQUIRE(FieldCtx::get(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0});
    REQUIRE(FieldCtx::get(2, 4).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0});
    REQUIRE(FieldCtx::get(3, 2).modulus() == std::vector<std::uint32_t>{1, 0});
    REQUIRE(FieldCtx::get(3, 3).modulus() == std::vector<std::uint32_t>{1, 2, 0});
    REQUIRE(FieldCtx::get(5, 2).q() == 25);
    REQUIRE(FieldCtx::get(13, 2).q() == 169);
}

TEST_CASE("field axioms hold exhaustively on F_8 and F_9") {
    for (unsigned long q : {8UL, 9UL}) {
        const FieldCtx& F = FieldCtx::get_q(q);
        for (Fq a = 0; a < F.q(); ++a) {
            REQUIRE(F.add(a, 0) == a);
            REQUIRE(F.mul(a, F.one()) == a);
            REQUIRE(F.add(a, F.neg(a)) == 0);
            if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == F.one());
            for (Fq b = 0; b < F.q(); ++b) {
                REQUIRE(F.add(a, b) == F.add(b, a));
                REQUIRE(F.mul(a, b) == F.mul(b, a));
                for (Fq c = 0; c < F.q(); ++c) {
                    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    REQUIRE(F.mul(a, F.add(b, c)) ==
                            F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("frobenius, trace and characters") {
    const FieldCtx& F9 = FieldCtx::get(3, 2);
    for (Fq a = 0; a < 9; ++a) {
        REQUIRE(F9.frobenius(a) == F9.pow(a, 3));
        for (Fq b = 0; b < 9; ++b)
            REQUIRE(F9.frobenius(F9.add(a, b)) ==
                    F9.add(F9.frobenius(a), F9.frobenius(b)));
    }
    // Frobenius fixes exactly the prime field.
    int fixed = 0;
    for (Fq a = 0; a < 9; ++a)
        if (F9.frobenius(a) == a) ++fixed;
    REQUIRE(fixed == 3);

    // Trace is onto F_p with even fibers.
    std::map<std::uint32_t, int> fib;
    for (Fq a = 0; a < 9; ++a) ++fib[F9.trace(a)];
    REQUIRE(fib.size() == 3);
    for (auto& [t, n] : fib) REQUIRE(n == 3);

    // chi: multiplicative, half the units are squares.
    const FieldCtx& F25 = FieldCtx::get(5, 2);
    int squares = 0;
    for (Fq a = 1; a < 25; ++a)
        if (F25.chi(a) == 1) ++squares;
    REQUIRE(squares == 12);
    for (Fq a = 0; a < 25; ++a)
        for (Fq b = 0; b < 25; ++b)
            REQUIRE(F25.chi(F25.mul(a, b)) == F25.chi(a) * F25.chi(b));

    // char-2 square roots invert squaring.
    const FieldCtx& F16 = FieldCtx::get(2, 4);
    for (Fq a = 0; a < 16; ++a) {
        REQUIRE(F16.mul(F16.sqrt_char2(a), F16.sqrt_char2(a)) == a);
        REQUIRE(F16.trace(a) <= 1);
    }

    REQUIRE(FieldCtx::get(5, 1).from_int(-3) == 2);
    REQUIRE(FieldCtx::get(7, 1).from_int(21) == 0);
}

TEST_CASE("embeddings are canonical field homomorphisms") {
    const FieldCtx& F2 = FieldCtx::get(2, 1);
    const FieldCtx& F4 = FieldCtx::get(2, 2);
    const FieldCtx& F16 = FieldCtx::get(2, 4);
    Embedding e24(F2, F4), e216(F2, F16), e416(F4, F16);
    REQUIRE(e24(0) == 0);
    REQUIRE(e24(1) == 1);
    // Composition agrees with the direct embedding on the prime field.
    for (Fq a = 0; a < 2; ++a) REQUIRE(e416(e24(a)) == e216(a));
    // Images of F_4 units have multiplicative order dividing 3.
    for (Fq a = 1; a < 4; ++a) REQUIRE(F16.pow(e416(a), 3) == F16.one());
    // Injectivity.
    std::set<Fq> img;
    for (Fq a = 0; a < 4; ++a) img.insert(e416(a));
    REQUIRE(img.size() == 4);

    const FieldCtx& F9 = FieldCtx::get(3, 2);
    const FieldCtx& F81 = FieldCtx::get(3, 4);
    Embedding e981(F9, F81);
    for (Fq a = 0; a < 9; ++a)
        for (Fq b = 0; b < 9; ++b) {
            REQUIRE(e981(F9.mul(a, b)) == F81.mul(e981(a), e981(b)));
            REQUIRE(e981(F9.add(a, b)) == F81.add(e981(a), e981(b)));
        }

    REQUIRE_THROWS_AS(Embedding(FieldCtx::get(2, 2), FieldCtx::get(2, 3)),
                      InvalidArgument);
    REQUIRE_THROWS_AS(Embedding(FieldCtx::get(2, 1), FieldCtx::get(3, 1)),
                      InvalidArgument);
}

TEST_CASE("capacity and validation guards") {
    REQUIRE(prime_power_decompose(169) == std::make_pair(13UL, 2));
    REQUIRE(prime_power_decompose(64) == std::make_pair(2UL, 6));
    REQUIRE_THROWS_AS(prime_power_decompose(12), InvalidArgument);
    REQUIRE_THROWS_AS(prime_power_decompose(1), InvalidArgument);
    REQUIRE_THROWS_AS(FieldCtx::get(4, 1), InvalidArgument);
    REQUIRE_THROWS_AS(FieldCtx::get(2, 17), CapacityError);
}

TEST_CASE("polynomial arithmetic over F_7") {
    const FieldCtx& F = FieldCtx::get(7, 1);
    PolyFq a(F, {1, 2, 3, 4});
    PolyFq b(F, {5, 6});
    PolyFq prod = a * b;
    REQUIRE(prod.deg() == 4);
    // Evaluate-and-compare as an independent route.
    for (Fq x = 0; x < 7; ++x)
        REQUIRE(prod.eval(x) == F.mul(a.eval(x), b.eval(x)));
    auto [q, r] = a.divrem(b);
    REQUIRE((q * b + r) == a);
    REQUIRE(r.deg() < b.deg());
    // Normalization trims trailing zeros.
    REQUIRE(PolyFq(F, {1, 2, 0, 0}).deg() == 1);
    REQUIRE(PolyFq(F, {0, 0}).is_zero());
    REQUIRE(PolyFq(F, {0, 0}).deg() == -1);
}

TEST_CASE("polynomial gcd and squarefreeness") {
    const FieldCtx& F = FieldCtx::get(5, 1);
    PolyFq x1(F, {1, 1});  // x + 1
    PolyFq x2(F, {2, 1});  // x + 2
    PolyFq x3(F, {3, 1});  // x + 3
    REQUIRE(poly_gcd(x1 * x1 * x2, x1 * x3) == x1);
    REQUIRE(poly_gcd(x1 * x2, x3).deg() == 0);
    REQUIRE(poly_squarefree(x1 * x2 * x3));
    REQUIRE(!poly_squarefree(x1 * x1 * x2));

    // Characteristic-3 subtleties: derivative vanishes on cubes.
    const FieldCtx& F3 = FieldCtx::get(3, 1);
    PolyFq cube(F3, {0, 0, 0, 1});  // x^3
    REQUIRE(cube.derivative().is_zero());
    REQUIRE(!poly_squarefree(cube));
    PolyFq split(F3, {0, 2, 0, 1});  // x^3 + 2x = x(x-1)(x+1)
    REQUIRE(poly_squarefree(split));
    // d/dx x^5 = 0 over F_5.
    REQUIRE(PolyFq(F, {0, 0, 0, 0, 0, 1}).derivative().is_zero());
}

TEST_CASE("laurent polynomials: arithmetic and residues") {
    const BigRat q(7);
    LaurentSeries t = LaurentSeries::monomial(BigRat(1), 1);
    LaurentSeries kernel = t - LaurentSeries::monomial(q, -1);  // t - q/t
    LaurentSeries shifted = kernel * LaurentSeries::monomial(BigRat(1), -2);
    REQUIRE(shifted.residue() == 1);
    REQUIRE(shifted.coeff(-3) == -q);
    REQUIRE(shifted.coeff(0) == 0);

    LaurentSeries u = t + LaurentSeries::monomial(BigRat(1), -1);
    LaurentSeries u2 = u * u;
    REQUIRE(u2.coeff(2) == 1);
    REQUIRE(u2.coeff(0) == 2);
    REQUIRE(u2.coeff(-2) == 1);
    REQUIRE(u2 == u.pow(2));
    REQUIRE((u - u).is_zero());
    REQUIRE(u2.window(0, 5).coeff(-2) == 0);
    REQUIRE(u2.window(0, 5).coeff(2) == 1);
    REQUIRE(u.pow(0) == LaurentSeries::constant(BigRat(1)));
    REQUIRE(LaurentSeries::monomial(BigRat(0), 3).is_zero());
}

TEST_CASE("sl2 power traces and weil power sums") {
    // Spec lemma anchors: h_0 = 1, h_1 = t, three-term recurrence.
    REQUIRE(sl2_power_trace(0, BigInt(9), BigInt(4)) == 1);
    REQUIRE(sl2_power_trace(1, BigInt(9), BigInt(4)) == 9);
    REQUIRE(sl2_power_trace(2, BigInt(0), BigInt(2)) == -2);
    // Eigenvalues 1,1 (t=2, q=1): h_k = k+1.
    for (unsigned k = 0; k <= 12; ++k)
        REQUIRE(sl2_power_trace(k, BigInt(2), BigInt(1)) == k + 1);
    // Eigenvalues 2,3 (t=5, q=6): s_k = 2^k + 3^k.
    for (unsigned k = 0; k <= 10; ++k)
        REQUIRE(weil_power_sum(k, BigInt(5), BigInt(6)) ==
                bi_pow(BigInt(2), k) + bi_pow(BigInt(3), k));
    // (alpha - beta) h_k = alpha^(k+1) - beta^(k+1) cross-check:
    // (t^2 - 4q) h_k = s_{k+2} - q s_k  (both equal (a-b)(a^{k+1}-b^{k+1})).
    const BigInt t(3), qq(7);
    for (unsigned k = 0; k <= 15; ++k)
        REQUIRE((t * t - 4 * qq) * sl2_power_trace(k, t, qq) ==
                weil_power_sum(k + 2, t, qq) - qq * weil_power_sum(k, t, qq));
}

TEST_CASE("exact degree counts via moebius inversion") {
    // P^1 over F_2: N_e = 2^e + 1; exact-degree counts are d times the
    // number of monic irreducibles of degree d (checked against the known
    // counts 2, 1, 2, 3, 6, 9 for degrees 1..6).
    std::vector<BigInt> N;
    for (unsigned e = 1; e <= 6; ++e) N.push_back(bi_pow(BigInt(2), e) + 1);
    REQUIRE(exact_degree_count(1, N) == 3);
    REQUIRE(exact_degree_count(2, N) == 2);
    REQUIRE(exact_degree_count(3, N) == 6);
    REQUIRE(exact_degree_count(4, N) == 12);
    REQUIRE(exact_degree_count(5, N) == 30);
    REQUIRE(exact_degree_count(6, N) == 54);
    REQUIRE_THROWS_AS(exact_degree_count(7, N), InvalidArgument);
}

TEST_CASE("bernoulli numbers and zeta at negative odd integers") {
    auto B = bernoulli_list(12);
    REQUIRE(B[0] == 1);
    REQUIRE(B[1] == BigRat(1, 2));
    REQUIRE(B[2] == BigRat(1, 6));
    REQUIRE(B[3] == 0);
    REQUIRE(B[4] == BigRat(-1, 30));
    REQUIRE(B[12] == BigRat(-691, 2730));
    REQUIRE(zeta_neg_odd(1) == BigRat(-1, 12));
    REQUIRE(zeta_neg_odd(2) == BigRat(1, 120));
    REQUIRE(zeta_neg_odd(3) == BigRat(-1, 252));
    REQUIRE(zeta_neg_odd(4) == BigRat(1, 240));
    REQUIRE(symplectic_mass_constant(1) == BigRat(1, 24));
    REQUIRE(symplectic_mass_constant(2) == BigRat(1, 5760));
    REQUIRE(symplectic_mass_constant(3) == BigRat(1, 2903040));
    REQUIRE(symplectic_mass_constant(4) == BigRat(1, BigInt("1393459200")));
}

TEST_CASE("partitions and cycle types") {
    REQUIRE(partitions(0).size() == 1);
    REQUIRE(partitions(5).size() == 7);
    REQUIRE(partitions(6).size() == 11);
    REQUIRE(cycle_types(4).size() == 5);

    CycleType ct = CycleType::from_perm({1, 0, 2, 4, 5, 3});
    REQUIRE(ct.str() == "1^1 2^1 3^1");
    REQUIRE(ct.total() == 6);
    REQUIRE(ct.count(2) == 1);
    REQUIRE(ct.count(5) == 0);
    REQUIRE(!ct.is_identity());
    REQUIRE(CycleType::identity(4).is_identity());
    REQUIRE(CycleType::parse("1^1 2^1 3^1") == ct);
    REQUIRE(CycleType::parse("2,1,1") == CycleType::from_parts({2, 1, 1}));
    REQUIRE(CycleType::parse("2,1,1").str() == "1^2 2^1");
    REQUIRE(CycleType::identity(0).total() == 0);
}
