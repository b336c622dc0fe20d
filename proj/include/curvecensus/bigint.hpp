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

// Exact integer and rational arithmetic.
//
// Every quantity in this library is exact: point counts and traces are
// arbitrary-precision integers, masses (automorphism-weighted counts) are
// arbitrary-precision rationals.  GMP supplies the arithmetic; this header
// pins down the canonical textual form "numerator/denominator" used by the
// cache and report writers, plus the handful of combinatorial helpers
// (factorials, binomials, falling factorials, Moebius mu) that the counting
// formulas lean on.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "curvecensus/errors.hpp"

namespace curvecensus {

using BigInt = mpz_class;
using BigRat = mpq_class;

// x^e for a non-negative machine exponent.
inline BigInt bi_pow(const BigInt& x, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// x (x-1) ... (x-k+1); the empty product for k = 0.
inline BigInt falling_factorial(const BigInt& x, unsigned long k) {
    BigInt r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= (x - static_cast<long>(i));
    return r;
}

// Binomial coefficient with an arbitrary integer on top; always an integer.
inline BigInt binomial(const BigInt& x, unsigned long k) {
    BigInt num = falling_factorial(x, k);
    BigInt den = factorial(k);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    check_internal(r == 0, "binomial: falling factorial not divisible by k!");
    return q;
}

// Kronecker symbol (a|n), the fully extended Legendre/Jacobi symbol.
inline int kronecker(const BigInt& a, const BigInt& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

// p-adic valuation of n != 0.
inline int valuation(BigInt n, const BigInt& p) {
    require_arg(n != 0, "valuation: argument must be nonzero");
    require_arg(p >= 2, "valuation: p must be >= 2");
    int v = 0;
    BigInt q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

// Moebius mu via trial division; intended for small n (cycle lengths, degrees).
inline int moebius(unsigned long n) {
    require_arg(n >= 1, "moebius: n must be >= 1");
    int mu = 1;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<unsigned long> divisors(unsigned long n) {
    require_arg(n >= 1, "divisors: n must be >= 1");
    std::vector<unsigned long> lo, hi;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

// True when the rational is integral.  GMP does not canonicalize rationals
// built directly from a (num, den) pair, so normalize a copy first.
inline bool is_integer(const BigRat& r) {
    BigRat c = r;
    c.canonicalize();
    return mpz_cmp_ui(c.get_den().get_mpz_t(), 1) == 0;
}

// Integral rational -> BigInt; checked.
inline BigInt rat_to_int(const BigRat& r) {
    BigRat c = r;
    c.canonicalize();
    check_internal(mpz_cmp_ui(c.get_den().get_mpz_t(), 1) == 0,
                   "rat_to_int: value is not an integer");
    return c.get_num();
}

// Canonical textual form used by the cache and report writers: always
// "num/den" with den > 0 and gcd(num, den) = 1, even for integers ("5/1").
// One unambiguous shape keeps byte-identical reruns trivially comparable.
inline std::string rat_str(const BigRat& r) {
    BigRat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "a/b" or a bare integer "a".
inline BigRat parse_rat(const std::string& s) {
    require_arg(!s.empty(), "parse_rat: empty string");
    const auto slash = s.find('/');
    const auto check_digits = [&](const std::string& t) {
        require_arg(!t.empty(), "parse_rat: malformed rational '" + s + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        require_arg(i < t.size(), "parse_rat: malformed rational '" + s + "'");
        for (; i < t.size(); ++i)
            require_arg(t[i] >= '0' && t[i] <= '9',
                        "parse_rat: malformed rational '" + s + "'");
    };
    BigRat r;
    if (slash == std::string::npos) {
        check_digits(s);
        r = BigRat(BigInt(s, 10));
    } else {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        check_digits(num);
        check_digits(den);
        BigInt d(den, 10);
        require_arg(d != 0, "parse_rat: zero denominator in '" + s + "'");
        r = BigRat(BigInt(num, 10), d);
    }
    r.canonicalize();
    return r;
}

}  // namespace curvecensus
