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

// Shared algebraic building blocks:
//
//  * the three-term "power trace" recurrences attached to a Frobenius pair
//    (alpha, beta) with alpha + beta = t, alpha beta = q:
//      - sl2_power_trace  h_k = (alpha^(k+1) - beta^(k+1)) / (alpha - beta)
//      - weil_power_sum   s_k = alpha^k + beta^k
//  * exact-degree point counts via Moebius inversion,
//  * Bernoulli numbers, zeta values at negative odd integers, and the
//    rational masses built from them,
//  * integer partitions and permutation cycle types.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"

namespace curvecensus {

// h_k(t, q): h_0 = 1, h_1 = t, h_k = t h_{k-1} - q h_{k-2}.  This is the
// trace of the k-th symmetric power of a 2x2 matrix with trace t and
// determinant q (a Chebyshev-like sequence).
inline BigInt sl2_power_trace(unsigned k, const BigInt& t, const BigInt& q) {
    BigInt prev = 0, cur = 1;  // h_{-1}, h_0
    for (unsigned i = 0; i < k; ++i) {
        BigInt next = t * cur - q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// s_k(t, q): s_0 = 2, s_1 = t, s_k = t s_{k-1} - q s_{k-2}; the k-th power
// sum of the two Frobenius eigenvalues.
inline BigInt weil_power_sum(unsigned k, const BigInt& t, const BigInt& q) {
    if (k == 0) return 2;
    BigInt prev = 2, cur = t;  // s_0, s_1
    for (unsigned i = 1; i < k; ++i) {
        BigInt next = t * cur - q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Given N_e = #X(F_{q^e}) for all e | d, the number of points of exact
// degree d (closed points of degree d counted with all their conjugates).
// Always divisible by d; checked.
inline BigInt exact_degree_count(unsigned d, const std::vector<BigInt>& N) {
    require_arg(N.size() >= d, "exact_degree_count: need N_e for all e <= d");
    BigInt b = 0;
    for (unsigned long e : divisors(d))
        b += BigInt(moebius(d / e)) * N[static_cast<std::size_t>(e - 1)];
    BigInt qt, rm;
    mpz_tdiv_qr(qt.get_mpz_t(), rm.get_mpz_t(), b.get_mpz_t(), BigInt(d).get_mpz_t());
    check_internal(rm == 0, "exact_degree_count: count not divisible by degree");
    return b;
}

// Bernoulli numbers B_0..B_n by the Akiyama-Tanigawa algorithm (convention
// B_1 = +1/2; only even indices are consumed downstream).
inline std::vector<BigRat> bernoulli_list(unsigned n) {
    std::vector<BigRat> a(n + 1), B(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = BigRat(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = BigRat(j) * (a[j - 1] - a[j]);
        B[m] = a[0];
    }
    return B;
}

// zeta(1 - 2k) = -B_{2k} / (2k) for k >= 1.
inline BigRat zeta_neg_odd(unsigned k) {
    require_arg(k >= 1, "zeta_neg_odd: k must be >= 1");
    auto B = bernoulli_list(2 * k);
    return -B[2 * k] / BigRat(2 * k);
}

// The positive rational 2^(-g) * prod_{k=1..g} |zeta(1-2k)|, the local mass
// constant appearing in the superspecial counting formulas; its first values
// are 1/24, 1/5760, 1/2903040, 1/1393459200.
inline BigRat symplectic_mass_constant(unsigned g) {
    require_arg(g >= 1, "symplectic_mass_constant: g must be >= 1");
    BigRat prod(1);
    for (unsigned k = 1; k <= g; ++k) {
        BigRat z = zeta_neg_odd(k);
        if (z < 0) z = -z;
        prod *= z;
    }
    return prod / BigRat(BigInt(1) << g);
}

// ---------------------------------------------------------------------------
// Cycle types and partitions.

// A permutation's cycle type as multiplicities: mult[d] = number of d-cycles.
struct CycleType {
    std::map<int, int> mult;

    CycleType() = default;

    static CycleType identity(int n) {
        CycleType ct;
        if (n > 0) ct.mult[1] = n;
        return ct;
    }

    // From a list of cycle lengths, e.g. {2, 1, 1}.
    static CycleType from_parts(const std::vector<int>& parts) {
        CycleType ct;
        for (int p : parts) {
            require_arg(p >= 1, "CycleType: parts must be positive");
            ++ct.mult[p];
        }
        return ct;
    }

    // From a permutation given as images perm[i] in 0..n-1.
    static CycleType from_perm(const std::vector<int>& perm) {
        const int n = static_cast<int>(perm.size());
        std::vector<char> seen(perm.size(), 0);
        CycleType ct;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0, j = i;
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                j = perm[static_cast<std::size_t>(j)];
                ++len;
            }
            ++ct.mult[len];
        }
        return ct;
    }

    int total() const {
        int n = 0;
        for (auto& [d, m] : mult) n += d * m;
        return n;
    }

    int count(int d) const {
        auto it = mult.find(d);
        return it == mult.end() ? 0 : it->second;
    }

    bool is_identity() const {
        return mult.empty() || (mult.size() == 1 && mult.begin()->first == 1);
    }

    bool operator==(const CycleType& o) const { return mult == o.mult; }
    bool operator<(const CycleType& o) const { return mult < o.mult; }

    // Canonical form "1^2 3^1": ascending cycle lengths with multiplicities.
    std::string str() const {
        if (mult.empty()) return "-";
        std::string s;
        for (auto& [d, m] : mult) {
            if (!s.empty()) s += " ";
            s += std::to_string(d) + "^" + std::to_string(m);
        }
        return s;
    }

    // Parse the canonical form; also accepts comma-separated parts "2,1,1".
    static CycleType parse(const std::string& text) {
        CycleType ct;
        if (text == "-" || text.empty()) return ct;
        if (text.find('^') == std::string::npos) {
            std::vector<int> parts;
            std::size_t pos = 0;
            while (pos < text.size()) {
                std::size_t next = text.find(',', pos);
                if (next == std::string::npos) next = text.size();
                parts.push_back(std::stoi(text.substr(pos, next - pos)));
                pos = next + 1;
            }
            return from_parts(parts);
        }
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t sp = text.find(' ', pos);
            if (sp == std::string::npos) sp = text.size();
            const std::string item = text.substr(pos, sp - pos);
            const std::size_t caret = item.find('^');
            require_arg(caret != std::string::npos,
                        "CycleType::parse: malformed item '" + item + "'");
            const int d = std::stoi(item.substr(0, caret));
            const int m = std::stoi(item.substr(caret + 1));
            require_arg(d >= 1 && m >= 1, "CycleType::parse: bad values");
            ct.mult[d] += m;
            pos = sp + 1;
        }
        return ct;
    }
};

// All partitions of n as descending part lists (lexicographically descending
// generation order); partitions(0) = { {} }.
inline std::vector<std::vector<int>> partitions(int n) {
    require_arg(n >= 0, "partitions: n must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Recursive descent with a max-part bound.
    struct Rec {
        std::vector<std::vector<int>>& out;
        std::vector<int>& cur;
        void go(int rest, int maxpart) {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int part = std::min(rest, maxpart); part >= 1; --part) {
                cur.push_back(part);
                go(rest - part, part);
                cur.pop_back();
            }
        }
    } rec{out, cur};
    rec.go(n, n == 0 ? 1 : n);
    return out;
}

// All cycle types of S_n.
inline std::vector<CycleType> cycle_types(int n) {
    std::vector<CycleType> out;
    for (const auto& parts : partitions(n)) out.push_back(CycleType::from_parts(parts));
    return out;
}

}  // namespace curvecensus
