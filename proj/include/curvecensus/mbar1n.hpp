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

// Point counts of the compactified moduli space of stable n-pointed genus-1
// curves, assembled from the open strata by summing over stable dual
// graphs.  A genus-1 stable graph is either
//
//   * a tree with one genus-1 vertex and genus-0 subtrees hanging off it, or
//   * a unicyclic graph: a cycle of r >= 1 genus-0 vertices (r = 1 is a
//     self-loop, r = 2 a pair of vertices joined by two edges), again with
//     genus-0 subtrees and legs decorating the cycle vertices.
//
// Every vertex carries a disjoint, nonempty set of legs-and-subtrees, so a
// decorated graph has automorphism group Z/2 exactly twice: the self-loop
// flip (r = 1) and the parallel-edge swap (r = 2); all other graphs are
// rigid.  Quotient-stack counting then averages the plain count with the
// count twisted by the induced transposition of two marking slots on the
// affected genus-0 vertices, which is m0n_equivariant with one 2-cycle.
//
// Legs are tracked as bitmasks; subtree generating sums and partition sums
// are tabulated over subsets once per call.

#include <cstdint>
#include <functional>
#include <vector>

#include "curvecensus/algebra.hpp"
#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"
#include "curvecensus/moduli.hpp"

namespace curvecensus {

inline BigInt mbar1n_count(const FieldCtx& F, int n) {
    require_arg(n >= 1, "mbar1n_count: need n >= 1 markings");
    require_capacity(n <= 8, "mbar1n_count: graph sum supported for n <= 8");
    const BigInt q(static_cast<unsigned long>(F.q()));
    const int full = (1 << n) - 1;

    const int popmax = n;
    // sub[S]: sum over rooted genus-0 subtrees carrying exactly the legs S
    // (root valence counts the edge to the parent).
    // part[S][k]: sum over unordered partitions of S into k nonempty blocks
    // of the product of sub over the blocks.
    std::vector<BigInt> sub(static_cast<std::size_t>(full) + 1, BigInt(0));
    std::vector<std::vector<BigInt>> part(static_cast<std::size_t>(full) + 1);
    part[0] = {BigInt(1)};  // the empty partition

    // m0n_count(q, v) for the valences that occur.
    std::vector<BigInt> m0(static_cast<std::size_t>(popmax) + 3, BigInt(0));
    for (int v = 3; v <= popmax + 2; ++v)
        m0[static_cast<std::size_t>(v)] = m0n_count(q, v);

    const auto popcount = [](int s) { return __builtin_popcount(static_cast<unsigned>(s)); };

    for (int S = 1; S <= full; ++S) {
        const int sz = popcount(S);
        // Partition sums for k >= 2 use only proper subsets of S.
        std::vector<BigInt> pk(static_cast<std::size_t>(sz) + 1, BigInt(0));
        const int anchor = S & (-S);
        for (int k = 2; k <= sz; ++k) {
            BigInt acc = 0;
            // First block: any submask of S containing the anchor bit.
            const int rest0 = S ^ anchor;
            for (int T0 = rest0;; T0 = (T0 - 1) & rest0) {
                const int T = T0 | anchor;
                const int R = S & ~T;
                const auto& pr = part[static_cast<std::size_t>(R)];
                if (static_cast<std::size_t>(k - 1) < pr.size() && sub[static_cast<std::size_t>(T)] != 0 &&
                    pr[static_cast<std::size_t>(k - 1)] != 0)
                    acc += sub[static_cast<std::size_t>(T)] * pr[static_cast<std::size_t>(k - 1)];
                if (T0 == 0) break;
            }
            pk[static_cast<std::size_t>(k)] = acc;
        }
        // Subtree sum at S: root takes legs L and k child blocks, valence
        // 1 + |L| + k >= 3.
        BigInt s = 0;
        for (int L = S;; L = (L - 1) & S) {
            const int R = S & ~L;
            const int lsz = popcount(L);
            const int rsz = popcount(R);
            for (int k = (R == 0 ? 0 : 1); k <= rsz; ++k) {
                const int val = 1 + lsz + k;
                if (val < 3) continue;
                const BigInt* pkv;
                if (R == S) {
                    pkv = &pk[static_cast<std::size_t>(k)];
                } else {
                    const auto& pr = part[static_cast<std::size_t>(R)];
                    if (static_cast<std::size_t>(k) >= pr.size()) continue;
                    pkv = &pr[static_cast<std::size_t>(k)];
                }
                if (*pkv != 0) s += m0[static_cast<std::size_t>(val)] * (*pkv);
            }
            if (L == 0) break;
        }
        sub[static_cast<std::size_t>(S)] = s;
        pk[1] = s;  // one block: the whole of S as a single subtree
        part[static_cast<std::size_t>(S)] = std::move(pk);
    }

    // Tree graphs: the genus-1 vertex takes legs L and k subtrees.
    BigRat total(0);
    for (int L = full;; L = (L - 1) & full) {
        const int R = full & ~L;
        const int lsz = popcount(L);
        const auto& pr = part[static_cast<std::size_t>(R)];
        for (int k = 0; k < static_cast<int>(pr.size()); ++k) {
            const int val = lsz + k;
            if (val < 1 || pr[static_cast<std::size_t>(k)] == 0) continue;
            total += BigRat(m1n_count(F, val) * pr[static_cast<std::size_t>(k)]);
        }
        if (L == 0) break;
    }

    // Decoration sums for a cycle vertex whose leg set is G: valence is
    // 2 (cycle flags) + |L| + k.  sid is the plain count, ssw the count
    // twisted by swapping the two cycle flags.
    std::vector<BigInt> sid(static_cast<std::size_t>(full) + 1, BigInt(0));
    std::vector<BigInt> ssw(static_cast<std::size_t>(full) + 1, BigInt(0));
    for (int G = 1; G <= full; ++G) {
        BigInt aid = 0, asw = 0;
        for (int L = G;; L = (L - 1) & G) {
            const int R = G & ~L;
            const int lsz = popcount(L);
            const auto& pr = part[static_cast<std::size_t>(R)];
            for (int k = 0; k < static_cast<int>(pr.size()); ++k) {
                if (lsz + k < 1 || pr[static_cast<std::size_t>(k)] == 0) continue;
                const int val = 2 + lsz + k;
                aid += m0[static_cast<std::size_t>(val)] * pr[static_cast<std::size_t>(k)];
                CycleType tw;
                tw.mult[2] = 1;
                if (lsz + k > 0) tw.mult[1] = lsz + k;
                asw += m0n_equivariant(q, tw) * pr[static_cast<std::size_t>(k)];
            }
            if (L == 0) break;
        }
        sid[static_cast<std::size_t>(G)] = aid;
        ssw[static_cast<std::size_t>(G)] = asw;
    }

    // r = 1: one genus-0 vertex with a self-loop; average over the loop flip.
    total += BigRat(sid[static_cast<std::size_t>(full)] +
                    ssw[static_cast<std::size_t>(full)]) /
             BigRat(2);

    // r = 2: two vertices joined by two parallel edges; average over the
    // edge swap, which twists both vertices at once.  The vertex containing
    // leg 0 determines the unordered pair.
    for (int G1 = full;; G1 = (G1 - 1) & full) {
        if (G1 & 1) {
            const int G2 = full & ~G1;
            if (G2 != 0) {
                total += (BigRat(sid[static_cast<std::size_t>(G1)] *
                                 sid[static_cast<std::size_t>(G2)]) +
                          BigRat(ssw[static_cast<std::size_t>(G1)] *
                                 ssw[static_cast<std::size_t>(G2)])) /
                         BigRat(2);
            }
        }
        if (G1 == 0) break;
    }

    // r >= 3: rigid necklaces of leg groups.  Rotations are killed by
    // anchoring leg 0 in the first group; reflections identify a sequence
    // of the remaining groups with its reverse, and the two can never be
    // equal, so keep the lexicographically smaller one.
    if (n >= 1) {
        std::vector<int> blocks;
        BigInt neck = 0;
        std::function<void(int, const BigInt&)> rec = [&](int rest,
                                                          const BigInt& prod) {
            if (rest == 0) {
                if (blocks.size() >= 2) {
                    const std::size_t L = blocks.size();
                    for (std::size_t i = 0; i < L; ++i) {
                        if (blocks[i] < blocks[L - 1 - i]) {
                            neck += prod;
                            break;
                        }
                        if (blocks[i] > blocks[L - 1 - i]) break;
                    }
                }
                return;
            }
            for (int T = rest;; T = (T - 1) & rest) {
                if (T != 0) {
                    blocks.push_back(T);
                    rec(rest & ~T, prod * sid[static_cast<std::size_t>(T)]);
                    blocks.pop_back();
                }
                if (T == 0) break;
            }
        };
        for (int G1 = full;; G1 = (G1 - 1) & full) {
            if ((G1 & 1) && G1 != full)
                rec(full & ~G1, sid[static_cast<std::size_t>(G1)]);
            if (G1 == 0) break;
        }
        total += BigRat(neck);
    }

    check_internal(is_integer(total),
                   "mbar1n_count: non-integer graph-sum total");
    return rat_to_int(total);
}

}  // namespace curvecensus
