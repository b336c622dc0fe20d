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

// Exact interpolation of point-count data by a polynomial of prescribed
// degree, with surplus points used as consistency checks.  Counting
// functions of the moduli spaces handled here are polynomials in q (or
// polynomials corrected by a trace term); fitting census values at several
// q and demanding that extra evaluations match is the standard way to both
// discover and verify such polynomials, so failures are reported as typed
// statuses rather than exceptions.

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"

namespace curvecensus {

enum class FitStatus {
    Ok,
    InsufficientPoints,    // fewer than degree+1 samples
    DuplicateAbscissa,     // two samples share an x value
    ResidualMismatch,      // a surplus sample disagrees with the fit
    NonIntegerCoefficient, // integrality was requested and fails
    SymmetryViolation,     // palindromic coefficients were requested and fail
};

inline const char* fit_status_name(FitStatus s) {
    switch (s) {
        case FitStatus::Ok: return "ok";
        case FitStatus::InsufficientPoints: return "insufficient-points";
        case FitStatus::DuplicateAbscissa: return "duplicate-abscissa";
        case FitStatus::ResidualMismatch: return "residual-mismatch";
        case FitStatus::NonIntegerCoefficient: return "non-integer-coefficient";
        case FitStatus::SymmetryViolation: return "symmetry-violation";
    }
    return "unknown";
}

struct PolyFitResult {
    FitStatus status = FitStatus::Ok;
    std::vector<BigRat> coeffs;  // c_0 + c_1 x + ... + c_d x^d when ok
    std::string message;

    bool ok() const { return status == FitStatus::Ok; }
};

inline BigRat poly_eval_rat(const std::vector<BigRat>& coeffs, const BigInt& x) {
    BigRat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * BigRat(x) + coeffs[i];
    return acc;
}

// Render c_0..c_d as a human-readable polynomial in the given variable,
// highest degree first.  Integer coefficients print without a denominator.
inline std::string coeff_str(const BigRat& v) {
    BigRat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return rat_str(c);
}

inline std::string poly_str(const std::vector<BigRat>& coeffs,
                            const std::string& var = "q") {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        BigRat c = coeffs[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        const bool unit = (c == 1);
        if (!unit || i == 0) os << coeff_str(c);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// Fit a degree-d polynomial through the first d+1 samples (exact Gaussian
// elimination on the Vandermonde system) and check every remaining sample
// against it.  Optionally require integer coefficients and/or palindromic
// coefficients (c_i == c_{d-i}).
inline PolyFitResult poly_fit_and_check(
    const std::vector<std::pair<BigInt, BigRat>>& points, unsigned degree,
    bool require_integer_coeffs = true, bool require_palindromic = false) {
    PolyFitResult out;
    const std::size_t need = static_cast<std::size_t>(degree) + 1;
    if (points.size() < need) {
        out.status = FitStatus::InsufficientPoints;
        std::ostringstream os;
        os << "need " << need << " samples for degree " << degree << ", got "
           << points.size();
        out.message = os.str();
        return out;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) {
                out.status = FitStatus::DuplicateAbscissa;
                out.message = "duplicate abscissa " + points[i].first.get_str();
                return out;
            }

    // Augmented Vandermonde system on the first d+1 samples.
    std::vector<std::vector<BigRat>> A(need, std::vector<BigRat>(need + 1));
    for (std::size_t r = 0; r < need; ++r) {
        BigRat pw(1);
        for (std::size_t c = 0; c < need; ++c) {
            A[r][c] = pw;
            pw *= BigRat(points[r].first);
        }
        A[r][need] = points[r].second;
    }
    for (std::size_t col = 0; col < need; ++col) {
        std::size_t piv = col;
        while (piv < need && A[piv][col] == 0) ++piv;
        check_internal(piv < need, "poly_fit_and_check: singular Vandermonde "
                                   "system with distinct abscissae");
        std::swap(A[piv], A[col]);
        const BigRat inv = BigRat(1) / A[col][col];
        for (std::size_t c = col; c <= need; ++c) A[col][c] *= inv;
        for (std::size_t r = 0; r < need; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const BigRat f = A[r][col];
            for (std::size_t c = col; c <= need; ++c) A[r][c] -= f * A[col][c];
        }
    }
    out.coeffs.resize(need);
    for (std::size_t i = 0; i < need; ++i) out.coeffs[i] = A[i][need];

    for (std::size_t i = need; i < points.size(); ++i) {
        const BigRat got = poly_eval_rat(out.coeffs, points[i].first);
        if (got != points[i].second) {
            out.status = FitStatus::ResidualMismatch;
            std::ostringstream os;
            os << "sample at x=" << points[i].first.get_str() << " is "
               << rat_str(points[i].second) << " but the degree-" << degree
               << " fit gives " << rat_str(got);
            out.message = os.str();
            return out;
        }
    }
    if (require_integer_coeffs) {
        for (std::size_t i = 0; i < need; ++i)
            if (!is_integer(out.coeffs[i])) {
                out.status = FitStatus::NonIntegerCoefficient;
                std::ostringstream os;
                os << "coefficient of x^" << i << " is " << rat_str(out.coeffs[i]);
                out.message = os.str();
                return out;
            }
    }
    if (require_palindromic) {
        for (std::size_t i = 0; i < need; ++i)
            if (out.coeffs[i] != out.coeffs[need - 1 - i]) {
                out.status = FitStatus::SymmetryViolation;
                std::ostringstream os;
                os << "coefficients of x^" << i << " and x^" << (need - 1 - i)
                   << " differ: " << rat_str(out.coeffs[i]) << " vs "
                   << rat_str(out.coeffs[need - 1 - i]);
                out.message = os.str();
                return out;
            }
    }
    return out;
}

}  // namespace curvecensus
