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

// Truncated power series in q with exact rational coefficients, the
// workhorse for modular-form expansions.  A series carries its own
// precision: coefficients are stored for exponents 0 .. prec-1 and all
// operations truncate to the smaller operand precision.

#include <vector>

#include "curvecensus/bigint.hpp"
#include "curvecensus/errors.hpp"

namespace curvecensus {

class QSeries {
  public:
    QSeries() = default;
    explicit QSeries(unsigned prec) : c_(prec, BigRat(0)) {}
    QSeries(unsigned prec, std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
        c_.resize(prec, BigRat(0));
    }

    unsigned prec() const { return static_cast<unsigned>(c_.size()); }

    const BigRat& coeff(unsigned n) const {
        require_arg(n < prec(), "QSeries::coeff: index beyond precision");
        return c_[n];
    }

    void set_coeff(unsigned n, const BigRat& v) {
        require_arg(n < prec(), "QSeries::set_coeff: index beyond precision");
        c_[n] = v;
    }

    QSeries truncated(unsigned prec) const {
        require_arg(prec <= this->prec(), "QSeries::truncated: cannot extend");
        return QSeries(prec, std::vector<BigRat>(c_.begin(), c_.begin() + prec));
    }

    QSeries operator+(const QSeries& o) const {
        const unsigned p = std::min(prec(), o.prec());
        QSeries r(p);
        for (unsigned i = 0; i < p; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    QSeries operator-(const QSeries& o) const {
        const unsigned p = std::min(prec(), o.prec());
        QSeries r(p);
        for (unsigned i = 0; i < p; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    QSeries operator*(const QSeries& o) const {
        const unsigned p = std::min(prec(), o.prec());
        QSeries r(p);
        for (unsigned i = 0; i < p; ++i) {
            if (c_[i] == 0) continue;
            for (unsigned j = 0; i + j < p; ++j) {
                if (o.c_[j] == 0) continue;
                r.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return r;
    }

    QSeries scaled(const BigRat& s) const {
        QSeries r(prec());
        for (unsigned i = 0; i < prec(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    QSeries pow(unsigned e) const {
        QSeries r(prec());
        r.c_[0] = 1;
        QSeries b = *this;
        while (e) {
            if (e & 1U) r = r * b;
            b = b * b;
            e >>= 1U;
        }
        return r;
    }

    bool operator==(const QSeries& o) const {
        if (prec() != o.prec()) return false;
        return c_ == o.c_;
    }

    bool all_integral() const {
        for (const auto& v : c_)
            if (!is_integer(v)) return false;
        return true;
    }

  private:
    std::vector<BigRat> c_;
};

}  // namespace curvecensus
