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

// Command-line front end for the census engine.  Subcommands print TSV
// tables to stdout (comment lines start with '#').  Exit codes: 0 success,
// 1 cross-check mismatch or internal failure, 2 usage error, 3 a request
// beyond the supported exact-computation capacity.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvecensus/algebra.hpp"
#include "curvecensus/bigint.hpp"
#include "curvecensus/census_g1.hpp"
#include "curvecensus/errors.hpp"
#include "curvecensus/field.hpp"
#include "curvecensus/mbar1n.hpp"
#include "curvecensus/modforms.hpp"
#include "curvecensus/moduli.hpp"
#include "curvecensus/polyfit.hpp"

namespace cc = curvecensus;

namespace {

int g_failures = 0;

void check_line(bool ok, const std::string& what) {
    std::cout << (ok ? "ok" : "FAIL") << ": " << what << "\n";
    if (!ok) ++g_failures;
}

cc::CycleType parse_type_arg(const std::string& s, int n) {
    if (s.empty()) return cc::CycleType::identity(n);
    cc::CycleType ct = cc::CycleType::parse(s);
    cc::require_arg(ct.total() == n,
                    "--type: cycle lengths must sum to the marking count");
    return ct;
}

int cmd_census_g1(unsigned long q, bool by_trace, bool by_j) {
    const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
    const cc::EllipticCensus& census = cc::census_g1(F);
    if (by_trace) {
        std::cout << "# trace\tmass\n";
        for (const auto& [t, m] : census.mass_by_trace())
            std::cout << t.get_str() << "\t" << cc::coeff_str(m) << "\n";
    } else if (by_j) {
        std::cout << "# j\tmass\n";
        for (const auto& [j, m] : census.mass_by_j())
            std::cout << j << "\t" << cc::coeff_str(m) << "\n";
    } else {
        std::cout << "# a1\ta2\ta3\ta4\ta6\tN1\ttrace\taut\tj\tmass\n";
        for (const auto& cls : census.classes) {
            for (int i = 0; i < 5; ++i) std::cout << cls.model[static_cast<std::size_t>(i)] << "\t";
            std::cout << cls.n1.get_str() << "\t" << cls.tr.get_str() << "\t"
                      << cls.aut << "\t" << cls.j << "\t"
                      << cc::coeff_str(cls.mass()) << "\n";
        }
    }
    std::cout << "# total_mass\t" << cc::coeff_str(census.total_mass()) << "\n";
    return 0;
}

int cmd_sigma(unsigned long q, unsigned kmax, bool explain) {
    const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
    if (explain)
        std::cout << "# route: automorphism-weighted power-trace sums over "
                     "the elliptic census\n";
    std::cout << "# k\tsigma_k\n";
    for (unsigned k = 0; k <= kmax; ++k)
        std::cout << k << "\t" << cc::sigma_k(F, k).get_str() << "\n";
    return 0;
}

int cmd_trace(unsigned weight, unsigned long p, bool dim_only) {
    cc::require_arg(weight >= 4 && weight % 2 == 0,
                    "trace: weight must be even and at least 4");
    if (dim_only) {
        std::cout << cc::cusp_dim(weight) << "\n";
        return 0;
    }
    std::cout << cc::hecke_trace(weight, static_cast<unsigned>(p)).get_str()
              << "\n";
    return 0;
}

int cmd_m1n(unsigned long q, int n, const std::string& type,
            const std::string& route, bool explain) {
    const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
    const cc::CycleType ct = parse_type_arg(type, n);
    if (route == "direct") {
        if (explain)
            std::cout << "# route: automorphism-weighted census sum, first "
                         "fixed marking anchored as the origin\n";
        std::cout << cc::m1n_twisted(F, ct).get_str() << "\n";
    } else if (route == "residue") {
        cc::require_arg(ct.is_identity(),
                        "m1n: the residue route applies to the identity "
                        "twist only");
        if (explain)
            std::cout << "# route: residue extraction from the sigma "
                         "generating kernel\n";
        std::cout << cc::m1n_residue_route(F, n).get_str() << "\n";
    } else if (route == "cubic") {
        if (explain)
            std::cout << "# route: smooth plane cubic groupoid weighted by "
                         "1/#GL_3(F_q); unanchored configuration mass\n";
        std::cout << cc::coeff_str(cc::m1n_cubic_groupoid_mass(F, ct)) << "\n";
    } else {
        cc::require_arg(false, "m1n: --route must be direct, residue or cubic");
    }
    return 0;
}

int cmd_mbar1n(unsigned long q, int n, bool explain) {
    const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
    if (explain)
        std::cout << "# route: stable-graph assembly over the open census "
                     "strata with Z/2 edge twists\n";
    std::cout << cc::mbar1n_count(F, n).get_str() << "\n";
    return 0;
}

int cmd_fitpoly(const std::string& path, unsigned degree, bool rational,
                bool palindrome, const std::string& var) {
    std::ifstream in(path);
    cc::require_arg(static_cast<bool>(in), "fitpoly: cannot open " + path);
    std::vector<std::pair<cc::BigInt, cc::BigRat>> pts;
    std::string line;
    while (std::getline(in, line)) {
        const auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream is(line);
        std::string xs, vs;
        if (!(is >> xs >> vs)) continue;
        pts.emplace_back(cc::BigInt(xs), cc::parse_rat(vs));
    }
    const cc::PolyFitResult fit =
        cc::poly_fit_and_check(pts, degree, !rational, palindrome);
    if (!fit.ok()) {
        std::cout << "unfit\t" << cc::fit_status_name(fit.status) << "\t"
                  << fit.message << "\n";
        return 1;
    }
    std::cout << cc::poly_str(fit.coeffs, var) << "\n";
    return 0;
}

int cmd_verify(bool deep) {
    using cc::BigInt;
    using cc::BigRat;

    std::vector<unsigned long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13};
    if (deep) {
        qs.push_back(16);
        qs.push_back(25);
    }
    for (unsigned long q : qs) {
        const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
        const cc::EllipticCensus& census = cc::census_g1(F);
        bool ok = census.total_mass() == BigRat(BigInt(q));
        for (const auto& [j, m] : census.mass_by_j())
            ok = ok && m == 1;
        check_line(ok, "elliptic census mass identities over F_" +
                           std::to_string(q));
    }
    for (unsigned long q : {2ul, 3ul, 5ul}) {
        const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
        bool ok = cc::sigma_k(F, 0) == -BigInt(q);
        for (unsigned k = 1; k <= 15; k += 2) ok = ok && cc::sigma_k(F, k) == 0;
        check_line(ok, "sigma_k normalization and odd vanishing over F_" +
                           std::to_string(q));
    }
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        const cc::FieldCtx& F = cc::FieldCtx::get_q(p);
        bool ok = true;
        for (unsigned k = 2; k <= 10; k += 2)
            ok = ok && cc::sigma_k(F, k) ==
                           cc::hecke_trace(k + 2, static_cast<unsigned>(p)) + 1;
        check_line(ok, "census power sums match cusp-form traces at p=" +
                           std::to_string(p));
    }
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
        bool ok = true;
        for (int n = 1; n <= 6; ++n)
            ok = ok && cc::m1n_residue_route(F, n) == cc::m1n_count(F, n);
        check_line(ok, "pointed-count routes agree over F_" + std::to_string(q));
    }
    {
        std::vector<std::pair<BigInt, BigRat>> pts;
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
            const cc::FieldCtx& F = cc::FieldCtx::get_q(q);
            pts.emplace_back(BigInt(q), BigRat(cc::mbar1n_count(F, 4)));
        }
        const cc::PolyFitResult fit = cc::poly_fit_and_check(pts, 4, true, true);
        check_line(fit.ok(),
                   "compactified four-marking counts fit a palindromic "
                   "integer polynomial");
    }
    if (deep) {
        const cc::FieldCtx& F2 = cc::FieldCtx::get_q(2);
        std::vector<cc::CycleType> cts;
        for (int n = 1; n <= 3; ++n)
            for (const cc::CycleType& ct : cc::cycle_types(n)) cts.push_back(ct);
        const auto oracle = cc::m1n_cubic_groupoid_masses(F2, cts);
        bool ok = true;
        for (std::size_t i = 0; i < cts.size(); ++i)
            ok = ok && oracle[i] == cc::m1n_configuration_mass(F2, cts[i]);
        check_line(ok, "plane-cubic groupoid agrees with the census over F_2");
    }
    std::cout << (g_failures == 0 ? "all checks passed"
                                  : "some checks FAILED")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvecensus: exact counts of curves over small finite "
                 "fields and of their moduli"};
    app.require_subcommand(1);

    // census g1
    auto* census = app.add_subcommand("census", "census of curve classes");
    census->require_subcommand(1);
    auto* g1 = census->add_subcommand("g1", "elliptic classes over F_q");
    unsigned long g1_q = 5;
    bool g1_by_trace = false, g1_by_j = false;
    g1->add_option("--q", g1_q, "field size")->required();
    g1->add_flag("--by-trace", g1_by_trace, "aggregate masses by trace");
    g1->add_flag("--by-j", g1_by_j, "aggregate masses by j-invariant");

    // sigma
    auto* sigma = app.add_subcommand("sigma", "power-trace sums sigma_k");
    unsigned long sg_q = 5;
    unsigned sg_kmax = 10;
    bool sg_explain = false;
    sigma->add_option("--q", sg_q, "field size")->required();
    sigma->add_option("--kmax", sg_kmax, "largest k");
    sigma->add_flag("--explain", sg_explain, "print the route used");

    // trace
    auto* trace = app.add_subcommand("trace", "Hecke trace on a cusp-form space");
    unsigned tr_weight = 12;
    unsigned long tr_p = 2;
    bool tr_dim = false;
    trace->add_option("--weight", tr_weight, "modular weight")->required();
    trace->add_option("--p", tr_p, "Hecke index (prime)");
    trace->add_flag("--dim", tr_dim, "print the space dimension instead");

    // m1n
    auto* m1n = app.add_subcommand(
        "m1n", "pointed genus-1 counts, optionally twisted");
    unsigned long m1_q = 5;
    int m1_n = 1;
    std::string m1_type, m1_route = "direct";
    bool m1_explain = false;
    m1n->add_option("--q", m1_q, "field size")->required();
    m1n->add_option("--n", m1_n, "number of markings")->required();
    m1n->add_option("--type", m1_type,
                    "cycle type of the marking twist, e.g. '2,1,1'");
    m1n->add_option("--route", m1_route, "direct | residue | cubic");
    m1n->add_flag("--explain", m1_explain, "print the route used");

    // mbar1n
    auto* mbar = app.add_subcommand(
        "mbar1n", "stable pointed genus-1 counts (compactified)");
    unsigned long mb_q = 5;
    int mb_n = 1;
    bool mb_explain = false;
    mbar->add_option("--q", mb_q, "field size")->required();
    mbar->add_option("--n", mb_n, "number of markings")->required();
    mbar->add_flag("--explain", mb_explain, "print the route used");

    // fitpoly
    auto* fit = app.add_subcommand(
        "fitpoly", "fit an exact polynomial through TSV samples");
    std::string fp_in, fp_var = "q";
    unsigned fp_degree = 0;
    bool fp_rational = false, fp_palindrome = false;
    fit->add_option("--in", fp_in, "input file: lines of 'x value'")
        ->required();
    fit->add_option("--degree", fp_degree, "polynomial degree")->required();
    fit->add_flag("--rational", fp_rational,
                  "allow non-integer coefficients");
    fit->add_flag("--palindrome", fp_palindrome,
                  "require palindromic coefficients");
    fit->add_option("--var", fp_var, "variable name for output");

    // verify
    auto* verify = app.add_subcommand("verify", "run the cross-check bundle");
    bool vf_deep = false;
    verify->add_flag("--deep", vf_deep, "include the slower cross-checks");

    try {
        app.parse(argc, argv);
        if (g1->parsed()) return cmd_census_g1(g1_q, g1_by_trace, g1_by_j);
        if (sigma->parsed()) return cmd_sigma(sg_q, sg_kmax, sg_explain);
        if (trace->parsed()) return cmd_trace(tr_weight, tr_p, tr_dim);
        if (m1n->parsed())
            return cmd_m1n(m1_q, m1_n, m1_type, m1_route, m1_explain);
        if (mbar->parsed()) return cmd_mbar1n(mb_q, mb_n, mb_explain);
        if (fit->parsed())
            return cmd_fitpoly(fp_in, fp_degree, fp_rational, fp_palindrome,
                               fp_var);
        if (verify->parsed()) return cmd_verify(vf_deep);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cc::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cc::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
