#pragma once

/**
 * Self-verification checks: headline facts about the pretzel surgeries and
 * cross-checks between independent computation routes (closed forms vs the
 * lens recursion, the integral vs the rational surgery formula, torsion
 * coefficients vs the V-sequence).  Every check is exact; there are no
 * tolerances.  Ranges can be narrowed for quick runs but default to the
 * full sweep.
 */

#include "knot.hpp"
#include "obstruction.hpp"
#include "scan.hpp"
#include "surgery.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace hfd {

struct VerifyOptions {
    long long q_lo = 4, q_hi = 100;       // integral sweeps over pretzel(q)
    long long p_lo = 1, p_hi = 100;       // (10p+1)/p sweeps on P(-2,3,7)
    long long k_lo = 1, k_hi = 100;       // torsion closed-form families
    long long lens_p = 200;               // L(p,1) closed form
    long long lens_g = 120;               // orientation-reversal sweep
    long long vt_q = 50;                  // V == torsion sweep
    long long cross_q = 10;               // integral vs rational multisets
    long long det_q_lo = 4, det_q_hi = 50; // determinism scan range
};

struct CheckResult {
    std::string name;
    std::string detail;
    bool pass = true;
    std::string failure;

    CheckResult(std::string n, std::string d) : name(std::move(n)), detail(std::move(d)) {}
};

namespace checks {

inline CheckResult v_sequence(const VerifyOptions&) {
    CheckResult r{"v-sequence", "V(P(-2,3,7), s) = 2 2 1 1 1 0 ... for s >= 0"};
    KnotModel k = KnotModel::pretzel(3);
    const long long expected[] = {2, 2, 1, 1, 1, 0, 0, 0, 0};
    for (long long s = 0; s < 9; ++s) {
        if (k.V(s) != expected[s]) {
            r.pass = false;
            r.failure = "V(" + std::to_string(s) + ") = " + k.V(s).str() + ", expected " +
                        std::to_string(expected[s]);
            return r;
        }
    }
    return r;
}

inline CheckResult torsion_closed_forms(const VerifyOptions& o) {
    CheckResult r{"torsion-closed-form",
                  "torsion of P(-2,3,4k+3) and P(-2,3,4k+1) matches the piecewise forms, k = " +
                      std::to_string(o.k_lo) + ".." + std::to_string(o.k_hi)};
    for (long long k = o.k_lo; k <= o.k_hi; ++k) {
        struct Case {
            TorsionFamily family;
            long long q;
        } cases[] = {{TorsionFamily::p4k3, 2 * k + 1}, {TorsionFamily::p4k1, 2 * k}};
        for (const auto& c : cases) {
            if (c.q < 1) continue;
            KnotModel K = KnotModel::pretzel(c.q);
            for (long long j = 0; j <= K.genus() + 2; ++j) {
                Int got = K.torsion(j);
                Int want = torsion_closed_form(c.family, k, j);
                if (got != want) {
                    r.pass = false;
                    r.failure = "q=" + std::to_string(c.q) + " j=" + std::to_string(j) +
                                ": torsion " + got.str() + " != closed form " + want.str();
                    return r;
                }
            }
        }
    }
    return r;
}

inline CheckResult integral_negativity(const VerifyOptions& o) {
    CheckResult r{"integral-negativity",
                  "all d-invariants of (2q+3)-surgery on P(-2,3,2q+1) are < 0, q = " +
                      std::to_string(o.q_lo) + ".." + std::to_string(o.q_hi)};
    for (long long q = o.q_lo; q <= o.q_hi; ++q) {
        DInvariantTable t = table(KnotModel::pretzel(q), Slope(2 * q + 3, 1));
        for (std::size_t i = 0; i < t.entries.size(); ++i) {
            if (!(t.entries[i] < Rational(0))) {
                r.pass = false;
                r.failure = "q=" + std::to_string(q) + " i=" + std::to_string(i) + ": d = " +
                            t.entries[i].str() + " is not negative";
                return r;
            }
        }
    }
    return r;
}

inline CheckResult integral_verdicts(const VerifyOptions& o) {
    CheckResult r{"integral-verdicts",
                  "(2q+3)-surgery verdict is NO_WEAK_FILLING exactly when 2q+3 is square-free, "
                  "q = " + std::to_string(o.q_lo) + ".." + std::to_string(o.q_hi)};
    for (long long q = o.q_lo; q <= o.q_hi; ++q) {
        Verdict v = obstruct(KnotModel::pretzel(q), Slope(2 * q + 3, 1));
        Conclusion want = squarefree(2 * q + 3) ? Conclusion::NO_WEAK_FILLING
                                                : Conclusion::INCONCLUSIVE;
        if (v.conclusion != want) {
            r.pass = false;
            r.failure = "q=" + std::to_string(q) + ": got " + to_string(v.conclusion) +
                        ", expected " + to_string(want);
            return r;
        }
        if (q == 11 && v.conclusion != Conclusion::INCONCLUSIVE) {
            r.pass = false;
            r.failure = "q=11 (delta 25) must be INCONCLUSIVE";
            return r;
        }
    }
    return r;
}

inline CheckResult rational_nonpositivity(const VerifyOptions& o) {
    CheckResult r{"rational-nonpositivity",
                  "all d-invariants of (10p+1)/p-surgery on P(-2,3,7) are <= 0, p = " +
                      std::to_string(o.p_lo) + ".." + std::to_string(o.p_hi)};
    KnotModel K = KnotModel::pretzel(3);
    for (long long p = o.p_lo; p <= o.p_hi; ++p) {
        DInvariantTable t = table(K, Slope(10 * p + 1, p));
        for (std::size_t i = 0; i < t.entries.size(); ++i) {
            if (t.entries[i] > Rational(0)) {
                r.pass = false;
                r.failure = "p=" + std::to_string(p) + " i=" + std::to_string(i) + ": d = " +
                            t.entries[i].str() + " is positive";
                return r;
            }
        }
    }
    return r;
}

inline CheckResult rational_verdicts(const VerifyOptions& o) {
    CheckResult r{"rational-verdicts",
                  "(10p+1)/p-surgery verdict is NO_WEAK_FILLING exactly when 10p+1 is "
                  "square-free, p = " + std::to_string(o.p_lo) + ".." + std::to_string(o.p_hi)};
    KnotModel K = KnotModel::pretzel(3);
    for (long long p = o.p_lo; p <= o.p_hi; ++p) {
        Verdict v = obstruct(K, Slope(10 * p + 1, p));
        Conclusion want = squarefree(10 * p + 1) ? Conclusion::NO_WEAK_FILLING
                                                 : Conclusion::INCONCLUSIVE;
        if (v.conclusion != want) {
            r.pass = false;
            r.failure = "p=" + std::to_string(p) + ": got " + to_string(v.conclusion) +
                        ", expected " + to_string(want);
            return r;
        }
        if (p == 12 && v.conclusion != Conclusion::INCONCLUSIVE) {
            r.pass = false;
            r.failure = "p=12 (delta 121) must be INCONCLUSIVE";
            return r;
        }
    }
    return r;
}

inline CheckResult ten_surgery(const VerifyOptions&) {
    CheckResult r{"ten-surgery",
                  "10-surgery on P(-2,3,7): max 4d < 1 (even delta) and NO_WEAK_FILLING"};
    Verdict v = obstruct(KnotModel::pretzel(3), Slope(10, 1));
    if (v.threshold != Rational(1)) {
        r.pass = false;
        r.failure = "threshold for delta 10 is " + v.threshold.str() + ", expected 1";
    } else if (!(v.max4d < Rational(1))) {
        r.pass = false;
        r.failure = "max 4d = " + v.max4d.str() + " is not < 1";
    } else if (v.conclusion != Conclusion::NO_WEAK_FILLING) {
        r.pass = false;
        r.failure = "conclusion is " + std::string(to_string(v.conclusion));
    }
    return r;
}

inline CheckResult integral_vs_rational(const VerifyOptions& o) {
    CheckResult r{"integral-vs-rational",
                  "multiset of large-surgery d-invariants equals the slope-n/1 multiset, "
                  "q = 1.." + std::to_string(o.cross_q) + ", n = 2g-1..2g+20"};
    for (long long q = 1; q <= o.cross_q; ++q) {
        KnotModel K = KnotModel::pretzel(q);
        long long g = K.genus();
        for (long long n = 2 * g - 1; n <= 2 * g + 20; ++n) {
            std::vector<Rational> integral, rational;
            for (long long i = -(n - 1) / 2; 2 * i <= n; ++i)
                integral.push_back(d_integral(K, n, i));
            Slope s(n, 1);
            for (long long i = 0; i < n; ++i) rational.push_back(d_rational(K, s, i));
            std::sort(integral.begin(), integral.end());
            std::sort(rational.begin(), rational.end());
            if (integral != rational) {
                r.pass = false;
                r.failure = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                            ": multisets differ";
                return r;
            }
        }
    }
    return r;
}

inline CheckResult lens_engine(const VerifyOptions& o) {
    CheckResult r{"lens-engine",
                  "d(L(p,1),j) closed form, p <= " + std::to_string(o.lens_p) +
                      "; reversal antisymmetry, g <= " + std::to_string(o.lens_g) +
                      "; d(L(2,1)) = {1/4, -1/4}"};
    for (long long p = 1; p <= o.lens_p; ++p) {
        for (long long j = 0; j < p; ++j) {
            Int num = Int(p) - 2 * j;
            Rational want = Rational(num * num, Int(4) * p) - Rational(1, 4);
            if (d_lens(p, 1, j) != want) {
                r.pass = false;
                r.failure = "d(L(" + std::to_string(p) + ",1)," + std::to_string(j) +
                            ") != (p-2j)^2/4p - 1/4";
                return r;
            }
        }
    }
    for (long long g = 2; g <= o.lens_g; ++g) {
        for (long long h = 1; h < g; ++h) {
            if (gcd(g, h) != 1) continue;
            std::vector<Rational> a, b;
            for (long long i = 0; i < g; ++i) {
                a.push_back(d_lens(g, h, i));
                b.push_back(-d_lens(g, g - h, i));
            }
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) {
                r.pass = false;
                r.failure = "L(" + std::to_string(g) + "," + std::to_string(h) +
                            "): reversal antisymmetry fails";
                return r;
            }
        }
    }
    if (d_lens(2, 1, 0) != Rational(1, 4) || d_lens(2, 1, 1) != Rational(-1, 4)) {
        r.pass = false;
        r.failure = "d(L(2,1)) != {1/4, -1/4}";
    }
    return r;
}

inline CheckResult v_equals_torsion(const VerifyOptions& o) {
    CheckResult r{"v-equals-torsion",
                  "V(K, s) = torsion(K, s) for s >= 0 on pretzel(q), q = 1.." +
                      std::to_string(o.vt_q)};
    for (long long q = 1; q <= o.vt_q; ++q) {
        KnotModel K = KnotModel::pretzel(q);
        for (long long s = 0; s <= K.genus() + 2; ++s) {
            if (K.V(s) != K.torsion(s)) {
                r.pass = false;
                r.failure = "q=" + std::to_string(q) + " s=" + std::to_string(s) + ": V = " +
                            K.V(s).str() + " but torsion = " + K.torsion(s).str();
                return r;
            }
        }
    }
    return r;
}

inline CheckResult scan_determinism(const VerifyOptions& o) {
    CheckResult r{"scan-determinism",
                  "CSV scan over q = " + std::to_string(o.det_q_lo) + ".." +
                      std::to_string(o.det_q_hi) + " is byte-identical with 1 and 8 jobs"};
    ScanConfig cfg;
    cfg.family = ScanFamily::pretzel_integral;
    cfg.lo = o.det_q_lo;
    cfg.hi = o.det_q_hi;
    cfg.slope_expr = SlopeExpr("2q+3");
    cfg.format = OutputFormat::csv;
    cfg.jobs = 1;
    std::string serial = run_scan_to_string(cfg);
    cfg.jobs = 8;
    std::string parallel = run_scan_to_string(cfg);
    if (serial != parallel) {
        r.pass = false;
        r.failure = "outputs differ between --jobs 1 and --jobs 8";
    }
    return r;
}

} // namespace checks

/// All checks in reporting order.
inline const std::vector<std::pair<std::string,
                                   std::function<CheckResult(const VerifyOptions&)>>>&
verify_registry() {
    static const std::vector<std::pair<std::string, std::function<CheckResult(const VerifyOptions&)>>>
        reg = {
            {"v-sequence", checks::v_sequence},
            {"torsion-closed-form", checks::torsion_closed_forms},
            {"integral-negativity", checks::integral_negativity},
            {"integral-verdicts", checks::integral_verdicts},
            {"rational-nonpositivity", checks::rational_nonpositivity},
            {"rational-verdicts", checks::rational_verdicts},
            {"ten-surgery", checks::ten_surgery},
            {"integral-vs-rational", checks::integral_vs_rational},
            {"lens-engine", checks::lens_engine},
            {"v-equals-torsion", checks::v_equals_torsion},
            {"scan-determinism", checks::scan_determinism},
        };
    return reg;
}

/// Runs every check (or just `only`, when nonempty).  Unknown names throw.
inline std::vector<CheckResult> run_verify(const VerifyOptions& options,
                                           const std::string& only = "") {
    std::vector<CheckResult> results;
    bool found = only.empty();
    for (const auto& [name, fn] : verify_registry()) {
        if (!only.empty() && name != only) continue;
        found = true;
        results.push_back(fn(options));
    }
    if (!found)
        throw std::invalid_argument("unknown check \"" + only + "\"; known checks: " + [] {
            std::string all;
            for (const auto& [name, fn] : verify_registry()) {
                if (!all.empty()) all += ", ";
                all += name;
            }
            return all;
        }());
    return results;
}

} // namespace hfd
