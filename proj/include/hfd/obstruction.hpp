#pragma once

/**
 * The negative-definite bounding test and the fillability verdict.
 *
 * Owens-Strle: if a rational homology sphere Y with |H_1(Y)| = delta
 * square-free bounds a negative-definite 4-manifold, then
 *
 *     max over spin-c of 4 d(Y, t)  >=  1 - 1/delta   (delta odd)
 *                                       1             (delta even).
 *
 * So square-free delta together with max 4d strictly below the bound rules
 * out every negative-definite filling.  When Y is additionally an L-space,
 * a theorem of Ozsvath-Szabo forces any weak symplectic semi-filling to have
 * connected boundary and b_2^+ = 0, hence (Y being a rational homology
 * sphere) to be negative-definite.  Both together exclude all weakly
 * symplectically fillable contact structures on Y — in fact all weak
 * symplectic semi-fillings, which is strictly stronger.
 *
 * The test only ever excludes fillings: INCONCLUSIVE makes no claim that a
 * filling exists.
 */

#include "integers.hpp"
#include "rational.hpp"
#include "surgery.hpp"

#include <stdexcept>
#include <string>

namespace hfd {

enum class Conclusion { NO_WEAK_FILLING, INCONCLUSIVE };

/// The Owens-Strle bound: 1 - 1/delta for odd delta, 1 for even.
inline Rational owens_strle_threshold(long long delta) {
    if (delta < 1) throw std::invalid_argument("owens_strle_threshold: delta must be >= 1");
    return delta % 2 == 1 ? Rational(delta - 1, delta) : Rational(1);
}

/// Outcome of the obstruction chain for one surgered manifold.
struct Verdict {
    std::string knot_label;
    Slope slope;
    long long delta = 1; // |H_1| = numerator of the slope
    bool delta_squarefree = false;
    bool lspace = false;
    Rational max4d;
    Rational threshold;
    bool negdef_excluded = false; // delta_squarefree && max4d < threshold
    Conclusion conclusion = Conclusion::INCONCLUSIVE;
};

inline const char* to_string(Conclusion c) {
    return c == Conclusion::NO_WEAK_FILLING ? "NO_WEAK_FILLING" : "INCONCLUSIVE";
}

/// Runs the full chain on the slope surgery along K.
inline Verdict obstruct(const KnotModel& K, const Slope& slope) {
    Verdict v;
    v.knot_label = K.label();
    v.slope = slope;
    v.delta = slope.g;
    v.delta_squarefree = squarefree(v.delta);
    v.lspace = is_lspace_slope(K, slope);
    v.max4d = Rational(4) * table(K, slope).max_d();
    v.threshold = owens_strle_threshold(v.delta);
    v.negdef_excluded = v.delta_squarefree && v.max4d < v.threshold;
    v.conclusion = v.negdef_excluded && v.lspace ? Conclusion::NO_WEAK_FILLING
                                                 : Conclusion::INCONCLUSIVE;
    return v;
}

} // namespace hfd
