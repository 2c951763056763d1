#pragma once

/**
 * Validated L-space knot models.
 *
 * A KnotModel carries a symmetrized Alexander polynomial that has passed the
 * L-space-knot gate: nonzero coefficients are all +/-1, they alternate in
 * sign as the exponent decreases, the leading coefficient is +1, the
 * polynomial is symmetric under t -> 1/t, and it evaluates to 1 at t = 1.
 * The Seifert genus is read off the top exponent.  Torsion coefficients
 * t_i and the V-sequence are cached eagerly at construction, so models are
 * immutable afterwards and safe to share across threads.
 *
 * The built-in family is the pretzel knot P(-2,3,2q+1), q >= 1, whose
 * symmetrized Alexander polynomial is
 *
 *   (-1)^(q-1) + sum_{j=1..q-1} (-1)^(q-1-j) (t^j + t^-j)
 *              - (t^(q+1) + t^-(q+1)) + (t^(q+2) + t^-(q+2)),
 *
 * of genus q + 2.
 */

#include "integers.hpp"
#include "laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfd {

/// A polynomial that fails the L-space-knot gate; kind() says which rule broke.
class validation_error : public std::runtime_error {
public:
    enum class Kind {
        zero_polynomial,
        coefficient_not_unit,
        sum_not_one,
        not_symmetric,
        leading_not_positive,
        signs_not_alternating,
    };

    validation_error(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class KnotModel {
public:
    /// The pretzel knot P(-2,3,2q+1), q >= 1.
    static KnotModel pretzel(long long q) {
        if (q < 1) throw std::invalid_argument("pretzel: q must be >= 1");
        LaurentPoly p;
        p.add_term(0, (q - 1) % 2 == 0 ? 1 : -1);
        for (long long j = 1; j <= q - 1; ++j) {
            Int c = (q - 1 - j) % 2 == 0 ? 1 : -1;
            p.add_term(j, c);
            p.add_term(-j, c);
        }
        p.add_term(q + 1, -1);
        p.add_term(-(q + 1), -1);
        p.add_term(q + 2, 1);
        p.add_term(-(q + 2), 1);
        return KnotModel("P(-2,3," + std::to_string(2 * q + 1) + ")", std::move(p));
    }

    /// Validates an arbitrary symmetrized Alexander polynomial.
    static KnotModel from_polynomial(std::string label, const LaurentPoly& p) {
        return KnotModel(std::move(label), p);
    }

    static KnotModel unknot() { return KnotModel("unknot", parse_laurent("1")); }

    const std::string& label() const { return label_; }
    const LaurentPoly& alexander() const { return alexander_; }
    long long genus() const { return genus_; }

    /// Torsion coefficient t_i = sum_{j>0} j * c_{|i|+j} over the Alexander
    /// coefficients c_k; zero for |i| >= genus.
    Int torsion(long long i) const {
        long long a = i < 0 ? -i : i;
        if (a > genus_) return 0;
        return torsion_[static_cast<std::size_t>(a)];
    }

    /// V_s = sum_{i >= s+1} b_i over the tail sums b_i of the Alexander
    /// polynomial; zero for s >= genus, grows by 1 per step below -genus-1.
    Int V(long long s) const {
        if (s >= genus_) return 0;
        long long lo = -(genus_ + 1);
        if (s >= lo) return v_[static_cast<std::size_t>(s - lo)];
        return v_.front() + Int(lo - s);
    }

    Int H(long long s) const { return V(-s); }

private:
    std::string label_;
    LaurentPoly alexander_;
    long long genus_;
    std::vector<Int> torsion_; // t_0 .. t_genus
    std::vector<Int> v_;       // V_{-(genus+1)} .. V_genus

    KnotModel(std::string label, LaurentPoly p)
        : label_(std::move(label)), alexander_(std::move(p)) {
        validate(alexander_);
        genus_ = alexander_.degree_top();
        build_caches();
    }

    static void validate(const LaurentPoly& p) {
        using Kind = validation_error::Kind;
        if (p.is_zero())
            throw validation_error(Kind::zero_polynomial,
                                   "not an Alexander polynomial: zero polynomial");
        for (const auto& [e, c] : p.terms())
            if (c != 1 && c != -1)
                throw validation_error(Kind::coefficient_not_unit,
                                       "not an L-space knot polynomial: coefficient of t^" +
                                           std::to_string(e) + " is " + c.str() + ", not +/-1");
        if (p.eval_at_one() != 1)
            throw validation_error(Kind::sum_not_one,
                                   "not normalized: value at t=1 is " + p.eval_at_one().str() +
                                       ", expected 1");
        if (!p.is_symmetric())
            throw validation_error(Kind::not_symmetric,
                                   "not symmetric under t -> 1/t");
        if (p.terms().rbegin()->second != 1)
            throw validation_error(Kind::leading_not_positive,
                                   "not an L-space knot polynomial: leading coefficient is " +
                                       p.terms().rbegin()->second.str() + ", not +1");
        int prev = 0;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            int s = it->second > 0 ? 1 : -1;
            if (s == prev)
                throw validation_error(Kind::signs_not_alternating,
                                       "not an L-space knot polynomial: consecutive nonzero "
                                       "coefficients do not alternate in sign near t^" +
                                           std::to_string(it->first));
            prev = s;
        }
    }

    void build_caches() {
        torsion_.reserve(static_cast<std::size_t>(genus_) + 1);
        for (long long i = 0; i <= genus_; ++i) {
            Int t = 0;
            for (auto it = alexander_.terms().upper_bound(i); it != alexander_.terms().end(); ++it)
                t += Int(it->first - i) * it->second;
            torsion_.push_back(std::move(t));
        }
        // V_s built downward from V_genus = 0 via V_s = V_{s+1} + b_{s+1}.
        long long lo = -(genus_ + 1);
        v_.assign(static_cast<std::size_t>(genus_ - lo) + 1, 0);
        for (long long s = genus_ - 1; s >= lo; --s)
            v_[static_cast<std::size_t>(s - lo)] =
                v_[static_cast<std::size_t>(s - lo) + 1] + alexander_.tail_sum(s + 1);
    }
};

/// The two torsion-coefficient closed forms for the pretzel family:
/// P(-2,3,4k+3) and P(-2,3,4k+1), k >= 1.
enum class TorsionFamily { p4k3, p4k1 };

inline Int torsion_closed_form(TorsionFamily family, long long k, long long j) {
    if (k < 1) throw std::invalid_argument("torsion_closed_form: k must be >= 1");
    if (j < 0) throw std::invalid_argument("torsion_closed_form: j must be >= 0");
    switch (family) {
    case TorsionFamily::p4k3:
        if (j <= 2 * k + 1) return Int(k + 1 - j / 2);
        return j == 2 * k + 2 ? Int(1) : Int(0);
    case TorsionFamily::p4k1:
        if (j <= 2 * k) return Int(k + 1 - (j + 1) / 2);
        return j == 2 * k + 1 ? Int(1) : Int(0);
    }
    throw std::invalid_argument("torsion_closed_form: invalid family tag");
}

} // namespace hfd
