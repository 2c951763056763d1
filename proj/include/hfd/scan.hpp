#pragma once

/**
 * Parameter scans: one obstruction verdict per (knot, slope) cell over an
 * integer parameter range, with deterministic output.
 *
 * Slope expressions are rational functions of the scan parameter built from
 * linear parts, e.g. "2q+3", "(10p+1)/p", "31/3", "11".  Rows are computed
 * by a small worker pool and emitted strictly in parameter order through a
 * bounded reorder buffer, so the byte stream is identical for any --jobs.
 *
 * A row that fails (non-positive slope, zero denominator, order above the
 * desk-scale limit) is reported in place and the scan continues.
 */

#include "format.hpp"
#include "integers.hpp"
#include "knot.hpp"
#include "obstruction.hpp"

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace hfd {

namespace detail {

// a*x + b, where var names the parameter ('\0' for a constant).
struct LinearExpr {
    long long a = 0;
    long long b = 0;
    char var = '\0';

    long long eval(long long x) const { return a * x + b; }
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    // linear ( '/' linear )?, each side optionally parenthesized
    std::pair<LinearExpr, LinearExpr> run() {
        LinearExpr num = linear();
        LinearExpr den{0, 1, '\0'};
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            den = linear();
            skip_ws();
        }
        if (!at_end()) throw parse_error("unexpected trailing input in slope expression", pos_);
        return {num, den};
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    bool at_digit() const { return !at_end() && peek() >= '0' && peek() <= '9'; }
    bool at_var() const { return !at_end() && peek() >= 'a' && peek() <= 'z'; }

    long long integer() {
        if (!at_digit()) throw parse_error("expected an integer", pos_);
        long long v = 0;
        while (at_digit()) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1'000'000'000'000LL) throw parse_error("number out of range", pos_);
        }
        return v;
    }

    LinearExpr linear() {
        skip_ws();
        bool parens = false;
        if (!at_end() && peek() == '(') {
            parens = true;
            ++pos_;
        }
        LinearExpr e;
        bool first = true;
        for (;;) {
            skip_ws();
            long long sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                break;
            }
            long long coeff = 1;
            bool saw_coeff = false;
            if (at_digit()) {
                coeff = integer();
                saw_coeff = true;
                skip_ws();
                if (!at_end() && peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (!at_var()) throw parse_error("expected a variable after '*'", pos_);
                }
            }
            if (at_var()) {
                char v = text_[pos_++];
                if (e.var != '\0' && e.var != v)
                    throw parse_error("mixed variables in slope expression", pos_ - 1);
                e.var = v;
                e.a += sign * coeff;
            } else if (saw_coeff) {
                e.b += sign * coeff;
            } else {
                throw parse_error("expected a term", pos_);
            }
            first = false;
        }
        if (parens) {
            skip_ws();
            if (at_end() || peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
        }
        return e;
    }
};

} // namespace detail

/// A slope as a rational function of one integer parameter.
class SlopeExpr {
public:
    SlopeExpr() : SlopeExpr("1") {}

    explicit SlopeExpr(std::string text) : text_(std::move(text)) {
        auto [num, den] = detail::ExprParser(text_).run();
        num_ = num;
        den_ = den;
        if (num_.var != '\0' && den_.var != '\0' && num_.var != den_.var)
            throw parse_error("mixed variables in slope expression", 0);
    }

    const std::string& text() const { return text_; }

    /// Parameter name, or '\0' when the expression is constant.
    char var() const { return num_.var != '\0' ? num_.var : den_.var; }

    Slope eval(long long x) const {
        long long den = den_.eval(x);
        if (den == 0) throw std::domain_error("slope denominator is zero at parameter " +
                                              std::to_string(x));
        long long num = num_.eval(x);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num < 1) throw std::domain_error("slope is not positive at parameter " +
                                             std::to_string(x));
        return Slope(num, den);
    }

private:
    detail::LinearExpr num_, den_;
    std::string text_;
};

enum class ScanFamily { pretzel_integral, pretzel_rational_on_q3, custom };
enum class OutputFormat { csv, json, text };

inline ScanFamily scan_family_from_string(std::string_view s) {
    if (s == "pretzel_integral") return ScanFamily::pretzel_integral;
    if (s == "pretzel_rational_on_q3") return ScanFamily::pretzel_rational_on_q3;
    if (s == "custom") return ScanFamily::custom;
    throw std::invalid_argument("unknown scan family \"" + std::string(s) + "\"");
}

inline OutputFormat output_format_from_string(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown output format \"" + std::string(s) + "\"");
}

struct ScanConfig {
    ScanFamily family = ScanFamily::pretzel_integral;
    long long lo = 0;
    long long hi = -1; // lo > hi means an empty scan
    SlopeExpr slope_expr;
    std::optional<long long> pretzel_q;    // custom family: pretzel knot
    std::optional<std::string> alexander;  // custom family: polynomial text
    OutputFormat format = OutputFormat::csv;
    int jobs = 1;
    long long delta_limit = 1'000'000; // desk-scale cap on |H_1|

    /// The slope expression a family uses when none is given.
    static SlopeExpr default_expr(ScanFamily family) {
        switch (family) {
        case ScanFamily::pretzel_integral: return SlopeExpr("2q+3");
        case ScanFamily::pretzel_rational_on_q3: return SlopeExpr("(10p+1)/p");
        case ScanFamily::custom: break;
        }
        return SlopeExpr("n");
    }
};

/// "A..B" -> [A, B].
inline std::pair<long long, long long> parse_range(std::string_view s) {
    auto dots = s.find("..");
    auto number = [&](std::string_view t) -> long long {
        try {
            std::size_t used = 0;
            long long v = std::stoll(std::string(t), &used);
            if (used != t.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("bad range \"" + std::string(s) +
                                        "\", expected \"A..B\"");
        }
    };
    if (dots == std::string_view::npos)
        throw std::invalid_argument("bad range \"" + std::string(s) + "\", expected \"A..B\"");
    return {number(s.substr(0, dots)), number(s.substr(dots + 2))};
}

struct ScanRow {
    long long param = 0;
    std::string knot_label;
    std::string slope_text;
    Verdict verdict;
    std::string error; // nonempty: row failed, verdict is meaningless
};

namespace detail {

inline ScanRow scan_cell(const ScanConfig& cfg, const KnotModel* fixed, long long x) {
    ScanRow row;
    row.param = x;
    try {
        bool per_row_knot = cfg.family == ScanFamily::pretzel_integral;
        if (per_row_knot) {
            if (x < 1) throw std::invalid_argument("pretzel: q must be >= 1");
            row.knot_label = "P(-2,3," + std::to_string(2 * x + 1) + ")";
        } else {
            row.knot_label = fixed->label();
        }
        // validate the slope and the desk-scale cap before building the knot;
        // a per-row pretzel can be large
        Slope slope = cfg.slope_expr.eval(x);
        row.slope_text = slope.str();
        if (slope.g > cfg.delta_limit)
            throw std::domain_error("delta " + std::to_string(slope.g) +
                                    " exceeds the scan limit " +
                                    std::to_string(cfg.delta_limit));
        std::optional<KnotModel> own;
        const KnotModel* knot = fixed;
        if (per_row_knot) {
            own.emplace(KnotModel::pretzel(x));
            knot = &*own;
        }
        row.verdict = obstruct(*knot, slope);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

/// Computes rows 0..count-1 on `jobs` threads; emits strictly in order.
/// Workers park in a bounded reorder buffer so no thread runs unboundedly
/// ahead of the emitter.
inline void for_each_ordered(long long count, int jobs,
                             const std::function<ScanRow(long long)>& compute,
                             const std::function<void(const ScanRow&)>& emit) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (long long k = 0; k < count; ++k) emit(compute(k));
        return;
    }
    std::atomic<long long> next{0};
    std::mutex m;
    std::condition_variable cv;
    std::map<long long, ScanRow> ready;
    long long emitted = 0;
    const long long cap = 4LL * jobs + 16;

    auto worker = [&] {
        for (;;) {
            long long k = next.fetch_add(1);
            if (k >= count) return;
            ScanRow row = compute(k);
            std::unique_lock<std::mutex> lk(m);
            cv.wait(lk, [&] { return k - emitted < cap; });
            ready.emplace(k, std::move(row));
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

    {
        std::unique_lock<std::mutex> lk(m);
        for (long long k = 0; k < count; ++k) {
            cv.wait(lk, [&] { return ready.count(k) > 0; });
            ScanRow row = std::move(ready.at(k));
            ready.erase(k);
            lk.unlock();
            emit(row);
            lk.lock();
            ++emitted;
            cv.notify_all();
        }
    }
    for (auto& t : pool) t.join();
}

inline std::string scan_row_csv(const ScanRow& r) {
    std::ostringstream os;
    os << csv_cell(r.knot_label) << "," << r.slope_text << ",";
    if (r.error.empty()) {
        const Verdict& v = r.verdict;
        os << v.delta << "," << (v.delta_squarefree ? "true" : "false") << ","
           << (v.lspace ? "true" : "false") << "," << v.max4d.fraction_str() << ","
           << v.threshold.fraction_str() << "," << to_string(v.conclusion);
    } else {
        os << ",,,,," << csv_cell("ERROR: " + r.error);
    }
    return os.str();
}

inline json scan_row_json(const ScanRow& r) {
    json j;
    j["param"] = r.param;
    j["knot"] = r.knot_label;
    j["slope"] = r.slope_text;
    if (!r.error.empty()) {
        j["error"] = r.error;
        return j;
    }
    const Verdict& v = r.verdict;
    j["delta"] = v.delta;
    j["squarefree"] = v.delta_squarefree;
    j["lspace"] = v.lspace;
    j["max4d"] = v.max4d.fraction_str();
    j["threshold"] = v.threshold.fraction_str();
    j["conclusion"] = to_string(v.conclusion);
    return j;
}

inline std::string scan_row_text(const ScanRow& r) {
    std::ostringstream os;
    os << std::left << std::setw(16) << r.knot_label << " " << std::setw(10) << r.slope_text
       << " ";
    if (r.error.empty()) {
        const Verdict& v = r.verdict;
        os << std::setw(8) << v.delta << " " << std::setw(4)
           << (v.delta_squarefree ? "yes" : "no") << " " << std::setw(4)
           << (v.lspace ? "yes" : "no") << " " << std::setw(14) << v.max4d.str() << " "
           << std::setw(10) << v.threshold.str() << " " << to_string(v.conclusion);
    } else {
        os << "ERROR: " << r.error;
    }
    return os.str();
}

} // namespace detail

inline constexpr const char* kScanCsvHeader =
    "knot,slope,delta,squarefree,lspace,max4d,threshold,conclusion";

/// Runs the scan and streams rows to `os` in parameter order.
inline void run_scan(const ScanConfig& cfg, std::ostream& os) {
    if (cfg.jobs < 1) throw std::invalid_argument("scan: jobs must be >= 1");

    std::optional<KnotModel> fixed;
    switch (cfg.family) {
    case ScanFamily::pretzel_integral:
        break; // one knot per row
    case ScanFamily::pretzel_rational_on_q3:
        fixed.emplace(KnotModel::pretzel(3));
        break;
    case ScanFamily::custom:
        if (cfg.pretzel_q) {
            fixed.emplace(KnotModel::pretzel(*cfg.pretzel_q));
        } else if (cfg.alexander) {
            fixed.emplace(KnotModel::from_polynomial("custom", parse_laurent(*cfg.alexander)));
        } else {
            throw std::invalid_argument("scan: custom family needs a knot "
                                        "(--pretzel or --alexander)");
        }
        break;
    }

    long long count = cfg.hi < cfg.lo ? 0 : cfg.hi - cfg.lo + 1;
    auto compute = [&](long long k) {
        return detail::scan_cell(cfg, fixed ? &*fixed : nullptr, cfg.lo + k);
    };

    switch (cfg.format) {
    case OutputFormat::csv: {
        os << kScanCsvHeader << "\n";
        detail::for_each_ordered(count, cfg.jobs, compute, [&](const ScanRow& r) {
            os << detail::scan_row_csv(r) << "\n";
        });
        break;
    }
    case OutputFormat::json: {
        os << "[";
        bool first = true;
        detail::for_each_ordered(count, cfg.jobs, compute, [&](const ScanRow& r) {
            os << (first ? "\n  " : ",\n  ") << detail::scan_row_json(r).dump();
            first = false;
        });
        os << (first ? "]\n" : "\n]\n");
        break;
    }
    case OutputFormat::text: {
        os << std::left << std::setw(16) << "knot" << " " << std::setw(10) << "slope" << " "
           << std::setw(8) << "delta" << " " << std::setw(4) << "sqfr" << " " << std::setw(4)
           << "lsp" << " " << std::setw(14) << "max4d" << " " << std::setw(10) << "threshold"
           << " conclusion\n";
        detail::for_each_ordered(count, cfg.jobs, compute, [&](const ScanRow& r) {
            os << detail::scan_row_text(r) << "\n";
        });
        break;
    }
    }
}

inline std::string run_scan_to_string(const ScanConfig& cfg) {
    std::ostringstream os;
    run_scan(cfg, os);
    return os.str();
}

} // namespace hfd
