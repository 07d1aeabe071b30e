// Identity records, side evaluation, and grid verification.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qrr/term.hpp"

namespace qrr {

class UnknownIdentity : public std::invalid_argument {
public:
    explicit UnknownIdentity(const std::string &id) : std::invalid_argument("unknown identity: " + id) {}
};

class InadmissibleParams : public std::invalid_argument {
public:
    explicit InadmissibleParams(const std::string &what) : std::invalid_argument(what) {}
};

/// Named integer parameters in declaration order.
class Params
{
public:
    Params() = default;
    Params(std::initializer_list<std::pair<std::string, long>> init) : items_(init) {}

    long operator[](std::string_view name) const
    {
        for (const auto &[k, v] : items_) {
            if (k == name) {
                return v;
            }
        }
        throw std::out_of_range("missing parameter " + std::string(name));
    }

    long get(std::string_view name, long fallback) const
    {
        for (const auto &[k, v] : items_) {
            if (k == name) {
                return v;
            }
        }
        return fallback;
    }

    void set(const std::string &name, long value)
    {
        for (auto &[k, v] : items_) {
            if (k == name) {
                v = value;
                return;
            }
        }
        items_.emplace_back(name, value);
    }

    const std::vector<std::pair<std::string, long>> &items() const { return items_; }

    std::string str() const
    {
        std::string s;
        for (const auto &[k, v] : items_) {
            if (!s.empty()) {
                s += ",";
            }
            s += k + "=" + std::to_string(v);
        }
        return s;
    }

    friend bool operator==(const Params &, const Params &) = default;

private:
    std::vector<std::pair<std::string, long>> items_;
};

enum class Side { lhs, rhs };

inline const char *to_string(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

/// Inclusive range of a summation index outside which every term vanishes.
struct Bounds {
    long lo;
    long hi;
    friend bool operator==(const Bounds &, const Bounds &) = default;
};

/// One side: prefactor * sum_{k in support} term(k), or identically zero.
struct SideSpec {
    std::function<Bounds(const Params &, int trunc)> support;
    std::function<void(Term &, const Params &, long k)> term;
    std::function<void(Term &, const Params &)> prefactor;
    bool zero{false};
};

struct ParamDecl {
    std::string name;
    long min;     // smallest admissible value
    long grid_lo; // default grid
    long grid_hi;
};

struct IdentityRecord {
    std::string id;
    std::string citation;
    std::vector<ParamDecl> params;
    SideSpec lhs;
    SideSpec rhs;

    const SideSpec &side(Side s) const { return s == Side::lhs ? lhs : rhs; }
};

/// Test-only perturbation of one exponent site of one record side.
struct RecordMutation {
    Side side{Side::lhs};
    bool prefactor{false};
    Mutation site;
};

struct ParamRange {
    std::string name;
    long lo;
    long hi;
};

struct ParamGrid {
    std::vector<ParamRange> ranges;
    int trunc{60};
};

struct VerificationReport {
    enum class Verdict { equal, mismatch, error };

    std::string id;
    Params params;
    int trunc{0};
    Verdict verdict{Verdict::error};
    std::optional<long> mismatch_index; // exponent of q, may be negative
    long window_start{0};
    std::vector<BigRat> lhs_window;
    std::vector<BigRat> rhs_window;
    std::string error;
    double millis{0};

    bool passed() const { return verdict == Verdict::equal; }
};

inline const char *to_string(VerificationReport::Verdict v)
{
    switch (v) {
    case VerificationReport::Verdict::equal:
        return "equal";
    case VerificationReport::Verdict::mismatch:
        return "mismatch";
    case VerificationReport::Verdict::error:
        return "error";
    }
    return "error";
}

/// Fill the verdict fields of a report from two evaluated sides.
inline void judge(VerificationReport &r, const ScaledSeries &lhs, const ScaledSeries &rhs)
{
    if (auto mm = compare(lhs, rhs)) {
        r.verdict = VerificationReport::Verdict::mismatch;
        r.mismatch_index = mm->index;
        const long lo = std::max(std::min(lhs.low(), rhs.low()), mm->index - 2);
        const long hi = std::min(std::min(lhs.top(), rhs.top()), mm->index + 2);
        r.window_start = lo;
        for (long i = lo; i <= hi; ++i) {
            r.lhs_window.push_back(lhs.coeff(i));
            r.rhs_window.push_back(rhs.coeff(i));
        }
    } else {
        r.verdict = VerificationReport::Verdict::equal;
    }
}

inline void check_admissible(const IdentityRecord &rec, const Params &p)
{
    for (const auto &d : rec.params) {
        const long v = p.get(d.name, d.min - 1);
        if (v < d.min) {
            throw InadmissibleParams(rec.id + ": parameter " + d.name + " must be >= " + std::to_string(d.min));
        }
    }
}

/// Support of a side's summation index.
inline Bounds support_bounds(const IdentityRecord &rec, Side side, const Params &p, int trunc)
{
    check_admissible(rec, p);
    const SideSpec &s = rec.side(side);
    if (s.zero) {
        return {0, -1};
    }
    return s.support(p, trunc);
}

/// Build the term of index k (exposed for structural checks).
inline Term build_term(const IdentityRecord &rec, Side side, const Params &p, long k,
                       const Mutation *mutation = nullptr)
{
    Term t(mutation);
    rec.side(side).term(t, p, k);
    return t;
}

/// Exact value of one side for coefficients up to q^trunc.
inline ScaledSeries eval_side(const IdentityRecord &rec, Side side, const Params &p, int trunc,
                              const RecordMutation *mutation = nullptr)
{
    check_admissible(rec, p);
    const SideSpec &s = rec.side(side);
    if (s.zero) {
        return ScaledSeries::zero(trunc);
    }
    const bool here = mutation != nullptr && mutation->side == side;
    const Mutation *term_mut = (here && !mutation->prefactor) ? &mutation->site : nullptr;
    const Mutation *pre_mut = (here && mutation->prefactor) ? &mutation->site : nullptr;

    const Bounds b = s.support(p, trunc);
    std::vector<Term> terms;
    for (long k = b.lo; k <= b.hi; ++k) {
        Term t(term_mut);
        s.term(t, p, k);
        terms.push_back(std::move(t));
    }
    if (s.prefactor) {
        Term pre(pre_mut);
        s.prefactor(pre, p);
        return evaluate_sum(terms, &pre, trunc);
    }
    return evaluate_sum(terms, nullptr, trunc);
}

/// Number of exponent sites in a side's term (or prefactor) builder.
inline int site_count(const IdentityRecord &rec, Side side, bool prefactor)
{
    const SideSpec &s = rec.side(side);
    if (s.zero || (prefactor && !s.prefactor)) {
        return 0;
    }
    Params p;
    for (const auto &d : rec.params) {
        p.set(d.name, std::max(d.min, d.grid_lo));
    }
    Term t;
    if (prefactor) {
        s.prefactor(t, p);
    } else {
        s.term(t, p, 0);
    }
    return t.sites_used();
}

inline VerificationReport verify(const IdentityRecord &rec, const Params &p, int trunc,
                                 const RecordMutation *mutation = nullptr)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = rec.id;
    r.params = p;
    r.trunc = trunc;
    try {
        const ScaledSeries lhs = eval_side(rec, Side::lhs, p, trunc, mutation);
        const ScaledSeries rhs = eval_side(rec, Side::rhs, p, trunc, mutation);
        judge(r, lhs, rhs);
    } catch (const std::exception &e) {
        r.verdict = VerificationReport::Verdict::error;
        r.error = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// All assignments of the grid in lexicographic order of the record's
/// parameter declaration order. An empty range gives no assignments.
inline std::vector<Params> expand_grid(const IdentityRecord &rec, const std::vector<ParamRange> &ranges)
{
    std::vector<ParamRange> ordered;
    for (const auto &d : rec.params) {
        auto it = std::find_if(ranges.begin(), ranges.end(), [&](const ParamRange &r) { return r.name == d.name; });
        ParamRange r = it != ranges.end() ? *it : ParamRange{d.name, d.grid_lo, d.grid_hi};
        if (r.lo <= r.hi && r.lo < d.min) {
            throw InadmissibleParams(rec.id + ": range for " + d.name + " starts below " + std::to_string(d.min));
        }
        ordered.push_back(r);
    }
    for (const auto &r : ranges) {
        if (std::none_of(rec.params.begin(), rec.params.end(), [&](const ParamDecl &d) { return d.name == r.name; })) {
            throw InadmissibleParams(rec.id + " has no parameter named " + r.name);
        }
    }
    std::vector<Params> out;
    if (std::any_of(ordered.begin(), ordered.end(), [](const ParamRange &r) { return r.lo > r.hi; })) {
        return out;
    }
    std::vector<long> cur;
    for (const auto &r : ordered) {
        cur.push_back(r.lo);
    }
    while (true) {
        Params p;
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            p.set(ordered[i].name, cur[i]);
        }
        out.push_back(std::move(p));
        std::size_t i = ordered.size();
        while (i > 0) {
            --i;
            if (cur[i] < ordered[i].hi) {
                ++cur[i];
                break;
            }
            cur[i] = ordered[i].lo;
            if (i == 0) {
                return out;
            }
        }
        if (ordered.empty()) {
            return out;
        }
    }
}

/// Run fn(i) for i in [0, n) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn &&fn)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs && w < n; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                fn(i);
            }
        });
    }
}

/// Cartesian sweep; reports come back in grid order regardless of `jobs`.
inline std::vector<VerificationReport> verify_grid(const IdentityRecord &rec, const ParamGrid &grid,
                                                   unsigned jobs = 1, const RecordMutation *mutation = nullptr)
{
    const std::vector<Params> points = expand_grid(rec, grid.ranges);
    std::vector<VerificationReport> out(points.size());
    parallel_for(points.size(), jobs, [&](std::size_t i) { out[i] = verify(rec, points[i], grid.trunc, mutation); });
    return out;
}

/// The record's embedded default grid.
inline ParamGrid default_grid(const IdentityRecord &rec, int trunc)
{
    ParamGrid g;
    g.trunc = trunc;
    for (const auto &d : rec.params) {
        g.ranges.push_back({d.name, d.grid_lo, d.grid_hi});
    }
    return g;
}

} // namespace qrr
