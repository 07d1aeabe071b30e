// Products of linear factors (1 - c q^e t^s)^m with a scalar and an explicit
// q-power, evaluated as truncated series.
//
// Free parameters of an identity are specialized to monomials q^j. Some
// specializations make a numerator factor and a denominator factor vanish
// together (for instance (q/d)_k / (d/q)_k at d = q). To give those terms a
// value, non-terminating parameters carry a tilt: they become q^j t^s and the
// term is evaluated in the limit t -> 1. A factor that is exactly zero
// (no tilt) kills the term outright; a surplus of tilted zeros does the same;
// a surplus of zeros in the denominator is a genuine pole and is reported.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qrr/pochhammer.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// A monomial coeff * q^exp * t^tilt, with t -> 1 taken at evaluation.
struct Param {
    BigRat coeff{1};
    long exp{0};
    long tilt{0};

    static Param q_pow(long e) { return {BigRat(1), e, 0}; }
    static Param tilted(long e, long tilt) { return {BigRat(1), e, tilt}; }

    MonomialParam monomial() const { return {coeff, exp}; }

    friend Param operator*(const Param &a, const Param &b)
    {
        return {a.coeff * b.coeff, a.exp + b.exp, a.tilt + b.tilt};
    }
    friend Param operator/(const Param &a, const Param &b)
    {
        return {a.coeff / b.coeff, a.exp - b.exp, a.tilt - b.tilt};
    }
    friend Param operator*(const Param &a, long qe) { return {a.coeff, a.exp + qe, a.tilt}; }
    friend Param operator*(long qe, const Param &a) { return a * qe; }
    friend bool operator==(const Param &, const Param &) = default;
};

/// q^e as a Param (shorthand for building arguments such as q/a).
inline Param qp(long e) { return Param::q_pow(e); }

class SingularTerm : public std::domain_error {
public:
    explicit SingularTerm(const std::string &what) : std::domain_error(what) {}
};

/// Hook used by tests to perturb one exponent-bearing call ("site") of a term
/// builder. Sites are numbered in call order within a single term.
struct Mutation {
    int site{0};
    long delta{1};
};

/// A single product term. Builder calls are chainable.
class Term
{
public:
    struct Factor {
        BigRat c;
        long e;
        long tilt;
        long mult;
    };

    Term() = default;
    explicit Term(const Mutation *mutation) : mutation_(mutation) {}

    const BigRat &coeff() const { return coeff_; }
    long q_exponent() const { return qexp_; }
    const std::vector<Factor> &factors() const { return factors_; }
    int sites_used() const { return site_; }

    Term &times(const BigRat &c)
    {
        coeff_ *= c;
        return *this;
    }

    Term &sign(long k) { return (k % 2 != 0) ? times(BigRat(-1)) : *this; }

    /// Multiply by q^e.
    Term &qpow(long e)
    {
        qexp_ += site(e);
        return *this;
    }

    /// Multiply by x^k for a monomial x and any integer k.
    Term &pow(Param x, long k)
    {
        x.exp = site(x.exp);
        if (k >= 0) {
            BigRat c = 1;
            for (long i = 0; i < k; ++i) {
                c *= x.coeff;
            }
            coeff_ *= c;
        } else {
            BigRat c = 1;
            for (long i = 0; i < -k; ++i) {
                c *= x.coeff;
            }
            coeff_ /= c;
        }
        qexp_ += x.exp * k;
        return *this;
    }

    /// Multiply by (1 - x)^mult.
    Term &one_minus(Param x, long mult = 1)
    {
        x.exp = site(x.exp);
        push(x.coeff, x.exp, x.tilt, mult);
        return *this;
    }

    /// Multiply by ((a;q)_n)^mult for any integer n.
    Term &poch(Param a, long n, long mult = 1)
    {
        a.exp = site(a.exp);
        if (n >= 0) {
            for (long j = 0; j < n; ++j) {
                push(a.coeff, a.exp + j, a.tilt, mult);
            }
        } else {
            for (long j = 1; j <= -n; ++j) {
                push(a.coeff, a.exp - j, a.tilt, -mult);
            }
        }
        return *this;
    }

    /// Multiply by ((q;q)_n)^mult.
    Term &qfac(long n, long mult = 1)
    {
        n = site(n);
        return poch_unchecked(qp(1), n, mult);
    }

    /// Multiply by ((a;q)_infinity)^mult. Needs a.exp >= 1.
    Term &poch_inf(Param a, long mult = 1)
    {
        a.exp = site(a.exp);
        if (a.exp < 1) {
            throw NonPositiveExponent();
        }
        infinite_.push_back({a.coeff, a.exp, a.tilt, mult});
        return *this;
    }

    Term &operator*=(const Term &o)
    {
        coeff_ *= o.coeff_;
        qexp_ += o.qexp_;
        factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
        infinite_.insert(infinite_.end(), o.infinite_.begin(), o.infinite_.end());
        return *this;
    }

    /// The term reduced to scalar * q^shift * prod (1 - c q^e)^m with e >= 1.
    struct Normalized {
        bool zero{false};
        BigRat scalar{1};
        long shift{0};
        std::vector<Factor> factors; // e >= 1
        std::vector<Factor> infinite;
    };

    Normalized normalize() const
    {
        Normalized out;
        out.scalar = coeff_;
        out.shift = qexp_;
        if (coeff_ == 0) {
            out.zero = true;
            return out;
        }
        // Exact unit factors are counted before merging: a numerator and a
        // denominator zero of the same exact parameter do not cancel to 1.
        long zero_num = 0;
        long zero_den = 0;
        std::vector<Factor> fs;
        fs.reserve(factors_.size());
        for (const auto &f : factors_) {
            if (f.e == 0 && f.tilt == 0 && f.c == 1) {
                (f.mult > 0 ? zero_num : zero_den) += f.mult > 0 ? f.mult : -f.mult;
            } else {
                fs.push_back(f);
            }
        }
        std::sort(fs.begin(), fs.end(), [](const Factor &a, const Factor &b) {
            if (a.e != b.e) {
                return a.e < b.e;
            }
            if (a.tilt != b.tilt) {
                return a.tilt < b.tilt;
            }
            return cmp(a.c, b.c) < 0;
        });
        long tilted_zeros = 0;
        BigRat limit = 1;
        for (std::size_t i = 0; i < fs.size();) {
            Factor f = fs[i];
            std::size_t j = i + 1;
            while (j < fs.size() && fs[j].e == f.e && fs[j].tilt == f.tilt && fs[j].c == f.c) {
                f.mult += fs[j].mult;
                ++j;
            }
            i = j;
            if (f.mult == 0) {
                continue;
            }
            if (f.e == 0) {
                if (f.c == 1) {
                    // 1 - t^s ~ -s (t - 1); the signs cancel once the orders balance.
                    tilted_zeros += f.mult;
                    limit *= rat_pow(BigRat(f.tilt), f.mult);
                } else {
                    out.scalar *= rat_pow(BigRat(1 - f.c), f.mult);
                }
            } else if (f.e < 0) {
                // 1 - c q^e = -c q^e (1 - c^{-1} q^{-e})
                out.scalar *= rat_pow(BigRat(-f.c), f.mult);
                out.shift += f.e * f.mult;
                out.factors.push_back({BigRat(1 / f.c), -f.e, -f.tilt, f.mult});
            } else {
                out.factors.push_back(f);
            }
        }
        if (zero_den > 0 && zero_num <= zero_den) {
            throw SingularTerm(zero_num > 0 ? "term is indeterminate: (1 - q^0) in numerator and denominator"
                                            : "term has a pole: (1 - q^0) in the denominator");
        }
        if (zero_num > 0 || tilted_zeros > 0) {
            out.zero = true;
            return out;
        }
        if (tilted_zeros < 0) {
            throw SingularTerm("term has a pole in the parameter limit");
        }
        out.scalar *= limit;
        out.infinite = infinite_;
        return out;
    }

    /// Coefficients of q^shift .. q^top of the normalized term, as a series of
    /// order top - shift (the caller guarantees top >= shift).
    static TruncatedSeries expand(const Normalized &n, long top)
    {
        const long rel = top - n.shift;
        if (rel < 0) {
            throw std::invalid_argument("expand: requested window lies below the term's valuation");
        }
        TruncatedSeries s = TruncatedSeries::constant(n.scalar, static_cast<int>(rel));
        for (const auto &f : n.factors) {
            apply(s, f.c, f.e, f.mult);
        }
        for (const auto &f : n.infinite) {
            for (long e = f.e; e <= rel; ++e) {
                apply(s, f.c, e, f.mult);
            }
        }
        return s;
    }

private:
    static int cmp(const BigRat &a, const BigRat &b) { return ::cmp(a, b); }

    static BigRat rat_pow(BigRat b, long m)
    {
        BigRat r = 1;
        const long k = m < 0 ? -m : m;
        for (long i = 0; i < k; ++i) {
            r *= b;
        }
        return m < 0 ? BigRat(1 / r) : r;
    }

    static void apply(TruncatedSeries &s, const BigRat &c, long e, long mult)
    {
        if (e > s.order()) {
            return;
        }
        for (long i = 0; i < mult; ++i) {
            s.mul_one_minus(c, static_cast<int>(e));
        }
        for (long i = 0; i < -mult; ++i) {
            s.div_one_minus(c, static_cast<int>(e));
        }
    }

    Term &poch_unchecked(Param a, long n, long mult)
    {
        if (n >= 0) {
            for (long j = 0; j < n; ++j) {
                push(a.coeff, a.exp + j, a.tilt, mult);
            }
        } else {
            for (long j = 1; j <= -n; ++j) {
                push(a.coeff, a.exp - j, a.tilt, -mult);
            }
        }
        return *this;
    }

    void push(const BigRat &c, long e, long tilt, long mult)
    {
        if (c == 0) {
            return;
        }
        factors_.push_back({c, e, tilt, mult});
    }

    long site(long value)
    {
        const int s = site_++;
        if (mutation_ != nullptr && mutation_->site == s) {
            return value + mutation_->delta;
        }
        return value;
    }

    BigRat coeff_{1};
    long qexp_{0};
    std::vector<Factor> factors_;
    std::vector<Factor> infinite_;
    const Mutation *mutation_{nullptr};
    int site_{0};
};

/// A Laurent window q^low * body whose coefficients are known for exponents
/// low .. top. Used to carry sides whose terms dip below q^0; comparisons are
/// done after aligning both windows to a common clearing power.
class ScaledSeries
{
public:
    static ScaledSeries zero(long top) { return ScaledSeries(std::min(0L, top), top); }

    ScaledSeries(long low, long top)
        : low_(low), top_(top), body_(static_cast<int>(std::max(0L, top - low)))
    {
        if (low > top) {
            low_ = top;
            body_ = TruncatedSeries(0);
        }
    }

    ScaledSeries(long low, TruncatedSeries body) : low_(low), top_(low + body.order()), body_(std::move(body)) {}

    long low() const { return low_; }
    long top() const { return top_; }
    const TruncatedSeries &body() const { return body_; }

    /// Coefficient of q^i (i <= top).
    BigRat coeff(long i) const
    {
        if (i < low_ || i > top_) {
            return BigRat(0);
        }
        return body_[static_cast<int>(i - low_)];
    }

    bool is_zero() const { return body_.is_zero(); }

    /// Same value with the window starting at new_low <= low.
    ScaledSeries aligned(long new_low) const
    {
        if (new_low > low_) {
            throw std::invalid_argument("aligned: cannot raise the window start");
        }
        return ScaledSeries(new_low, body_.shifted_up(static_cast<int>(low_ - new_low)));
    }

    /// Add a normalized term into this window.
    void accumulate(const Term::Normalized &n)
    {
        if (n.zero || n.shift > top_) {
            return;
        }
        if (n.shift < low_) {
            throw std::invalid_argument("accumulate: term below window");
        }
        TruncatedSeries t = Term::expand(n, top_);
        const int off = static_cast<int>(n.shift - low_);
        for (int i = 0; i <= t.order(); ++i) {
            if (t[i] != 0) {
                body_[off + i] += t[i];
            }
        }
    }

    ScaledSeries &operator+=(const ScaledSeries &o)
    {
        const long lo = std::min(low_, o.low_);
        const long tp = std::min(top_, o.top_);
        ScaledSeries a = aligned(lo);
        ScaledSeries b = o.aligned(lo);
        TruncatedSeries s = a.body_.truncated(static_cast<int>(tp - lo)) + b.body_.truncated(static_cast<int>(tp - lo));
        *this = ScaledSeries(lo, std::move(s));
        return *this;
    }

    ScaledSeries operator-() const { return ScaledSeries(low_, -body_); }

    /// Smallest exponent at which two windows differ (over the common range).
    friend std::optional<Mismatch> compare(const ScaledSeries &a, const ScaledSeries &b)
    {
        const long lo = std::min(a.low_, b.low_);
        const long tp = std::min(a.top_, b.top_);
        for (long i = lo; i <= tp; ++i) {
            BigRat x = a.coeff(i);
            BigRat y = b.coeff(i);
            if (x != y) {
                return Mismatch{i, x, y};
            }
        }
        return std::nullopt;
    }

private:
    long low_;
    long top_;
    TruncatedSeries body_;
};

/// prefactor * sum(terms), exact for exponents <= top.
inline ScaledSeries evaluate_sum(const std::vector<Term> &terms, const Term *prefactor, long top)
{
    std::vector<Term::Normalized> ns;
    ns.reserve(terms.size());
    std::optional<long> low;
    for (const auto &t : terms) {
        ns.push_back(t.normalize());
        if (!ns.back().zero) {
            low = low ? std::min(*low, ns.back().shift) : ns.back().shift;
        }
    }
    Term::Normalized pre;
    if (prefactor != nullptr) {
        pre = prefactor->normalize();
        if (pre.zero) {
            return ScaledSeries::zero(top);
        }
    }
    if (!low) {
        return ScaledSeries::zero(top);
    }
    const long sum_top = top - pre.shift;
    if (*low > sum_top) {
        return ScaledSeries::zero(top);
    }
    ScaledSeries sum(*low, sum_top);
    for (const auto &n : ns) {
        sum.accumulate(n);
    }
    if (prefactor == nullptr) {
        return sum;
    }
    TruncatedSeries p = Term::expand(pre, pre.shift + (sum_top - *low));
    return ScaledSeries(pre.shift + *low, p * sum.body());
}

/// The value of a single term.
inline ScaledSeries evaluate(const Term &t, long top) { return evaluate_sum({t}, nullptr, top); }

} // namespace qrr
