// q-shifted factorials (a;q)_n for all integers n, and truncated infinite
// products.

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "qrr/series.hpp"

namespace qrr {

class NeedsLaurent : public std::domain_error {
public:
    explicit NeedsLaurent(const std::string &what) : std::domain_error(what) {}
};

class NonPositiveExponent : public std::domain_error {
public:
    NonPositiveExponent() : std::domain_error("infinite product needs a parameter exponent >= 1") {}
};

/// Value of a q-shifted factorial. `zero` means the product is identically
/// zero; `reciprocal_zero` means it is infinite, i.e. its reciprocal vanishes
/// (this is how 1/(q)_n = 0 for n < 0 is carried).
class PochValue
{
public:
    enum class Kind { series, zero, reciprocal_zero };

    static PochValue of(TruncatedSeries s) { return PochValue(Kind::series, std::move(s)); }
    static PochValue zero(int order) { return PochValue(Kind::zero, TruncatedSeries(order)); }
    static PochValue reciprocal_zero(int order) { return PochValue(Kind::reciprocal_zero, TruncatedSeries(order)); }

    Kind kind() const { return kind_; }
    bool is_series() const { return kind_ == Kind::series; }

    /// The series value. Zero yields the zero series; reciprocal_zero throws.
    const TruncatedSeries &series() const
    {
        if (kind_ == Kind::reciprocal_zero) {
            throw std::domain_error("q-shifted factorial is infinite (reciprocal is zero)");
        }
        return value_;
    }

    /// Product of two values; zero * infinite is rejected.
    friend PochValue operator*(const PochValue &a, const PochValue &b)
    {
        const bool has_zero = a.kind_ == Kind::zero || b.kind_ == Kind::zero;
        const bool has_inf = a.kind_ == Kind::reciprocal_zero || b.kind_ == Kind::reciprocal_zero;
        const int t = std::min(a.value_.order(), b.value_.order());
        if (has_zero && has_inf) {
            throw std::domain_error("indeterminate product 0 * infinity of q-shifted factorials");
        }
        if (has_zero) {
            return zero(t);
        }
        if (has_inf) {
            return reciprocal_zero(t);
        }
        return of(a.value_ * b.value_);
    }

private:
    PochValue(Kind k, TruncatedSeries s) : kind_(k), value_(std::move(s)) {}

    Kind kind_;
    TruncatedSeries value_;
};

namespace detail {

inline bool is_unit_factor(const BigRat &c, long e) { return e == 0 && c == 1; }

} // namespace detail

/// Memo of (q;q)_n and 1/(q;q)_n for n >= 0, keyed by (n, T). Shared
/// between threads; entries are computed at most once per key.
class QFactorialCache
{
public:
    const TruncatedSeries &factorial(long n, int order) { return get(n, order, false); }
    const TruncatedSeries &reciprocal(long n, int order) { return get(n, order, true); }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    const TruncatedSeries &get(long n, int order, bool recip)
    {
        const Key key{n, order, recip};
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) {
                return it->second;
            }
        }
        TruncatedSeries s = TruncatedSeries::one(order);
        for (long j = 1; j <= n && j <= order; ++j) {
            if (recip) {
                s.div_one_minus(BigRat(1), static_cast<int>(j));
            } else {
                s.mul_one_minus(BigRat(1), static_cast<int>(j));
            }
        }
        std::unique_lock lock(mutex_);
        // std::map never invalidates references on insert.
        return table_.try_emplace(key, std::move(s)).first->second;
    }

    using Key = std::tuple<long, int, bool>;
    mutable std::shared_mutex mutex_;
    std::map<Key, TruncatedSeries> table_;
};

inline QFactorialCache &qfactorial_cache()
{
    static QFactorialCache cache;
    return cache;
}

/// (a;q)_n. For n >= 0 the product (1-a)(1-aq)...(1-aq^{n-1}); for n < 0 the
/// reciprocal of (1-a/q)(1-a/q^2)...(1-aq^n).
inline PochValue qpoch(const MonomialParam &a, long n, int order)
{
    if (n == 0) {
        return PochValue::of(TruncatedSeries::one(order));
    }
    if (a.coeff == 1 && a.exp == 1 && n > 0) {
        return PochValue::of(qfactorial_cache().factorial(n, order));
    }
    if (n > 0) {
        if (a.exp < 0) {
            throw NeedsLaurent("(a)_n with a of negative q-exponent");
        }
        TruncatedSeries s = TruncatedSeries::one(order);
        for (long j = 0; j < n; ++j) {
            const long e = a.exp + j;
            if (detail::is_unit_factor(a.coeff, e)) {
                return PochValue::zero(order);
            }
            if (e == 0) {
                s *= BigRat(1 - a.coeff);
            } else if (e <= order) {
                s.mul_one_minus(a.coeff, static_cast<int>(e));
            }
        }
        return PochValue::of(std::move(s));
    }
    // n < 0: an exactly vanishing factor in the denominator makes the value infinite.
    for (long j = 1; j <= -n; ++j) {
        if (detail::is_unit_factor(a.coeff, a.exp - j)) {
            return PochValue::reciprocal_zero(order);
        }
    }
    if (a.exp + n < 0) {
        throw NeedsLaurent("(a)_n with n < 0 reaches a negative q-power");
    }
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long j = 1; j <= -n; ++j) {
        const long e = a.exp - j;
        if (e == 0) {
            s *= BigRat(1 / (1 - a.coeff));
        } else if (e <= order) {
            s.div_one_minus(a.coeff, static_cast<int>(e));
        }
    }
    return PochValue::of(std::move(s));
}

/// 1/(a;q)_n, with 1/(q;q)_n = 0 for n < 0.
inline PochValue qpoch_reciprocal(const MonomialParam &a, long n, int order)
{
    if (a.coeff == 1 && a.exp == 1 && n >= 0) {
        return PochValue::of(qfactorial_cache().reciprocal(n, order));
    }
    PochValue v = qpoch(a, n, order);
    switch (v.kind()) {
    case PochValue::Kind::reciprocal_zero:
        return PochValue::zero(order);
    case PochValue::Kind::zero:
        return PochValue::reciprocal_zero(order);
    case PochValue::Kind::series:
        break;
    }
    return PochValue::of(v.series().inverse());
}

/// (a_1,...,a_m;q)_n.
inline PochValue qpoch_multi(std::span<const MonomialParam> params, long n, int order)
{
    PochValue acc = PochValue::of(TruncatedSeries::one(order));
    for (const auto &p : params) {
        acc = acc * qpoch(p, n, order);
    }
    return acc;
}

/// (a;q)_infinity mod q^{T+1}; needs a.exp >= 1.
inline TruncatedSeries qpoch_infinite(const MonomialParam &a, int order)
{
    if (a.exp < 1) {
        throw NonPositiveExponent();
    }
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long e = a.exp; e <= order; ++e) {
        s.mul_one_minus(a.coeff, static_cast<int>(e));
    }
    return s;
}

enum class RRProduct { mod5_14, mod5_23 };

/// prod_n 1/((1-q^{5n+r})(1-q^{5n+5-r})) with r = 1 or 2.
inline TruncatedSeries rr_product_side(RRProduct which, int order)
{
    const int r = which == RRProduct::mod5_14 ? 1 : 2;
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int e = 1; e <= order; ++e) {
        const int m = e % 5;
        if (m == r || m == 5 - r) {
            s.div_one_minus(BigRat(1), e);
        }
    }
    return s;
}

} // namespace qrr
