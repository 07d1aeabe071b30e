// q -> 1 consequences: alternating binomial sums, their factorial-sum
// right-hand sides, and divisibility. Convention: 1/n! = 0 for n < 0.

#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "qrr/identity.hpp"

namespace qrr {

/// C(n, k), zero when k < 0, k > n or n < 0.
inline BigInt binom(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(std::max(0L, n)));
    return r;
}

/// prod a! / prod b!, zero if any b < 0.
inline BigRat factorial_ratio(std::initializer_list<long> nums, std::initializer_list<long> dens)
{
    for (long d : dens) {
        if (d < 0) {
            return 0;
        }
    }
    BigInt num = 1;
    BigInt den = 1;
    for (long a : nums) {
        num *= factorial(a);
    }
    for (long d : dens) {
        den *= factorial(d);
    }
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

/// Result of one check: `values[0]` is the left side, the rest are the
/// right-hand forms (or, for divisibility, the divisors).
struct BinomialCheck {
    std::string name;
    Params params;
    std::vector<BigRat> values;
    bool ok{false};

    bool passed() const { return ok; }
};

namespace detail {

inline long sgn(long k) { return (k % 2 == 0) ? 1 : -1; }

inline bool all_equal(const std::vector<BigRat> &v)
{
    return std::all_of(v.begin(), v.end(), [&](const BigRat &x) { return x == v.front(); });
}

} // namespace detail

/// Five-binomial alternating sum against its factorial sum.
inline BinomialCheck cor57_check(long l, long m, long n, long u, long v)
{
    const long K = std::max({l, m, n, u, v}) + 1;
    BigInt lhs = 0;
    for (long k = -K; k <= K; ++k) {
        lhs += detail::sgn(k) * binom(l + m, l + k) * binom(m + n, m + k) * binom(n + l, n + k) *
               binom(u + v, u + k) * binom(u + v, v + k);
    }
    BigRat rhs = 0;
    for (long k = 0; k <= K; ++k) {
        rhs += factorial_ratio({l + m + n - k, u + v + k}, {k, l - k, m - k, n - k, u + k, v + k});
    }
    rhs *= binom(u + v, u);
    BinomialCheck c{"cor57", Params{{"l", l}, {"m", m}, {"n", n}, {"u", u}, {"v", v}},
                    {BigRat(lhs), rhs}};
    c.ok = detail::all_equal(c.values);
    return c;
}

/// The two four-binomial identities (one with (2u)!/u!, one without l).
inline std::vector<BinomialCheck> cor58_checks(long l, long m, long n, long u, long v)
{
    const long K = std::max({l, m, n, u, v}) + 1;
    std::vector<BinomialCheck> out;

    BigInt lhs = 0;
    for (long k = -K; k <= K; ++k) {
        lhs += detail::sgn(k) * binom(l + m, l + k) * binom(m + n, m + k) * binom(n + l, n + k) * binom(2 * u, u + k);
    }
    BigRat rhs = 0;
    for (long k = 0; k <= K; ++k) {
        rhs += factorial_ratio({l + m + n - k}, {k, l - k, m - k, n - k, u + k});
    }
    rhs *= factorial_ratio({2 * u}, {u});
    BinomialCheck a{"cor58a", Params{{"l", l}, {"m", m}, {"n", n}, {"u", u}}, {BigRat(lhs), rhs}};
    a.ok = detail::all_equal(a.values);
    out.push_back(a);

    lhs = 0;
    for (long k = -K; k <= K; ++k) {
        lhs += detail::sgn(k) * binom(m + n, m + k) * binom(m + n, n + k) * binom(u + v, u + k) * binom(u + v, v + k);
    }
    rhs = 0;
    for (long k = 0; k <= K; ++k) {
        rhs += factorial_ratio({m + n, u + v + k}, {k, m - k, n - k, u + k, v + k});
    }
    rhs *= binom(u + v, u);
    BinomialCheck b{"cor58b", Params{{"m", m}, {"n", n}, {"u", u}, {"v", v}}, {BigRat(lhs), rhs}};
    b.ok = detail::all_equal(b.values);
    out.push_back(b);
    return out;
}

/// sum_{k=-n}^{n} (-1)^k C(2n, n+k)^p
inline BigInt alternating_power_sum(long n, int p)
{
    BigInt s = 0;
    BigInt t;
    for (long k = -n; k <= n; ++k) {
        mpz_pow_ui(t.get_mpz_t(), binom(2 * n, n + k).get_mpz_t(), static_cast<unsigned long>(p));
        s += detail::sgn(k) * t;
    }
    return s;
}

/// The fifth-power sum, both its right-hand side and the k -> n-k rewrite.
inline BinomialCheck bino5_check(long n)
{
    BigInt r1 = 0;
    BigInt r2 = 0;
    for (long k = 0; k <= n; ++k) {
        const BigInt common = binom(3 * n - k, n - k) * binom(2 * n + k, k);
        r1 += common * binom(2 * n, n + k) * binom(2 * n, n + k);
        r2 += common * binom(2 * n, k) * binom(2 * n, k);
    }
    const BigInt c = binom(2 * n, n);
    BinomialCheck out{"bino5", Params{{"n", n}},
                      {BigRat(alternating_power_sum(n, 5)), BigRat(c * r1), BigRat(c * r2)}};
    out.ok = detail::all_equal(out.values);
    return out;
}

/// The fourth-power sum against both right-hand forms.
inline BinomialCheck bino4_check(long n)
{
    BigInt r1 = 0;
    BigInt r2 = 0;
    for (long k = 0; k <= n; ++k) {
        r1 += binom(3 * n - k, n - k) * binom(2 * n, n + k) * binom(n, k);
        r2 += binom(2 * n + k, k) * binom(2 * n, n + k) * binom(2 * n, n + k);
    }
    const BigInt c = binom(2 * n, n);
    BinomialCheck out{"bino4", Params{{"n", n}},
                      {BigRat(alternating_power_sum(n, 4)), BigRat(c * r1), BigRat(c * r2)}};
    out.ok = detail::all_equal(out.values);
    return out;
}

inline BinomialCheck divisibility_check(long n, int power)
{
    const BigInt s = alternating_power_sum(n, power);
    const BigInt c = binom(2 * n, n);
    BinomialCheck out{"divisibility", Params{{"n", n}, {"power", power}}, {BigRat(s), BigRat(c)}};
    out.ok = (s % c) == 0;
    return out;
}

/// sum_k (-1)^k prod_i C(n_i + n_{i+1}, n_i + k) with n_{m+1} = n_1: checks
/// that it is nonnegative and divisible by every C(n_j + n_{j+1}, n_j).
inline BinomialCheck general_alt_sum_divisibility(const std::vector<long> &ns)
{
    BinomialCheck out{"general", {}, {}};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        out.params.set("n" + std::to_string(i + 1), ns[i]);
    }
    if (ns.empty()) {
        return out;
    }
    const std::size_t m = ns.size();
    const long K = *std::max_element(ns.begin(), ns.end());
    BigInt s = 0;
    for (long k = -K; k <= K; ++k) {
        BigInt p = detail::sgn(k);
        for (std::size_t i = 0; i < m && p != 0; ++i) {
            p *= binom(ns[i] + ns[(i + 1) % m], ns[i] + k);
        }
        s += p;
    }
    out.values.push_back(BigRat(s));
    out.ok = s >= 0;
    for (std::size_t j = 0; j < m; ++j) {
        const BigInt d = binom(ns[j] + ns[(j + 1) % m], ns[j]);
        out.values.push_back(BigRat(d));
        out.ok = out.ok && (s % d) == 0;
    }
    return out;
}

} // namespace qrr
