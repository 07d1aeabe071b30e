#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "qrr/term.hpp"

using namespace qrr;

namespace {

// Schoolbook expansion of prod (1 - c q^e), independent of the in-place updates.
TruncatedSeries naive_product(const std::vector<std::pair<BigRat, long>> &factors, int T)
{
    std::vector<BigRat> acc(T + 1);
    acc[0] = 1;
    for (const auto &[c, e] : factors) {
        std::vector<BigRat> next(acc);
        for (int i = 0; i <= T; ++i) {
            if (i + e <= T && e >= 0) {
                next[i + e] -= c * acc[i];
            }
        }
        if (e == 0) {
            for (int i = 0; i <= T; ++i) {
                next[i] = acc[i] * (1 - c);
            }
        }
        acc = next;
    }
    return TruncatedSeries(acc);
}

TruncatedSeries value(const PochValue &v) { return v.series(); }

MonomialParam mq(long e, long num = 1, long den = 1) { return {make_rat(num, den), e}; }

// Compare two Laurent windows on the coefficients both know.
void expect_same(const ScaledSeries &a, const ScaledSeries &b)
{
    const long lo = std::min(a.low(), b.low());
    const long hi = std::min(a.top(), b.top());
    for (long i = lo; i <= hi; ++i) {
        EXPECT_EQ(a.coeff(i), b.coeff(i)) << "q^" << i;
    }
}

} // namespace

TEST(Pochhammer, QOfThree)
{
    EXPECT_EQ(value(qpoch(mq(1), 3, 8)), TruncatedSeries::from_coeffs({1, -1, -1, 0, 1, 1, -1}, 8));
}

TEST(Pochhammer, EmptyProduct)
{
    EXPECT_EQ(value(qpoch(mq(4, 7, 3), 0, 5)), TruncatedSeries::one(5));
    EXPECT_EQ(value(qpoch_reciprocal(mq(1), 0, 5)), TruncatedSeries::one(5));
}

TEST(Pochhammer, NegativeIndex)
{
    // (q^2)_{-1} = 1/(1 - q)
    const auto s = value(qpoch(mq(2), -1, 9));
    for (int i = 0; i <= 9; ++i) {
        EXPECT_EQ(s[i], 1);
    }
}

TEST(Pochhammer, ReciprocalOfQAtNegativeIndexVanishes)
{
    EXPECT_EQ(qpoch_reciprocal(mq(1), -2, 6).kind(), PochValue::Kind::zero);
    EXPECT_EQ(qpoch_reciprocal(mq(1), -1, 6).kind(), PochValue::Kind::zero);
}

TEST(Pochhammer, ExactZeroFactor)
{
    // (q^{-2})_3 contains 1 - q^0.
    EXPECT_THROW(qpoch(mq(-2), 3, 6), NeedsLaurent);
    EXPECT_EQ(qpoch(mq(0), 2, 6).kind(), PochValue::Kind::zero);
    EXPECT_EQ(qpoch_reciprocal(mq(0), 2, 6).kind(), PochValue::Kind::reciprocal_zero);
}

TEST(Pochhammer, Reciprocal)
{
    const int T = 12;
    const auto r = value(qpoch_reciprocal(mq(1), 2, T));
    EXPECT_EQ(r * naive_product({{1, 1}, {1, 2}}, T), TruncatedSeries::one(T));
}

TEST(Pochhammer, Multi)
{
    const int T = 10;
    const std::vector<MonomialParam> qq{mq(1), mq(1)};
    EXPECT_EQ(value(qpoch_multi(qq, 1, T)), naive_product({{1, 1}, {1, 1}}, T));
    EXPECT_EQ(value(qpoch_multi({}, 5, T)), TruncatedSeries::one(T));
    const std::vector<MonomialParam> three{mq(1), mq(2), mq(3)};
    EXPECT_EQ(value(qpoch_multi(three, 2, T)), naive_product({{1, 1}, {1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 4}}, T));
}

TEST(Pochhammer, AgainstSchoolbook)
{
    const int T = 15;
    for (long e = 0; e <= 3; ++e) {
        for (long n = 0; n <= 6; ++n) {
            const MonomialParam a = mq(e, -3, 2);
            std::vector<std::pair<BigRat, long>> fs;
            for (long j = 0; j < n; ++j) {
                fs.push_back({a.coeff, e + j});
            }
            EXPECT_EQ(value(qpoch(a, n, T)), naive_product(fs, T)) << "e=" << e << " n=" << n;
        }
    }
}

TEST(Pochhammer, EulerPentagonal)
{
    EXPECT_EQ(qpoch_infinite(mq(1), 5), TruncatedSeries::from_coeffs({1, -1, -1, 0, 0, 1}, 5));
    EXPECT_EQ(qpoch_infinite(mq(1), 30), naive_product([] {
                  std::vector<std::pair<BigRat, long>> fs;
                  for (long j = 1; j <= 30; ++j) fs.push_back({1, j});
                  return fs;
              }(), 30));
}

TEST(Pochhammer, InfiniteTail)
{
    EXPECT_EQ(qpoch_infinite(mq(6), 5), TruncatedSeries::one(5));
    EXPECT_EQ(qpoch_infinite(mq(2), 4), naive_product({{1, 2}, {1, 3}, {1, 4}}, 4));
    EXPECT_THROW(qpoch_infinite(mq(0), 4), NonPositiveExponent);
}

TEST(Pochhammer, RogersRamanujanProducts)
{
    EXPECT_EQ(rr_product_side(RRProduct::mod5_14, 6), TruncatedSeries::from_coeffs({1, 1, 1, 1, 2, 2, 3}, 6));
    EXPECT_EQ(rr_product_side(RRProduct::mod5_23, 6), TruncatedSeries::from_coeffs({1, 0, 1, 1, 1, 1, 2}, 6));
    EXPECT_EQ(rr_product_side(RRProduct::mod5_14, 0), TruncatedSeries::one(0));
}

TEST(PochhammerProperty, IndexSplitting)
{
    const int T = 14;
    for (const MonomialParam a : {mq(1), mq(2), mq(1, 2), mq(3, -1, 3)}) {
        for (long m = 0; m <= 4; ++m) {
            for (long n = 0; n <= 4; ++n) {
                const MonomialParam shifted{a.coeff, a.exp + m};
                EXPECT_EQ(value(qpoch(a, m + n, T)), value(qpoch(a, m, T)) * value(qpoch(shifted, n, T)));
            }
        }
    }
}

TEST(PochhammerProperty, NegativeIndexInverts)
{
    const int T = 14;
    for (const MonomialParam a : {mq(1), mq(2), mq(1, 5, 7)}) {
        for (long n = 1; n <= 5; ++n) {
            const MonomialParam shifted{a.coeff, a.exp + n};
            EXPECT_EQ(value(qpoch(a, n, T)) * value(qpoch(shifted, -n, T)), TruncatedSeries::one(T));
        }
    }
}

TEST(PochhammerProperty, InfiniteMatchesLongFinite)
{
    const int T = 12;
    for (long e = 1; e <= 3; ++e) {
        EXPECT_EQ(qpoch_infinite(mq(e), T), value(qpoch(mq(e), T + 1, T)));
        EXPECT_EQ(qpoch_infinite(mq(e), T), value(qpoch(mq(e), T + 5, T)));
    }
}

TEST(PochhammerProperty, ReflectionAtAQPowMPlusOne)
{
    // a = q^{m+1}: (q/a)_{-k-1}/(aq)_{-k-1} a^{-k-1} = -(q/a)_k/(aq)_k a^k, 0 <= k <= m.
    const int T = 30;
    for (long m = 0; m <= 4; ++m) {
        const Param a = qp(m + 1);
        for (long k = 0; k <= m; ++k) {
            Term left;
            left.poch(qp(1) / a, -k - 1).poch(a * qp(1), -k - 1, -1).pow(a, -k - 1);
            Term right;
            right.times(-1).poch(qp(1) / a, k).poch(a * qp(1), k, -1).pow(a, k);
            expect_same(evaluate(left, T), evaluate(right, T));
        }
    }
}

TEST(PochhammerCache, SharedAcrossThreads)
{
    const int T = 25;
    std::vector<TruncatedSeries> got(8);
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < 8; ++w) {
            pool.emplace_back([&, w] { got[w] = qfactorial_cache().reciprocal(10 + w % 2, T); });
        }
    }
    for (int w = 0; w < 8; ++w) {
        EXPECT_EQ(got[w] * value(qpoch(mq(1, 2, 1), 0, T)), got[w]);
        EXPECT_EQ(got[w] * naive_product([&] {
                      std::vector<std::pair<BigRat, long>> fs;
                      for (long j = 1; j <= 10 + w % 2; ++j) fs.push_back({1, j});
                      return fs;
                  }(), T),
                  TruncatedSeries::one(T));
    }
}
