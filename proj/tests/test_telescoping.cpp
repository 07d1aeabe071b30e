#include <gtest/gtest.h>

#include "qrr/telescoping.hpp"

using namespace qrr;

namespace {

using V = VerificationReport::Verdict;
using Poly = std::vector<long>;

Poly mul(const Poly &a, const Poly &b)
{
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

Poly power(const Poly &a, int k)
{
    Poly r{1};
    for (int i = 0; i < k; ++i) {
        r = mul(r, a);
    }
    return r;
}

Poly add(Poly a, const Poly &b)
{
    a.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

void expect_poly(const ScaledSeries &s, const Poly &p, long top)
{
    for (long i = std::min(0L, s.low()); i <= top; ++i) {
        const long want = (i >= 0 && i < static_cast<long>(p.size())) ? p[i] : 0;
        EXPECT_EQ(s.coeff(i), want) << "q^" << i;
    }
}

const Lmnuv ones{1, 1, 1, 1, 1};

} // namespace

TEST(Certificate, FZeroByHand)
{
    // q^2 (1+q)^4 (1+q^2)
    const Poly p = mul(mul(Poly{0, 0, 1}, power({1, 1}, 4)), Poly{1, 0, 1});
    expect_poly(certificate_F(0, ones, 20), p, 20);
}

TEST(Certificate, FTermZeroByHand)
{
    // 2(1+q)^4 + q^2 (1+q+q^2)^3
    const Poly p = add(mul(Poly{2}, power({1, 1}, 4)), mul(Poly{0, 0, 1}, power({1, 1, 1}, 3)));
    expect_poly(f_term(0, ones, 20), p, 20);
}

TEST(Certificate, GTermZeroByHand)
{
    // 2(1+q)^3 (1+q+...+q^5)
    const Poly p = mul(Poly{2}, mul(power({1, 1}, 3), Poly{1, 1, 1, 1, 1, 1}));
    expect_poly(g_term(0, ones, 20), p, 20);
}

TEST(Certificate, VanishesPastSupport)
{
    const Lmnuv x{2, 1, 3, 1, 2};
    for (long k = x.min() + 1; k <= x.min() + 4; ++k) {
        EXPECT_TRUE(f_term(k, x, 30).is_zero()) << k;
        EXPECT_TRUE(g_term(k, x, 30).is_zero()) << k;
    }
    EXPECT_TRUE(certificate_F(x.min() + 1, x, 30).is_zero());
    EXPECT_FALSE(certificate_F(x.min(), x, 30).is_zero());
}

TEST(Certificate, PartialSums)
{
    const Lmnuv x{2, 1, 3, 1, 2};
    const int T = 40;
    for (long k = 0; k <= x.min() + 2; ++k) {
        TermSum fg;
        for (long j = 0; j <= k; ++j) {
            append(fg, f_terms(j, x));
            append(fg, negated(g_terms(j, x)));
        }
        TermSum diff{certificate_term(k + 1, x)};
        append(diff, negated({certificate_term(0, x)}));
        EXPECT_FALSE(compare(evaluate_sum(fg, nullptr, T), evaluate_sum(diff, nullptr, T)).has_value()) << k;
    }
}

TEST(Certificate, Examples)
{
    EXPECT_TRUE(verify_telescoping(ones, 40).passed());
    EXPECT_TRUE(verify_telescoping({2, 1, 3, 1, 2}, 40).passed());
}

TEST(Certificate, NeedsPositiveUV)
{
    const auto c = verify_telescoping({1, 1, 1, 0, 1}, 20);
    EXPECT_FALSE(c.passed());
    EXPECT_FALSE(c.failure.empty());
    EXPECT_THROW(require_uv({1, 1, 1, 0, 1}), PreconditionViolated);
}

TEST(Certificate, FullGrid)
{
    for (long l = 0; l <= 3; ++l)
        for (long m = 0; m <= 3; ++m)
            for (long n = 0; n <= 3; ++n)
                for (long u = 1; u <= 3; ++u)
                    for (long v = 1; v <= 3; ++v) {
                        const auto c = verify_telescoping({l, m, n, u, v}, 30);
                        EXPECT_TRUE(c.passed()) << l << m << n << u << v << " " << c.failure;
                    }
}

TEST(Certificate, UncorrectedTranscriptionFails)
{
    // With (q)_{u-k}(q)_{v-k}/((q)_{u+k}(q)_{v+k}) in g_k and (q)_{u-1}(q)_{v-1}
    // under the boundary term, the certificate no longer closes.
    EXPECT_FALSE(verify_telescoping(ones, 30, Transcription::as_printed).passed());
    EXPECT_FALSE(verify_telescoping({2, 1, 3, 1, 2}, 30, Transcription::as_printed).passed());
}

TEST(SkTk, Examples)
{
    EXPECT_EQ(verify_sk_tk(ones, 40).verdict, V::equal);
    EXPECT_EQ(verify_sk_tk({3, 0, 1, 2, 1}, 40).verdict, V::equal);
    EXPECT_EQ(verify_sk_tk({1, 1, 1, 0, 1}, 40).verdict, V::error);
}

TEST(SkTk, ZeroPastSupport)
{
    const Lmnuv x{3, 0, 1, 2, 1};
    for (long k = x.min() + 1; k <= x.min() + 3; ++k) {
        EXPECT_TRUE(s_term(k, x, 30).is_zero());
        EXPECT_TRUE(t_term(k, x, 30).is_zero());
    }
}

TEST(SkTk, Grid)
{
    for (long l = 0; l <= 3; ++l)
        for (long m = 0; m <= 3; ++m)
            for (long n = 0; n <= 3; ++n)
                for (long u = 1; u <= 3; ++u)
                    for (long v = 1; v <= 3; ++v) {
                        const auto r = verify_sk_tk({l, m, n, u, v}, 30);
                        EXPECT_EQ(r.verdict, V::equal) << r.params.str() << " " << r.error;
                    }
}

TEST(Polynomial, Splits)
{
    for (long M = 0; M <= 8; ++M) {
        EXPECT_TRUE(qfac_split(M));
        for (long N = 0; N <= 8; ++N) {
            EXPECT_TRUE(three_term_split(M, N)) << M << " " << N;
        }
    }
}

TEST(Polynomial, RemarkRelation)
{
    for (long k = -2; k <= 2; ++k) {
        for (long v = 1; v <= 4; ++v) {
            if (v + k - 1 >= 0) {
                EXPECT_TRUE(remark_relation(k, v, 30)) << k << " " << v;
            }
        }
    }
}

TEST(Quartic, Examples)
{
    auto s = quartic_rational(2, 2, 2, 2);
    EXPECT_EQ(s.lhs, s.rhs);
    s = quartic_rational(3, 5, 7, 1);
    EXPECT_EQ(s.lhs, s.rhs);
    s = quartic_rational(0, 0, 0, 2);
    EXPECT_EQ(s.lhs, 1);
    EXPECT_EQ(s.rhs, 1);
    // The polynomial form at a = b = c = 0: d(1 - d^2) + d^3 = d.
    const auto p = quartic_polynomial(0, 0, 0, 2);
    EXPECT_EQ(p.lhs, 2);
    EXPECT_EQ(p.rhs, 2);
}

TEST(Quartic, RationalPoints)
{
    const BigRat pts[] = {make_rat(1, 2), make_rat(-3, 7), make_rat(5, 3), make_rat(-2, 1)};
    for (const auto &a : pts)
        for (const auto &b : pts)
            for (const auto &c : pts)
                for (const auto &d : pts) {
                    const auto s = quartic_rational(a, b, c, d);
                    EXPECT_EQ(s.lhs, s.rhs);
                }
}

TEST(Quartic, FullGrid)
{
    EXPECT_EQ(verify_quartic_identity().verdict, V::equal);
}
