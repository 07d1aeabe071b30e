#include <gtest/gtest.h>

#include "qrr/bailey.hpp"

using namespace qrr;

namespace {

using V = VerificationReport::Verdict;

const int T = 40;

TruncatedSeries recip_qfac(long n, int order)
{
    const PochValue v = qpoch_reciprocal({BigRat(1), 1}, n, order);
    return v.kind() == PochValue::Kind::zero ? TruncatedSeries(order) : v.series();
}

TruncatedSeries body(const ScaledSeries &s, int order)
{
    std::vector<BigRat> cs;
    for (long i = 0; i <= order; ++i) {
        cs.push_back(s.coeff(i));
    }
    return TruncatedSeries(cs);
}

bool same(const ScaledSeries &a, const ScaledSeries &b) { return !compare(a, b).has_value(); }

Params chain_params(long n, long l, long m, long u, long v) { return {{"l", l}, {"m", m}, {"n", n}, {"u", u}, {"v", v}}; }

} // namespace

TEST(UnitPairs, PassForSmallN)
{
    for (const BaileyPair &p : {unit_pair_x1_bilateral(), unit_pair_x1(), unit_pair_xq_bilateral(), unit_pair_xq(),
                                lattice_seed()}) {
        const auto r = verify_pair(p, 10, T);
        EXPECT_EQ(r.verdict, V::equal) << p.name << " " << r.error;
    }
}

TEST(UnitPairs, XOneSumIsKroneckerDelta)
{
    // sum_r (-1)^r q^{C(r,2)} / ((q)_{n-r} (q)_{n+r}) = delta_{n,0}, summed without the pair machinery.
    const int order = 30;
    for (long n = 0; n <= 6; ++n) {
        TruncatedSeries s(order);
        for (long r = -n; r <= n; ++r) {
            const long e = r * (r - 1) / 2;
            TruncatedSeries t = TruncatedSeries::monomial({BigRat(1), e}, order + 40).truncated(order);
            t = t * recip_qfac(n - r, order) * recip_qfac(n + r, order);
            s = (r % 2 == 0) ? s + t : s - t;
        }
        EXPECT_EQ(s, n == 0 ? TruncatedSeries::one(order) : TruncatedSeries(order)) << n;
    }
}

TEST(UnitPairs, SymmetrizedAlphaAtXOne)
{
    // alpha_n = (-1)^n (q^{C(n,2)} + q^{C(-n,2)}) for n >= 1.
    const auto a = unit_pair_x1().alpha(3);
    Term e1, e2;
    e1.sign(3).qpow(3);
    e2.sign(3).qpow(6);
    EXPECT_TRUE(same(evaluate_sum(a, nullptr, 20), evaluate_sum({e1, e2}, nullptr, 20)));
}

TEST(UnitPairs, PrintedXqPairFails)
{
    const auto r = verify_pair(unit_pair_xq_as_printed(), 5, T);
    EXPECT_EQ(r.verdict, V::mismatch);
    EXPECT_EQ(r.params.get("n", -1), 0);
}

TEST(UnitPairs, SymmetrizeRejectsWrongX)
{
    EXPECT_THROW(symmetrize_x1(unit_pair_xq_bilateral()), InadmissiblePair);
    EXPECT_THROW(symmetrize_xq(unit_pair_x1_bilateral()), InadmissiblePair);
}

TEST(BaileyStep, BetaOfUnitPairClosedForm)
{
    // beta'_N = (q/rho1 rho2)_N / (q, q/rho1, q/rho2)_N
    const Param r1 = Param::tilted(-1, 1);
    const Param r2 = Param::tilted(0, 3);
    const BaileyPair s = bailey_step(unit_pair_x1(), r1, r2);
    for (long N = 0; N <= 5; ++N) {
        Term closed;
        closed.poch(qp(1) / (r1 * r2), N).qfac(N, -1).poch(qp(1) / r1, N, -1).poch(qp(1) / r2, N, -1);
        EXPECT_TRUE(same(evaluate_sum(s.beta(N), nullptr, T), evaluate(closed, T))) << N;
        EXPECT_TRUE(same(evaluate(closed, T), evaluate_sum(relation_sum(s, N), nullptr, T))) << N;
    }
}

TEST(BaileyStep, ClosureOverCases)
{
    const auto cases = closure_cases();
    EXPECT_GE(cases.size(), 20u);
    for (const auto &p : cases) {
        const auto r = verify_pair(p, 6, 30);
        EXPECT_EQ(r.verdict, V::equal) << p.name << " " << r.error;
    }
}

TEST(BaileyStep, WrongBetaIsCaught)
{
    const Param r1 = Param::tilted(-1, 1);
    BaileyPair bad = bailey_step(unit_pair_x1(), r1, Param::tilted(0, 3));
    bad.beta = bailey_step(unit_pair_x1(), r1, Param::tilted(-2, 5)).beta;
    EXPECT_EQ(verify_pair(bad, 4, 30).verdict, V::mismatch);
}

TEST(LatticeStep, Preconditions)
{
    const Param r = Param::tilted(0, 1);
    EXPECT_THROW(lattice_step(unit_pair_x1(), r, r), InadmissiblePair);
    EXPECT_THROW(lattice_step(unit_pair_xq_bilateral(), r, r), InadmissiblePair);
    EXPECT_EQ(lattice_step(lattice_seed(), r, r).x.exp, 0);
}

TEST(Symmetrized, Examples)
{
    const Param r1 = Param::tilted(-1, 1);
    const Param r2 = Param::tilted(0, 3);
    EXPECT_EQ(symmetrized_identity(unit_pair_x1_bilateral(), r1, r2, 3, T, SymMode::x1).verdict, V::equal);
    EXPECT_EQ(symmetrized_identity(unit_pair_xq_bilateral(), r1, r2, 3, T, SymMode::xq).verdict, V::equal);
    EXPECT_EQ(symmetrized_identity(unit_pair_x1_bilateral(), r1, r2, 0, T, SymMode::x1).verdict, V::equal);
    EXPECT_EQ(symmetrized_identity(unit_pair_xq_bilateral(), r1, r2, 0, T, SymMode::xq).verdict, V::equal);
    EXPECT_EQ(symmetrized_identity(unit_pair_x1_bilateral(), r1, r2, 2, T, SymMode::xq).verdict, V::error);
}

TEST(Chain, Examples)
{
    const Params p = chain_params(2, 1, 1, 0, 0);
    for (auto t : {ChainTarget::abcde1, ChainTarget::abcde2, ChainTarget::abcde3}) {
        const auto r = chain_reproduce(t, p, T);
        EXPECT_EQ(r.verdict, V::equal) << to_string(t) << " " << r.error;
    }
}

TEST(Chain, SmallGrid)
{
    for (auto t : {ChainTarget::abcde1, ChainTarget::abcde2, ChainTarget::abcde3}) {
        for (long N = 0; N <= 3; ++N) {
            for (long l = 0; l <= 1; ++l) {
                for (long v = 0; v <= 2; ++v) {
                    const auto r = chain_reproduce(t, chain_params(N, l, 1, 1, v), 30);
                    EXPECT_EQ(r.verdict, V::equal) << to_string(t) << " " << r.params.str() << " " << r.error;
                }
            }
        }
    }
}

TEST(Chain, LatticeBetaForms)
{
    for (long N = 0; N <= 3; ++N) {
        const Params p = chain_params(N, 1, 2, 0, 1);
        const auto closed = evaluate_sum(lattice_beta_closed(p), nullptr, T);
        const auto bilateral = evaluate_sum(lattice_beta_bilateral(p), nullptr, T);
        const auto chain = evaluate_sum(chain_pair(ChainTarget::abcde3, p).beta(N), nullptr, T);
        EXPECT_TRUE(same(closed, bilateral)) << N;
        EXPECT_TRUE(same(closed, chain)) << N;
        EXPECT_FALSE(closed.is_zero());
    }
}

TEST(Chain, RelationIsTheDirectLeftSide)
{
    // (q)_N^2 times the x = 1 relation is the ABCDE1 left side; checked here by coefficients.
    const Params p = chain_params(3, 0, 1, 2, 1);
    const auto rel = evaluate_sum(relation_sum(chain_pair(ChainTarget::abcde1, p), 3), nullptr, T);
    const auto lhs = eval_side(find_identity("ABCDE1"), Side::lhs, p, T);
    const auto qf = qpoch({BigRat(1), 1}, 3, T).series();
    EXPECT_EQ(body(rel, T) * qf * qf, body(lhs, T));
}
