// Bailey pairs, Bailey's lemma, the lattice step, and the chain routes to
// ABCDE1, ABCDE2 and ABCDE3.
//
// alpha_n and beta_n are generators returning finite sums of terms. A pair
// is either one-sided (alpha_r for r >= 0) or bilateral (alpha_r for all r,
// with the relation summed over every r where 1/(q)_{n-r}(xq)_{n+r} is
// nonzero). Bilateral pairs at x = q are normalized to the (xq)_{n+r} form,
// so their alpha already carries the 1/(1-q) of the (q)_{n+r+1} form.

#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrr/records.hpp"

namespace qrr {

using TermSum = std::vector<Term>;

inline TermSum scaled(const TermSum &s, const Term &f)
{
    TermSum out;
    out.reserve(s.size());
    for (Term t : s) {
        t *= f;
        out.push_back(std::move(t));
    }
    return out;
}

inline void append(TermSum &a, const TermSum &b) { a.insert(a.end(), b.begin(), b.end()); }

inline TermSum negated(const TermSum &s) { return scaled(s, Term().times(BigRat(-1))); }

struct BaileyPair {
    std::string name;
    Param x;
    bool bilateral{false};
    std::function<TermSum(long)> alpha;
    std::function<TermSum(long)> beta;

    /// Indices r contributing to beta_n through the pair relation.
    Bounds relation_range(long n) const { return bilateral ? Bounds{-n - x.exp, n} : Bounds{0, n}; }
};

class InadmissiblePair : public std::invalid_argument {
public:
    explicit InadmissiblePair(const std::string &what) : std::invalid_argument(what) {}
};

/// sum_r alpha_r / ((q)_{n-r} (xq)_{n+r}).
inline TermSum relation_sum(const BaileyPair &p, long n)
{
    TermSum out;
    const Bounds b = p.relation_range(n);
    for (long r = b.lo; r <= b.hi; ++r) {
        Term w;
        w.qfac(n - r, -1).poch(p.x * qp(1), n + r, -1);
        append(out, scaled(p.alpha(r), w));
    }
    return out;
}

inline VerificationReport verify_pair(const BaileyPair &p, long n_max, int trunc)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = p.name;
    r.params.set("n_max", n_max);
    r.trunc = trunc;
    r.verdict = VerificationReport::Verdict::equal;
    try {
        for (long n = 0; n <= n_max && r.passed(); ++n) {
            judge(r, evaluate_sum(p.beta(n), nullptr, trunc), evaluate_sum(relation_sum(p, n), nullptr, trunc));
            if (!r.passed()) {
                r.params.set("n", n);
            }
        }
    } catch (const std::exception &e) {
        r.verdict = VerificationReport::Verdict::error;
        r.error = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---- unit pairs ---------------------------------------------------------

inline long binom2(long n) { return n * (n - 1) / 2; }

inline TermSum delta0(long n) { return n == 0 ? TermSum{Term()} : TermSum{}; }

/// x = 1, alpha_r = (-1)^r q^{C(r,2)} over all r, beta_n = delta_{n,0}.
inline BaileyPair unit_pair_x1_bilateral()
{
    BaileyPair p{"unit-x1-bilateral", qp(0), true, {}, delta0};
    p.alpha = [](long r) { return TermSum{Term().sign(r).qpow(binom2(r))}; };
    return p;
}

/// x = q, alpha_r = (-1)^r q^{C(r,2)} / (1-q) over all r.
inline BaileyPair unit_pair_xq_bilateral()
{
    BaileyPair p{"unit-xq-bilateral", qp(1), true, {}, delta0};
    p.alpha = [](long r) { return TermSum{Term().sign(r).qpow(binom2(r)).one_minus(qp(1), -1)}; };
    return p;
}

/// alpha_0 = alpha_0, alpha_n -> alpha_n + alpha_{-n}; the one-sided pair at x = 1.
inline BaileyPair symmetrize_x1(const BaileyPair &p)
{
    if (!p.bilateral || p.x.exp != 0) {
        throw InadmissiblePair("symmetrize_x1 needs a bilateral pair with x = 1");
    }
    BaileyPair s{p.name + "/sym", p.x, false, {}, p.beta};
    s.alpha = [a = p.alpha](long n) {
        if (n < 0) {
            return TermSum{};
        }
        TermSum out = a(n);
        if (n > 0) {
            append(out, a(-n));
        }
        return out;
    };
    return s;
}

/// alpha_n -> alpha_n + alpha_{-n-1}; the one-sided pair at x = q.
inline BaileyPair symmetrize_xq(const BaileyPair &p)
{
    if (!p.bilateral || p.x.exp != 1) {
        throw InadmissiblePair("symmetrize_xq needs a bilateral pair with x = q");
    }
    BaileyPair s{p.name + "/sym", p.x, false, {}, p.beta};
    s.alpha = [a = p.alpha](long n) {
        if (n < 0) {
            return TermSum{};
        }
        TermSum out = a(n);
        append(out, a(-n - 1));
        return out;
    };
    return s;
}

inline BaileyPair unit_pair_x1() { return symmetrize_x1(unit_pair_x1_bilateral()); }
inline BaileyPair unit_pair_xq() { return symmetrize_xq(unit_pair_xq_bilateral()); }

/// The x = q unit pair exactly as printed: a plus sign between the two
/// q-powers and no 1/(1-q). It is not a Bailey pair; kept for tests.
inline BaileyPair unit_pair_xq_as_printed()
{
    BaileyPair p{"unit-xq-as-printed", qp(1), false, {}, delta0};
    p.alpha = [](long n) {
        if (n < 0) {
            return TermSum{};
        }
        return TermSum{Term().sign(n).qpow(binom2(n)), Term().sign(n).qpow(binom2(-n - 1))};
    };
    return p;
}

/// x = q, alpha_n = (-1)^n q^{C(n,2)} (1 - q^{2n+1}) / (1 - q), beta_n = delta_{n,0}.
inline BaileyPair lattice_seed()
{
    BaileyPair p{"lattice-seed", qp(1), false, {}, delta0};
    p.alpha = [](long n) {
        if (n < 0) {
            return TermSum{};
        }
        return TermSum{Term().sign(n).qpow(binom2(n)).one_minus(qp(2 * n + 1)).one_minus(qp(1), -1)};
    };
    return p;
}

// ---- lemma and lattice --------------------------------------------------

/// One application of Bailey's lemma; x is unchanged.
inline BaileyPair bailey_step(const BaileyPair &p, const Param &rho1, const Param &rho2)
{
    const Param x = p.x;
    const Param xq_r1 = x * qp(1) / rho1;
    const Param xq_r2 = x * qp(1) / rho2;
    const Param xq_r12 = x * qp(1) / (rho1 * rho2);
    BaileyPair s{p.name + "'", x, p.bilateral, {}, {}};
    s.alpha = [=, a = p.alpha](long n) {
        Term f;
        f.poch(rho1, n).poch(rho2, n).pow(xq_r12, n).poch(xq_r1, n, -1).poch(xq_r2, n, -1);
        return scaled(a(n), f);
    };
    s.beta = [=, b = p.beta](long n) {
        TermSum out;
        for (long r = 0; r <= n; ++r) {
            Term w;
            w.poch(rho1, r).poch(rho2, r).poch(xq_r12, n - r).pow(xq_r12, r).qfac(n - r, -1);
            w.poch(xq_r1, n, -1).poch(xq_r2, n, -1);
            append(out, scaled(b(r), w));
        }
        return out;
    };
    return s;
}

/// One lattice step; the new parameter is x/q. Needs a one-sided pair.
inline BaileyPair lattice_step(const BaileyPair &p, const Param &rho1, const Param &rho2)
{
    if (p.x.exp < 1) {
        throw InadmissiblePair("lattice_step needs x with q-exponent >= 1");
    }
    if (p.bilateral) {
        throw InadmissiblePair("lattice_step needs a one-sided pair");
    }
    const Param x = p.x;
    const Param x_r1 = x / rho1;
    const Param x_r2 = x / rho2;
    const Param x_r12 = x / (rho1 * rho2);
    BaileyPair s{p.name + "^", x * qp(-1), false, {}, {}};
    s.alpha = [=, a = p.alpha](long n) {
        if (n < 0) {
            return TermSum{};
        }
        if (n == 0) {
            return a(0);
        }
        Term g;
        g.one_minus(x).pow(x_r12, n).poch(rho1, n).poch(rho2, n).poch(x_r1, n, -1).poch(x_r2, n, -1);
        Term first = g;
        first.one_minus(x * qp(2 * n), -1);
        Term second = g;
        second.times(BigRat(-1)).pow(x, 1).qpow(2 * n - 2).one_minus(x * qp(2 * n - 2), -1);
        TermSum out = scaled(a(n), first);
        append(out, scaled(a(n - 1), second));
        return out;
    };
    s.beta = [=, b = p.beta](long n) {
        TermSum out;
        for (long r = 0; r <= n; ++r) {
            Term w;
            w.poch(rho1, r).poch(rho2, r).poch(x_r12, n - r).pow(x_r12, r).qfac(n - r, -1);
            w.poch(x_r1, n, -1).poch(x_r2, n, -1);
            append(out, scaled(b(r), w));
        }
        return out;
    };
    return s;
}

/// Stepped pairs for closure checks: every base pair through the lemma with
/// several tilted (rho1, rho2) of q-exponent <= 0, and the one-sided x = q pairs through the
/// lattice step. Tilts keep xq/rho away from exact unit factors.
inline std::vector<BaileyPair> closure_cases()
{
    const std::vector<std::pair<Param, Param>> rhos{
        {Param::tilted(-1, 1), Param::tilted(0, 3)},  {Param::tilted(0, 1), Param::tilted(-1, 4)},
        {Param::tilted(-2, 2), Param::tilted(0, 7)},  {Param::tilted(-1, 3), Param::tilted(-2, 5)},
        {Param::tilted(0, 5), Param::tilted(0, -2)},
    };
    std::vector<BaileyPair> out;
    for (const BaileyPair &p : {unit_pair_x1(), unit_pair_xq(), unit_pair_x1_bilateral(), unit_pair_xq_bilateral(),
                                lattice_seed()}) {
        for (const auto &[r1, r2] : rhos) {
            out.push_back(bailey_step(p, r1, r2));
        }
    }
    for (const BaileyPair &p : {unit_pair_xq(), lattice_seed()}) {
        for (const auto &[r1, r2] : rhos) {
            out.push_back(lattice_step(p, r1, r2));
            out.push_back(lattice_step(bailey_step(p, rhos[0].first, rhos[0].second), r1, r2));
        }
    }
    return out;
}

// ---- symmetrized corollaries ----------------------------------------------

enum class SymMode { x1, xq };

/// The summation identity obtained from a bilateral pair at x = 1 or x = q:
///   sum_n (rho1, rho2, q^-N)_n / (xq/rho1, xq/rho2, xq^{N+1})_n (xq^{1+N}/rho1 rho2)^n (-1)^n q^{-C(n,2)} alpha_n
///   = (xq, xq/rho1 rho2)_N / (xq/rho1, xq/rho2)_N sum_n (rho1, rho2, q^-N)_n q^n beta_n / (rho1 rho2 q^-N / x)_n
inline VerificationReport symmetrized_identity(const BaileyPair &p, const Param &rho1, const Param &rho2, long N,
                                               int trunc, SymMode mode)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = mode == SymMode::x1 ? "SYM-X1" : "SYM-XQ";
    r.params.set("N", N);
    r.trunc = trunc;
    try {
        const long xe = mode == SymMode::x1 ? 0 : 1;
        if (!p.bilateral || p.x.exp != xe) {
            throw InadmissiblePair("symmetrized_identity: pair does not match the mode");
        }
        const Param x = p.x;
        TermSum lhs;
        for (long n = -N - xe; n <= N; ++n) {
            Term w;
            w.poch(rho1, n).poch(rho2, n).poch(qp(-N), n);
            w.poch(x * qp(1) / rho1, n, -1).poch(x * qp(1) / rho2, n, -1).poch(x * qp(N + 1), n, -1);
            w.pow(x * qp(1 + N) / (rho1 * rho2), n).sign(n).qpow(-binom2(n));
            append(lhs, scaled(p.alpha(n), w));
        }
        TermSum rhs;
        for (long n = 0; n <= N; ++n) {
            Term w;
            w.poch(rho1, n).poch(rho2, n).poch(qp(-N), n).qpow(n).poch(rho1 * rho2 * qp(-N) / x, n, -1);
            append(rhs, scaled(p.beta(n), w));
        }
        Term pre;
        pre.poch(x * qp(1), N).poch(x * qp(1) / (rho1 * rho2), N);
        pre.poch(x * qp(1) / rho1, N, -1).poch(x * qp(1) / rho2, N, -1);
        judge(r, evaluate_sum(lhs, nullptr, trunc), evaluate_sum(rhs, &pre, trunc));
    } catch (const std::exception &e) {
        r.verdict = VerificationReport::Verdict::error;
        r.error = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---- chain routes --------------------------------------------------------

enum class ChainTarget { abcde1, abcde2, abcde3 };

inline const char *to_string(ChainTarget t)
{
    switch (t) {
    case ChainTarget::abcde1:
        return "ABCDE1";
    case ChainTarget::abcde2:
        return "ABCDE2";
    case ChainTarget::abcde3:
        return "ABCDE3";
    }
    return "";
}

/// The pair whose relation at n = N is the target with a = q^{N+1}.
/// Uses the registry's parameter convention (see records.hpp).
inline BaileyPair chain_pair(ChainTarget target, const Params &p)
{
    const detail::Five f = detail::five(p);
    switch (target) {
    case ChainTarget::abcde1:
        return bailey_step(bailey_step(unit_pair_x1_bilateral(), qp(1) / f.b, qp(1) / f.c), qp(1) / f.d,
                           qp(1) / f.e);
    case ChainTarget::abcde2:
        return bailey_step(bailey_step(unit_pair_xq_bilateral(), qp(1) / f.b, qp(1) / f.c), qp(1) / f.d,
                           qp(1) / f.e);
    case ChainTarget::abcde3:
        return lattice_step(bailey_step(lattice_seed(), qp(2) / f.d, qp(2) / f.e), qp(1) / f.b, qp(1) / f.c);
    }
    throw std::invalid_argument("unknown chain target");
}

/// (bc/q)_N / (q,b,c)_N sum_n (q^-N, q/b, q/c, de/q^2)_n / (q, d, e, q^{2-N}/bc)_n q^n
inline TermSum lattice_beta_closed(const Params &p)
{
    const detail::Five f = detail::five(p);
    const long N = p["n"];
    TermSum out;
    for (long n = 0; n <= N; ++n) {
        Term t;
        t.poch(f.b * f.c * qp(-1), N).qfac(N, -1).poch(f.b, N, -1).poch(f.c, N, -1);
        t.poch(qp(-N), n).poch(qp(1) / f.b, n).poch(qp(1) / f.c, n).poch(f.d * f.e * qp(-2), n);
        t.qfac(n, -1).poch(f.d, n, -1).poch(f.e, n, -1).poch(qp(2 - N) / (f.b * f.c), n, -1).qpow(n);
        out.push_back(std::move(t));
    }
    return out;
}

/// 1/(q,q)_N sum_{n in Z} (q^-N, q/b, q/c, q/d, q/e)_n / (q^{1+N}, b, c, d/q, e/q)_n (bcde q^{N-2})^n
inline TermSum lattice_beta_bilateral(const Params &p)
{
    const detail::Five f = detail::five(p);
    const long N = p["n"];
    TermSum out;
    for (long n = -N; n <= N; ++n) {
        Term t;
        t.qfac(N, -2);
        t.poch(qp(-N), n).poch(qp(1) / f.b, n).poch(qp(1) / f.c, n).poch(qp(1) / f.d, n).poch(qp(1) / f.e, n);
        t.poch(qp(1 + N), n, -1).poch(f.b, n, -1).poch(f.c, n, -1).poch(f.d * qp(-1), n, -1);
        t.poch(f.e * qp(-1), n, -1).pow(f.b * f.c * f.d * f.e * qp(N - 2), n);
        out.push_back(std::move(t));
    }
    return out;
}

/// Builds the target by its chain (or lattice) route and checks
///   chain beta_N = pair relation at N,
///   K * relation = direct left side, K * chain beta_N = direct right side,
/// where K = (q)_N^2 for ABCDE1/3 and (q)_N (q)_{N+1} for ABCDE2.
/// ABCDE3 also checks both closed forms of beta''_N.
inline VerificationReport chain_reproduce(ChainTarget target, const Params &params, int trunc)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = std::string("CHAIN-") + to_string(target);
    r.params = params;
    r.trunc = trunc;
    r.verdict = VerificationReport::Verdict::equal;
    auto step = [&](const char *what, const ScaledSeries &a, const ScaledSeries &b) {
        if (!r.passed()) {
            return;
        }
        judge(r, a, b);
        if (!r.passed()) {
            r.error = what;
        }
    };
    try {
        const long N = params["n"];
        const IdentityRecord &rec = find_identity(to_string(target));
        const BaileyPair pair = chain_pair(target, params);
        const TermSum beta = pair.beta(N);
        const TermSum rel = relation_sum(pair, N);
        Term K;
        K.qfac(N, 1).qfac(target == ChainTarget::abcde2 ? N + 1 : N, 1);

        step("chain beta differs from the pair relation", evaluate_sum(beta, nullptr, trunc),
             evaluate_sum(rel, nullptr, trunc));
        step("relation differs from the direct left side", evaluate_sum(rel, &K, trunc),
             eval_side(rec, Side::lhs, params, trunc));
        step("chain beta differs from the direct right side", evaluate_sum(beta, &K, trunc),
             eval_side(rec, Side::rhs, params, trunc));
        if (target == ChainTarget::abcde3) {
            step("chain beta differs from the closed form", evaluate_sum(beta, nullptr, trunc),
                 evaluate_sum(lattice_beta_closed(params), nullptr, trunc));
            step("chain beta differs from the bilateral form", evaluate_sum(beta, nullptr, trunc),
                 evaluate_sum(lattice_beta_bilateral(params), nullptr, trunc));
        }
    } catch (const std::exception &e) {
        r.verdict = VerificationReport::Verdict::error;
        r.error = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace qrr
