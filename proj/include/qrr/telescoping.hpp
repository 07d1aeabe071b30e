// Certificate checks for the two non-well-poised identities LMNRS3 and
// LMNRS4: the telescoping pair f_k, g_k with certificate F(k), and the
// termwise equality S_k = T_k.

#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "qrr/bailey.hpp"

namespace qrr {

struct Lmnuv {
    long l, m, n, u, v;

    Params params() const { return {{"l", l}, {"m", m}, {"n", n}, {"u", u}, {"v", v}}; }
    long min() const { return std::min({l, m, n, u, v}); }
    long total() const { return l + m + n + u + v + 1; }
};

class PreconditionViolated : public std::invalid_argument {
public:
    explicit PreconditionViolated(const std::string &what) : std::invalid_argument(what) {}
};

inline void require_uv(const Lmnuv &x)
{
    if (x.u < 1 || x.v < 1) {
        throw PreconditionViolated("u and v must be >= 1");
    }
    if (x.l < 0 || x.m < 0 || x.n < 0) {
        throw PreconditionViolated("l, m, n must be >= 0");
    }
}

/// How the right-hand side of the telescoping argument is transcribed.
/// `as_printed` keeps (q)_{u-k}(q)_{v-k}/((q)_{u+k}(q)_{v+k}) inside g_k and
/// (q)_{u-1}(q)_{v-1} under the boundary term; `corrected` uses the ratio
/// of the k and -k terms, (1-q^{u-k})(1-q^{v-k})/((1-q^{u+k})(1-q^{v+k})),
/// and (q)_u (q)_v.
enum class Transcription { corrected, as_printed };

namespace detail {

// (q)_{l+m}(q)_{l+n}(q)_{m+n}(q)_{u-1}(q)_{v-1}(q)_{u+v-1}
//   / ((q)_{l-k}(q)_{m-k}(q)_{n-k}(q)_{u-k}(q)_{v-k}(q)_{l+k}(q)_{m+k}(q)_{n+k}(q)_{u+k-1}(q)_{v+k-1})
inline void g_core(Term &t, const Lmnuv &x, long k)
{
    qfacs(t, {x.l + x.m, x.l + x.n, x.m + x.n, x.u - 1, x.v - 1, x.u + x.v - 1}, 1);
    qfacs(t, {x.l - k, x.m - k, x.n - k, x.u - k, x.v - k, x.l + k, x.m + k, x.n + k, x.u + k - 1, x.v + k - 1}, -1);
}

} // namespace detail

/// f_k as two terms.
inline TermSum f_terms(long k, const Lmnuv &x)
{
    using detail::qfacs;
    Term a;
    a.sign(k).qpow((5 * k * k - k) / 2).one_minus(Param{BigRat(-1), k, 0});
    qfacs(a, {x.l + x.m, x.l + x.n, x.m + x.n, x.u, x.v, x.u + x.v}, 1);
    qfacs(a, {x.l - k, x.m - k, x.n - k, x.u - k, x.v - k, x.l + k, x.m + k, x.n + k, x.u + k, x.v + k}, -1);
    Term b;
    b.sign(k).qpow((5 * k * k + 3 * k) / 2 + x.u + x.v).one_minus(qp(2 * k + 1));
    qfacs(b, {x.l + x.m + 1, x.m + x.n + 1, x.l + x.n + 1, x.u - 1, x.v - 1, x.u + x.v - 1}, 1);
    qfacs(b, {x.l - k, x.m - k, x.n - k, x.u - k - 1, x.v - k - 1, x.l + k + 1, x.m + k + 1, x.n + k + 1, x.u + k,
              x.v + k},
          -1);
    return {a, b};
}

/// g_k as two terms.
inline TermSum g_terms(long k, const Lmnuv &x, Transcription tr = Transcription::corrected)
{
    Term a;
    a.sign(k).qpow((5 * k * k - k) / 2).one_minus(qp(x.total()));
    detail::g_core(a, x, k);
    Term b = a;
    b.qpow(k);
    if (tr == Transcription::corrected) {
        b.one_minus(qp(x.u - k)).one_minus(qp(x.v - k)).one_minus(qp(x.u + k), -1).one_minus(qp(x.v + k), -1);
    } else {
        b.qfac(x.u - k).qfac(x.v - k).qfac(x.u + k, -1).qfac(x.v + k, -1);
    }
    return {a, b};
}

/// The certificate F(k).
inline Term certificate_term(long k, const Lmnuv &x)
{
    Term t;
    t.sign(k).qpow((5 * k * k - 3 * k) / 2 + x.u + x.v).one_minus(qp(x.l + x.m + x.n + k + 1));
    detail::g_core(t, x, k);
    return t;
}

inline ScaledSeries f_term(long k, const Lmnuv &x, int trunc) { return evaluate_sum(f_terms(k, x), nullptr, trunc); }
inline ScaledSeries g_term(long k, const Lmnuv &x, int trunc) { return evaluate_sum(g_terms(k, x), nullptr, trunc); }
inline ScaledSeries certificate_F(long k, const Lmnuv &x, int trunc) { return evaluate(certificate_term(k, x), trunc); }

/// Boundary term subtracted from sum f_k (the k = 0 term of the LMNRS1 bilateral side).
inline Term boundary_L(const Lmnuv &x)
{
    Term t;
    detail::qfacs(t, {x.l + x.m, x.l + x.n, x.m + x.n, x.u + x.v}, 1);
    detail::qfacs(t, {x.l, x.l, x.m, x.m, x.n, x.n, x.u, x.v}, -1);
    return t;
}

/// Boundary term subtracted from sum g_k ((1-q^S) times the k = 0 term of LMNRS3).
inline Term boundary_R(const Lmnuv &x, Transcription tr = Transcription::corrected)
{
    Term t;
    t.one_minus(qp(x.total()));
    detail::qfacs(t, {x.l + x.m, x.l + x.n, x.m + x.n, x.u + x.v - 1}, 1);
    detail::qfacs(t, {x.l, x.l, x.m, x.m, x.n, x.n}, -1);
    if (tr == Transcription::corrected) {
        detail::qfacs(t, {x.u, x.v}, -1);
    } else {
        detail::qfacs(t, {x.u - 1, x.v - 1}, -1);
    }
    return t;
}

struct CertificateCheck {
    Lmnuv params{};
    int trunc{0};
    std::vector<ScaledSeries> residuals;      // f_k - g_k - (F(k+1) - F(k)), k = 0, 1, ...
    std::vector<ScaledSeries> partial_sums;   // sum_{j<=k}(f_j - g_j) - (F(k+1) - F(0))
    bool totals_ok{false};                    // the L and R displays agree with each other and with LMNRS3
    std::string failure;
    double millis{0};

    bool passed() const
    {
        auto zero = [](const ScaledSeries &s) { return s.is_zero(); };
        return failure.empty() && totals_ok && std::all_of(residuals.begin(), residuals.end(), zero) &&
               std::all_of(partial_sums.begin(), partial_sums.end(), zero);
    }
};

/// Checks f_k - g_k = F(k+1) - F(k) for k in [0, min + 2] (two sentinels past
/// the support), the partial sums, and L = R together with their
/// relation to LMNRS3 multiplied by (1 - q^{l+m+n+u+v+1}).
inline CertificateCheck verify_telescoping(const Lmnuv &x, int trunc, Transcription tr = Transcription::corrected)
{
    const auto start = std::chrono::steady_clock::now();
    CertificateCheck c;
    c.params = x;
    c.trunc = trunc;
    try {
        require_uv(x);
        const long kmax = x.min() + 2;
        TermSum running; // sum_{j<=k}(f_j - g_j) + F(0)
        running.push_back(certificate_term(0, x));
        TermSum sum_f;
        TermSum sum_g;
        for (long k = 0; k <= kmax; ++k) {
            const TermSum f = f_terms(k, x);
            const TermSum g = g_terms(k, x, tr);
            append(sum_f, f);
            append(sum_g, g);
            TermSum res = f;
            append(res, negated(g));
            res.push_back(Term(certificate_term(k + 1, x)).times(BigRat(-1)));
            res.push_back(certificate_term(k, x));
            c.residuals.push_back(evaluate_sum(res, nullptr, trunc));

            append(running, f);
            append(running, negated(g));
            TermSum ps = running;
            ps.push_back(Term(certificate_term(k + 1, x)).times(BigRat(-1)));
            c.partial_sums.push_back(evaluate_sum(ps, nullptr, trunc));
        }

        const IdentityRecord &rec3 = find_identity("LMNRS3");
        const IdentityRecord &rec1 = find_identity("LMNRS1");
        const IdentityRecord &rec2 = find_identity("LMNRS2");
        const Params p = x.params();
        Term scale;
        scale.one_minus(qp(x.total()));

        // L: (1-q^S) * LHS3 = LHS1 + q^{u+v} LHS2(u-1, v-1) = -boundary_L + sum f
        TermSum lhs3;
        const Bounds b3 = support_bounds(rec3, Side::lhs, p, trunc);
        for (long k = b3.lo; k <= b3.hi; ++k) {
            lhs3.push_back(build_term(rec3, Side::lhs, p, k));
        }
        const ScaledSeries L_scaled = evaluate_sum(lhs3, &scale, trunc);

        TermSum two;
        Params p2 = p;
        p2.set("u", x.u - 1);
        p2.set("v", x.v - 1);
        const Bounds b1 = support_bounds(rec1, Side::lhs, p, trunc);
        for (long k = b1.lo; k <= b1.hi; ++k) {
            two.push_back(build_term(rec1, Side::lhs, p, k));
        }
        const Bounds b2 = support_bounds(rec2, Side::lhs, p2, trunc);
        for (long k = b2.lo; k <= b2.hi; ++k) {
            two.push_back(build_term(rec2, Side::lhs, p2, k).qpow(x.u + x.v));
        }
        const ScaledSeries L_two = evaluate_sum(two, nullptr, trunc);

        TermSum lf = sum_f;
        lf.push_back(boundary_L(x).times(BigRat(-1)));
        const ScaledSeries L_f = evaluate_sum(lf, nullptr, trunc);

        // R: (1-q^S) * RHS3 = -boundary_R + sum g
        TermSum rhs3;
        const Bounds r3 = support_bounds(rec3, Side::rhs, p, trunc);
        for (long k = r3.lo; k <= r3.hi; ++k) {
            rhs3.push_back(build_term(rec3, Side::rhs, p, k));
        }
        const ScaledSeries R_scaled = evaluate_sum(rhs3, &scale, trunc);
        TermSum rg = sum_g;
        rg.push_back(boundary_R(x, tr).times(BigRat(-1)));
        const ScaledSeries R_g = evaluate_sum(rg, nullptr, trunc);

        struct Step {
            const char *what;
            const ScaledSeries &a;
            const ScaledSeries &b;
        };
        c.totals_ok = true;
        for (const Step &s : {Step{"L: scaled LMNRS3 left side vs the two-sum split", L_scaled, L_two},
                              Step{"L: two-sum split vs -boundary + sum f", L_two, L_f},
                              Step{"R: scaled LMNRS3 right side vs -boundary + sum g", R_scaled, R_g},
                              Step{"L vs R", L_f, R_g}}) {
            if (compare(s.a, s.b)) {
                c.totals_ok = false;
                c.failure = s.what;
                break;
            }
        }
    } catch (const std::exception &e) {
        c.failure = e.what();
    }
    c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

// ---- S_k = T_k --------------------------------------------------------------

/// S_k as three terms (the bracket of the second part expanded).
inline TermSum s_terms(long k, const Lmnuv &x)
{
    using detail::qfacs;
    Term a;
    a.sign(k).qpow((5 * k * k + 3 * k) / 2).one_minus(qp(2 * k + 1));
    qfacs(a, {x.l + x.m + 1, x.m + x.n + 1, x.l + x.n + 1, x.u - 1, x.v - 1, x.u + x.v - 1}, 1);
    qfacs(a, {x.l - k, x.m - k, x.n - k, x.u - k - 1, x.v - k - 1, x.l + k + 1, x.m + k + 1, x.n + k + 1, x.u + k,
              x.v + k},
          -1);
    Term b;
    b.sign(k).qpow((5 * k * k + k) / 2 + x.l + x.m + x.n + 1);
    qfacs(b, {x.l + x.m, x.l + x.n, x.m + x.n, x.u - 1, x.v - 1, x.u + x.v - 1}, 1);
    qfacs(b, {x.l - k, x.m - k, x.n - k, x.u - k - 1, x.v - k - 1, x.l + k, x.m + k, x.n + k, x.u + k, x.v + k}, -1);
    Term c = b;
    c.times(BigRat(-1)).qpow(4 * k + 2);
    c.one_minus(qp(x.l - k)).one_minus(qp(x.m - k)).one_minus(qp(x.n - k));
    c.one_minus(qp(x.l + k + 1), -1).one_minus(qp(x.m + k + 1), -1).one_minus(qp(x.n + k + 1), -1);
    return {a, b, c};
}

/// T_k as two terms.
inline TermSum t_terms(long k, const Lmnuv &x)
{
    using detail::qfacs;
    Term a;
    a.sign(k).qpow((5 * k * k + 3 * k) / 2);
    qfacs(a, {x.l + x.m, x.l + x.n, x.m + x.n, x.u - 1, x.v - 1, x.u + x.v - 1}, 1);
    qfacs(a, {x.l - k, x.m - k, x.n - k, x.u - k - 1, x.v - k - 1, x.l + k, x.m + k, x.n + k, x.u + k, x.v + k}, -1);
    Term b = a;
    b.times(BigRat(-1)).qpow(2 * k + 1);
    b.one_minus(qp(x.l - k)).one_minus(qp(x.m - k)).one_minus(qp(x.n - k));
    b.one_minus(qp(x.l + k + 1), -1).one_minus(qp(x.m + k + 1), -1).one_minus(qp(x.n + k + 1), -1);
    return {a, b};
}

inline ScaledSeries s_term(long k, const Lmnuv &x, int trunc) { return evaluate_sum(s_terms(k, x), nullptr, trunc); }
inline ScaledSeries t_term(long k, const Lmnuv &x, int trunc) { return evaluate_sum(t_terms(k, x), nullptr, trunc); }

/// S_k = T_k for k in [0, min + 2], then sum S = LHS of LMNRS4 and
/// sum T = RHS of LMNRS4.
inline VerificationReport verify_sk_tk(const Lmnuv &x, int trunc)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = "SKTK";
    r.params = x.params();
    r.trunc = trunc;
    r.verdict = VerificationReport::Verdict::equal;
    try {
        require_uv(x);
        TermSum all_s;
        TermSum all_t;
        for (long k = 0; k <= x.min() + 2 && r.passed(); ++k) {
            const TermSum s = s_terms(k, x);
            const TermSum t = t_terms(k, x);
            append(all_s, s);
            append(all_t, t);
            judge(r, evaluate_sum(s, nullptr, trunc), evaluate_sum(t, nullptr, trunc));
            if (!r.passed()) {
                r.error = "S_k != T_k at k = " + std::to_string(k);
            }
        }
        const IdentityRecord &rec = find_identity("LMNRS4");
        if (r.passed()) {
            judge(r, evaluate_sum(all_s, nullptr, trunc), eval_side(rec, Side::lhs, x.params(), trunc));
            if (!r.passed()) {
                r.error = "sum of S_k differs from the LMNRS4 left side";
            }
        }
        if (r.passed()) {
            judge(r, evaluate_sum(all_t, nullptr, trunc), eval_side(rec, Side::rhs, x.params(), trunc));
            if (!r.passed()) {
                r.error = "sum of T_k differs from the LMNRS4 right side";
            }
        }
    } catch (const std::exception &e) {
        r.verdict = VerificationReport::Verdict::error;
        r.error = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---- small polynomial relations ---------------------------------------------

/// Polynomials are compared exactly by evaluating past their degree.
inline long poly_top(long M, long N) { return (M + 2) * (M + 3) / 2 + (N + 2) * (N + 3) / 2 + M + N + 4; }

/// (1-q^{M+N+2})(q)_M(q)_N = (q)_M(q)_{N+1} + q^{N+1}(q)_{M+1}(q)_N
inline bool three_term_split(long M, long N)
{
    const long top = poly_top(M, N);
    Term lhs;
    lhs.one_minus(qp(M + N + 2)).qfac(M).qfac(N);
    Term r1;
    r1.qfac(M).qfac(N + 1);
    Term r2;
    r2.qpow(N + 1).qfac(M + 1).qfac(N);
    return !compare(evaluate(lhs, top), evaluate_sum({r1, r2}, nullptr, top));
}

/// (q)_M = (q)_{M+1} + q^{M+1}(q)_M
inline bool qfac_split(long M)
{
    const long top = poly_top(M, 0);
    Term lhs;
    lhs.qfac(M);
    Term r1;
    r1.qfac(M + 1);
    Term r2;
    r2.qpow(M + 1).qfac(M);
    return !compare(evaluate(lhs, top), evaluate_sum({r1, r2}, nullptr, top));
}

/// q^{(5k^2-k)/2}/(q)_{v+k-1} = q^{(5k^2-k)/2}/(q)_{v+k} - q^{(5k^2+k)/2+v}/(q)_{v+k}
inline bool remark_relation(long k, long v, int trunc)
{
    Term lhs;
    lhs.qpow((5 * k * k - k) / 2).qfac(v + k - 1, -1);
    Term r1;
    r1.qpow((5 * k * k - k) / 2).qfac(v + k, -1);
    Term r2;
    r2.times(BigRat(-1)).qpow((5 * k * k + k) / 2 + v).qfac(v + k, -1);
    return !compare(evaluate(lhs, trunc), evaluate_sum({r1, r2}, nullptr, trunc));
}

// ---- the four-variable identity --------------------------------------------

struct QuarticSides {
    BigRat lhs;
    BigRat rhs;
};

/// (1-ab)(1-bc)(1-ac)(1-d^2) + d^2(1-a/d)(1-b/d)(1-c/d)(1-abcd) vs
/// (1-ad)(1-bd)(1-cd)(1-abc/d); needs d != 0.
inline QuarticSides quartic_rational(const BigRat &a, const BigRat &b, const BigRat &c, const BigRat &d)
{
    const BigRat one = 1;
    QuarticSides s;
    s.lhs = (one - a * b) * (one - b * c) * (one - a * c) * (one - d * d) +
            d * d * (one - a / d) * (one - b / d) * (one - c / d) * (one - a * b * c * d);
    s.rhs = (one - a * d) * (one - b * d) * (one - c * d) * (one - a * b * c / d);
    return s;
}

/// The same identity multiplied through by d:
/// d(1-ab)(1-bc)(1-ac)(1-d^2) + (d-a)(d-b)(d-c)(1-abcd) = (1-ad)(1-bd)(1-cd)(d-abc)
inline QuarticSides quartic_polynomial(const BigRat &a, const BigRat &b, const BigRat &c, const BigRat &d)
{
    const BigRat one = 1;
    QuarticSides s;
    s.lhs = d * (one - a * b) * (one - b * c) * (one - a * c) * (one - d * d) +
            (d - a) * (d - b) * (d - c) * (one - a * b * c * d);
    s.rhs = (one - a * d) * (one - b * d) * (one - c * d) * (d - a * b * c);
    return s;
}

/// Both forms on {2,3,5,7,11}^4. Each side has degree <= 4 in every
/// variable, so agreement on five values per variable is an identity.
inline VerificationReport verify_quartic_identity()
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = "QUARTIC";
    r.verdict = VerificationReport::Verdict::equal;
    const long pts[] = {2, 3, 5, 7, 11};
    long count = 0;
    for (long a : pts) {
        for (long b : pts) {
            for (long c : pts) {
                for (long d : pts) {
                    const auto p = quartic_polynomial(a, b, c, d);
                    const auto q = quartic_rational(a, b, c, d);
                    if (r.passed() && (p.lhs != p.rhs || q.lhs != q.rhs)) {
                        r.verdict = VerificationReport::Verdict::mismatch;
                        r.params = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
                        r.mismatch_index = count;
                        r.lhs_window = {p.lhs, q.lhs};
                        r.rhs_window = {p.rhs, q.rhs};
                    }
                    ++count;
                }
            }
        }
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace qrr
