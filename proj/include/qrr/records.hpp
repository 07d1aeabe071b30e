// The identity registry.
//
// Parameters follow one convention throughout: a = q^{n+1}, b = q^{l+1},
// c = q^{m+1}, d = q^{u+1}, e = q^{v+1}. The terminating parameter is exact;
// the others carry distinct tilts (see term.hpp) so that specializations
// such as d = q, where (q/d)_k and (d/q)_k vanish together, have a value.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "qrr/identity.hpp"

namespace qrr {

namespace detail {

struct Five {
    Param a, b, c, d, e;
};

/// a exact; b, c, d, e tilted.
inline Five five(const Params &p)
{
    return {Param::tilted(p.get("n", 0) + 1, 0), Param::tilted(p.get("l", 0) + 1, 1),
            Param::tilted(p.get("m", 0) + 1, 3), Param::tilted(p.get("u", 0) + 1, 9),
            Param::tilted(p.get("v", 0) + 1, 27)};
}

/// b exact; c, d, e tilted. Used where a has been sent to a limit.
inline Five five_b(const Params &p)
{
    return {Param{}, Param::tilted(p.get("l", 0) + 1, 0), Param::tilted(p.get("m", 0) + 1, 3),
            Param::tilted(p.get("u", 0) + 1, 9), Param::tilted(p.get("v", 0) + 1, 27)};
}

inline void num(Term &t, std::initializer_list<Param> xs, long k)
{
    for (const auto &x : xs) {
        t.poch(x, k, 1);
    }
}

inline void den(Term &t, std::initializer_list<Param> xs, long k)
{
    for (const auto &x : xs) {
        t.poch(x, k, -1);
    }
}

inline void qfacs(Term &t, std::initializer_list<long> ns, long mult)
{
    for (long n : ns) {
        t.qfac(n, mult);
    }
}

inline long min_of(std::initializer_list<long> xs) { return std::min(xs); }

// Largest k with coef * k^2 + lin * k <= trunc (k >= 0).
inline long quadratic_cutoff(long coef, long lin, long trunc)
{
    long k = 0;
    while (coef * (k + 1) * (k + 1) + lin * (k + 1) <= trunc) {
        ++k;
    }
    return k;
}

// The quadratic exponent (c2 k^2 + c1 k) / 2; always an integer here.
inline long half(long c2, long c1, long k) { return (c2 * k * k + c1 * k) / 2; }

struct LMNUV {
    long l, m, n, u, v;
};

inline LMNUV lmnuv(const Params &p)
{
    return {p.get("l", 0), p.get("m", 0), p.get("n", 0), p.get("u", 0), p.get("v", 0)};
}

inline Bounds sym(long M) { return {-M, M}; }

// Prefactors of the one-sided sums.
inline void pre_abc1(Term &t, const Five &f)
{
    t.poch_inf(qp(1)).poch_inf(f.a * f.b * qp(-1)).poch_inf(f.b * f.c * qp(-1)).poch_inf(f.a * f.c * qp(-1));
    t.poch_inf(f.a, -1).poch_inf(f.b, -1).poch_inf(f.c, -1).poch_inf(f.a * f.b * f.c * qp(-2), -1);
}

inline void pre_abc2(Term &t, const Five &f)
{
    t.poch_inf(qp(1)).poch_inf(f.a * f.b).poch_inf(f.b * f.c).poch_inf(f.a * f.c);
    t.poch_inf(f.a * qp(1), -1).poch_inf(f.b * qp(1), -1).poch_inf(f.c * qp(1), -1);
    t.poch_inf(f.a * f.b * f.c * qp(-1), -1);
}

// (q/a,q/b,q/c,de/q)_k / (q,q^3/abc,d,e)_k q^k
inline void rhs_sum1(Term &t, const Five &f, long k)
{
    num(t, {qp(1) / f.a, qp(1) / f.b, qp(1) / f.c, f.d * f.e * qp(-1)}, k);
    t.qfac(k, -1);
    den(t, {qp(3) / (f.a * f.b * f.c), f.d, f.e}, k);
    t.qpow(k);
}

// (q/a,q/b,q/c,de/q^2)_k / (q,q^3/abc,d,e)_k q^{s k}
inline void rhs_sum3(Term &t, const Five &f, long k, long s)
{
    num(t, {qp(1) / f.a, qp(1) / f.b, qp(1) / f.c, f.d * f.e * qp(-2)}, k);
    t.qfac(k, -1);
    den(t, {qp(3) / (f.a * f.b * f.c), f.d, f.e}, k);
    t.qpow(s * k);
}

// (q/a,q/b,q/c,de)_k / (q,q^2/abc,dq,eq)_k q^k
inline void rhs_sum2(Term &t, const Five &f, long k)
{
    num(t, {qp(1) / f.a, qp(1) / f.b, qp(1) / f.c, f.d * f.e}, k);
    t.qfac(k, -1);
    den(t, {qp(2) / (f.a * f.b * f.c), f.d * qp(1), f.e * qp(1)}, k);
    t.qpow(k);
}

inline void q_over_all(Term &t, const Five &f, long k)
{
    num(t, {qp(1) / f.a, qp(1) / f.b, qp(1) / f.c, qp(1) / f.d, qp(1) / f.e}, k);
}

inline Param abcde(const Five &f, long s) { return f.a * f.b * f.c * f.d * f.e * qp(s); }

inline ParamDecl decl(const char *name, long min, long lo, long hi) { return {name, min, lo, hi}; }

inline std::vector<ParamDecl> lmnuv_decls(long lo, long hi, long uv_min = 0)
{
    return {decl("l", 0, lo, hi), decl("m", 0, lo, hi), decl("n", 0, lo, hi), decl("u", uv_min, std::max(lo, uv_min), hi),
            decl("v", uv_min, std::max(lo, uv_min), hi)};
}

// LHS shape shared by the lmnuv forms:
//   q^{quad} (q)_{l+m+n-k+s1}(q)_{u+v+k+s2} / ((q)_k (q)_{l-k}(q)_{m-k}(q)_{n-k}(q)_{u+k+s3}(q)_{v+k+s3})
inline SideSpec lmnuv_lhs(long c2, long c1, long s1, long s2, long s3)
{
    SideSpec s;
    s.support = [](const Params &p, int) {
        const auto x = lmnuv(p);
        return Bounds{0, min_of({x.l, x.m, x.n})};
    };
    s.term = [=](Term &t, const Params &p, long k) {
        const auto x = lmnuv(p);
        t.qpow(half(c2, c1, k));
        qfacs(t, {x.l + x.m + x.n - k + s1, x.u + x.v + k + s2}, 1);
        qfacs(t, {k, x.l - k, x.m - k, x.n - k, x.u + k + s3, x.v + k + s3}, -1);
    };
    return s;
}

} // namespace detail

inline std::vector<IdentityRecord> build_registry()
{
    using namespace detail;
    std::vector<IdentityRecord> r;

    // ---- Andrews' finite forms ------------------------------------------
    auto andrews_lhs = [](long lin) {
        SideSpec s;
        s.support = [](const Params &p, int) { return Bounds{0, p["n"]}; };
        s.term = [lin](Term &t, const Params &p, long k) {
            const long n = p["n"];
            t.qpow(k * k + lin * k).qfac(k, -1).qfac(n - k, -1);
        };
        return s;
    };
    auto andrews_rhs = [](long c1, long shift) {
        SideSpec s;
        s.support = [](const Params &p, int) { return sym(p["n"]); };
        s.term = [c1](Term &t, const Params &p, long k) {
            const long n = p["n"];
            t.sign(k).qpow(half(5, c1, k)).qfac(n - k, -1).qfac(n + k, -1);
        };
        if (shift != 0) {
            s.prefactor = [](Term &t, const Params &p) { t.qpow(-p["n"]); };
        }
        return s;
    };
    r.push_back({"ANDREWS1", "Andrews' finite form of the first Rogers-Ramanujan identity",
                 {decl("n", 0, 0, 12)}, andrews_lhs(0), andrews_rhs(-1, 0)});
    r.push_back({"ANDREWS2", "Andrews' finite form of the second Rogers-Ramanujan identity",
                 {decl("n", 0, 0, 12)}, andrews_lhs(1), andrews_rhs(-3, 0)});
    r.push_back({"ANDREWS2B", "q^{-n} variant of the second finite form, a special case of ABCDE6_3",
                 {decl("n", 0, 0, 12)}, andrews_lhs(1), andrews_rhs(-5, 1)});

    // ---- bilateral lmnuv forms ------------------------------------------
    // (-1)^k q^{quad} * num / prod over x in (l,m,n) of (q)_{x-k}(q)_{x+k+o1}
    //                        * (q)_{u-k+o2}(q)_{v-k+o2'}(q)_{u+k+o3}(q)_{v+k+o3'}
    struct BilateralShape {
        long c1;               // quadratic exponent (5k^2 + c1 k)/2
        long lmn_plus;         // 0 or 1 (the (q)_{x+k+1} variant)
        long num_plus;         // (q)_{l+m+num_plus} ...
        long u_num, v_num;     // (q)_{u+u_num}(q)_{v+v_num}
        long uv_num;           // (q)_{u+v+uv_num}
        long u_plus, v_plus;   // (q)_{u+k+u_plus}(q)_{v+k+v_plus}
        long coef{5};
    };
    auto bilateral = [](BilateralShape b, bool with_v) {
        SideSpec s;
        s.support = [with_v](const Params &p, int) {
            const auto x = lmnuv(p);
            const long M = with_v ? min_of({x.l, x.m, x.n, x.u, x.v}) : min_of({x.l, x.m, x.n, x.u});
            return Bounds{-M - 1, M};
        };
        s.term = [b, with_v](Term &t, const Params &p, long k) {
            const auto x = lmnuv(p);
            t.sign(k).qpow(half(b.coef, b.c1, k));
            qfacs(t, {x.l + x.m + b.num_plus, x.l + x.n + b.num_plus, x.m + x.n + b.num_plus, x.u + b.u_num}, 1);
            qfacs(t, {x.l - k, x.m - k, x.n - k, x.u - k}, -1);
            qfacs(t, {x.l + k + b.lmn_plus, x.m + k + b.lmn_plus, x.n + k + b.lmn_plus, x.u + k + b.u_plus}, -1);
            if (with_v) {
                qfacs(t, {x.v + b.v_num, x.u + x.v + b.uv_num}, 1);
                qfacs(t, {x.v - k, x.v + k + b.v_plus}, -1);
            }
        };
        return s;
    };

    const auto g5 = lmnuv_decls(0, 3);
    const auto g5v = std::vector<ParamDecl>{decl("l", 0, 0, 3), decl("m", 0, 0, 3), decl("n", 0, 0, 3),
                                            decl("u", 0, 0, 3), decl("v", 1, 1, 3)};
    const auto g5uv = lmnuv_decls(0, 3, 1);

    r.push_back({"LMNRS1", "Theorem on abcde-sums, first identity at a=q^{n+1}, b=q^{l+1}, c=q^{m+1}, d=q^{u+1}, e=q^{v+1}",
                 g5, lmnuv_lhs(2, 0, 0, 0, 0), bilateral({-1, 0, 0, 0, 0, 0, 0, 0}, true)});
    r.push_back({"LMNRS2", "Theorem on abcde-sums, second identity at the same specialization",
                 g5, lmnuv_lhs(2, 2, 1, 1, 1), bilateral({3, 1, 1, 0, 0, 1, 1, 1}, true)});
    r.push_back({"LMNRS3", "non-well-poised theorem, first identity at the same specialization",
                 g5uv, lmnuv_lhs(2, 0, 0, -1, 0), bilateral({-1, 0, 0, -1, -1, -1, -1, -1}, true)});
    r.push_back({"LMNRS4", "non-well-poised theorem, second identity at the same specialization",
                 g5uv, lmnuv_lhs(2, 2, 0, -1, 0), bilateral({-3, 0, 0, -1, -1, -1, -1, -1}, true)});
    r.push_back({"REMARK31", "identity obtained from LMNRS1 by lowering one (q)_{v+k} on the bilateral side",
                 g5v, lmnuv_lhs(2, 0, 0, 0, 0), bilateral({-1, 0, 0, 0, -1, 0, 0, -1}, true)});
    r.push_back({"SEC33FINAL", "closing lmnuv-form identity of the partial-fraction argument",
                 g5v, bilateral({-1, 0, 0, 0, -1, 0, 0, -1}, true), lmnuv_lhs(2, 0, 0, 0, 0)});

    // ---- general abcde forms ---------------------------------------------
    const auto g_abcde = lmnuv_decls(0, 3);
    auto abcde_lhs = [](std::function<void(Term &, const Five &, long)> den_part, long power_shift, long neg_extra) {
        SideSpec s;
        s.support = [neg_extra](const Params &p, int) {
            const long n = p["n"];
            return Bounds{-n - neg_extra, n};
        };
        s.term = [den_part, power_shift](Term &t, const Params &p, long k) {
            const Five f = five(p);
            q_over_all(t, f, k);
            den_part(t, f, k);
            t.pow(abcde(f, power_shift), k);
        };
        return s;
    };
    auto rhs_one_sided = [](std::function<void(Term &, const Five &)> pre,
                            std::function<void(Term &, const Five &, long)> body) {
        SideSpec s;
        s.support = [](const Params &p, int) { return Bounds{0, p["n"]}; };
        s.term = [body](Term &t, const Params &p, long k) { body(t, five(p), k); };
        s.prefactor = [pre](Term &t, const Params &p) { pre(t, five(p)); };
        return s;
    };
    auto den_abcde = [](Term &t, const Five &f, long k) { den(t, {f.a, f.b, f.c, f.d, f.e}, k); };
    auto den_abcde_q = [](Term &t, const Five &f, long k) {
        den(t, {f.a * qp(1), f.b * qp(1), f.c * qp(1), f.d * qp(1), f.e * qp(1)}, k);
    };
    auto den_abc_dqeq = [](Term &t, const Five &f, long k) {
        den(t, {f.a, f.b, f.c, f.d * qp(-1), f.e * qp(-1)}, k);
    };
    auto den_a_bcdeq = [](Term &t, const Five &f, long k) {
        den(t, {f.a, f.b * qp(1), f.c * qp(1), f.d * qp(1), f.e * qp(1)}, k);
    };
    auto den_abcdq_e = [](Term &t, const Five &f, long k) {
        den(t, {f.a * qp(1), f.b * qp(1), f.c * qp(1), f.d * qp(1), f.e}, k);
    };
    auto s1 = [](Term &t, const Five &f, long k) { rhs_sum1(t, f, k); };
    auto s2 = [](Term &t, const Five &f, long k) { rhs_sum2(t, f, k); };
    auto pre1 = [](Term &t, const Five &f) { pre_abc1(t, f); };
    auto pre2 = [](Term &t, const Five &f) { pre_abc2(t, f); };

    r.push_back({"ABCDE1", "Theorem on abcde-sums, first identity (terminating at a=q^{n+1})", g_abcde,
                 abcde_lhs(den_abcde, -3, 0), rhs_one_sided(pre1, s1)});
    r.push_back({"ABCDE2", "Theorem on abcde-sums, second identity (terminating at a=q^{n+1})", g_abcde,
                 abcde_lhs(den_abcde_q, -1, 1), rhs_one_sided(pre2, s2)});
    r.push_back({"ABCDE3", "non-well-poised theorem, first identity", g_abcde, abcde_lhs(den_abc_dqeq, -3, 0),
                 rhs_one_sided(pre1, [](Term &t, const Five &f, long k) { rhs_sum3(t, f, k, 1); })});
    r.push_back({"ABCDE4", "non-well-poised theorem, second identity", g_abcde, abcde_lhs(den_abc_dqeq, -4, 0),
                 rhs_one_sided(pre1, [](Term &t, const Five &f, long k) { rhs_sum3(t, f, k, 2); })});

    // d, e -> 0 limits of the first two.
    {
        const std::vector<ParamDecl> g3{decl("l", 0, 0, 3), decl("m", 0, 0, 3), decl("n", 0, 0, 3)};
        auto liu_lhs = [](bool shifted) {
            SideSpec s;
            s.support = [shifted](const Params &p, int) { return Bounds{-p["n"] - (shifted ? 1 : 0), p["n"]}; };
            s.term = [shifted](Term &t, const Params &p, long k) {
                const Five f = five(p);
                num(t, {qp(1) / f.a, qp(1) / f.b, qp(1) / f.c}, k);
                const long sh = shifted ? 1 : 0;
                den(t, {f.a * qp(sh), f.b * qp(sh), f.c * qp(sh)}, k);
                t.pow(f.a * f.b * f.c, k).qpow(k * k - (shifted ? 0 : 2) * k);
            };
            return s;
        };
        auto liu_rhs = [](bool shifted) {
            SideSpec s;
            s.support = [](const Params &p, int) { return Bounds{0, p["n"]}; };
            s.term = [shifted](Term &t, const Params &p, long k) {
                const Five f = five(p);
                num(t, {qp(1) / f.a, qp(1) / f.b, qp(1) / f.c}, k);
                t.qfac(k, -1);
                den(t, {qp(shifted ? 2 : 3) / (f.a * f.b * f.c)}, k);
                t.qpow(k);
            };
            s.prefactor = [shifted](Term &t, const Params &p) {
                if (shifted) {
                    pre_abc2(t, five(p));
                } else {
                    pre_abc1(t, five(p));
                }
            };
            return s;
        };
        r.push_back({"LIU1", "d,e -> 0 limit of ABCDE1 (terminating form)", g3, liu_lhs(false), liu_rhs(false)});
        r.push_back({"LIU2", "d,e -> 0 limit of ABCDE2 (terminating form)", g3, liu_lhs(true), liu_rhs(true)});
    }

    // ---- forms tied to the second abcde identity ---------------------------
    r.push_back({"ABCDE6_1", "extension of the second finite form with denominators (a,bq,cq,dq,eq)", g_abcde,
                 abcde_lhs(den_a_bcdeq, -1, 0),
                 rhs_one_sided(
                     [](Term &t, const Five &f) {
                         t.poch_inf(qp(1)).poch_inf(f.a * f.b).poch_inf(f.b * f.c).poch_inf(f.a * f.c);
                         t.poch_inf(f.a, -1).poch_inf(f.b * qp(1), -1).poch_inf(f.c * qp(1), -1);
                         t.poch_inf(f.a * f.b * f.c * qp(-1), -1);
                     },
                     s2)});
    {
        SideSpec zero;
        zero.zero = true;
        r.push_back({"ABCDE60", "vanishing bilateral sum with denominators (aq,bq,cq,dq,eq) and power abcde", g_abcde,
                     abcde_lhs(den_abcde_q, 0, 1), zero});
    }
    r.push_back({"ABCDE6_3", "companion of ABCDE6_1 with power abcde", g_abcde, abcde_lhs(den_a_bcdeq, 0, 0),
                 rhs_one_sided(
                     [](Term &t, const Five &f) {
                         t.pow(f.a * qp(-1), 1);
                         t.poch_inf(qp(1)).poch_inf(f.a * f.b).poch_inf(f.b * f.c).poch_inf(f.a * f.c);
                         t.poch_inf(f.a, -1).poch_inf(f.b * qp(1), -1).poch_inf(f.c * qp(1), -1);
                         t.poch_inf(f.a * f.b * f.c * qp(-1), -1);
                     },
                     s2)});
    r.push_back({"ABCDE2R", "ABCDE2 rewritten with power abcdeq via the k <-> -k-1 reflection", g_abcde,
                 abcde_lhs(den_abcde_q, 1, 1),
                 rhs_one_sided(
                     [](Term &t, const Five &f) {
                         t.times(BigRat(-1)).qpow(-1);
                         pre_abc2(t, f);
                     },
                     s2)});
    r.push_back({"ABCDE6_2", "variant with denominators (aq,bq,cq,dq,e) and power abcde/q", g_abcde,
                 abcde_lhs(den_abcdq_e, -1, 1),
                 rhs_one_sided(
                     [](Term &t, const Five &f) {
                         t.one_minus(f.e, -1);
                         pre_abc2(t, f);
                     },
                     s2)});
    r.push_back({"ABCDE6_4", "variant with denominators (aq,bq,cq,dq,e) and power abcde", g_abcde,
                 abcde_lhs(den_abcdq_e, 0, 1),
                 rhs_one_sided(
                     [](Term &t, const Five &f) {
                         t.pow(f.e * qp(-1), 1).one_minus(f.e, -1);
                         pre_abc2(t, f);
                     },
                     s2)});

    // ---- the partial-fraction chain ----------------------------------------
    {
        auto g = lmnuv_decls(0, 3);
        g[2] = decl("n", 1, 1, 3);
        r.push_back({"SEC33A", "bilateral sum with denominators (a/q,b,c,d,e) equals the ABCDE1 right side", g,
                     abcde_lhs([](Term &t, const Five &f, long k) { den(t, {f.a * qp(-1), f.b, f.c, f.d, f.e}, k); },
                               -3, 0),
                     rhs_one_sided(pre1, s1)});
        r.push_back({"SEC33B", "bilateral sum with denominators (a,b,c,d,e/q) equals the ABCDE1 right side", g_abcde,
                     abcde_lhs([](Term &t, const Five &f, long k) { den(t, {f.a, f.b, f.c, f.d, f.e * qp(-1)}, k); },
                               -3, 0),
                     rhs_one_sided(pre1, s1)});
    }

    // ---- e -> 0 and a -> 0 limits ------------------------------------------
    {
        const std::vector<ParamDecl> g4{decl("l", 0, 0, 2), decl("m", 0, 0, 2), decl("n", 0, 0, 2), decl("u", 0, 0, 2)};
        SideSpec lhs;
        lhs.support = [](const Params &p, int) { return sym(p["n"]); };
        lhs.term = [](Term &t, const Params &p, long k) {
            const Five f = five(p);
            num(t, {qp(1) / f.a, qp(1) / f.b, qp(1) / f.c, qp(1) / f.d}, k);
            den(t, {f.a, f.b, f.c, f.d}, k);
            t.sign(k).pow(f.a * f.b * f.c * f.d, k).qpow(half(1, -5, k));
        };
        SideSpec rhs;
        rhs.support = [](const Params &p, int) { return Bounds{0, std::min(p["l"], p["m"])}; };
        rhs.term = [](Term &t, const Params &p, long k) {
            const Five f = five(p);
            num(t, {qp(1) / f.b, qp(1) / f.c, f.a * f.d * qp(-1)}, k);
            t.qfac(k, -1);
            den(t, {f.d, f.a}, k);
            t.pow(f.b * f.c * qp(-1), k);
        };
        rhs.prefactor = [](Term &t, const Params &p) {
            const Five f = five(p);
            t.poch_inf(qp(1)).poch_inf(f.b * f.c * qp(-1)).poch_inf(f.b, -1).poch_inf(f.c, -1);
        };
        r.push_back({"BCDE1", "e -> 0 limit of ABCDE1", g4, lhs, rhs});
    }
    {
        const std::vector<ParamDecl> g4{decl("l", 0, 0, 3), decl("m", 0, 0, 2), decl("u", 0, 0, 2), decl("v", 0, 0, 2)};
        SideSpec lhs;
        lhs.support = [](const Params &p, int) { return Bounds{-p["l"] - 1, p["l"]}; };
        lhs.term = [](Term &t, const Params &p, long k) {
            const Five f = five_b(p);
            num(t, {qp(1) / f.b, qp(1) / f.c, qp(1) / f.d, qp(1) / f.e}, k);
            den(t, {f.b * qp(1), f.c * qp(1), f.d * qp(1), f.e * qp(1)}, k);
            t.sign(k).pow(f.b * f.c * f.d * f.e, k).qpow(half(1, -1, k));
        };
        SideSpec rhs;
        rhs.support = [](const Params &p, int) { return Bounds{0, p["l"]}; };
        rhs.term = [](Term &t, const Params &p, long k) {
            const Five f = five_b(p);
            num(t, {qp(1) / f.b, qp(1) / f.c, f.d * f.e}, k);
            t.qfac(k, -1);
            den(t, {f.d * qp(1), f.e * qp(1)}, k);
            t.pow(f.b * f.c, k);
        };
        rhs.prefactor = [](Term &t, const Params &p) {
            const Five f = five_b(p);
            t.poch_inf(qp(1)).poch_inf(f.b * f.c).poch_inf(f.b * qp(1), -1).poch_inf(f.c * qp(1), -1);
        };
        r.push_back({"BCDE2", "e -> 0 limit of ABCDE2", g4, lhs, rhs});
    }
    auto cor52 = [](long lin, long rhs_shift) {
        IdentityRecord rec;
        rec.params = {decl("l", 0, 0, 3), decl("m", 0, 0, 2), decl("u", 0, 0, 2), decl("v", 0, 0, 2)};
        rec.lhs.support = [](const Params &p, int) { return sym(p["l"]); };
        rec.lhs.term = [lin](Term &t, const Params &p, long k) {
            const Five f = five_b(p);
            num(t, {qp(1) / f.b, qp(1) / f.c, qp(1) / f.d, qp(1) / f.e}, k);
            den(t, {f.b, f.c, f.d * qp(-1), f.e * qp(-1)}, k);
            t.sign(k).pow(f.b * f.c * f.d * f.e, k).qpow(half(1, lin, k));
        };
        rec.rhs.support = [](const Params &p, int) { return Bounds{0, p["l"]}; };
        rec.rhs.term = [rhs_shift](Term &t, const Params &p, long k) {
            const Five f = five_b(p);
            num(t, {qp(1) / f.b, qp(1) / f.c, f.d * f.e * qp(-2)}, k);
            t.qfac(k, -1);
            den(t, {f.d, f.e}, k);
            t.pow(f.b * f.c * qp(rhs_shift), k);
        };
        rec.rhs.prefactor = [](Term &t, const Params &p) {
            const Five f = five_b(p);
            t.poch_inf(qp(1)).poch_inf(f.b * f.c * qp(-1)).poch_inf(f.b, -1).poch_inf(f.c, -1);
        };
        return rec;
    };
    {
        IdentityRecord a = cor52(-5, -1);
        a.id = "COR52A";
        a.citation = "a -> 0 limit of ABCDE3";
        r.push_back(a);
        IdentityRecord b = cor52(-7, 0);
        b.id = "COR52B";
        b.citation = "a -> 0 limit of ABCDE4";
        r.push_back(b);
    }

    // ---- v -> infinity ------------------------------------------------------
    const std::vector<ParamDecl> g4u{decl("l", 0, 0, 3), decl("m", 0, 0, 3), decl("n", 0, 0, 3), decl("u", 0, 0, 3)};
    const std::vector<ParamDecl> g4u1{decl("l", 0, 0, 3), decl("m", 0, 0, 3), decl("n", 0, 0, 3), decl("u", 1, 1, 3)};
    auto lmnr_lhs = [](long lin, long s1, long s3, long u_lin) {
        SideSpec s;
        s.support = [](const Params &p, int) {
            const auto x = lmnuv(p);
            return Bounds{0, min_of({x.l, x.m, x.n})};
        };
        s.term = [=](Term &t, const Params &p, long k) {
            const auto x = lmnuv(p);
            t.qpow(k * k + lin * k + u_lin * x.u * k);
            qfacs(t, {x.l + x.m + x.n - k + s1}, 1);
            qfacs(t, {k, x.l - k, x.m - k, x.n - k, x.u + k + s3}, -1);
        };
        return s;
    };
    // u_lin multiplies u*k in the exponent (used by the q -> 1/q forms).
    r.push_back({"LMNR1", "v -> infinity limit of LMNRS1", g4u, lmnr_lhs(0, 0, 0, 0),
                 bilateral({-1, 0, 0, 0, 0, 0, 0, 0}, false)});
    r.push_back({"LMNR2", "v -> infinity limit of LMNRS2", g4u, lmnr_lhs(1, 1, 1, 0),
                 bilateral({3, 1, 1, 0, 0, 0, 1, 0}, false)});
    r.push_back({"LMNR3", "v -> infinity limit of LMNRS3", g4u1, lmnr_lhs(0, 0, 0, 0),
                 bilateral({-1, 0, 0, -1, 0, 0, -1, 0}, false)});
    r.push_back({"LMNR4", "v -> infinity limit of LMNRS4", g4u1, lmnr_lhs(1, 0, 0, 0),
                 bilateral({-3, 0, 0, -1, 0, 0, -1, 0}, false)});

    // ---- q -> 1/q -----------------------------------------------------------
    {
        BilateralShape b1{-1, 0, 0, 0, 0, 0, 0, 0, 3};
        BilateralShape b2{1, 1, 1, 0, 0, 0, 1, 0, 3};
        BilateralShape b3{-1, 0, 0, -1, 0, 0, -1, 0, 3};
        BilateralShape b4{1, 0, 0, -1, 0, 0, -1, 0, 3};
        r.push_back({"QINV1", "LMNR1 with q replaced by 1/q", g4u, lmnr_lhs(0, 0, 0, 1), bilateral(b1, false)});
        r.push_back({"QINV2", "LMNR2 with q replaced by 1/q", g4u, lmnr_lhs(1, 1, 1, 1), bilateral(b2, false)});
        r.push_back({"QINV3", "LMNR3 with q replaced by 1/q", g4u1, lmnr_lhs(0, 0, 0, 1), bilateral(b3, false)});
        r.push_back({"QINV4", "LMNR4 with q replaced by 1/q", g4u1, lmnr_lhs(-1, 0, 0, 1), bilateral(b4, false)});
    }

    // ---- symmetry of the bilateral denominators -----------------------------
    {
        auto side = [](bool swapped, long lin, long plus) {
            SideSpec s;
            s.support = [swapped](const Params &p, int) {
                const auto x = lmnuv(p);
                return Bounds{0, swapped ? min_of({x.l, x.u, x.v}) : min_of({x.l, x.m, x.n})};
            };
            s.term = [=](Term &t, const Params &p, long k) {
                auto x = lmnuv(p);
                if (swapped) {
                    std::swap(x.m, x.u);
                    std::swap(x.n, x.v);
                }
                t.qpow(k * k + lin * k);
                qfacs(t, {x.l + x.m + x.n - k + plus, x.u + x.v + k + plus}, 1);
                qfacs(t, {k, x.l - k, x.m - k, x.n - k, x.u + k + plus, x.v + k + plus}, -1);
            };
            s.prefactor = [=](Term &t, const Params &p) {
                auto x = lmnuv(p);
                if (swapped) {
                    std::swap(x.m, x.u);
                    std::swap(x.n, x.v);
                }
                qfacs(t, {x.l + x.m + plus, x.l + x.n + plus, x.u, x.v}, -1);
            };
            return s;
        };
        r.push_back({"LMNRS5", "symmetry (m,n) <-> (u,v) of the LMNRS1 bilateral side", g5, side(false, 0, 0),
                     side(true, 0, 0)});
        r.push_back({"LMNRS6", "symmetry (m,n) <-> (u,v) of the LMNRS2 bilateral side", g5, side(false, 1, 1),
                     side(true, 1, 1)});
    }

    // ---- Euler-type limits ----------------------------------------------------
    {
        auto euler_lhs = [](bool with_m, long lin) {
            SideSpec s;
            s.support = [with_m](const Params &p, int) {
                return Bounds{0, with_m ? std::min(p["m"], p["n"]) : p["n"]};
            };
            s.term = [with_m, lin](Term &t, const Params &p, long k) {
                t.qpow(k * k + lin * k).qfac(k, -1).qfac(p["n"] - k, -1);
                if (with_m) {
                    t.qfac(p["m"] - k, -1);
                }
            };
            s.prefactor = [](Term &t, const Params &) { t.poch_inf(qp(1), -1); };
            return s;
        };
        auto euler_rhs = [](bool with_m, long lin) {
            SideSpec s;
            s.support = [lin](const Params &, int trunc) { return Bounds{0, quadratic_cutoff(1, lin, trunc)}; };
            s.term = [with_m, lin](Term &t, const Params &p, long k) {
                const long n = p["n"];
                t.qpow(k * k + lin * k).qfac(k, -1);
                if (with_m) {
                    const long m = p["m"];
                    t.qfac(m + n + k + lin, 1).qfac(m + k + lin, -1);
                }
                t.qfac(n + k + lin, -1);
            };
            s.prefactor = [with_m](Term &t, const Params &p) {
                t.qfac(p["n"], -1);
                if (with_m) {
                    t.qfac(p["m"], -1);
                }
            };
            return s;
        };
        const std::vector<ParamDecl> gmn{decl("m", 0, 0, 5), decl("n", 0, 0, 5)};
        const std::vector<ParamDecl> gn{decl("n", 0, 0, 8)};
        r.push_back({"EULERMN1", "l,u,v -> infinity limit of LMNRS5", gmn, euler_lhs(true, 0), euler_rhs(true, 0)});
        r.push_back({"EULERMN2", "l,u,v -> infinity limit of LMNRS6", gmn, euler_lhs(true, 1), euler_rhs(true, 1)});
        r.push_back({"EULERN1", "m -> infinity limit of EULERMN1", gn, euler_lhs(false, 0), euler_rhs(false, 0)});
        r.push_back({"EULERN2", "m -> infinity limit of EULERMN2 (companion of EULERN1)", gn, euler_lhs(false, 1),
                     euler_rhs(false, 1)});
    }
    return r;
}

inline const std::vector<IdentityRecord> &registry()
{
    static const std::vector<IdentityRecord> reg = build_registry();
    return reg;
}

inline const IdentityRecord &find_identity(std::string_view id)
{
    for (const auto &rec : registry()) {
        if (rec.id == id) {
            return rec;
        }
    }
    throw UnknownIdentity(std::string(id));
}

/// Exact support: the outer bound trimmed of vanishing end terms.
inline Bounds exact_support(std::string_view id, Side side, const Params &p, int trunc)
{
    const IdentityRecord &rec = find_identity(id);
    Bounds b = support_bounds(rec, side, p, trunc);
    auto vanishes = [&](long k) { return build_term(rec, side, p, k).normalize().zero; };
    while (b.lo <= b.hi && vanishes(b.lo)) {
        ++b.lo;
    }
    while (b.lo <= b.hi && vanishes(b.hi)) {
        --b.hi;
    }
    return b;
}

} // namespace qrr
