// Truncated formal power series in q over exact rationals.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qrr {

/// Exact rational, always canonical (lowest terms, positive denominator).
using BigRat = mpq_class;
using BigInt = mpz_class;

inline BigRat make_rat(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

/// "num/den" with den omitted when it is 1.
inline std::string to_string(const BigRat &r)
{
    return r.get_str();
}

class ZeroConstantTerm : public std::domain_error {
public:
    ZeroConstantTerm() : std::domain_error("series has zero constant term and is not invertible") {}
};

class ExponentExceedsTruncation : public std::out_of_range {
public:
    ExponentExceedsTruncation(long exp, int order)
        : std::out_of_range("monomial exponent " + std::to_string(exp) + " exceeds truncation order "
                            + std::to_string(order))
    {
    }
};

/// A parameter of the form coeff * q^exp.
///
/// Identities are only formally meaningful when their parameters carry
/// positive q-powers; `exp` is signed because parameters such as q/b are
/// formed by exponent arithmetic before they end up inside a Pochhammer
/// argument, where admissibility is checked per factor.
struct MonomialParam {
    BigRat coeff{1};
    long exp{0};

    static MonomialParam q_pow(long e) { return {BigRat(1), e}; }

    /// exp == 0 parameters are legal but rarely formally convergent.
    bool flagged() const { return exp <= 0; }

    friend MonomialParam operator*(const MonomialParam &a, const MonomialParam &b)
    {
        return {a.coeff * b.coeff, a.exp + b.exp};
    }
    friend MonomialParam operator/(const MonomialParam &a, const MonomialParam &b)
    {
        return {a.coeff / b.coeff, a.exp - b.exp};
    }
    friend bool operator==(const MonomialParam &a, const MonomialParam &b)
    {
        return a.coeff == b.coeff && a.exp == b.exp;
    }
};

struct Mismatch {
    long index;
    BigRat lhs;
    BigRat rhs;
};

/// Dense series c_0 + c_1 q + ... + c_T q^T  (mod q^{T+1}).
class TruncatedSeries
{
public:
    TruncatedSeries() : coeffs_(1) {}

    /// The zero series of the given truncation order.
    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}

    explicit TruncatedSeries(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("a truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries constant(const BigRat &c, int order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static TruncatedSeries one(int order) { return constant(BigRat(1), order); }

    /// coeff * q^exp as a series of the given order.
    static TruncatedSeries monomial(const MonomialParam &p, int order)
    {
        if (p.exp < 0 || p.exp > order) {
            throw ExponentExceedsTruncation(p.exp, order);
        }
        TruncatedSeries s(order);
        s.coeffs_[static_cast<std::size_t>(p.exp)] = p.coeff;
        return s;
    }

    /// Build from a short list of low-order coefficients, zero-padded.
    static TruncatedSeries from_coeffs(std::initializer_list<long> cs, int order)
    {
        TruncatedSeries s(order);
        int i = 0;
        for (long c : cs) {
            if (i > order) {
                break;
            }
            s.coeffs_[static_cast<std::size_t>(i++)] = c;
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigRat &operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    BigRat &operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    const std::vector<BigRat> &coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat &c) { return c == 0; });
    }

    /// Index of the first nonzero coefficient, or nullopt for the zero series.
    std::optional<int> valuation() const
    {
        for (int i = 0; i <= order(); ++i) {
            if ((*this)[i] != 0) {
                return i;
            }
        }
        return std::nullopt;
    }

    bool has_integer_coeffs() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const BigRat &c) { return c.get_den() == 1; });
    }

    TruncatedSeries truncated(int order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("cannot raise truncation order by truncating");
        }
        return TruncatedSeries(std::vector<BigRat>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    /// Multiply by q^k, k >= 0. The result is known to order T + k.
    TruncatedSeries shifted_up(int k) const
    {
        if (k < 0) {
            throw std::invalid_argument("shifted_up needs k >= 0");
        }
        std::vector<BigRat> out(coeffs_.size() + static_cast<std::size_t>(k));
        std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
        return TruncatedSeries(std::move(out));
    }

    /// In place: *this *= (1 - c q^e), e >= 1.
    void mul_one_minus(const BigRat &c, int e)
    {
        if (e > order()) {
            return;
        }
        const bool unit = (c == 1);
        BigRat tmp;
        for (int i = order(); i >= e; --i) {
            if ((*this)[i - e] == 0) {
                continue;
            }
            if (unit) {
                (*this)[i] -= (*this)[i - e];
            } else {
                tmp = c * (*this)[i - e];
                (*this)[i] -= tmp;
            }
        }
    }

    /// In place: *this /= (1 - c q^e), e >= 1.
    void div_one_minus(const BigRat &c, int e)
    {
        if (e > order()) {
            return;
        }
        const bool unit = (c == 1);
        BigRat tmp;
        for (int i = e; i <= order(); ++i) {
            if ((*this)[i - e] == 0) {
                continue;
            }
            if (unit) {
                (*this)[i] += (*this)[i - e];
            } else {
                tmp = c * (*this)[i - e];
                (*this)[i] += tmp;
            }
        }
    }

    TruncatedSeries &operator*=(const BigRat &c)
    {
        for (auto &x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r = *this;
        for (auto &x : r.coeffs_) {
            x = -x;
        }
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const int t = std::min(a.order(), b.order());
        TruncatedSeries r(t);
        for (int i = 0; i <= t; ++i) {
            r[i] = a[i] + b[i];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const int t = std::min(a.order(), b.order());
        TruncatedSeries r(t);
        for (int i = 0; i <= t; ++i) {
            r[i] = a[i] - b[i];
        }
        return r;
    }

    // Schoolbook Cauchy product; orders here stay in the low hundreds.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const int t = std::min(a.order(), b.order());
        TruncatedSeries r(t);
        BigRat tmp;
        for (int i = 0; i <= t; ++i) {
            if (a[i] == 0) {
                continue;
            }
            for (int j = 0; i + j <= t; ++j) {
                if (b[j] == 0) {
                    continue;
                }
                tmp = a[i] * b[j];
                r[i + j] += tmp;
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const BigRat &c, TruncatedSeries s)
    {
        s *= c;
        return s;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &b) { return *this = *this + b; }
    TruncatedSeries &operator-=(const TruncatedSeries &b) { return *this = *this - b; }
    TruncatedSeries &operator*=(const TruncatedSeries &b) { return *this = *this * b; }

    /// Multiplicative inverse via b_0 = 1/a_0, b_n = -(1/a_0) sum_{k=1}^n a_k b_{n-k}.
    TruncatedSeries inverse() const
    {
        if ((*this)[0] == 0) {
            throw ZeroConstantTerm();
        }
        const int t = order();
        TruncatedSeries b(t);
        const BigRat inv0 = 1 / (*this)[0];
        b[0] = inv0;
        BigRat acc;
        BigRat tmp;
        for (int n = 1; n <= t; ++n) {
            acc = 0;
            for (int k = 1; k <= n; ++k) {
                if ((*this)[k] == 0) {
                    continue;
                }
                tmp = (*this)[k] * b[n - k];
                acc += tmp;
            }
            b[n] = -inv0 * acc;
        }
        return b;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, e.g. "1 - q - q^2 + q^5".
    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= order(); ++i) {
            const BigRat &c = (*this)[i];
            if (c == 0) {
                continue;
            }
            BigRat mag = abs(c);
            if (first) {
                if (c < 0) {
                    os << "-";
                }
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0 || mag != 1) {
                os << mag.get_str();
            }
            if (i > 0) {
                os << "q";
                if (i > 1) {
                    os << "^" << i;
                }
            }
        }
        if (first) {
            os << "0";
        }
        os << " + O(q^" << order() + 1 << ")";
        return os.str();
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("truncation order must be nonnegative");
        }
        return order;
    }

    std::vector<BigRat> coeffs_;
};

/// The smallest index at which a and b differ, compared up to the smaller
/// truncation order; nullopt when they agree.
inline std::optional<Mismatch> compare(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int t = std::min(a.order(), b.order());
    for (int i = 0; i <= t; ++i) {
        if (a[i] != b[i]) {
            return Mismatch{i, a[i], b[i]};
        }
    }
    return std::nullopt;
}

} // namespace qrr
