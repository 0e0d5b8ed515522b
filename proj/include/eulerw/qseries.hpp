#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "eulerw/errors.hpp"
#include "eulerw/weighted.hpp"

namespace eulerw {

/// A power series in q truncated at a fixed order: exact rational
/// coefficients of q^0 .. q^order. Binary operations require equal orders;
/// re-truncate explicitly with truncated() to mix orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries one(int order);
    static TruncatedSeries monomial(int order, int degree, mpq_class coefficient = 1);
    /// q^first + q^(first+step) + q^(first+2*step) + ...
    static TruncatedSeries geometric(int order, int first, int step);
    /// q^first - q^(first+step) + q^(first+2*step) - ...
    static TruncatedSeries geometric_alternating(int order, int first, int step);

    int order() const noexcept { return order_; }
    const mpq_class& coeff(int k) const;
    void set_coeff(int k, mpq_class value);
    bool is_zero() const noexcept;
    /// True when every coefficient has denominator 1.
    bool is_integral() const noexcept;
    /// Index of the lowest nonzero coefficient, or nullopt for zero series.
    std::optional<int> valuation() const noexcept;

    TruncatedSeries truncated(int new_order) const;
    /// The series times q^k.
    TruncatedSeries shifted(int k) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const mpq_class& scalar);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(TruncatedSeries lhs, const mpq_class& scalar);

    /// Multiplies in place by 1 + sign * q^degree. O(order) and exact, the
    /// workhorse for building products of binomial factors.
    void mul_binomial(int degree, int sign);
    /// Divides in place by 1 + sign * q^degree.
    void div_binomial(int degree, int sign);

    /// Multiplicative inverse; the constant term must be nonzero
    /// (NonUnitReciprocal otherwise).
    TruncatedSeries reciprocal() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check_same_order(const TruncatedSeries& rhs) const;

    int order_ = 0;
    std::vector<mpq_class> coeffs_;
};

struct CoefficientDiff {
    int k = 0;
    mpq_class lhs;
    mpq_class rhs;
};

/// First index where the two series disagree, or nullopt when equal.
/// Throws OrderMismatch when the orders differ.
std::optional<CoefficientDiff> first_difference(const TruncatedSeries& a,
                                                const TruncatedSeries& b);

/// (q^a; q^b)_n truncated at the given order, or with negated = true
/// (-q^a; q^b)_n, i.e. the product of (1 -+ q^(a + k*b)) for k = 0..n-1.
/// Pass nullopt for the infinite product; that case needs a >= 1 so only
/// finitely many factors matter below the truncation order.
TruncatedSeries pochhammer(int order, long long a, long long b,
                           std::optional<long long> n, bool negated = false);

/// The named series of the identity suite. Every builder is exact to its
/// order and is pinned to an enumeration oracle in the tests.
enum class SeriesBuilder {
    Eq1Lhs,              // sum_{n>=0} [(-q;q)_inf - (-q;q)_n]
    Eq1Rhs,              // (-q;q)_inf(-1/2 + sum q^d/(1-q^d)) + (1 + sum q^(n(n+1)/2)/(-q;q)_n)/2
    Eq2Lhs,              // sum_{n>=1} [1/(q;q^2)_inf - 1/(q;q^2)_n]
    Eq2Rhs,              // (-q;q)_inf(-1/2 + sum q^(2d)/(1-q^(2d))) + same second bracket
    GfRootedDistinct,    // sum_d q^d prod_{j!=d} (1+q^j)
    GfRootedOdd,         // 1/(q;q^2)_inf * sum_{d odd} q^d/(1-q^d)
    GfAlmostDistinct,    // (-q;q)_inf * sum_d q^d/(1-q^d)
    GfEvenRoot,          // (-q;q)_inf * sum_d q^(2d)/(1-q^(2d))
    GfOddRoot,           // (-q;q)_inf * sum_d q^d/(1-q^(2d))
    RankParity,          // 1 + sum_{n>=1} q^(n(n+1)/2)/(-q;q)_n  (even minus odd rank, distinct)
    LargestPartDistinct, // sum_n n q^n (1+q)...(1+q^(n-1))
    HalfLargestOdd,      // sum_n n q^(2n+1)/((1-q)(1-q^3)...(1-q^(2n+1)))
    SumLengthOdd,        // sum over parts k odd of q^k/(1-q^k)^2 / prod_{j odd, j!=k}(1-q^j)
    SumLengthDistinct,   // (-q;q)_inf * sum_d q^d/(1+q^d)
};

const char* builder_name(SeriesBuilder b) noexcept; // kebab-case CLI token
std::optional<SeriesBuilder> builder_from_name(std::string_view name);
std::vector<SeriesBuilder> all_builders();

TruncatedSeries build_series(SeriesBuilder b, int order);

/// Coefficient-level check of the series form of an identity: both sides
/// built independently and compared at every index 0..order.
VerificationReport verify_series(IdentityId id, int order);

/// Exact text for one coefficient: "12" or "-5/2".
std::string coeff_to_string(const mpq_class& c);

} // namespace eulerw
