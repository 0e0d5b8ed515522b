#include "eulerw/qseries.hpp"

#include <algorithm>
#include <string>

namespace eulerw {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0)
        fail(Errc::IndexOutOfRange, "truncation order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, mpq_class coefficient) {
    if (degree < 0)
        fail(Errc::NonPositiveExponent, "monomial degree must be nonnegative");
    TruncatedSeries s(order);
    if (degree <= order)
        s.coeffs_[static_cast<std::size_t>(degree)] = std::move(coefficient);
    return s;
}

TruncatedSeries TruncatedSeries::geometric(int order, int first, int step) {
    if (first < 1 || step < 1)
        fail(Errc::NonPositiveExponent, "geometric series needs positive first exponent and step");
    TruncatedSeries s(order);
    for (long long e = first; e <= order; e += step)
        s.coeffs_[static_cast<std::size_t>(e)] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::geometric_alternating(int order, int first, int step) {
    if (first < 1 || step < 1)
        fail(Errc::NonPositiveExponent, "geometric series needs positive first exponent and step");
    TruncatedSeries s(order);
    int sign = 1;
    for (long long e = first; e <= order; e += step, sign = -sign)
        s.coeffs_[static_cast<std::size_t>(e)] = sign;
    return s;
}

const mpq_class& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        fail(Errc::IndexOutOfRange, "coefficient index outside 0..order");
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, mpq_class value) {
    if (k < 0 || k > order_)
        fail(Errc::IndexOutOfRange, "coefficient index outside 0..order");
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool TruncatedSeries::is_integral() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) {
        return c.get_den() == 1;
    });
}

std::optional<int> TruncatedSeries::valuation() const noexcept {
    for (int k = 0; k <= order_; ++k)
        if (coeffs_[static_cast<std::size_t>(k)] != 0)
            return k;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    TruncatedSeries s(new_order);
    for (int k = 0; k <= std::min(order_, new_order); ++k)
        s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return s;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    if (k < 0)
        fail(Errc::NonPositiveExponent, "shift must be nonnegative");
    TruncatedSeries s(order_);
    for (int i = 0; i + k <= order_; ++i)
        s.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& rhs) const {
    if (order_ != rhs.order_)
        fail(Errc::OrderMismatch, "orders " + std::to_string(order_) + " and " +
                                      std::to_string(rhs.order_) + " differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    check_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    check_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const mpq_class& scalar) {
    for (mpq_class& c : coeffs_)
        c *= scalar;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs += rhs;
    return lhs;
}

TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    lhs.check_same_order(rhs);
    TruncatedSeries out(lhs.order_);
    for (int i = 0; i <= lhs.order_; ++i) {
        const mpq_class& a = lhs.coeffs_[static_cast<std::size_t>(i)];
        if (a == 0)
            continue;
        for (int j = 0; i + j <= lhs.order_; ++j) {
            const mpq_class& b = rhs.coeffs_[static_cast<std::size_t>(j)];
            if (b != 0)
                out.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return out;
}

TruncatedSeries operator*(TruncatedSeries lhs, const mpq_class& scalar) {
    lhs *= scalar;
    return lhs;
}

void TruncatedSeries::mul_binomial(int degree, int sign) {
    if (degree < 1)
        fail(Errc::NonPositiveExponent, "binomial degree must be positive");
    if (degree > order_)
        return;
    for (int k = order_; k >= degree; --k) {
        const mpq_class& lower = coeffs_[static_cast<std::size_t>(k - degree)];
        if (lower == 0)
            continue;
        if (sign > 0)
            coeffs_[static_cast<std::size_t>(k)] += lower;
        else
            coeffs_[static_cast<std::size_t>(k)] -= lower;
    }
}

void TruncatedSeries::div_binomial(int degree, int sign) {
    if (degree < 1)
        fail(Errc::NonPositiveExponent, "binomial degree must be positive");
    if (degree > order_)
        return;
    for (int k = degree; k <= order_; ++k) {
        const mpq_class& lower = coeffs_[static_cast<std::size_t>(k - degree)];
        if (lower == 0)
            continue;
        if (sign > 0)
            coeffs_[static_cast<std::size_t>(k)] -= lower;
        else
            coeffs_[static_cast<std::size_t>(k)] += lower;
    }
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0] == 0)
        fail(Errc::NonUnitReciprocal, "constant term is zero");
    TruncatedSeries out(order_);
    out.coeffs_[0] = 1 / coeffs_[0];
    for (int k = 1; k <= order_; ++k) {
        mpq_class acc = 0;
        for (int j = 1; j <= k; ++j) {
            const mpq_class& a = coeffs_[static_cast<std::size_t>(j)];
            if (a != 0)
                acc += a * out.coeffs_[static_cast<std::size_t>(k - j)];
        }
        out.coeffs_[static_cast<std::size_t>(k)] = -acc / coeffs_[0];
    }
    return out;
}

std::optional<CoefficientDiff> first_difference(const TruncatedSeries& a,
                                                const TruncatedSeries& b) {
    if (a.order() != b.order())
        fail(Errc::OrderMismatch, "comparing series of different orders");
    for (int k = 0; k <= a.order(); ++k)
        if (a.coeff(k) != b.coeff(k))
            return CoefficientDiff{k, a.coeff(k), b.coeff(k)};
    return std::nullopt;
}

TruncatedSeries pochhammer(int order, long long a, long long b,
                           std::optional<long long> n, bool negated) {
    if (b < 1)
        fail(Errc::NonPositiveExponent, "exponent step must be positive");
    if (!n && a < 1)
        fail(Errc::NonPositiveExponent, "infinite products need base exponent >= 1");
    if (n && *n < 0)
        fail(Errc::IndexOutOfRange, "factor count must be nonnegative");
    if (n && a < 0)
        fail(Errc::NonPositiveExponent, "base exponent must be nonnegative");

    const int sign = negated ? 1 : -1; // factors 1 + sign * q^e
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long long k = 0;; ++k) {
        if (n && k >= *n)
            break;
        long long e = a + k * b;
        if (e > order)
            break; // every further factor is 1 modulo q^(order+1)
        if (e == 0) {
            // only k = 0 with a = 0: the factor is the constant 1 + sign
            s *= mpq_class(1 + sign);
            continue;
        }
        s.mul_binomial(static_cast<int>(e), sign);
    }
    return s;
}

const char* builder_name(SeriesBuilder b) noexcept {
    switch (b) {
        case SeriesBuilder::Eq1Lhs: return "eq1-lhs";
        case SeriesBuilder::Eq1Rhs: return "eq1-rhs";
        case SeriesBuilder::Eq2Lhs: return "eq2-lhs";
        case SeriesBuilder::Eq2Rhs: return "eq2-rhs";
        case SeriesBuilder::GfRootedDistinct: return "gf-rooted-distinct";
        case SeriesBuilder::GfRootedOdd: return "gf-rooted-odd";
        case SeriesBuilder::GfAlmostDistinct: return "gf-almost-distinct";
        case SeriesBuilder::GfEvenRoot: return "gf-even-root";
        case SeriesBuilder::GfOddRoot: return "gf-odd-root";
        case SeriesBuilder::RankParity: return "rank-parity";
        case SeriesBuilder::LargestPartDistinct: return "largest-part-distinct";
        case SeriesBuilder::HalfLargestOdd: return "half-largest-odd";
        case SeriesBuilder::SumLengthOdd: return "sum-length-odd";
        case SeriesBuilder::SumLengthDistinct: return "sum-length-distinct";
    }
    return "?";
}

std::vector<SeriesBuilder> all_builders() {
    return {SeriesBuilder::Eq1Lhs,
            SeriesBuilder::Eq1Rhs,
            SeriesBuilder::Eq2Lhs,
            SeriesBuilder::Eq2Rhs,
            SeriesBuilder::GfRootedDistinct,
            SeriesBuilder::GfRootedOdd,
            SeriesBuilder::GfAlmostDistinct,
            SeriesBuilder::GfEvenRoot,
            SeriesBuilder::GfOddRoot,
            SeriesBuilder::RankParity,
            SeriesBuilder::LargestPartDistinct,
            SeriesBuilder::HalfLargestOdd,
            SeriesBuilder::SumLengthOdd,
            SeriesBuilder::SumLengthDistinct};
}

std::optional<SeriesBuilder> builder_from_name(std::string_view name) {
    for (SeriesBuilder b : all_builders())
        if (name == builder_name(b))
            return b;
    return std::nullopt;
}

namespace {

/// (-q; q)_inf: generating series of distinct-part partitions.
TruncatedSeries distinct_product(int order) {
    return pochhammer(order, 1, 1, std::nullopt, /*negated=*/true);
}

/// 1/(q; q^2)_inf: generating series of odd-part partitions.
TruncatedSeries odd_product(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int k = 1; k <= order; k += 2)
        s.div_binomial(k, -1);
    return s;
}

TruncatedSeries eq1_lhs(int order) {
    // Summand n has valuation n + 1, so n < order suffices.
    TruncatedSeries inf = distinct_product(order);
    TruncatedSeries partial = TruncatedSeries::one(order);
    TruncatedSeries acc(order);
    for (int n = 0; n < order; ++n) {
        acc += inf - partial;
        partial.mul_binomial(n + 1, +1);
    }
    return acc;
}

TruncatedSeries eq2_lhs(int order) {
    /* Sum over n >= 1 of [1/(q;q^2)_inf - 1/(q;q^2)_n]; summand n counts
       odd-part partitions whose largest part exceeds 2n - 1, so it has
       valuation 2n + 1. A sum starting at n = 0 would add the count of all
       nonempty odd-part partitions and break the identity at q^1. */
    TruncatedSeries inf = odd_product(order);
    TruncatedSeries partial = TruncatedSeries::one(order);
    partial.div_binomial(1, -1);
    TruncatedSeries acc(order);
    for (int n = 1; 2 * n + 1 <= order; ++n) {
        acc += inf - partial;
        partial.div_binomial(2 * n + 1, -1);
    }
    return acc;
}

/// 1 + sum_{n>=1} q^(n(n+1)/2) / (-q;q)_n. Equals the number of distinct-part
/// partitions with even rank minus those with odd rank, weight by weight.
TruncatedSeries rank_parity(int order) {
    TruncatedSeries acc = TruncatedSeries::one(order);
    TruncatedSeries inv_partial = TruncatedSeries::one(order);
    for (long long n = 1; n * (n + 1) / 2 <= order; ++n) {
        inv_partial.div_binomial(static_cast<int>(n), +1);
        acc += inv_partial.shifted(static_cast<int>(n * (n + 1) / 2));
    }
    return acc;
}

/// sum_d q^d/(1-q^d), i.e. sum over k of (number of divisors of k) q^k.
TruncatedSeries divisor_sum(int order) {
    TruncatedSeries acc(order);
    for (int d = 1; d <= order; ++d)
        acc += TruncatedSeries::geometric(order, d, d);
    return acc;
}

TruncatedSeries eq1_rhs(int order) {
    TruncatedSeries out = distinct_product(order) * (divisor_sum(order) -
                          TruncatedSeries::monomial(order, 0, mpq_class(1, 2)));
    out += rank_parity(order) * mpq_class(1, 2);
    if (!out.is_integral())
        fail(Errc::InternalInvariantViolation, "half-terms did not cancel");
    return out;
}

TruncatedSeries eq2_rhs(int order) {
    TruncatedSeries even_divisors(order);
    for (int d = 1; 2 * d <= order; ++d)
        even_divisors += TruncatedSeries::geometric(order, 2 * d, 2 * d);
    TruncatedSeries out = distinct_product(order) * (even_divisors -
                          TruncatedSeries::monomial(order, 0, mpq_class(1, 2)));
    out += rank_parity(order) * mpq_class(1, 2);
    if (!out.is_integral())
        fail(Errc::InternalInvariantViolation, "half-terms did not cancel");
    return out;
}

TruncatedSeries gf_rooted_distinct(int order) {
    // Root the part d in a distinct-part partition: q^d prod_{j != d} (1+q^j).
    TruncatedSeries product = distinct_product(order);
    TruncatedSeries acc(order);
    for (int d = 1; d <= order; ++d) {
        TruncatedSeries term = product;
        term.div_binomial(d, +1);
        acc += term.shifted(d);
    }
    return acc;
}

TruncatedSeries gf_rooted_odd(int order) {
    TruncatedSeries roots(order);
    for (int d = 1; d <= order; d += 2)
        roots += TruncatedSeries::geometric(order, d, d);
    return odd_product(order) * roots;
}

TruncatedSeries gf_almost_distinct(int order) {
    return distinct_product(order) * divisor_sum(order);
}

TruncatedSeries gf_even_root(int order) {
    // Root blocks of even size: sum_m even of q^(dm) = q^(2d)/(1-q^(2d)).
    TruncatedSeries roots(order);
    for (int d = 1; 2 * d <= order; ++d)
        roots += TruncatedSeries::geometric(order, 2 * d, 2 * d);
    return distinct_product(order) * roots;
}

TruncatedSeries gf_odd_root(int order) {
    // Root blocks of odd size: sum_m odd of q^(dm) = q^d/(1-q^(2d)).
    TruncatedSeries roots(order);
    for (int d = 1; d <= order; ++d)
        roots += TruncatedSeries::geometric(order, d, 2 * d);
    return distinct_product(order) * roots;
}

TruncatedSeries largest_part_distinct(int order) {
    TruncatedSeries acc(order);
    TruncatedSeries partial = TruncatedSeries::one(order); // (1+q)...(1+q^(n-1))
    for (int n = 1; n <= order; ++n) {
        acc += partial.shifted(n) * mpq_class(n);
        partial.mul_binomial(n, +1);
    }
    return acc;
}

TruncatedSeries half_largest_odd(int order) {
    TruncatedSeries acc(order);
    TruncatedSeries partial = TruncatedSeries::one(order); // 1/((1-q)...(1-q^(2n+1)))
    partial.div_binomial(1, -1);
    for (int n = 1; 2 * n + 1 <= order; ++n) {
        partial.div_binomial(2 * n + 1, -1);
        acc += partial.shifted(2 * n + 1) * mpq_class(n);
    }
    return acc;
}

TruncatedSeries sum_length_odd(int order) {
    /* Mark the multiplicity of one odd part k: partitions into odd parts,
       weighted by that multiplicity, have series q^k/(1-q^k)^2 divided by
       (1-q^j) for every other odd j. Summing over k counts each partition
       once per part, i.e. with weight its length. */
    TruncatedSeries acc(order);
    for (int k = 1; k <= order; k += 2) {
        TruncatedSeries term(order);
        for (long long m = 1; m * k <= order; ++m)
            term.set_coeff(static_cast<int>(m * k), mpq_class(static_cast<long>(m)));
        for (int j = 1; j <= order; j += 2)
            if (j != k)
                term.div_binomial(j, -1);
        acc += term;
    }
    return acc;
}

TruncatedSeries sum_length_distinct(int order) {
    // Mark one part d of a distinct-part partition: q^d/(1+q^d) against the
    // full product counts each partition once per part.
    TruncatedSeries marks(order);
    for (int d = 1; d <= order; ++d)
        marks += TruncatedSeries::geometric_alternating(order, d, d);
    return distinct_product(order) * marks;
}

} // namespace

TruncatedSeries build_series(SeriesBuilder b, int order) {
    switch (b) {
        case SeriesBuilder::Eq1Lhs: return eq1_lhs(order);
        case SeriesBuilder::Eq1Rhs: return eq1_rhs(order);
        case SeriesBuilder::Eq2Lhs: return eq2_lhs(order);
        case SeriesBuilder::Eq2Rhs: return eq2_rhs(order);
        case SeriesBuilder::GfRootedDistinct: return gf_rooted_distinct(order);
        case SeriesBuilder::GfRootedOdd: return gf_rooted_odd(order);
        case SeriesBuilder::GfAlmostDistinct: return gf_almost_distinct(order);
        case SeriesBuilder::GfEvenRoot: return gf_even_root(order);
        case SeriesBuilder::GfOddRoot: return gf_odd_root(order);
        case SeriesBuilder::RankParity: return rank_parity(order);
        case SeriesBuilder::LargestPartDistinct: return largest_part_distinct(order);
        case SeriesBuilder::HalfLargestOdd: return half_largest_odd(order);
        case SeriesBuilder::SumLengthOdd: return sum_length_odd(order);
        case SeriesBuilder::SumLengthDistinct: return sum_length_distinct(order);
    }
    fail(Errc::UnknownBuilder, "unhandled builder");
}

namespace {

struct SeriesSides {
    TruncatedSeries lhs;
    TruncatedSeries rhs;
};

SeriesSides series_sides(IdentityId id, int order) {
    using SB = SeriesBuilder;
    auto B = [order](SB b) { return build_series(b, order); };
    const mpq_class half(1, 2);
    switch (id) {
        case IdentityId::Eq1:
            return {B(SB::Eq1Lhs), B(SB::Eq1Rhs)};
        case IdentityId::Eq2:
            return {B(SB::Eq2Lhs), B(SB::Eq2Rhs)};
        case IdentityId::T1:
            return {B(SB::LargestPartDistinct), B(SB::HalfLargestOdd) + B(SB::SumLengthOdd)};
        case IdentityId::T2: {
            // even-rank count over nonempty distinct = ((-q;q)_inf + rank parity)/2 - 1
            TruncatedSeries even_rank =
                (distinct_product(order) + rank_parity(order)) * half -
                TruncatedSeries::one(order);
            TruncatedSeries lhs = B(SB::LargestPartDistinct) - B(SB::SumLengthDistinct) +
                                  even_rank;
            TruncatedSeries rhs = B(SB::HalfLargestOdd) * mpq_class(2) + odd_product(order) -
                                  TruncatedSeries::one(order);
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::Thm1: {
            TruncatedSeries odd_rank = (distinct_product(order) - rank_parity(order)) * half;
            return {B(SB::LargestPartDistinct) + B(SB::SumLengthDistinct) + odd_rank,
                    B(SB::SumLengthOdd) * mpq_class(2)};
        }
        case IdentityId::Thm2: {
            TruncatedSeries odd_rank = (distinct_product(order) - rank_parity(order)) * half;
            return {B(SB::SumLengthDistinct) + odd_rank,
                    B(SB::SumLengthOdd) - B(SB::HalfLargestOdd)};
        }
        case IdentityId::Lem1:
            return {B(SB::GfAlmostDistinct) + B(SB::GfRootedDistinct),
                    B(SB::GfRootedOdd) * mpq_class(2)};
        case IdentityId::Lem2:
            return {B(SB::GfEvenRoot) + B(SB::GfRootedDistinct), B(SB::GfRootedOdd)};
        case IdentityId::O1:
            return {B(SB::GfOddRoot), B(SB::GfEvenRoot) + B(SB::GfRootedDistinct)};
        case IdentityId::O2:
            return {B(SB::GfOddRoot), B(SB::GfRootedOdd)};
        case IdentityId::Lem3:
            return {B(SB::GfRootedDistinct), B(SB::SumLengthDistinct)};
        case IdentityId::Lem4:
            return {B(SB::GfRootedOdd), B(SB::SumLengthOdd)};
        case IdentityId::T4_1:
            return {B(SB::GfAlmostDistinct),
                    B(SB::SumLengthOdd) * mpq_class(2) - B(SB::SumLengthDistinct)};
        case IdentityId::T4_2:
            return {B(SB::GfEvenRoot), B(SB::SumLengthOdd) - B(SB::SumLengthDistinct)};
    }
    fail(Errc::UnknownIdentity, "unhandled identity");
}

} // namespace

VerificationReport verify_series(IdentityId id, int order) {
    if (order < 1)
        fail(Errc::IndexOutOfRange, "order must be at least 1");

    SeriesSides sides = series_sides(id, order);
    VerificationReport report;
    report.id = id;
    report.method = "series";
    report.n_min = 0;
    report.n_max = order;
    report.passed = true;
    report.rows.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        VerificationRow row{k, sides.lhs.coeff(k), sides.rhs.coeff(k)};
        if (!row.passed() && report.passed) {
            report.passed = false;
            report.first_failure = row;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string coeff_to_string(const mpq_class& c) {
    return c.get_str();
}

} // namespace eulerw
