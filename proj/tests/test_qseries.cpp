#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include "eulerw/qseries.hpp"
#include "oracles.hpp"

using namespace eulerw;

namespace {

Errc code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a throw");
    return Errc::InternalInvariantViolation;
}

long long largest_stat(const std::vector<int>& v) {
    return v.empty() ? 0 : v.front();
}

long long half_largest_stat(const std::vector<int>& v) {
    return v.empty() ? 0 : (v.front() - 1) / 2;
}

long long length_stat(const std::vector<int>& v) {
    return static_cast<long long>(v.size());
}

long long rank_parity_count(int k) {
    long long total = 0;
    for (const std::vector<int>& v :
         oracle::members_of(k, PartitionClass::Distinct))
        total += oracle::rank_of(v) % 2 == 0 ? 1 : -1;
    return total;
}

} // namespace

TEST_CASE("series construction and access") {
    TruncatedSeries zero(5);
    CHECK(zero.order() == 5);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.valuation().has_value());

    TruncatedSeries unit = TruncatedSeries::one(5);
    CHECK_FALSE(unit.is_zero());
    CHECK(unit.valuation() == 0);
    CHECK((unit.coeff(0) == 1));
    CHECK((unit.coeff(5) == 0));

    TruncatedSeries mono = TruncatedSeries::monomial(5, 3, mpq_class(-7, 2));
    CHECK((mono.coeff(3) == mpq_class(-7, 2)));
    CHECK(mono.valuation() == 3);
    CHECK_FALSE(mono.is_integral());
    CHECK(unit.is_integral());
    CHECK(TruncatedSeries::monomial(5, 9).is_zero()); // degree beyond the order

    CHECK_THROWS_AS(TruncatedSeries(-1), Error);
    CHECK(code_of([] { TruncatedSeries::monomial(5, -1); }) ==
          Errc::NonPositiveExponent);
    CHECK(code_of([&] { zero.coeff(6); }) == Errc::IndexOutOfRange);
    CHECK(code_of([&] { zero.coeff(-1); }) == Errc::IndexOutOfRange);
    CHECK(code_of([&] { zero.set_coeff(6, 1); }) == Errc::IndexOutOfRange);

    TruncatedSeries geo = TruncatedSeries::geometric(10, 2, 3);
    for (int k = 0; k <= 10; ++k)
        CHECK((geo.coeff(k) == (k == 2 || k == 5 || k == 8 ? 1 : 0)));

    TruncatedSeries alt = TruncatedSeries::geometric_alternating(9, 1, 2);
    for (int k = 0; k <= 9; ++k) {
        int expect = k % 2 == 0 ? 0 : (k % 4 == 1 ? 1 : -1);
        CHECK((alt.coeff(k) == expect));
    }
    CHECK(code_of([] { TruncatedSeries::geometric(5, 0, 1); }) ==
          Errc::NonPositiveExponent);
}

TEST_CASE("truncation and shifting") {
    TruncatedSeries s = TruncatedSeries::geometric(6, 1, 1);
    TruncatedSeries cut = s.truncated(3);
    CHECK(cut.order() == 3);
    for (int k = 0; k <= 3; ++k)
        CHECK((cut.coeff(k) == s.coeff(k)));
    TruncatedSeries padded = s.truncated(10);
    CHECK(padded.order() == 10);
    CHECK((padded.coeff(10) == 0));
    CHECK(padded.truncated(6) == s);

    CHECK(s.shifted(2) == s * TruncatedSeries::monomial(6, 2));
    CHECK(s.shifted(0) == s);
    CHECK(code_of([&] { s.shifted(-1); }) == Errc::NonPositiveExponent);
}

TEST_CASE("arithmetic keeps orders aligned") {
    TruncatedSeries a = TruncatedSeries::geometric(8, 1, 1);
    TruncatedSeries b = TruncatedSeries::geometric(8, 2, 2);
    CHECK((a + b) - b == a);

    TruncatedSeries scaled = a * mpq_class(3, 2);
    CHECK((scaled.coeff(4) == mpq_class(3, 2)));
    CHECK_FALSE(scaled.is_integral());

    TruncatedSeries product = a * b;
    mpq_class conv;
    for (int i = 1; i <= 4; ++i) // q^i from a times q^(6-i) from b
        if ((6 - i) >= 2 && (6 - i) % 2 == 0)
            conv += 1;
    CHECK((product.coeff(6) == conv));

    TruncatedSeries other(9);
    CHECK(code_of([&] { a += other; }) == Errc::OrderMismatch);
    CHECK(code_of([&] { first_difference(a, other); }) == Errc::OrderMismatch);
}

TEST_CASE("binomial multiply and divide invert each other") {
    TruncatedSeries s = TruncatedSeries::geometric(20, 1, 1);
    s.set_coeff(0, mpq_class(2, 3));
    TruncatedSeries original = s;

    for (int sign : {+1, -1}) {
        for (int degree : {1, 3, 7}) {
            s.mul_binomial(degree, sign);
            TruncatedSeries explicit_product =
                original * (TruncatedSeries::one(20) +
                            TruncatedSeries::monomial(20, degree, sign));
            CHECK(s == explicit_product);
            s.div_binomial(degree, sign);
            CHECK(s == original);
        }
    }
    s.mul_binomial(25, 1); // beyond the order: a no-op
    CHECK(s == original);
    CHECK(code_of([&] { s.mul_binomial(0, 1); }) == Errc::NonPositiveExponent);
    CHECK(code_of([&] { s.div_binomial(-2, 1); }) == Errc::NonPositiveExponent);
}

TEST_CASE("reciprocal inverts a unit series") {
    TruncatedSeries one_minus_q = TruncatedSeries::one(12);
    one_minus_q.mul_binomial(1, -1);
    TruncatedSeries recip = one_minus_q.reciprocal();
    for (int k = 0; k <= 12; ++k)
        CHECK((recip.coeff(k) == 1));

    TruncatedSeries s = pochhammer(15, 1, 1, 5);
    CHECK(s * s.reciprocal() == TruncatedSeries::one(15));

    CHECK(code_of([] { TruncatedSeries(3).reciprocal(); }) ==
          Errc::NonUnitReciprocal);
    CHECK(code_of([] { TruncatedSeries::monomial(3, 1).reciprocal(); }) ==
          Errc::NonUnitReciprocal);
}

TEST_CASE("pochhammer products take the textbook coefficients") {
    TruncatedSeries euler = pochhammer(10, 1, 1, std::nullopt);
    const int euler_expect[] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0};
    for (int k = 0; k <= 10; ++k)
        CHECK((euler.coeff(k) == euler_expect[k]));

    TruncatedSeries binary = pochhammer(4, 1, 1, std::nullopt, true);
    const int binary_expect[] = {1, 1, 1, 2, 2};
    for (int k = 0; k <= 4; ++k)
        CHECK((binary.coeff(k) == binary_expect[k]));

    TruncatedSeries odd = pochhammer(6, 1, 2, std::nullopt);
    const int odd_expect[] = {1, -1, 0, -1, 1, -1, 1};
    for (int k = 0; k <= 6; ++k)
        CHECK((odd.coeff(k) == odd_expect[k]));

    TruncatedSeries finite = pochhammer(6, 1, 1, 3);
    const int finite_expect[] = {1, -1, -1, 0, 1, 1, -1};
    for (int k = 0; k <= 6; ++k)
        CHECK((finite.coeff(k) == finite_expect[k]));

    TruncatedSeries by_hand = TruncatedSeries::one(6);
    by_hand.mul_binomial(1, 1);
    by_hand.mul_binomial(2, 1);
    by_hand.mul_binomial(3, 1);
    CHECK(by_hand == pochhammer(6, 1, 1, 3, true));

    // Factors beyond the truncation order contribute nothing.
    CHECK(pochhammer(20, 1, 1, 25) == pochhammer(20, 1, 1, std::nullopt));
}

TEST_CASE("pochhammer validates its exponents") {
    CHECK(code_of([] { pochhammer(5, 1, 0, 2); }) == Errc::NonPositiveExponent);
    CHECK(code_of([] { pochhammer(5, 0, 1, std::nullopt); }) ==
          Errc::NonPositiveExponent);
    CHECK(code_of([] { pochhammer(5, -1, 1, 2); }) == Errc::NonPositiveExponent);
    CHECK(code_of([] { pochhammer(5, 1, 1, -1); }) == Errc::IndexOutOfRange);

    CHECK(pochhammer(5, 1, 1, 0) == TruncatedSeries::one(5));
    CHECK(pochhammer(5, 0, 1, 1).is_zero()); // factor (1 - q^0) = 0
    TruncatedSeries doubled = pochhammer(4, 0, 1, 2, true); // (1+1)(1+q)
    CHECK((doubled.coeff(0) == 2));
    CHECK((doubled.coeff(1) == 2));
    CHECK((doubled.coeff(2) == 0));
}

TEST_CASE("product expansions count partitions") {
    std::vector<long long> all_dp = oracle::all_counts(40);
    std::vector<long long> distinct_dp = oracle::distinct_counts(40);
    std::vector<long long> odd_dp = oracle::odd_counts(40);

    TruncatedSeries all_gf = pochhammer(40, 1, 1, std::nullopt).reciprocal();
    TruncatedSeries odd_gf = pochhammer(40, 1, 2, std::nullopt).reciprocal();
    TruncatedSeries distinct_gf = pochhammer(40, 1, 1, std::nullopt, true);
    for (int k = 0; k <= 40; ++k) {
        CHECK((all_gf.coeff(k) == static_cast<long>(all_dp[static_cast<std::size_t>(k)])));
        CHECK((odd_gf.coeff(k) == static_cast<long>(odd_dp[static_cast<std::size_t>(k)])));
        CHECK((distinct_gf.coeff(k) ==
               static_cast<long>(distinct_dp[static_cast<std::size_t>(k)])));
    }
    // Euler: distinct parts and odd parts have the same generating function.
    CHECK_FALSE(first_difference(distinct_gf, odd_gf).has_value());
}

TEST_CASE("builder names round trip") {
    std::vector<SeriesBuilder> builders = all_builders();
    REQUIRE(builders.size() == 14);
    for (SeriesBuilder b : builders) {
        auto back = builder_from_name(builder_name(b));
        REQUIRE(back.has_value());
        CHECK(*back == b);
    }
    CHECK(builder_name(SeriesBuilder::GfRootedDistinct) ==
          std::string("gf-rooted-distinct"));
    CHECK_FALSE(builder_from_name("nope").has_value());
}

TEST_CASE("frozen builder prefixes") {
    TruncatedSeries rd = build_series(SeriesBuilder::GfRootedDistinct, 4);
    const int rd_expect[] = {0, 1, 1, 3, 3};
    for (int k = 0; k <= 4; ++k)
        CHECK((rd.coeff(k) == rd_expect[k]));

    TruncatedSeries rp = build_series(SeriesBuilder::RankParity, 2);
    const int rp_expect[] = {1, 1, -1};
    for (int k = 0; k <= 2; ++k)
        CHECK((rp.coeff(k) == rp_expect[k]));
}

TEST_CASE("every builder matches its enumeration oracle") {
    using Expect = std::function<long long(int)>;
    auto stat = [](PartitionClass cls, long long (*f)(const std::vector<int>&)) {
        return [cls, f](int k) { return oracle::stat_sum(k, cls, f); };
    };
    auto rooted = [](PartitionClass cls) {
        return [cls](int k) { return oracle::rooted_count(k, cls); };
    };
    const std::vector<std::pair<SeriesBuilder, Expect>> table = {
        {SeriesBuilder::Eq1Lhs, stat(PartitionClass::Distinct, largest_stat)},
        {SeriesBuilder::Eq1Rhs, stat(PartitionClass::Distinct, largest_stat)},
        {SeriesBuilder::Eq2Lhs, stat(PartitionClass::Odd, half_largest_stat)},
        {SeriesBuilder::Eq2Rhs, stat(PartitionClass::Odd, half_largest_stat)},
        {SeriesBuilder::GfRootedDistinct, rooted(PartitionClass::RootedDistinct)},
        {SeriesBuilder::GfRootedOdd, rooted(PartitionClass::RootedOdd)},
        {SeriesBuilder::GfAlmostDistinct,
         rooted(PartitionClass::RootedAlmostDistinct)},
        {SeriesBuilder::GfEvenRoot,
         rooted(PartitionClass::RootedAlmostDistinctEvenRoot)},
        {SeriesBuilder::GfOddRoot,
         rooted(PartitionClass::RootedAlmostDistinctOddRoot)},
        {SeriesBuilder::RankParity, rank_parity_count},
        {SeriesBuilder::LargestPartDistinct,
         stat(PartitionClass::Distinct, largest_stat)},
        {SeriesBuilder::HalfLargestOdd, stat(PartitionClass::Odd, half_largest_stat)},
        {SeriesBuilder::SumLengthOdd, stat(PartitionClass::Odd, length_stat)},
        {SeriesBuilder::SumLengthDistinct,
         stat(PartitionClass::Distinct, length_stat)},
    };
    REQUIRE(table.size() == all_builders().size());

    const int kOrder = 30;
    for (const auto& [builder, expect] : table) {
        TruncatedSeries s = build_series(builder, kOrder);
        INFO("builder ", builder_name(builder));
        CHECK(s.is_integral());
        for (int k = 0; k <= kOrder; ++k)
            CHECK((s.coeff(k) == static_cast<long>(expect(k))));
    }
}

TEST_CASE("the two closed forms match their sums at high order") {
    TruncatedSeries lhs1 = build_series(SeriesBuilder::Eq1Lhs, 60);
    TruncatedSeries rhs1 = build_series(SeriesBuilder::Eq1Rhs, 60);
    CHECK(lhs1.is_integral());
    CHECK(rhs1.is_integral());
    CHECK_FALSE(first_difference(lhs1, rhs1).has_value());

    TruncatedSeries lhs2 = build_series(SeriesBuilder::Eq2Lhs, 60);
    TruncatedSeries rhs2 = build_series(SeriesBuilder::Eq2Rhs, 60);
    CHECK(lhs2.is_integral());
    CHECK(rhs2.is_integral());
    CHECK_FALSE(first_difference(lhs2, rhs2).has_value());
}

TEST_CASE("every identity verifies at the series level") {
    for (IdentityId id : all_identities()) {
        VerificationReport report = verify_series(id, 40);
        INFO("identity ", identity_name(id));
        CHECK(report.passed);
        CHECK(report.id == id);
        CHECK(report.method == "series");
        CHECK(report.n_min == 0);
        CHECK(report.n_max == 40);
        CHECK_FALSE(report.first_failure.has_value());
        REQUIRE(report.rows.size() == 41);
        for (const VerificationRow& row : report.rows)
            CHECK(row.passed());
    }
    CHECK(code_of([] { verify_series(IdentityId::T1, 0); }) ==
          Errc::IndexOutOfRange);
}

TEST_CASE("first_difference pinpoints a mismatch") {
    TruncatedSeries a = build_series(SeriesBuilder::SumLengthOdd, 12);
    TruncatedSeries b = a;
    b.set_coeff(7, 5);
    auto diff = first_difference(a, b);
    REQUIRE(diff.has_value());
    CHECK(diff->k == 7);
    CHECK((diff->lhs == a.coeff(7)));
    CHECK((diff->rhs == 5));
}

TEST_CASE("coefficients render exactly") {
    CHECK(coeff_to_string(mpq_class(0)) == "0");
    CHECK(coeff_to_string(mpq_class(12)) == "12");
    CHECK(coeff_to_string(mpq_class(-5, 2)) == "-5/2");
}
