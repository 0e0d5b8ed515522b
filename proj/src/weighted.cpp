#include "eulerw/weighted.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eulerw/bijections.hpp"

namespace eulerw {

long long evaluate(WeightFunction w, const Partition& p) {
    if (p.empty())
        return w == WeightFunction::Unit ? 1 : 0;
    const long long largest = p.largest();
    const long long length = p.length();
    const long long rank = largest - length;
    const bool rank_odd = rank % 2 != 0;
    switch (w) {
        case WeightFunction::LargestPart: return largest;
        case WeightFunction::TwiceLargestPlusOne: return 2 * largest + 1;
        case WeightFunction::HalfLargestPlusLength: return (largest - 1) / 2 + length;
        case WeightFunction::LargestPlusTwiceLength: return largest + 2 * length;
        case WeightFunction::RankAdjusted: return rank + (rank_odd ? 0 : 1);
        case WeightFunction::LengthPlusLargestPlusOddRank:
            return length + largest + (rank_odd ? 1 : 0);
        case WeightFunction::TwiceLength: return 2 * length;
        case WeightFunction::LengthPlusOddRank: return length + (rank_odd ? 1 : 0);
        case WeightFunction::LengthMinusHalfLargest: return length - (largest - 1) / 2;
        case WeightFunction::Length: return length;
        case WeightFunction::HalfLargestMinus: return (largest - 1) / 2;
        case WeightFunction::Unit: return 1;
    }
    fail(Errc::InternalInvariantViolation, "unhandled weight function");
}

mpz_class weighted_sum(long long n, PartitionClass cls, WeightFunction w) {
    mpz_class total = 0;
    for_each_partition(n, cls, [&](const Partition& p) {
        total += static_cast<long>(evaluate(w, p));
    });
    return total;
}

const char* identity_name(IdentityId id) noexcept {
    switch (id) {
        case IdentityId::T1: return "t1";
        case IdentityId::T2: return "t2";
        case IdentityId::Thm1: return "thm1";
        case IdentityId::Thm2: return "thm2";
        case IdentityId::Lem1: return "lem1";
        case IdentityId::Lem2: return "lem2";
        case IdentityId::O1: return "o1";
        case IdentityId::O2: return "o2";
        case IdentityId::Lem3: return "lem3";
        case IdentityId::Lem4: return "lem4";
        case IdentityId::T4_1: return "t4_1";
        case IdentityId::T4_2: return "t4_2";
        case IdentityId::Eq1: return "eq1";
        case IdentityId::Eq2: return "eq2";
    }
    return "?";
}

const char* identity_description(IdentityId id) noexcept {
    switch (id) {
        case IdentityId::T1:
            return "sum of largest parts over distinct-part partitions = "
                   "sum of (largest-1)/2 + length over odd-part partitions";
        case IdentityId::T2:
            return "sum of rank + [rank even] over distinct = sum of largest over odd";
        case IdentityId::Thm1:
            return "sum of length + largest + [rank odd] over distinct = "
                   "twice the sum of lengths over odd";
        case IdentityId::Thm2:
            return "sum of length + [rank odd] over distinct = "
                   "sum of length - (largest-1)/2 over odd";
        case IdentityId::Lem1:
            return "rooted almost-distinct count + rooted distinct count = "
                   "twice the rooted odd count";
        case IdentityId::Lem2:
            return "even-root almost-distinct count + rooted distinct count = "
                   "rooted odd count";
        case IdentityId::O1:
            return "odd-root almost-distinct count = even-root count + rooted distinct count";
        case IdentityId::O2:
            return "odd-root almost-distinct count = rooted odd count";
        case IdentityId::Lem3:
            return "rooted distinct count = sum of lengths over distinct-part partitions";
        case IdentityId::Lem4:
            return "rooted odd count = sum of lengths over odd-part partitions";
        case IdentityId::T4_1:
            return "rooted almost-distinct count = 2*(sum of lengths over odd) - "
                   "sum of lengths over distinct";
        case IdentityId::T4_2:
            return "even-root almost-distinct count = sum of lengths over odd - "
                   "sum of lengths over distinct";
        case IdentityId::Eq1:
            return "sum of largest over distinct = 2*(sum of lengths over odd) - "
                   "sum of length + [rank odd] over distinct";
        case IdentityId::Eq2:
            return "sum of (largest-1)/2 over odd = sum of lengths over odd - "
                   "sum of length + [rank odd] over distinct";
    }
    return "?";
}

std::vector<IdentityId> all_identities() {
    return {IdentityId::T1,   IdentityId::T2,   IdentityId::Thm1, IdentityId::Thm2,
            IdentityId::Lem1, IdentityId::Lem2, IdentityId::O1,   IdentityId::O2,
            IdentityId::Lem3, IdentityId::Lem4, IdentityId::T4_1, IdentityId::T4_2,
            IdentityId::Eq1,  IdentityId::Eq2};
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (IdentityId id : all_identities())
        if (name == identity_name(id))
            return id;
    return std::nullopt;
}

namespace {

// gmpxx has no long long overloads; all our magnitudes fit a signed long.
mpz_class z(long long v) { return mpz_class(static_cast<long>(v)); }

struct Sides {
    mpz_class lhs;
    mpz_class rhs;
};

Sides identity_sides(IdentityId id, long long n) {
    using PC = PartitionClass;
    using WF = WeightFunction;
    switch (id) {
        case IdentityId::T1:
            return {weighted_sum(n, PC::Distinct, WF::LargestPart),
                    weighted_sum(n, PC::Odd, WF::HalfLargestPlusLength)};
        case IdentityId::T2:
            return {weighted_sum(n, PC::Distinct, WF::RankAdjusted),
                    weighted_sum(n, PC::Odd, WF::LargestPart)};
        case IdentityId::Thm1:
            return {weighted_sum(n, PC::Distinct, WF::LengthPlusLargestPlusOddRank),
                    weighted_sum(n, PC::Odd, WF::TwiceLength)};
        case IdentityId::Thm2:
            return {weighted_sum(n, PC::Distinct, WF::LengthPlusOddRank),
                    weighted_sum(n, PC::Odd, WF::LengthMinusHalfLargest)};
        case IdentityId::Lem1:
            return {z(count(n, PC::RootedAlmostDistinct) + count(n, PC::RootedDistinct)),
                    z(2 * count(n, PC::RootedOdd))};
        case IdentityId::Lem2:
            return {z(count(n, PC::RootedAlmostDistinctEvenRoot) +
                      count(n, PC::RootedDistinct)),
                    z(count(n, PC::RootedOdd))};
        case IdentityId::O1:
            return {z(count(n, PC::RootedAlmostDistinctOddRoot)),
                    z(count(n, PC::RootedAlmostDistinctEvenRoot) +
                      count(n, PC::RootedDistinct))};
        case IdentityId::O2:
            return {z(count(n, PC::RootedAlmostDistinctOddRoot)),
                    z(count(n, PC::RootedOdd))};
        case IdentityId::Lem3:
            return {z(count(n, PC::RootedDistinct)),
                    weighted_sum(n, PC::Distinct, WF::Length)};
        case IdentityId::Lem4:
            return {z(count(n, PC::RootedOdd)), weighted_sum(n, PC::Odd, WF::Length)};
        case IdentityId::T4_1:
            return {z(count(n, PC::RootedAlmostDistinct)),
                    mpz_class(2 * weighted_sum(n, PC::Odd, WF::Length) -
                              weighted_sum(n, PC::Distinct, WF::Length))};
        case IdentityId::T4_2:
            return {z(count(n, PC::RootedAlmostDistinctEvenRoot)),
                    mpz_class(weighted_sum(n, PC::Odd, WF::Length) -
                              weighted_sum(n, PC::Distinct, WF::Length))};
        case IdentityId::Eq1:
            return {weighted_sum(n, PC::Distinct, WF::LargestPart),
                    mpz_class(2 * weighted_sum(n, PC::Odd, WF::Length) -
                              weighted_sum(n, PC::Distinct, WF::LengthPlusOddRank))};
        case IdentityId::Eq2:
            return {weighted_sum(n, PC::Odd, WF::HalfLargestMinus),
                    mpz_class(weighted_sum(n, PC::Odd, WF::Length) -
                              weighted_sum(n, PC::Distinct, WF::LengthPlusOddRank))};
    }
    fail(Errc::UnknownIdentity, "unhandled identity");
}

} // namespace

VerificationReport verify_theorem(IdentityId id, long long n_max) {
    if (n_max < 1)
        fail(Errc::IndexOutOfRange, "n_max must be at least 1");

    VerificationReport report;
    report.id = id;
    report.method = "enum";
    report.n_min = 1;
    report.n_max = n_max;
    report.passed = true;
    report.rows.reserve(static_cast<std::size_t>(n_max));
    for (long long n = 1; n <= n_max; ++n) {
        Sides sides = identity_sides(id, n);
        VerificationRow row{n, mpq_class(sides.lhs), mpq_class(sides.rhs)};
        if (!row.passed() && report.passed) {
            report.passed = false;
            report.first_failure = row;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

void note_failure(BijectiveCertificate& cert, const std::string& what) {
    if (cert.passed) {
        cert.passed = false;
        cert.failure = what;
    }
}

/* t1: sylvester matches odd-part partitions with distinct-part partitions,
   carrying (largest-1)/2 + length to the largest part. t2: the iterated map
   does the same, carrying the largest part to rank + [rank even]. */
void certify_partition_bijection(BijectiveCertificate& cert, long long n, bool use_sylvester) {
    std::set<Partition> images;
    for_each_partition(n, PartitionClass::Odd, [&](const Partition& lam) {
        Partition mu = use_sylvester ? sylvester(lam) : iterated_dyson(lam);
        PartitionPair pair;
        pair.source = lam;
        pair.image = mu;
        if (use_sylvester) {
            pair.source_stat = evaluate(WeightFunction::HalfLargestPlusLength, lam);
            pair.image_stat = evaluate(WeightFunction::LargestPart, mu);
        } else {
            pair.source_stat = evaluate(WeightFunction::LargestPart, lam);
            pair.image_stat = evaluate(WeightFunction::RankAdjusted, mu);
        }
        if (mu.weight() != n)
            note_failure(cert, "image of " + to_string(lam) + " has wrong weight");
        else if (!mu.has_distinct_parts())
            note_failure(cert, "image of " + to_string(lam) + " is not distinct");
        else if (pair.source_stat != pair.image_stat)
            note_failure(cert, "statistic not carried across " + to_string(lam) +
                                   " -> " + to_string(mu));
        else if (!images.insert(mu).second)
            note_failure(cert, "image " + to_string(mu) + " repeated");
        Partition back = use_sylvester ? sylvester_inv(mu) : iterated_dyson_inv(mu);
        if (back != lam)
            note_failure(cert, "round trip failed at " + to_string(lam));
        cert.partition_pairs.push_back(std::move(pair));
    });
    if (images.size() != static_cast<std::size_t>(count(n, PartitionClass::Distinct)))
        note_failure(cert, "images do not exhaust the distinct-part partitions");
}

/* o1: tau pairs every almost-distinct rooted partition having a repeated
   value with a partner of opposite root-size parity; the unpaired members
   are exactly the all-distinct ones (odd root size 1). */
void certify_involution(BijectiveCertificate& cert, long long n) {
    long long odd_root = 0;
    long long even_root = 0;
    for_each_rooted(n, PartitionClass::RootedAlmostDistinct, [&](const RootedPartition& rp) {
        bool odd = rp.root_size() % 2 == 1;
        (odd ? odd_root : even_root) += 1;
        if (rp.has_distinct_parts()) {
            if (!odd)
                note_failure(cert, "all-distinct member with even root size");
            cert.unpaired.push_back(rp);
            return;
        }
        RootedPartition image = tau(rp);
        if (tau(image) != rp)
            note_failure(cert, "not an involution at " + to_string(rp));
        if (image.root_size() % 2 == rp.root_size() % 2)
            note_failure(cert, "root-size parity not flipped at " + to_string(rp));
        if (image.all_parts() != rp.all_parts())
            note_failure(cert, "part multiset changed at " + to_string(rp));
        if (odd)
            cert.rooted_pairs.push_back({rp, image});
    });
    if (odd_root != even_root + static_cast<long long>(cert.unpaired.size()))
        note_failure(cert, "pairing does not balance the root-size parities");
}

/* o2: root-block conjugation composed with the hook bijection takes
   odd-root almost-distinct rooted partitions onto rooted partitions with
   all parts odd. */
void certify_root_conjugation(BijectiveCertificate& cert, long long n) {
    std::set<RootedPartition> images;
    for_each_rooted(n, PartitionClass::RootedAlmostDistinctOddRoot,
                    [&](const RootedPartition& rp) {
                        RootedPartition image = sigma(rp);
                        if (image.weight() != n)
                            note_failure(cert, "image of " + to_string(rp) + " has wrong weight");
                        else if (!image.has_odd_parts())
                            note_failure(cert, "image of " + to_string(rp) + " is not odd");
                        else if (sigma_inv(image) != rp)
                            note_failure(cert, "round trip failed at " + to_string(rp));
                        else if (!images.insert(image).second)
                            note_failure(cert, "image " + to_string(image) + " repeated");
                        cert.rooted_pairs.push_back({rp, image});
                    });
    if (images.size() != static_cast<std::size_t>(count(n, PartitionClass::RootedOdd)))
        note_failure(cert, "images do not exhaust the rooted odd partitions");
}

} // namespace

BijectiveCertificate certify_bijectively(IdentityId id, long long n) {
    if (n < 1)
        fail(Errc::IndexOutOfRange, "n must be at least 1");

    BijectiveCertificate cert;
    cert.id = id;
    cert.n = n;
    cert.passed = true;
    switch (id) {
        case IdentityId::T1:
            certify_partition_bijection(cert, n, /*use_sylvester=*/true);
            break;
        case IdentityId::T2:
            certify_partition_bijection(cert, n, /*use_sylvester=*/false);
            break;
        case IdentityId::O1:
            certify_involution(cert, n);
            break;
        case IdentityId::O2:
            certify_root_conjugation(cert, n);
            break;
        default:
            fail(Errc::UnknownIdentity,
                 std::string("no bijective certificate for ") + identity_name(id));
    }
    return cert;
}

} // namespace eulerw
