#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "eulerw/partition.hpp"

namespace eulerw {

/// Per-partition statistics that appear in the weighted identities. All of
/// them take integer values on every partition and evaluate to 0 on the
/// empty partition, except Unit which is the constant 1.
enum class WeightFunction {
    LargestPart,                 // largest
    TwiceLargestPlusOne,         // 2*largest + 1
    HalfLargestPlusLength,       // (largest - 1)/2 + length
    LargestPlusTwiceLength,      // largest + 2*length
    RankAdjusted,                // rank + [rank even]
    LengthPlusLargestPlusOddRank,// length + largest + [rank odd]
    TwiceLength,                 // 2*length
    LengthPlusOddRank,           // length + [rank odd]
    LengthMinusHalfLargest,      // length - (largest - 1)/2
    Length,                      // length
    HalfLargestMinus,            // (largest - 1)/2
    Unit,                        // 1
};

long long evaluate(WeightFunction w, const Partition& p);

/// Exact sum of the statistic over every member of a plain class of weight n.
mpz_class weighted_sum(long long n, PartitionClass cls, WeightFunction w);

/// The verifiable identities. Tokens are the CLI names.
enum class IdentityId {
    T1,    // "t1"   sum_D largest = sum_O (largest-1)/2 + length
    T2,    // "t2"   sum_D rank-adjusted = sum_O largest
    Thm1,  // "thm1" sum_D length + largest + [rank odd] = sum_O 2*length
    Thm2,  // "thm2" sum_D length + [rank odd] = sum_O length - (largest-1)/2
    Lem1,  // "lem1" almost-distinct + rooted-distinct = 2 * rooted-odd
    Lem2,  // "lem2" even-root almost-distinct + rooted-distinct = rooted-odd
    O1,    // "o1"   odd-root almost-distinct = even-root + rooted-distinct
    O2,    // "o2"   odd-root almost-distinct = rooted-odd
    Lem3,  // "lem3" rooted-distinct = sum_D length
    Lem4,  // "lem4" rooted-odd = sum_O length
    T4_1,  // "t4_1" almost-distinct = 2*sum_O length - sum_D length
    T4_2,  // "t4_2" even-root almost-distinct = sum_O length - sum_D length
    Eq1,   // "eq1"  sum_D largest = 2*sum_O length - sum_D (length + [rank odd])
    Eq2,   // "eq2"  sum_O (largest-1)/2 = sum_O length - sum_D (length + [rank odd])
};

const char* identity_name(IdentityId id) noexcept;
std::optional<IdentityId> identity_from_name(std::string_view name);
/// One-line mathematical description, used by reports and --help.
const char* identity_description(IdentityId id) noexcept;
std::vector<IdentityId> all_identities();

/// One compared value pair. For enumeration reports n is the weight; for
/// series reports n is the coefficient index.
struct VerificationRow {
    long long n = 0;
    mpq_class lhs;
    mpq_class rhs;

    bool passed() const { return lhs == rhs; }
};

struct VerificationReport {
    IdentityId id{};
    std::string method;     // "enum" or "series"
    long long n_min = 0;
    long long n_max = 0;
    std::vector<VerificationRow> rows;
    bool passed = false;
    std::optional<VerificationRow> first_failure;
};

/// Checks both sides of the identity by exhaustive enumeration for every
/// weight 1..n_max.
VerificationReport verify_theorem(IdentityId id, long long n_max);

/// A matched source/image pair under a weight-preserving bijection, with the
/// statistic carried from each side.
struct PartitionPair {
    Partition source;
    Partition image;
    long long source_stat = 0;
    long long image_stat = 0;
};

struct RootedPair {
    RootedPartition source;
    RootedPartition image;
};

/// Certificate that an identity holds at weight n because an explicit
/// bijection says so, not merely because the totals agree.
struct BijectiveCertificate {
    IdentityId id{};
    long long n = 0;
    std::vector<PartitionPair> partition_pairs; // t1, t2
    std::vector<RootedPair> rooted_pairs;       // o1 (orbit pairs), o2
    std::vector<RootedPartition> unpaired;      // o1: all-distinct leftovers
    bool passed = false;
    std::string failure;                        // first violation, if any
};

/// Supported for t1 (sylvester), t2 (iterated dyson), o1 (the parity
/// involution), and o2 (root-block conjugation); UnknownIdentity otherwise.
BijectiveCertificate certify_bijectively(IdentityId id, long long n);

} // namespace eulerw
