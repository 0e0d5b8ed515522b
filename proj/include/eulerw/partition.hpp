#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerw/errors.hpp"

namespace eulerw {

/// A partition: weakly decreasing sequence of positive integer parts.
/// The empty sequence is the empty partition of 0.
class Partition {
public:
    Partition() = default;

    /// Parts must already be weakly decreasing and >= 1.
    explicit Partition(std::vector<int> parts);

    /// Sorts into weakly decreasing order, then validates positivity.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    long long weight() const noexcept;
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    /// Dyson's rank: largest part minus length (0 for the empty partition).
    int rank() const noexcept { return largest() - length(); }

    int multiplicity(int d) const;
    /// Number of parts >= d, i.e. part d of the conjugate.
    int parts_at_least(int d) const;
    bool contains(int d) const { return multiplicity(d) > 0; }

    Partition conjugate() const;

    bool has_distinct_parts() const noexcept;
    bool has_odd_parts() const noexcept; // vacuously true when empty

    /// Copy with one occurrence of d removed; NotInDomain if absent.
    Partition with_part_removed(int d) const;
    /// Copy with one extra part d spliced in, keeping the order invariant.
    Partition with_part_inserted(int d) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// True when a precedes b in the canonical listing order
/// (decreasing lexicographic on the part sequences).
bool desc_lex_before(const Partition& a, const Partition& b);

/// "7,7,5,5,3,1"; the empty partition renders as "()".
std::string to_string(const Partition& p);

/// Parses the format produced by to_string. "" and "()" are the empty
/// partition. Throws InvalidPartition on malformed or misordered input.
Partition parse_partition(std::string_view text);

/// A partition together with a designated root block: root_size marked
/// copies of root_part carried alongside a base partition (possibly empty).
/// The part multiset of the whole object is base plus the root copies.
class RootedPartition {
public:
    RootedPartition(Partition base, int root_part, int root_size);

    const Partition& base() const noexcept { return base_; }
    int root_part() const noexcept { return root_part_; }
    int root_size() const noexcept { return root_size_; }

    long long weight() const noexcept;
    /// Total number of parts, root copies included.
    int length() const noexcept { return base_.length() + root_size_; }

    /// All parts merged, weakly decreasing, root copies indistinguishable.
    std::vector<int> all_parts() const;
    /// Multiplicity of d across base and root block.
    int multiplicity(int d) const;

    bool has_distinct_parts() const;        // base and root together
    bool has_odd_parts() const;             // every part odd, root included
    bool has_almost_distinct_parts() const { return base_.has_distinct_parts(); }

    friend bool operator==(const RootedPartition&, const RootedPartition&) = default;
    friend auto operator<=>(const RootedPartition&, const RootedPartition&) = default;

private:
    Partition base_;
    int root_part_ = 0;
    int root_size_ = 0;
};

/// "2+1~+1": parts weakly decreasing, root copies marked with a trailing
/// tilde and printed before equal unmarked parts.
std::string to_string(const RootedPartition& rp);

enum class PartitionClass {
    All,
    Distinct,
    Odd,
    RootedAll,
    RootedDistinct,
    RootedOdd,
    RootedAlmostDistinct,
    RootedAlmostDistinctEvenRoot,
    RootedAlmostDistinctOddRoot,
};

bool is_rooted_class(PartitionClass cls) noexcept;
const char* class_name(PartitionClass cls) noexcept; // kebab-case CLI token
std::optional<PartitionClass> class_from_name(std::string_view name);

bool matches(const Partition& p, PartitionClass cls);
bool matches(const RootedPartition& rp, PartitionClass cls);

/// Visits the members of a plain class (All/Distinct/Odd) of weight n in
/// canonical order. Throws NotInDomain for rooted classes.
void for_each_partition(long long n, PartitionClass cls,
                        const std::function<void(const Partition&)>& visit);

/// Visits the members of a rooted class of weight n. Visit order is
/// deterministic but unspecified; use enumerate_rooted for canonical order.
void for_each_rooted(long long n, PartitionClass cls,
                     const std::function<void(const RootedPartition&)>& visit);

/// Members of a plain class in canonical order.
std::vector<Partition> enumerate_partitions(long long n, PartitionClass cls);

/// Members of a rooted class in canonical order: decreasing lexicographic on
/// the merged part multiset, then root_part descending, then root_size
/// ascending.
std::vector<RootedPartition> enumerate_rooted(long long n, PartitionClass cls);

/// Number of members of the class of weight n (computed by enumeration).
long long count(long long n, PartitionClass cls);

} // namespace eulerw
