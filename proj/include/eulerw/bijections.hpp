#pragma once

#include <vector>

#include "eulerw/partition.hpp"

namespace eulerw {

/// One diagonal hook of a 2-modular diagram: total cell count and how many
/// of those cells carry the label 2.
struct Hook {
    int cells = 0;
    int twos = 0;

    friend bool operator==(const Hook&, const Hook&) = default;
};

/// The diagonal hooks of the 2-modular diagram of a partition with odd
/// parts, outermost first. cells is strictly decreasing, twos is strictly
/// decreasing while nonzero, cells_j > twos_j, and the labels add up to the
/// weight of the original partition.
class HookDecomposition {
public:
    explicit HookDecomposition(std::vector<Hook> hooks, long long expected_weight);

    const std::vector<Hook>& hooks() const noexcept { return hooks_; }
    long long weight() const noexcept;

    /// Reads the hooks as (cells_1, twos_1, cells_2, twos_2, ...), dropping a
    /// trailing zero; the result has strictly decreasing parts.
    Partition to_partition() const;

private:
    std::vector<Hook> hooks_;
};

/// Diagonal hooks of the 2-modular diagram of a nonempty partition with odd
/// parts: a part 2m+1 becomes a row of m cells labelled 2 followed by one
/// cell labelled 1.
HookDecomposition two_modular_hooks(const Partition& odd_parts);

/// Odd parts -> distinct parts, by reading the 2-modular diagram hook by
/// hook. Preserves weight; the largest output part is
/// (largest(input) - 1)/2 + length(input).
Partition sylvester(const Partition& odd_parts);

/// Inverse of sylvester: rebuilds the 2-modular diagram from the hook data
/// (an input of odd length is padded with a trailing zero).
Partition sylvester_inv(const Partition& distinct_parts);

/// Rank-shifting map: deletes the first column, then prepends a row of
/// length(input) + r. Needs rank(input) <= r + 1; on the empty partition it
/// is defined for r = 0 only. The result weighs weight(input) + r and has
/// rank >= r - 1.
Partition dyson(const Partition& p, int r);

/// Inverse of dyson: deletes the top row, adds 1 to every remaining part and
/// appends largest(input) - r - (length(input) - 1) ones. Needs a nonempty
/// input with rank(input) >= r - 1; the result may be empty.
Partition dyson_inv(const Partition& p, int r);

/// One application within an iterated chain: the shift r used and the
/// partition it produced.
struct DysonStep {
    int r = 0;
    Partition partition;

    friend bool operator==(const DysonStep&, const DysonStep&) = default;
};

/// Execution record of the iterated map, steps in application order.
struct DysonTrace {
    Partition initial;
    std::vector<DysonStep> steps;

    const Partition& result() const noexcept {
        return steps.empty() ? initial : steps.back().partition;
    }
};

/// Odd parts -> distinct parts by folding dyson over the parts from the
/// smallest up: start with the smallest part alone, then apply dyson with
/// r = each remaining part, largest last.
Partition iterated_dyson(const Partition& odd_parts);
DysonTrace iterated_dyson_trace(const Partition& odd_parts);

/// Inverse of iterated_dyson: repeatedly peel r = rank (rounded up to odd)
/// via dyson_inv until nothing remains; the peeled values, in order, are the
/// recovered odd parts.
Partition iterated_dyson_inv(const Partition& distinct_parts);
DysonTrace iterated_dyson_inv_trace(const Partition& distinct_parts);

/// Involution on rooted partitions whose parts are almost distinct but not
/// distinct (base distinct, root value occurring at least twice in total):
/// moves one copy of the root value between base and root block. Flips the
/// parity of root_size and preserves the part multiset.
RootedPartition tau(const RootedPartition& rp);

/// Rooted almost-distinct with odd root size -> rooted odd: sylvester_inv on
/// the base, conjugate of the root block (root (d, m) becomes (m, d)).
RootedPartition sigma(const RootedPartition& rp);

/// Inverse of sigma: sylvester on the base, root block conjugated back.
RootedPartition sigma_inv(const RootedPartition& rp);

/// Marks the part at the given 1-based position as root, together with the
/// equal parts before it: if position i holds value d and d occurs k times
/// among positions 1..i, the result has root (d, k) and those k copies
/// removed from the base. Ranges over each (value, count) designation
/// exactly once as the position sweeps the partition.
RootedPartition designate(const Partition& p, int position);

} // namespace eulerw
