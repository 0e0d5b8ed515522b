#include "eulerw/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace eulerw {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidPartition: return "InvalidPartition";
        case Errc::EvenPartPresent: return "EvenPartPresent";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::RepeatedPart: return "RepeatedPart";
        case Errc::RankTooLarge: return "RankTooLarge";
        case Errc::RankTooSmall: return "RankTooSmall";
        case Errc::NotInDomain: return "NotInDomain";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::UnknownIdentity: return "UnknownIdentity";
        case Errc::UnknownBuilder: return "UnknownBuilder";
        case Errc::NonUnitReciprocal: return "NonUnitReciprocal";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::NonPositiveExponent: return "NonPositiveExponent";
        case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "UnknownError";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            fail(Errc::InvalidPartition, "parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            fail(Errc::InvalidPartition, "parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

long long Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::multiplicity(int d) const {
    // parts_ is sorted descending
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), d, std::greater<int>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), d, std::greater<int>());
    return static_cast<int>(hi - lo);
}

int Partition::parts_at_least(int d) const {
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), d, std::greater<int>());
    return static_cast<int>(hi - parts_.begin());
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(largest()));
    for (int i = 1; i <= largest(); ++i)
        out.push_back(parts_at_least(i));
    return Partition(std::move(out));
}

bool Partition::has_distinct_parts() const noexcept {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::has_odd_parts() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

Partition Partition::with_part_removed(int d) const {
    auto pos = std::lower_bound(parts_.begin(), parts_.end(), d, std::greater<int>());
    if (pos == parts_.end() || *pos != d)
        fail(Errc::NotInDomain, "part " + std::to_string(d) + " not present");
    std::vector<int> out(parts_);
    out.erase(out.begin() + (pos - parts_.begin()));
    return Partition(std::move(out));
}

Partition Partition::with_part_inserted(int d) const {
    if (d < 1)
        fail(Errc::InvalidPartition, "parts must be positive");
    std::vector<int> out(parts_);
    auto pos = std::lower_bound(out.begin(), out.end(), d, std::greater<int>());
    out.insert(pos, d);
    return Partition(std::move(out));
}

bool desc_lex_before(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::string to_string(const Partition& p) {
    if (p.empty())
        return "()";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    if (text.empty() || text == "()")
        return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail(Errc::InvalidPartition, "malformed part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

RootedPartition::RootedPartition(Partition base, int root_part, int root_size)
    : base_(std::move(base)), root_part_(root_part), root_size_(root_size) {
    if (root_part_ < 1)
        fail(Errc::InvalidPartition, "root part must be positive");
    if (root_size_ < 1)
        fail(Errc::InvalidPartition, "root size must be at least 1");
}

long long RootedPartition::weight() const noexcept {
    return base_.weight() + static_cast<long long>(root_part_) * root_size_;
}

std::vector<int> RootedPartition::all_parts() const {
    std::vector<int> out(base_.parts());
    auto pos = std::lower_bound(out.begin(), out.end(), root_part_, std::greater<int>());
    out.insert(pos, static_cast<std::size_t>(root_size_), root_part_);
    return out;
}

int RootedPartition::multiplicity(int d) const {
    return base_.multiplicity(d) + (d == root_part_ ? root_size_ : 0);
}

bool RootedPartition::has_distinct_parts() const {
    return root_size_ == 1 && base_.has_distinct_parts() && !base_.contains(root_part_);
}

bool RootedPartition::has_odd_parts() const {
    return root_part_ % 2 == 1 && base_.has_odd_parts();
}

std::string to_string(const RootedPartition& rp) {
    // Equal values print root copies first: 2+1~+1 for base (2,1), root (1,1).
    std::string out;
    auto append = [&out](int value, bool marked) {
        if (!out.empty())
            out += '+';
        out += std::to_string(value);
        if (marked)
            out += '~';
    };
    const auto& base = rp.base().parts();
    std::size_t i = 0;
    bool root_done = false;
    while (i < base.size() || !root_done) {
        if (!root_done && (i == base.size() || rp.root_part() >= base[i])) {
            for (int k = 0; k < rp.root_size(); ++k)
                append(rp.root_part(), true);
            root_done = true;
        } else {
            append(base[i], false);
            ++i;
        }
    }
    return out;
}

bool is_rooted_class(PartitionClass cls) noexcept {
    switch (cls) {
        case PartitionClass::All:
        case PartitionClass::Distinct:
        case PartitionClass::Odd:
            return false;
        default:
            return true;
    }
}

const char* class_name(PartitionClass cls) noexcept {
    switch (cls) {
        case PartitionClass::All: return "all";
        case PartitionClass::Distinct: return "distinct";
        case PartitionClass::Odd: return "odd";
        case PartitionClass::RootedAll: return "rooted-all";
        case PartitionClass::RootedDistinct: return "rooted-distinct";
        case PartitionClass::RootedOdd: return "rooted-odd";
        case PartitionClass::RootedAlmostDistinct: return "rooted-almost-distinct";
        case PartitionClass::RootedAlmostDistinctEvenRoot:
            return "rooted-almost-distinct-even-root";
        case PartitionClass::RootedAlmostDistinctOddRoot:
            return "rooted-almost-distinct-odd-root";
    }
    return "?";
}

std::optional<PartitionClass> class_from_name(std::string_view name) {
    static constexpr PartitionClass kAll[] = {
        PartitionClass::All,
        PartitionClass::Distinct,
        PartitionClass::Odd,
        PartitionClass::RootedAll,
        PartitionClass::RootedDistinct,
        PartitionClass::RootedOdd,
        PartitionClass::RootedAlmostDistinct,
        PartitionClass::RootedAlmostDistinctEvenRoot,
        PartitionClass::RootedAlmostDistinctOddRoot,
    };
    for (PartitionClass cls : kAll)
        if (name == class_name(cls))
            return cls;
    return std::nullopt;
}

bool matches(const Partition& p, PartitionClass cls) {
    switch (cls) {
        case PartitionClass::All: return true;
        case PartitionClass::Distinct: return p.has_distinct_parts();
        case PartitionClass::Odd: return p.has_odd_parts();
        default:
            fail(Errc::NotInDomain, "plain partition checked against a rooted class");
    }
}

bool matches(const RootedPartition& rp, PartitionClass cls) {
    switch (cls) {
        case PartitionClass::RootedAll:
            return true;
        case PartitionClass::RootedDistinct:
            return rp.has_distinct_parts();
        case PartitionClass::RootedOdd:
            return rp.has_odd_parts();
        case PartitionClass::RootedAlmostDistinct:
            return rp.has_almost_distinct_parts();
        case PartitionClass::RootedAlmostDistinctEvenRoot:
            return rp.has_almost_distinct_parts() && rp.root_size() % 2 == 0;
        case PartitionClass::RootedAlmostDistinctOddRoot:
            return rp.has_almost_distinct_parts() && rp.root_size() % 2 == 1;
        default:
            fail(Errc::NotInDomain, "rooted partition checked against a plain class");
    }
}

namespace {

enum class StepRule { Any, StrictDecrease, OddOnly };

/* Recursive descent emitting parts in decreasing lexicographic order: at each
   level the next part runs from the largest admissible value down to 1. */
void emit_parts(long long rem, long long max_part, StepRule rule,
                std::vector<int>& acc,
                const std::function<void(const Partition&)>& visit) {
    if (rem == 0) {
        visit(Partition(acc));
        return;
    }
    long long start = std::min<long long>(rem, max_part);
    if (rule == StepRule::OddOnly && start % 2 == 0)
        --start;
    for (long long k = start; k >= 1; rule == StepRule::OddOnly ? k -= 2 : --k) {
        acc.push_back(static_cast<int>(k));
        emit_parts(rem - k, rule == StepRule::StrictDecrease ? k - 1 : k, rule, acc, visit);
        acc.pop_back();
    }
}

} // namespace

void for_each_partition(long long n, PartitionClass cls,
                        const std::function<void(const Partition&)>& visit) {
    if (n < 0)
        fail(Errc::IndexOutOfRange, "weight must be nonnegative");
    if (is_rooted_class(cls))
        fail(Errc::NotInDomain, "expected a plain partition class");
    StepRule rule = cls == PartitionClass::Distinct ? StepRule::StrictDecrease
                  : cls == PartitionClass::Odd      ? StepRule::OddOnly
                                                    : StepRule::Any;
    std::vector<int> acc;
    emit_parts(n, n, rule, acc, visit);
}

void for_each_rooted(long long n, PartitionClass cls,
                     const std::function<void(const RootedPartition&)>& visit) {
    if (n < 0)
        fail(Errc::IndexOutOfRange, "weight must be nonnegative");
    if (!is_rooted_class(cls))
        fail(Errc::NotInDomain, "expected a rooted partition class");

    const bool odd_root_part = cls == PartitionClass::RootedOdd;
    PartitionClass base_cls = cls == PartitionClass::RootedAll ? PartitionClass::All
                            : cls == PartitionClass::RootedOdd ? PartitionClass::Odd
                                                               : PartitionClass::Distinct;

    for (long long d = 1; d <= n; ++d) {
        if (odd_root_part && d % 2 == 0)
            continue;
        for (long long m = 1; d * m <= n; ++m) {
            if (cls == PartitionClass::RootedDistinct && m > 1)
                break;
            if (cls == PartitionClass::RootedAlmostDistinctEvenRoot && m % 2 == 1)
                continue;
            if (cls == PartitionClass::RootedAlmostDistinctOddRoot && m % 2 == 0)
                continue;
            for_each_partition(n - d * m, base_cls, [&](const Partition& base) {
                if (cls == PartitionClass::RootedDistinct && base.contains(static_cast<int>(d)))
                    return;
                visit(RootedPartition(base, static_cast<int>(d), static_cast<int>(m)));
            });
        }
    }
}

std::vector<Partition> enumerate_partitions(long long n, PartitionClass cls) {
    std::vector<Partition> out;
    for_each_partition(n, cls, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<RootedPartition> enumerate_rooted(long long n, PartitionClass cls) {
    std::vector<RootedPartition> out;
    for_each_rooted(n, cls, [&](const RootedPartition& rp) { out.push_back(rp); });

    std::vector<std::vector<int>> keys;
    keys.reserve(out.size());
    for (const auto& rp : out)
        keys.push_back(rp.all_parts());
    std::vector<std::size_t> idx(out.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b])
            return std::lexicographical_compare(keys[b].begin(), keys[b].end(),
                                                keys[a].begin(), keys[a].end());
        if (out[a].root_part() != out[b].root_part())
            return out[a].root_part() > out[b].root_part();
        return out[a].root_size() < out[b].root_size();
    });

    std::vector<RootedPartition> sorted;
    sorted.reserve(out.size());
    for (std::size_t i : idx)
        sorted.push_back(std::move(out[i]));
    return sorted;
}

long long count(long long n, PartitionClass cls) {
    long long total = 0;
    if (is_rooted_class(cls))
        for_each_rooted(n, cls, [&](const RootedPartition&) { ++total; });
    else
        for_each_partition(n, cls, [&](const Partition&) { ++total; });
    return total;
}

} // namespace eulerw
