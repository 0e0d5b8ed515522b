#include "eulerw/bijections.hpp"

#include <algorithm>
#include <string>

namespace eulerw {

HookDecomposition::HookDecomposition(std::vector<Hook> hooks, long long expected_weight)
    : hooks_(std::move(hooks)) {
    long long total = 0;
    for (std::size_t j = 0; j < hooks_.size(); ++j) {
        const Hook& h = hooks_[j];
        if (h.cells <= h.twos || h.twos < 0)
            fail(Errc::InternalInvariantViolation, "hook must have more cells than twos");
        if (j > 0) {
            if (hooks_[j - 1].cells <= h.cells)
                fail(Errc::InternalInvariantViolation, "hook cell counts must strictly decrease");
            if (hooks_[j - 1].twos <= h.twos)
                fail(Errc::InternalInvariantViolation, "hook two-counts must strictly decrease");
        }
        total += h.cells + h.twos;
    }
    if (total != expected_weight)
        fail(Errc::InternalInvariantViolation, "hook labels do not add up to the weight");
}

long long HookDecomposition::weight() const noexcept {
    long long total = 0;
    for (const Hook& h : hooks_)
        total += h.cells + h.twos;
    return total;
}

Partition HookDecomposition::to_partition() const {
    std::vector<int> parts;
    parts.reserve(hooks_.size() * 2);
    for (const Hook& h : hooks_) {
        parts.push_back(h.cells);
        parts.push_back(h.twos);
    }
    if (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

HookDecomposition two_modular_hooks(const Partition& lam) {
    if (lam.empty())
        fail(Errc::EmptyInput, "hook decomposition needs a nonempty partition");
    if (!lam.has_odd_parts())
        fail(Errc::EvenPartPresent, "2-modular rows need odd parts");

    /* Row i of the diagram has c_i = (lam_i + 1)/2 cells, all labelled 2
       except the last one. Hook j takes row j from column j rightward plus
       column j below row j. Cell counts come straight from the shape c and
       its conjugate; a label is 2 unless the cell ends its row, so the arm
       contributes c_j - j twos and the leg one 2 for every row longer
       than j. */
    std::vector<int> c;
    c.reserve(lam.parts().size());
    for (int part : lam.parts())
        c.push_back((part + 1) / 2);
    Partition shape{std::vector<int>(c)};

    std::vector<Hook> hooks;
    for (int j = 1; j <= static_cast<int>(c.size()) && c[j - 1] >= j; ++j) {
        int col = shape.parts_at_least(j);      // rows reaching column j
        int col_next = shape.parts_at_least(j + 1);
        Hook h;
        h.cells = (c[j - 1] - j + 1) + (col - j);
        h.twos = (c[j - 1] - j) + std::max(col_next - j, 0);
        hooks.push_back(h);
    }
    return HookDecomposition(std::move(hooks), lam.weight());
}

Partition sylvester(const Partition& lam) {
    if (lam.empty())
        return Partition();
    Partition mu = two_modular_hooks(lam).to_partition();
    if (!mu.has_distinct_parts() || mu.weight() != lam.weight())
        fail(Errc::InternalInvariantViolation, "hook reading must give distinct parts");
    return mu;
}

Partition sylvester_inv(const Partition& mu) {
    if (mu.empty())
        return Partition();
    if (!mu.has_distinct_parts())
        fail(Errc::RepeatedPart, "inverse needs distinct parts");

    std::vector<int> vals(mu.parts());
    if (vals.size() % 2 == 1)
        vals.push_back(0);

    /* Rebuild the 2-modular shape from the innermost hook outward. Wrapping
       a hook around a sub-diagram with `rows` rows places an arm of length
       a = twos - rows + 1 on top (its own last cell is a 1, every leg cell
       beside an existing row is a 2) and a leg of cells - a single cells
       down the first column. */
    std::vector<int> rows;
    for (std::size_t j = vals.size() / 2; j >= 1; --j) {
        int cells = vals[2 * j - 2];
        int twos = vals[2 * j - 1];
        int arm = twos - static_cast<int>(rows.size()) + 1;
        int leg = cells - arm;
        if (arm < 1 || leg < static_cast<int>(rows.size()) ||
            (!rows.empty() && arm < rows.front() + 1))
            fail(Errc::InternalInvariantViolation, "hook data does not nest");
        std::vector<int> next;
        next.reserve(static_cast<std::size_t>(leg) + 1);
        next.push_back(arm);
        for (int row : rows)
            next.push_back(row + 1);
        next.resize(static_cast<std::size_t>(leg) + 1, 1);
        rows = std::move(next);
    }

    for (int& row : rows)
        row = 2 * row - 1;
    Partition lam{std::move(rows)};
    if (lam.weight() != mu.weight())
        fail(Errc::InternalInvariantViolation, "rebuilt diagram has wrong weight");
    return lam;
}

Partition dyson(const Partition& p, int r) {
    if (p.empty()) {
        if (r == 0)
            return Partition();
        fail(Errc::EmptyInput, "map on the empty partition is defined for r = 0 only");
    }
    if (p.rank() > r + 1)
        fail(Errc::RankTooLarge, "rank " + std::to_string(p.rank()) +
                                     " exceeds r + 1 = " + std::to_string(r + 1));

    std::vector<int> out;
    out.reserve(p.parts().size() + 1);
    if (p.length() + r > 0)
        out.push_back(p.length() + r);
    for (int part : p.parts())
        if (part >= 2)
            out.push_back(part - 1);
    return Partition(std::move(out));
}

Partition dyson_inv(const Partition& p, int r) {
    if (p.empty())
        fail(Errc::EmptyInput, "inverse map needs a nonempty partition");
    if (p.rank() < r - 1)
        fail(Errc::RankTooSmall, "rank " + std::to_string(p.rank()) +
                                     " is below r - 1 = " + std::to_string(r - 1));

    std::vector<int> out;
    out.reserve(p.parts().size());
    for (std::size_t i = 1; i < p.parts().size(); ++i)
        out.push_back(p.parts()[i] + 1);
    int ones = p.largest() - r - (p.length() - 1);
    out.insert(out.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(out));
}

DysonTrace iterated_dyson_trace(const Partition& lam) {
    if (!lam.has_odd_parts())
        fail(Errc::EvenPartPresent, "iterated map needs odd parts");

    DysonTrace trace;
    if (lam.empty())
        return trace;

    trace.initial = Partition({lam.smallest()});
    Partition cur = trace.initial;
    for (int i = lam.length() - 2; i >= 0; --i) {
        int r = lam.parts()[i];
        if (cur.rank() > r + 1)
            fail(Errc::InternalInvariantViolation,
                 "intermediate rank exceeds the next part + 1");
        cur = dyson(cur, r);
        trace.steps.push_back({r, cur});
    }
    if (!cur.has_distinct_parts() || cur.weight() != lam.weight())
        fail(Errc::InternalInvariantViolation, "iterated map must give distinct parts");
    return trace;
}

Partition iterated_dyson(const Partition& lam) {
    return iterated_dyson_trace(lam).result();
}

DysonTrace iterated_dyson_inv_trace(const Partition& mu) {
    if (!mu.has_distinct_parts())
        fail(Errc::RepeatedPart, "inverse needs distinct parts");

    DysonTrace trace;
    trace.initial = mu;
    Partition cur = mu;
    std::vector<int> peeled;
    while (!cur.empty()) {
        int r = cur.rank();
        if (r < 0)
            fail(Errc::InternalInvariantViolation, "distinct parts cannot have negative rank");
        int part = r % 2 == 1 ? r : r + 1;
        if (!peeled.empty() && part > peeled.back())
            fail(Errc::InternalInvariantViolation, "peeled parts must weakly decrease");
        cur = dyson_inv(cur, part);
        peeled.push_back(part);
        trace.steps.push_back({part, cur});
    }
    Partition lam{std::move(peeled)};
    if (lam.weight() != mu.weight())
        fail(Errc::InternalInvariantViolation, "peeled parts have wrong weight");
    return trace;
}

Partition iterated_dyson_inv(const Partition& mu) {
    DysonTrace trace = iterated_dyson_inv_trace(mu);
    std::vector<int> parts;
    parts.reserve(trace.steps.size());
    for (const DysonStep& step : trace.steps)
        parts.push_back(step.r);
    return Partition(std::move(parts));
}

RootedPartition tau(const RootedPartition& rp) {
    if (!rp.has_almost_distinct_parts())
        fail(Errc::NotInDomain, "base must have distinct parts");
    if (rp.multiplicity(rp.root_part()) < 2)
        fail(Errc::NotInDomain, "root value must occur at least twice in total");

    int d = rp.root_part();
    if (rp.base().contains(d))
        return RootedPartition(rp.base().with_part_removed(d), d, rp.root_size() + 1);
    return RootedPartition(rp.base().with_part_inserted(d), d, rp.root_size() - 1);
}

RootedPartition sigma(const RootedPartition& rp) {
    if (!rp.has_almost_distinct_parts())
        fail(Errc::NotInDomain, "base must have distinct parts");
    if (rp.root_size() % 2 == 0)
        fail(Errc::NotInDomain, "root size must be odd");
    RootedPartition out(sylvester_inv(rp.base()), rp.root_size(), rp.root_part());
    if (!out.has_odd_parts())
        fail(Errc::InternalInvariantViolation, "image must have odd parts");
    return out;
}

RootedPartition sigma_inv(const RootedPartition& rp) {
    if (!rp.has_odd_parts())
        fail(Errc::NotInDomain, "needs odd parts throughout");
    RootedPartition out(sylvester(rp.base()), rp.root_size(), rp.root_part());
    if (!out.has_almost_distinct_parts() || out.root_size() % 2 == 0)
        fail(Errc::InternalInvariantViolation,
             "image must be almost distinct with odd root size");
    return out;
}

RootedPartition designate(const Partition& p, int position) {
    if (position < 1 || position > p.length())
        fail(Errc::IndexOutOfRange, "position " + std::to_string(position) +
                                        " not in 1.." + std::to_string(p.length()));
    int d = p.parts()[static_cast<std::size_t>(position) - 1];
    int copies = 0;
    for (int i = 0; i < position; ++i)
        if (p.parts()[static_cast<std::size_t>(i)] == d)
            ++copies;

    std::vector<int> base;
    base.reserve(p.parts().size() - static_cast<std::size_t>(copies));
    int skip = copies;
    for (int part : p.parts()) {
        if (part == d && skip > 0) {
            --skip;
            continue;
        }
        base.push_back(part);
    }
    return RootedPartition(Partition(std::move(base)), d, copies);
}

} // namespace eulerw
