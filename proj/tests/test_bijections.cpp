#include <set>
#include <utility>
#include <vector>

#include <doctest.h>

#include "eulerw/bijections.hpp"
#include "eulerw/partition.hpp"
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

} // namespace

TEST_CASE("hook decompositions match a literal grid walk") {
    for (int n = 1; n <= 25; ++n) {
        for (const Partition& p : enumerate_partitions(n, PartitionClass::Odd)) {
            HookDecomposition hd = two_modular_hooks(p);
            CHECK(hd.hooks() == oracle::grid_hooks(p.parts()));
            CHECK(hd.weight() == n);
            CHECK(sylvester(p) == hd.to_partition());
        }
    }
}

TEST_CASE("worked hook decompositions") {
    CHECK(two_modular_hooks(Partition({7, 7, 5, 5, 3, 1})).hooks() ==
          std::vector<Hook>{{9, 7}, {6, 4}, {2, 0}});
    CHECK(two_modular_hooks(Partition({5, 3})).hooks() ==
          std::vector<Hook>{{4, 3}, {1, 0}});
    CHECK(two_modular_hooks(Partition({5, 3})).to_partition() ==
          Partition({4, 3, 1}));
    CHECK(two_modular_hooks(Partition({3, 1})).hooks() ==
          std::vector<Hook>{{3, 1}});
    CHECK(two_modular_hooks(Partition({1})).hooks() == std::vector<Hook>{{1, 0}});
    CHECK(two_modular_hooks(Partition({1})).to_partition() == Partition({1}));

    CHECK(code_of([] { two_modular_hooks(Partition()); }) == Errc::EmptyInput);
    CHECK(code_of([] { two_modular_hooks(Partition({2})); }) ==
          Errc::EvenPartPresent);
}

TEST_CASE("hook decomposition validation") {
    CHECK(HookDecomposition({}, 0).to_partition() == Partition());

    // Label sum of a hook is cells + twos.
    CHECK_THROWS_AS(HookDecomposition({{2, 2}}, 4), Error);            // cells <= twos
    CHECK_THROWS_AS(HookDecomposition({{4, 2}, {4, 1}}, 11), Error);   // cells not decreasing
    CHECK_THROWS_AS(HookDecomposition({{5, 2}, {4, 2}}, 13), Error);   // twos not decreasing
    CHECK_THROWS_AS(HookDecomposition({{2, 1}}, 5), Error);            // wrong weight
    CHECK(code_of([] { HookDecomposition({{2, 1}}, 5); }) ==
          Errc::InternalInvariantViolation);
}

TEST_CASE("sylvester worked examples") {
    CHECK(sylvester(Partition({7, 7, 5, 5, 3, 1})) == Partition({9, 7, 6, 4, 2}));
    CHECK(sylvester(Partition({5, 3})) == Partition({4, 3, 1}));
    CHECK(sylvester(Partition({3, 1})) == Partition({3, 1}));
    CHECK(sylvester(Partition({1})) == Partition({1}));
    CHECK(sylvester(Partition()) == Partition());
    CHECK(sylvester_inv(Partition()) == Partition());
    CHECK(sylvester_inv(Partition({9, 7, 6, 4, 2})) == Partition({7, 7, 5, 5, 3, 1}));

    CHECK(code_of([] { sylvester(Partition({4, 2})); }) == Errc::EvenPartPresent);
    CHECK(code_of([] { sylvester_inv(Partition({3, 3, 1})); }) == Errc::RepeatedPart);
}

TEST_CASE("sylvester is a statistic-preserving bijection onto distinct parts") {
    for (int n = 0; n <= 30; ++n) {
        std::set<Partition> images;
        for (const Partition& p : enumerate_partitions(n, PartitionClass::Odd)) {
            Partition mu = sylvester(p);
            CHECK(mu.weight() == n);
            CHECK(mu.has_distinct_parts());
            CHECK(sylvester_inv(mu) == p);
            if (!p.empty())
                CHECK(mu.largest() == (p.largest() - 1) / 2 + p.length());
            images.insert(mu);
        }
        std::vector<Partition> distinct =
            enumerate_partitions(n, PartitionClass::Distinct);
        CHECK(images == std::set<Partition>(distinct.begin(), distinct.end()));

        for (const Partition& mu : distinct) {
            Partition p = sylvester_inv(mu);
            CHECK(p.has_odd_parts());
            CHECK(sylvester(p) == mu);
        }
    }
}

TEST_CASE("dyson worked examples") {
    CHECK(dyson(Partition({5, 4, 3, 3, 2, 1}), 1) == Partition({7, 4, 3, 2, 2, 1}));
    CHECK(dyson(Partition({1}), 3) == Partition({4}));
    CHECK(dyson(Partition({2, 2}), -1) == Partition({1, 1, 1}));
    CHECK(dyson(Partition({1, 1}), -2) == Partition());
    CHECK(dyson(Partition(), 0) == Partition());
    CHECK(dyson_inv(Partition({7, 3, 2}), 5) == Partition({4, 3}));
    CHECK(dyson_inv(Partition({3}), 3) == Partition());

    CHECK(code_of([] { dyson(Partition(), 1); }) == Errc::EmptyInput);
    CHECK(code_of([] { dyson(Partition({5}), 0); }) == Errc::RankTooLarge);
    CHECK(code_of([] { dyson_inv(Partition(), 0); }) == Errc::EmptyInput);
    CHECK(code_of([] { dyson_inv(Partition({2, 2}), 3); }) == Errc::RankTooSmall);
}

TEST_CASE("dyson restricts to a bijection between rank-bounded sets") {
    for (int n = 1; n <= 12; ++n) {
        for (int r = -3; r <= 4; ++r) {
            if (n + r < 0)
                continue;

            std::set<Partition> images;
            int domain_size = 0;
            for (const Partition& p : enumerate_partitions(n, PartitionClass::All)) {
                if (p.rank() > r + 1) {
                    CHECK_THROWS_AS(dyson(p, r), Error);
                    continue;
                }
                Partition mu = dyson(p, r);
                CHECK(mu.weight() == n + r);
                // The image is empty exactly for a column of ones shifted away.
                CHECK(mu.empty() == (p.largest() <= 1 && r == -n));
                if (!mu.empty()) {
                    CHECK(mu.rank() >= r - 1);
                    CHECK(dyson_inv(mu, r) == p);
                }
                images.insert(mu);
                ++domain_size;
            }
            CHECK(static_cast<int>(images.size()) == domain_size);

            std::set<Partition> targets;
            for (const Partition& mu : enumerate_partitions(n + r, PartitionClass::All)) {
                if (mu.empty())
                    continue;
                if (mu.rank() < r - 1) {
                    CHECK_THROWS_AS(dyson_inv(mu, r), Error);
                    continue;
                }
                targets.insert(mu);
                Partition p = dyson_inv(mu, r);
                CHECK(p.weight() == n);
                CHECK(p.rank() <= r + 1);
                CHECK(dyson(p, r) == mu);
            }
            images.erase(Partition());
            CHECK(images == targets);
        }
    }
}

TEST_CASE("iterated dyson reproduces the worked chain") {
    DysonTrace trace = iterated_dyson_trace(Partition({5, 5, 3, 3, 1}));
    CHECK(trace.initial == Partition({1}));
    REQUIRE(trace.steps.size() == 4);
    CHECK(trace.steps[0] == DysonStep{3, Partition({4})});
    CHECK(trace.steps[1] == DysonStep{3, Partition({4, 3})});
    CHECK(trace.steps[2] == DysonStep{5, Partition({7, 3, 2})});
    CHECK(trace.steps[3] == DysonStep{5, Partition({8, 6, 2, 1})});
    CHECK(trace.result() == Partition({8, 6, 2, 1}));
    CHECK(iterated_dyson(Partition({5, 5, 3, 3, 1})) == Partition({8, 6, 2, 1}));

    DysonTrace back = iterated_dyson_inv_trace(Partition({8, 6, 2, 1}));
    CHECK(back.initial == Partition({8, 6, 2, 1}));
    REQUIRE(back.steps.size() == 5);
    CHECK(back.steps[0] == DysonStep{5, Partition({7, 3, 2})});
    CHECK(back.steps[1] == DysonStep{5, Partition({4, 3})});
    CHECK(back.steps[2] == DysonStep{3, Partition({4})});
    CHECK(back.steps[3] == DysonStep{3, Partition({1})});
    CHECK(back.steps[4] == DysonStep{1, Partition()});
    CHECK(iterated_dyson_inv(Partition({8, 6, 2, 1})) == Partition({5, 5, 3, 3, 1}));
}

TEST_CASE("iterated dyson small cases") {
    CHECK(iterated_dyson(Partition({3, 1})) == Partition({4}));
    CHECK(iterated_dyson(Partition({1, 1, 1, 1})) == Partition({3, 1}));
    CHECK(iterated_dyson(Partition({9})) == Partition({9}));
    CHECK(iterated_dyson(Partition()) == Partition());
    CHECK(iterated_dyson_inv(Partition()) == Partition());
    CHECK(iterated_dyson_inv(Partition({4})) == Partition({3, 1}));

    CHECK(code_of([] { iterated_dyson(Partition({2})); }) == Errc::EvenPartPresent);
    CHECK(code_of([] { iterated_dyson_inv(Partition({2, 2})); }) == Errc::RepeatedPart);
}

TEST_CASE("iterated dyson transports the largest part to the adjusted rank") {
    for (int n = 0; n <= 30; ++n) {
        std::set<Partition> images;
        for (const Partition& p : enumerate_partitions(n, PartitionClass::Odd)) {
            Partition mu = iterated_dyson(p);
            CHECK(mu.weight() == n);
            CHECK(mu.has_distinct_parts());
            CHECK(iterated_dyson_inv(mu) == p);
            if (!p.empty()) {
                int r = mu.rank();
                CHECK(p.largest() == r + (r % 2 == 0 ? 1 : 0));
            }
            images.insert(mu);
        }
        std::vector<Partition> distinct =
            enumerate_partitions(n, PartitionClass::Distinct);
        CHECK(images == std::set<Partition>(distinct.begin(), distinct.end()));

        for (const Partition& mu : distinct)
            CHECK(iterated_dyson(iterated_dyson_inv(mu)) == mu);
    }
}

TEST_CASE("tau pairs the weight-four domain into three swaps") {
    RootedPartition a(Partition({2}), 2, 1);   // 2~+2
    RootedPartition b(Partition(), 2, 2);      // 2~+2~
    RootedPartition c(Partition({2, 1}), 1, 1); // 2+1~+1
    RootedPartition d(Partition({2}), 1, 2);   // 2+1~+1~
    RootedPartition e(Partition({1}), 1, 3);   // 1~+1~+1~+1
    RootedPartition f(Partition(), 1, 4);      // 1~+1~+1~+1~
    CHECK(tau(a) == b);
    CHECK(tau(b) == a);
    CHECK(tau(c) == d);
    CHECK(tau(d) == c);
    CHECK(tau(e) == f);
    CHECK(tau(f) == e);
}

TEST_CASE("tau is a parity-flipping involution on its domain") {
    for (int n = 1; n <= 18; ++n) {
        for (const RootedPartition& rp :
             enumerate_rooted(n, PartitionClass::RootedAlmostDistinct)) {
            if (rp.multiplicity(rp.root_part()) >= 2) {
                RootedPartition img = tau(rp);
                CHECK(matches(img, PartitionClass::RootedAlmostDistinct));
                CHECK(img.all_parts() == rp.all_parts());
                CHECK(img.root_part() == rp.root_part());
                CHECK(img.root_size() % 2 != rp.root_size() % 2);
                CHECK(tau(img) == rp);
            } else {
                // Fixed points would break the pairing; tau refuses them.
                CHECK(rp.has_distinct_parts());
                CHECK(code_of([&] { tau(rp); }) == Errc::NotInDomain);
            }
        }
    }
    CHECK(code_of([] { tau(RootedPartition(Partition({1, 1}), 1, 1)); }) ==
          Errc::NotInDomain);
}

TEST_CASE("sigma sends the six weight-four odd-root members to rooted odd") {
    std::vector<RootedPartition> sources =
        enumerate_rooted(4, PartitionClass::RootedAlmostDistinctOddRoot);
    REQUIRE(sources.size() == 6);
    const std::vector<std::pair<std::string, std::string>> table = {
        {"4~", "1~+1~+1~+1~"},        {"3~+1", "1~+1~+1~+1"},
        {"3+1~", "1~+1+1+1"},         {"2~+2", "1~+1~+1+1"},
        {"2+1~+1", "3+1~"},           {"1~+1~+1~+1", "3~+1"},
    };
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(to_string(sources[i]) == table[i].first);
        CHECK(to_string(sigma(sources[i])) == table[i].second);
        CHECK(sigma_inv(sigma(sources[i])) == sources[i]);
    }
}

TEST_CASE("sigma is a bijection onto rooted odd partitions") {
    for (int n = 1; n <= 18; ++n) {
        std::set<RootedPartition> images;
        for (const RootedPartition& rp :
             enumerate_rooted(n, PartitionClass::RootedAlmostDistinctOddRoot)) {
            RootedPartition img = sigma(rp);
            CHECK(matches(img, PartitionClass::RootedOdd));
            CHECK(img.weight() == n);
            CHECK(sigma_inv(img) == rp);
            images.insert(img);
        }
        std::vector<RootedPartition> odd =
            enumerate_rooted(n, PartitionClass::RootedOdd);
        CHECK(images == std::set<RootedPartition>(odd.begin(), odd.end()));
        for (const RootedPartition& ro : odd)
            CHECK(sigma(sigma_inv(ro)) == ro);
    }
}

TEST_CASE("sigma rejects inputs outside its domain") {
    CHECK(code_of([] { sigma(RootedPartition(Partition(), 2, 2)); }) ==
          Errc::NotInDomain); // even root size
    CHECK(code_of([] { sigma(RootedPartition(Partition({1, 1}), 2, 1)); }) ==
          Errc::NotInDomain); // repeated base part
    CHECK(code_of([] { sigma_inv(RootedPartition(Partition({2}), 1, 1)); }) ==
          Errc::NotInDomain); // even base part
    CHECK(code_of([] { sigma_inv(RootedPartition(Partition({3}), 2, 1)); }) ==
          Errc::NotInDomain); // even root value
}

TEST_CASE("designation marks a position and its equal predecessors") {
    Partition p({2, 1, 1});
    CHECK(to_string(designate(p, 1)) == "2~+1+1");
    CHECK(to_string(designate(p, 2)) == "2+1~+1");
    CHECK(to_string(designate(p, 3)) == "2+1~+1~");
    CHECK(code_of([&] { designate(p, 0); }) == Errc::IndexOutOfRange);
    CHECK(code_of([&] { designate(p, 4); }) == Errc::IndexOutOfRange);
    CHECK(code_of([] { designate(Partition(), 1); }) == Errc::IndexOutOfRange);
}

TEST_CASE("designation sweeps each plain class onto the matching rooted class") {
    const std::pair<PartitionClass, PartitionClass> lanes[] = {
        {PartitionClass::All, PartitionClass::RootedAll},
        {PartitionClass::Distinct, PartitionClass::RootedDistinct},
        {PartitionClass::Odd, PartitionClass::RootedOdd},
    };
    for (auto [plain, rooted] : lanes) {
        for (int n = 1; n <= 12; ++n) {
            std::set<RootedPartition> images;
            long long positions = 0;
            for (const Partition& p : enumerate_partitions(n, plain)) {
                for (int i = 1; i <= p.length(); ++i) {
                    images.insert(designate(p, i));
                    ++positions;
                }
            }
            CHECK(static_cast<long long>(images.size()) == positions);
            std::vector<RootedPartition> members = enumerate_rooted(n, rooted);
            CHECK(images ==
                  std::set<RootedPartition>(members.begin(), members.end()));
        }
    }
}
