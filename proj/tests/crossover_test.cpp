#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "random_support.hpp"
#include "xover/crossover.hpp"

namespace xover {
namespace {

using testing::random_genome;
using testing::random_population;

// Every non-decreasing cut tuple (k_1, ..., k_n) with 0 <= k_i <= length.
void for_each_cut_vector(std::size_t length, std::size_t n, const std::function<void(const CutVector&)>& visit)
{
    std::vector<std::size_t> cuts(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t lo) {
        if (i == n) {
            visit(CutVector(cuts));
            return;
        }
        for (std::size_t k = lo; k <= length; ++k) {
            cuts[i] = k;
            rec(i + 1, k);
        }
    };
    rec(0, 0);
}

std::set<std::pair<Genome, Genome>> children_by_cuts(const Genome& x, const Genome& y, std::size_t n)
{
    std::set<std::pair<Genome, Genome>> out;
    for_each_cut_vector(x.length(), n, [&](const CutVector& cuts) { out.insert(crossover_apply(x, y, cuts)); });
    return out;
}

Population pool_by_cuts(const Population& p, std::size_t n)
{
    Population out = p;
    for (const auto& x : p) {
        for (const auto& y : p) {
            for (const auto& [a, b] : children_by_cuts(x, y, n)) {
                out.insert(a);
                out.insert(b);
            }
        }
    }
    return out;
}

TEST(CrossoverApply, WorkedExamples)
{
    const auto [a, b] = crossover_apply(Genome::parse("010001"), Genome::parse("101100"), CutVector({1, 2, 3, 5}));
    EXPECT_EQ(a.to_string(), "000101");
    EXPECT_EQ(b.to_string(), "111000");

    const auto [c, d] = crossover_apply(Genome::parse("000000"), Genome::parse("111111"), CutVector({1, 2, 3, 4}));
    EXPECT_EQ(c.to_string(), "010100");
    EXPECT_EQ(d.to_string(), "101011");
}

TEST(CrossoverApply, SelfCrossIsIdentity)
{
    const auto x = Genome::parse("010001");
    for_each_cut_vector(6, 3, [&](const CutVector& cuts) {
        const auto [a, b] = crossover_apply(x, x, cuts);
        EXPECT_EQ(a, x);
        EXPECT_EQ(b, x);
    });
}

TEST(CrossoverApply, SwappingParentsSwapsChildren)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_genome(rng, 7);
        const auto y = random_genome(rng, 7);
        const CutVector cuts({testing::random_in(rng, 0, 2), testing::random_in(rng, 3, 5), 7});
        const auto [a, b] = crossover_apply(x, y, cuts);
        const auto [c, d] = crossover_apply(y, x, cuts);
        EXPECT_EQ(a, d);
        EXPECT_EQ(b, c);
    }
}

TEST(CrossoverApply, RejectsBadInput)
{
    EXPECT_THROW(CutVector({3, 1}), std::invalid_argument);
    EXPECT_THROW(crossover_apply(Genome::parse("0101"), Genome::parse("1010"), CutVector({1, 5})),
                 std::invalid_argument);
    EXPECT_THROW(crossover_apply(Genome::parse("0101"), Genome::parse("101"), CutVector({1})), std::invalid_argument);
}

TEST(InheritanceMask, WordsAndAlternations)
{
    const auto m = InheritanceMask::parse("aabbba");
    EXPECT_EQ(m.word(), "aabbba");
    EXPECT_EQ(m.alternations(), 2U);
    EXPECT_EQ(InheritanceMask::from_cuts(CutVector({2, 5}), 6), m);
    EXPECT_THROW(InheritanceMask::parse("abc"), std::invalid_argument);
    EXPECT_EQ(recombine(Genome::parse("000000"), Genome::parse("111111"), m).to_string(), "001110");
}

TEST(EnumerateMasks, SmallCases)
{
    std::vector<std::string> words;
    for (const auto& m : enumerate_masks(3, 1)) {
        words.push_back(m.word());
    }
    std::ranges::sort(words);
    EXPECT_EQ(words, (std::vector<std::string>{"aaa", "aab", "abb", "baa", "bba", "bbb"}));
    EXPECT_EQ(enumerate_masks(2, 1).size(), 4U);
    EXPECT_EQ(enumerate_masks(8, 7).size(), 256U);
    EXPECT_THROW(enumerate_masks(4, 0), std::invalid_argument);
    EXPECT_THROW(enumerate_masks(4, 4), std::invalid_argument);
}

TEST(EnumerateMasks, CountMatchesBruteForceFilter)
{
    for (std::size_t length = 2; length <= 10; ++length) {
        for (std::size_t n = 1; n < length; ++n) {
            std::size_t expected = 0;
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << length); ++w) {
                if (InheritanceMask(length, w).alternations() <= n) {
                    ++expected;
                }
            }
            const auto masks = enumerate_masks(length, n);
            EXPECT_EQ(masks.size(), expected) << "length " << length << " n " << n;
            EXPECT_EQ(mask_count(length, n), expected);
            EXPECT_TRUE(std::ranges::all_of(masks, [&](const auto& m) { return m.alternations() <= n; }));
        }
    }
}

TEST(EnumerateMasks, EquivalentToCutVectors)
{
    std::mt19937_64 rng(3);
    for (std::size_t length = 2; length <= 8; ++length) {
        for (std::size_t n = 1; n < length; ++n) {
            const auto x = random_genome(rng, length);
            const auto y = random_genome(rng, length);
            std::set<Genome> by_masks;
            for (const auto& m : enumerate_masks(length, n)) {
                by_masks.insert(recombine(x, y, m));
            }
            std::set<Genome> by_cuts;
            for (const auto& [a, b] : children_by_cuts(x, y, n)) {
                by_cuts.insert(a);
                by_cuts.insert(b);
            }
            EXPECT_EQ(by_masks, by_cuts) << "length " << length << " n " << n;
        }
    }
}

TEST(IndividualsRelated, WorkedExamples)
{
    const auto x = Genome::parse("010001");
    const auto y = Genome::parse("101100");
    EXPECT_TRUE(individuals_related(x, y, Genome::parse("000101"), Genome::parse("111000"), 4));
    EXPECT_FALSE(individuals_related(Genome::parse("000000"), Genome::parse("111111"), Genome::parse("010101"),
                                     Genome::parse("101010"), 4));
    EXPECT_TRUE(individuals_related(x, y, x, y, 1));
}

TEST(IndividualsRelated, IsNotTransitive)
{
    // (000000,111111) -> (010100,101011) -> (010101,101010) with 4 cuts each,
    // but the end points are not related.
    const auto z = Genome::parse("000000");
    const auto o = Genome::parse("111111");
    const auto a = Genome::parse("010100");
    const auto b = Genome::parse("101011");
    const auto c = Genome::parse("010101");
    const auto d = Genome::parse("101010");
    EXPECT_TRUE(individuals_related(z, o, a, b, 4));
    EXPECT_TRUE(individuals_related(a, b, c, d, 4));
    EXPECT_FALSE(individuals_related(z, o, c, d, 4));
}

TEST(IndividualsRelated, AgreesWithCutEnumeration)
{
    std::mt19937_64 rng(5);
    for (std::size_t length = 2; length <= 7; ++length) {
        for (std::size_t n = 1; n < length; ++n) {
            for (int trial = 0; trial < 40; ++trial) {
                const auto x = random_genome(rng, length);
                const auto y = random_genome(rng, length);
                const auto children = children_by_cuts(x, y, n);
                Genome x2 = random_genome(rng, length);
                Genome y2 = random_genome(rng, length);
                if (trial % 2 == 0) {
                    // Half the probes use a real child pair, possibly swapped.
                    auto it = children.begin();
                    std::advance(it, testing::random_in(rng, 0, children.size() - 1));
                    x2 = trial % 4 == 0 ? it->first : it->second;
                    y2 = trial % 4 == 0 ? it->second : it->first;
                }
                const bool expected = children.contains({x2, y2}) || children.contains({y2, x2});
                EXPECT_EQ(individuals_related(x, y, x2, y2, n), expected);
                EXPECT_EQ(individuals_related(x2, y2, x, y, n), individuals_related(x, y, x2, y2, n));
            }
        }
    }
}

TEST(OffspringPool, Examples)
{
    EXPECT_EQ(offspring_pool(Population::parse({"010", "101"}), 2).size(), 8U);
    EXPECT_EQ(offspring_pool(Population::parse({"000"}), 2), Population::parse({"000"}));
    EXPECT_TRUE(offspring_pool(Population::parse({"11100111", "00011000"}), 2).contains(Genome::parse("11111111")));
    EXPECT_FALSE(offspring_pool(Population::parse({"11100111", "00011000"}), 1).contains(Genome::parse("11111111")));
    EXPECT_THROW(offspring_pool(Population{}, 1), std::invalid_argument);
}

TEST(OffspringPool, MatchesCutEnumerationAndNestsInN)
{
    std::mt19937_64 rng(8);
    for (std::size_t length = 2; length <= 6; ++length) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto p = random_population(rng, length, 1, 4);
            Population previous = p;
            for (std::size_t n = 1; n < length; ++n) {
                const auto pool = offspring_pool(p, n);
                EXPECT_EQ(pool, pool_by_cuts(p, n));
                EXPECT_TRUE(p.is_subset_of(pool));
                EXPECT_TRUE(previous.is_subset_of(pool));
                previous = pool;
            }
        }
    }
}

TEST(PopulationsRelated, Examples)
{
    EXPECT_TRUE(populations_related(Population::parse({"010", "101"}), Population::parse({"111", "000"}), 2));
    EXPECT_TRUE(populations_related(Population::parse({"010", "101", "110"}), Population::parse({"000"}), 2));
    const auto p = Population::parse({"0110", "1001"});
    EXPECT_TRUE(populations_related(p, p, 1));
    EXPECT_THROW(populations_related(Population{}, p, 1), std::invalid_argument);
    EXPECT_THROW(populations_related(p, Population::parse({"000"}), 1), std::invalid_argument);
}

TEST(PopulationsRelated, GrowingSourceShrinkingTargetKeepsRelation)
{
    std::mt19937_64 rng(13);
    int related = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t length = testing::random_in(rng, 3, 6);
        const std::size_t n = testing::random_in(rng, 1, length - 1);
        const auto p1 = random_population(rng, length, 1, 3);
        // Build a target from the pool so the relation usually holds.
        const auto pool = offspring_pool(p1, n);
        Population p2;
        for (const auto& g : pool) {
            if (testing::random_in(rng, 0, 2) == 0) {
                p2.insert(g);
            }
        }
        if (p2.empty() || !populations_related(p1, p2, n)) {
            continue;
        }
        ++related;
        const auto bigger = unite(p1, random_population(rng, length, 1, 2));
        Population smaller = p2;
        smaller.erase(*smaller.begin());
        EXPECT_TRUE(populations_related(bigger, p2, n));
        if (!smaller.empty()) {
            EXPECT_TRUE(populations_related(bigger, smaller, n));
        }
    }
    EXPECT_GT(related, 100);
}

} // namespace
} // namespace xover
