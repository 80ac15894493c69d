#include <gtest/gtest.h>

#include <bit>
#include <algorithm>
#include <stdexcept>

#include "random_support.hpp"
#include "xover/crossover.hpp"
#include "xover/oracle.hpp"

namespace xover::oracle {
namespace {

using xover::testing::random_population;

const Genome kOptimum = Genome::parse("11111111");
const Population kParents = Population::parse({"11100111", "00011000"});

TEST(SSequence, Examples)
{
    const auto seq = s_sequence(Population::parse({"010", "101"}), 2);
    EXPECT_EQ(seq.fixed_point_index, 1U);
    EXPECT_EQ(seq.stages.at(1).size(), 8U);

    const auto single = s_sequence(Population::parse({"000"}), 1);
    EXPECT_EQ(single.fixed_point_index, 0U);
    EXPECT_EQ(single.fixed_point(), Population::parse({"000"}));

    const auto parents = s_sequence(kParents, 1);
    EXPECT_EQ(parents.first_stage_containing(kOptimum), 2U);
    EXPECT_THROW(s_sequence(Population{}, 1), std::invalid_argument);
}

TEST(SSequence, MatchesIteratedOffspringPool)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t length = xover::testing::random_in(rng, 2, 7);
        const std::size_t n = xover::testing::random_in(rng, 1, length - 1);
        const auto p = random_population(rng, length, 1, 4);
        const auto seq = s_sequence(p, n);
        Population stage = p;
        for (std::size_t i = 0; i < seq.stages.size(); ++i) {
            EXPECT_EQ(seq.stages[i], stage);
            if (i > 0) {
                EXPECT_TRUE(seq.stages[i - 1].is_subset_of(seq.stages[i]));
                EXPECT_NE(seq.stages[i - 1], seq.stages[i]);
            }
            stage = offspring_pool(stage, n);
        }
        EXPECT_EQ(stage, seq.fixed_point());
    }
}

TEST(SSequence, WorksOverLargerAlphabets)
{
    const Alphabet dna("ACGT");
    const auto p = Population::parse({"AAAA", "CCCC", "GTGT"}, dna);
    const auto seq = s_sequence(p, 1, dna);
    Population stage = p;
    for (const auto& expected : seq.stages) {
        EXPECT_EQ(expected, stage);
        stage = offspring_pool(stage, 1);
    }
    EXPECT_THROW(s_sequence(Population::parse({"AAAAAAAAA"}, dna), 1, dna), std::invalid_argument);
}

TEST(MinGenerations, Examples)
{
    const Population target{kOptimum};
    for (auto semantics : {Semantics::closure, Semantics::containment}) {
        EXPECT_EQ(oracle_min_generations(kParents, target, 2, semantics), 1U);
        EXPECT_EQ(oracle_min_generations(kParents, target, 1, semantics), 2U);
        EXPECT_EQ(oracle_min_generations(Population::parse({"000000", "111111"}), Population::parse({"010101"}), 4,
                                         semantics),
                  2U);
        EXPECT_EQ(oracle_min_generations(Population::parse({"00000000"}), target, 3, semantics), std::nullopt);
    }
    const auto both = Population::parse({"000", "111"});
    const auto zero = Population::parse({"000"});
    EXPECT_EQ(oracle_min_generations(both, zero, 1, Semantics::closure), 1U);
    EXPECT_EQ(oracle_min_generations(both, zero, 1, Semantics::containment), 0U);
    EXPECT_EQ(oracle_min_generations(both, both, 1, Semantics::closure), 0U);
}

TEST(MinGenerations, SemanticsDifferOnlyOnProperSubsets)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t length = xover::testing::random_in(rng, 3, 6);
        const std::size_t n = xover::testing::random_in(rng, 1, length - 1);
        const auto p1 = random_population(rng, length, 1, 4);
        auto p2 = trial % 3 == 0 ? p1 : random_population(rng, length, 1, 3);
        if (trial % 3 == 0 && p2.size() > 1) {
            p2.erase(*p2.begin());
        }
        const auto closure = oracle_min_generations(p1, p2, n, Semantics::closure);
        const auto containment = oracle_min_generations(p1, p2, n, Semantics::containment);
        const bool proper_subset = p2.is_subset_of(p1) && p2 != p1;
        if (proper_subset) {
            EXPECT_EQ(closure, 1U);
            EXPECT_EQ(containment, 0U);
        } else {
            EXPECT_EQ(closure, containment);
        }
    }
}

TEST(MinGenerations, StabilisesWithinLogarithmicDepth)
{
    std::mt19937_64 rng(17);
    for (std::size_t length = 2; length <= 8; ++length) {
        const std::size_t bound = static_cast<std::size_t>(std::bit_width(length - 1)) + 1;
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = random_population(rng, length, 1, 5);
            const std::size_t n = xover::testing::random_in(rng, 1, length - 1);
            EXPECT_LE(s_sequence(p, n).fixed_point_index, bound) << "length " << length;
        }
    }
}

TEST(ClosureMember, Examples)
{
    const auto p = Population::parse({"010", "101"});
    EXPECT_TRUE(oracle_closure_member(p, p, 0, 1));
    EXPECT_FALSE(oracle_closure_member(p, Population::parse({"010"}), 0, 1));
    EXPECT_TRUE(oracle_closure_member(p, Population::parse({"111", "000"}), 1, 2));
    EXPECT_FALSE(oracle_closure_member(kParents, Population{kOptimum}, 1, 1));
    EXPECT_TRUE(oracle_closure_member(kParents, Population{kOptimum}, 2, 1));
}

TEST(ClosureMember, AgreesWithExhaustiveChainSearch)
{
    // Breadth-first search over all non-empty populations of {0,1}^length with
    // one Pxo_n step per layer; Pxo_n is reflexive, so layer k holds exactly
    // the populations reachable by a chain of length k.
    for (std::size_t length = 2; length <= 3; ++length) {
        for (std::size_t n = 1; n < length; ++n) {
            const FamilyClosure helper(2, length, n);
            const std::uint32_t count = std::uint32_t{1} << (std::size_t{1} << length);
            std::vector<std::uint32_t> pool(count);
            for (std::uint32_t p = 1; p < count; ++p) {
                pool[p] = helper.from_population(offspring_pool(helper.to_population(p), n));
            }
            for (std::uint32_t start = 1; start < count; ++start) {
                std::vector<bool> layer(count, false);
                layer[start] = true;
                for (std::size_t k = 0; k <= 3; ++k) {
                    for (std::uint32_t q = 1; q < count; ++q) {
                        ASSERT_EQ(oracle_closure_member(helper.to_population(start), helper.to_population(q), k, n),
                                  layer[q])
                            << "length " << length << " n " << n << " start " << start << " q " << q << " k " << k;
                    }
                    std::vector<bool> next(count, false);
                    for (std::uint32_t q = 1; q < count; ++q) {
                        if (!layer[q]) {
                            continue;
                        }
                        for (std::uint32_t sub = pool[q]; sub != 0; sub = (sub - 1) & pool[q]) {
                            next[sub] = true;
                        }
                    }
                    layer = std::move(next);
                }
            }
        }
    }
}

PopulationFamily random_family(const FamilyClosure& closure, std::mt19937_64& rng, std::size_t members)
{
    auto family = closure.empty_family();
    std::uniform_int_distribution<std::uint32_t> pick(0, 255);
    for (std::size_t i = 0; i < members; ++i) {
        family.insert(pick(rng));
    }
    return family;
}

TEST(FamilyClosure, CechAxioms)
{
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 2; ++n) {
        const FamilyClosure cl(2, 3, n);
        EXPECT_EQ(cl.apply(cl.empty_family()), cl.empty_family());
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_family(cl, rng, xover::testing::random_in(rng, 0, 12));
            const auto b = random_family(cl, rng, xover::testing::random_in(rng, 0, 12));
            EXPECT_TRUE(a.is_subset_of(cl.apply(a)));
            EXPECT_EQ(cl.apply(a.united(b)), cl.apply(a).united(cl.apply(b)));
        }
    }
}

TEST(FamilyClosure, IteratesMatchClosureMembership)
{
    std::mt19937_64 rng(7);
    const FamilyClosure cl(2, 3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t start = static_cast<std::uint32_t>(xover::testing::random_in(rng, 1, 255));
        for (std::size_t k = 0; k <= 3; ++k) {
            const auto family = cl.iterate(cl.singleton(start), k);
            for (std::uint32_t q = 1; q < 256; ++q) {
                EXPECT_EQ(family.contains(q),
                          oracle_closure_member(cl.to_population(start), cl.to_population(q), k, 1));
            }
        }
    }
}

TEST(FamilyClosure, RejectsLargeUniverses)
{
    EXPECT_THROW(PopulationFamily(2, 5), std::invalid_argument);
    EXPECT_THROW(FamilyClosure(2, 3, 3), std::invalid_argument);
}

} // namespace
} // namespace xover::oracle
