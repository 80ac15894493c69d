#include <gtest/gtest.h>

#include <stdexcept>

#include "xover/genome.hpp"

namespace xover {
namespace {

TEST(Alphabet, RejectsDegenerateSymbolSets)
{
    EXPECT_THROW(Alphabet("0"), std::invalid_argument);
    EXPECT_THROW(Alphabet("aba"), std::invalid_argument);
    EXPECT_EQ(Alphabet("ACGT").size(), 4U);
    EXPECT_EQ(Alphabet::binary().symbols(), "01");
}

TEST(Genome, ParsesAndPrintsRoundTrip)
{
    const auto g = Genome::parse("11100111");
    EXPECT_EQ(g.length(), 8U);
    EXPECT_EQ(g.to_string(), "11100111");
    EXPECT_EQ(g.at(1), 1);
    EXPECT_EQ(g.at(4), 0);
    EXPECT_THROW((void)g.at(0), std::out_of_range);
    EXPECT_THROW((void)g.at(9), std::out_of_range);
}

TEST(Genome, UsesTheGivenAlphabet)
{
    const Alphabet dna("ACGT");
    const auto g = Genome::parse("GATTACA", dna);
    EXPECT_EQ(g.to_string(dna), "GATTACA");
    EXPECT_EQ(g.at(1), 2);
    EXPECT_THROW(Genome::parse("GATU", dna), std::invalid_argument);
    EXPECT_THROW(Genome::parse("012"), std::invalid_argument);
    EXPECT_THROW(Genome::parse(""), std::invalid_argument);
}

TEST(Genome, AgreementMaskMarksEqualPositions)
{
    const auto x = Genome::parse("111000");
    const auto y = Genome::parse("101010");
    // Positions 1, 3, 4, 6 agree; position p is bit p - 1.
    EXPECT_EQ(x.agreement_mask(y), 0b101101U);
    EXPECT_THROW((void)x.agreement_mask(Genome::parse("10")), std::invalid_argument);
}

TEST(Population, DeduplicatesAndRejectsMixedLengths)
{
    auto p = Population::parse({"010", "101", "010"});
    EXPECT_EQ(p.size(), 2U);
    EXPECT_EQ(p.length(), 3U);
    EXPECT_FALSE(p.insert(Genome::parse("101")));
    EXPECT_THROW(p.insert(Genome::parse("1010")), std::invalid_argument);
    EXPECT_TRUE(p.erase(Genome::parse("010")));
    EXPECT_EQ(p.to_strings(), std::vector<std::string>{"101"});
}

TEST(Population, SubsetAndUnion)
{
    const auto a = Population::parse({"000", "111"});
    const auto b = Population::parse({"000"});
    EXPECT_TRUE(b.is_subset_of(a));
    EXPECT_FALSE(a.is_subset_of(b));
    EXPECT_EQ(unite(b, Population::parse({"111"})), a);
}

TEST(Population, Requirements)
{
    EXPECT_THROW(require_non_empty(Population{}, "p"), std::invalid_argument);
    const auto a = Population::parse({"00"});
    const auto b = Population::parse({"000"});
    EXPECT_THROW(require_same_length({&a, &b}), std::invalid_argument);
    EXPECT_NO_THROW(require_same_length({&a, &a}));
}

} // namespace
} // namespace xover
