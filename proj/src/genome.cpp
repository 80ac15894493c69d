#include "xover/genome.hpp"

#include <algorithm>
#include <stdexcept>

#include "xover/detail/bits.hpp"

namespace xover {

Alphabet::Alphabet(std::string symbols)
    : symbols_(std::move(symbols))
{
    if (symbols_.size() < 2) {
        throw std::invalid_argument("alphabet needs at least two symbols");
    }
    if (symbols_.size() > 255) {
        throw std::invalid_argument("alphabet has more than 255 symbols");
    }
    std::string sorted = symbols_;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end()) {
        throw std::invalid_argument("alphabet symbols must be distinct");
    }
}

const Alphabet& Alphabet::binary()
{
    static const Alphabet instance{"01"};
    return instance;
}

char Alphabet::symbol(std::uint8_t index) const
{
    if (index >= symbols_.size()) {
        throw std::out_of_range("symbol index outside alphabet");
    }
    return symbols_[index];
}

std::uint8_t Alphabet::index_of(char symbol) const
{
    const auto pos = symbols_.find(symbol);
    if (pos == std::string::npos) {
        throw std::invalid_argument(std::string("symbol '") + symbol + "' is not in the alphabet");
    }
    return static_cast<std::uint8_t>(pos);
}

Genome::Genome(std::vector<std::uint8_t> symbols)
    : symbols_(std::move(symbols))
{
    if (symbols_.empty()) {
        throw std::invalid_argument("genome length must be at least 1");
    }
}

Genome::Genome(std::vector<std::uint8_t> symbols, const Alphabet& alphabet)
    : Genome(std::move(symbols))
{
    for (auto s : symbols_) {
        if (s >= alphabet.size()) {
            throw std::invalid_argument("genome symbol index outside alphabet");
        }
    }
}

Genome Genome::parse(std::string_view text, const Alphabet& alphabet)
{
    std::vector<std::uint8_t> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        symbols.push_back(alphabet.index_of(c));
    }
    return Genome(std::move(symbols));
}

std::string Genome::to_string(const Alphabet& alphabet) const
{
    std::string out;
    out.reserve(symbols_.size());
    for (auto s : symbols_) {
        out.push_back(alphabet.symbol(s));
    }
    return out;
}

std::uint8_t Genome::at(std::size_t position) const
{
    if (position < 1 || position > symbols_.size()) {
        throw std::out_of_range("genome position out of range");
    }
    return symbols_[position - 1];
}

std::uint64_t Genome::agreement_mask(const Genome& other) const
{
    if (other.length() != length()) {
        throw std::invalid_argument("genome length mismatch");
    }
    if (length() > detail::kMaxMaskLength) {
        throw std::invalid_argument("genome longer than 64 positions");
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == other.symbols_[i]) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

Population::Population(std::initializer_list<Genome> members)
{
    for (const auto& g : members) {
        insert(g);
    }
}

Population Population::parse(std::initializer_list<std::string_view> texts, const Alphabet& alphabet)
{
    Population result;
    for (auto text : texts) {
        result.insert(Genome::parse(text, alphabet));
    }
    return result;
}

bool Population::insert(Genome genome)
{
    if (genome.length() == 0) {
        throw std::invalid_argument("cannot insert an empty genome");
    }
    if (!members_.empty() && genome.length() != length_) {
        throw std::invalid_argument("genome length mismatch in population");
    }
    length_ = genome.length();
    return members_.insert(std::move(genome)).second;
}

bool Population::is_subset_of(const Population& other) const
{
    return std::ranges::includes(other.members_, members_);
}

std::vector<std::string> Population::to_strings(const Alphabet& alphabet) const
{
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (const auto& g : members_) {
        out.push_back(g.to_string(alphabet));
    }
    return out;
}

Population unite(const Population& lhs, const Population& rhs)
{
    Population result = lhs;
    for (const auto& g : rhs) {
        result.insert(g);
    }
    return result;
}

void require_same_length(std::initializer_list<const Population*> populations)
{
    std::size_t length = 0;
    for (const auto* p : populations) {
        if (p->empty()) {
            continue;
        }
        if (length == 0) {
            length = p->length();
        } else if (p->length() != length) {
            throw std::invalid_argument("population length mismatch");
        }
    }
}

void require_non_empty(const Population& population, std::string_view what)
{
    if (population.empty()) {
        throw std::invalid_argument(std::string(what) + " must not be empty");
    }
}

} // namespace xover
