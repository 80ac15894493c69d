#include "xover/population_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace xover {

Population read_population(std::istream& in, const Alphabet& alphabet)
{
    Population population;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) {
            text = text.substr(0, hash);
        }
        const auto begin = text.find_first_not_of(" \t\r");
        if (begin == std::string_view::npos) {
            continue;
        }
        text = text.substr(begin, text.find_last_not_of(" \t\r") - begin + 1);
        try {
            population.insert(Genome::parse(text, alphabet));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return population;
}

Population load_population(const std::filesystem::path& path, const Alphabet& alphabet)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open population file " + path.string());
    }
    try {
        return read_population(in, alphabet);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

} // namespace xover
