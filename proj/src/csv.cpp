#include "xover/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace xover::csv {

std::string escape(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double value)
{
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("cannot format double");
    }
    return std::string(buffer.data(), ptr);
}

void Writer::comment(std::string_view text)
{
    text_ += "# ";
    text_ += text;
    text_ += '\n';
}

void Writer::row(const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            text_ += ',';
        }
        text_ += escape(fields[i]);
    }
    text_ += '\n';
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
    auto temporary = path;
    temporary += ".tmp";
    {
        std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + temporary.string() + " for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            throw std::runtime_error("failed writing " + temporary.string());
        }
    }
    std::filesystem::rename(temporary, path);
}

} // namespace xover::csv
