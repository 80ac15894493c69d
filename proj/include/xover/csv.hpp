#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace xover::csv {

/// Quotes a field when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

/// Accumulates `\n`-terminated CSV text. Comment lines start with '#'.
class Writer {
public:
    void comment(std::string_view text);
    void row(const std::vector<std::string>& fields);
    void row(std::initializer_list<std::string> fields) { row(std::vector<std::string>(fields)); }

    [[nodiscard]] const std::string& str() const noexcept { return text_; }

private:
    std::string text_;
};

/// Writes to a temporary sibling file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

} // namespace xover::csv
