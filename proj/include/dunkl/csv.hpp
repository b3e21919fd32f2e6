#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

/// 12 significant digits, "nan"/"inf" for non-finite values. Independent of locale.
std::string csv_number(double value);

/// Line-feed terminated CSV file. Throws IoError when the path
/// cannot be opened or written.
class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path);

    void header(std::initializer_list<std::string_view> columns);
    void header(const std::vector<std::string>& columns) { row(columns); }
    void row(const std::vector<std::string>& cells);
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace dunkl
