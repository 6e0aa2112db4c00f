#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperrough::cli {

inline constexpr int kSchemaVersion = 1;

// 17 significant digits, '.' as decimal separator regardless of locale.
std::string format_real(double value);

// Comma-separated file whose first line is
//   # schema_version=1,config_hash=<hex>,seed=<u64>
// followed by the column row. Throws IoError when the file cannot be written.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& config_hash,
              std::uint64_t seed, const std::vector<std::string>& columns);

    void row(std::initializer_list<double> values);
    void row(const std::vector<double>& values);
    // First cell verbatim (a label), the rest numeric.
    void row(const std::string& label, const std::vector<double>& values);
    void close();

private:
    void check();

    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_;
};

// Creates the directory if needed; IoError on failure.
void ensure_directory(const std::filesystem::path& dir);

// Tag used in file names: H rendered with %g ("-0.49"), "limit" for the limit.
std::string process_tag(double hurst);

}  // namespace hyperrough::cli
