// Deterministic CSV emission.  Float formatting is pinned so identical
// configurations produce byte-identical files: 12 significant digits,
// lowercase scientific notation once |x| drops below 1e-4, "0" for an exact
// zero, "nan" for undefined entries.

#ifndef ZENO_CLI_TABLE_HPP
#define ZENO_CLI_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zeno::cli {

std::string format_value(double value);
std::string format_value(std::int64_t value);

class CsvWriter {
public:
    // Throws ConfigError when the file cannot be created.
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<std::string>& cells);

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace zeno::cli

#endif  // ZENO_CLI_TABLE_HPP
