#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "config.hpp"

namespace zeno::cli {

std::string format_value(double value) {
    if (std::isnan(value)) return "nan";
    if (value == 0.0) return "0";
    char buffer[48];
    if (std::abs(value) < 1e-4) {
        std::snprintf(buffer, sizeof buffer, "%.11e", value);
    } else {
        std::snprintf(buffer, sizeof buffer, "%.12g", value);
    }
    return buffer;
}

std::string format_value(std::int64_t value) { return std::to_string(value); }

struct CsvWriter::Impl {
    std::ofstream stream;
};

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : impl_(new Impl) {
    impl_->stream.open(path, std::ios::binary);  // binary: stable line endings
    if (!impl_->stream) {
        delete impl_;
        throw ConfigError(0, "cannot create output file '" + path + "'");
    }
    row(header);
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) impl_->stream << ',';
        impl_->stream << cells[i];
    }
    impl_->stream << '\n';
}

}  // namespace zeno::cli
