// Sectioned key=value experiment configuration.
//
// Format: `[section]` headers, one `key = value` per line, lines whose first
// non-blank character is '#' are comments.  Every key must be consumed by the
// command that loads the file; leftovers are reported as unknown keys with
// their line numbers.

#ifndef ZENO_CLI_CONFIG_HPP
#define ZENO_CLI_CONFIG_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeno::cli {

// Configuration failures carry the offending line (0 = file-level problem)
// and map to process exit code 2.
struct ConfigError : std::runtime_error {
    ConfigError(int line_number, const std::string& message)
        : std::runtime_error(message), line(line_number) {}
    int line;
};

class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& name);

    bool has_section(const std::string& section) const;
    bool has_key(const std::string& section, const std::string& key) const;

    // Typed accessors; `require_*` throw ConfigError naming the missing key,
    // `get_*` return the fallback.  Every access marks the key consumed.
    std::string require_string(const std::string& section, const std::string& key);
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback);
    double require_double(const std::string& section, const std::string& key);
    double get_double(const std::string& section, const std::string& key,
                      double fallback);
    std::int64_t require_int(const std::string& section, const std::string& key);
    std::int64_t get_int(const std::string& section, const std::string& key,
                         std::int64_t fallback);
    bool get_bool(const std::string& section, const std::string& key,
                  bool fallback);

    // Comma-separated list of reals.
    std::vector<double> require_double_list(const std::string& section,
                                            const std::string& key);
    // Rows split on '|', entries on ','; each entry a real or "(re,im)".
    std::vector<std::vector<std::complex<double>>> require_complex_rows(
        const std::string& section, const std::string& key);
    std::vector<std::complex<double>> require_complex_list(
        const std::string& section, const std::string& key);

    // Line number of a key (for error reporting after consumption).
    int line_of(const std::string& section, const std::string& key) const;

    // Throws on the first entry or section never consumed by the command.
    void reject_unconsumed() const;

    // `config: section.key = value` echo lines for every consumed entry plus
    // defaulted keys recorded via note_default, in file order.
    std::vector<std::string> echo_lines() const;
    void note_default(const std::string& section, const std::string& key,
                      const std::string& value);

private:
    struct Entry {
        std::string value;
        int line = 0;
        bool consumed = false;
    };
    struct Section {
        std::map<std::string, Entry> entries;
        int line = 0;
        bool touched = false;
        std::vector<std::string> order;  // keys in file order
    };

    const Entry* find(const std::string& section, const std::string& key) const;
    Entry* touch(const std::string& section, const std::string& key);
    Entry& require_entry(const std::string& section, const std::string& key);

    std::map<std::string, Section> sections_;
    std::vector<std::string> section_order_;
    std::vector<std::pair<std::string, std::string>> defaults_;  // section.key = value
    std::string name_;
};

// Parses a full string as one real / integer, rejecting trailing junk.
double parse_double(const std::string& text, int line, const std::string& what);
std::int64_t parse_int(const std::string& text, int line, const std::string& what);

}  // namespace zeno::cli

#endif  // ZENO_CLI_CONFIG_HPP
