#include "config.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace zeno::cli {

namespace {

std::string trim(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return text.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == separator) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

std::complex<double> parse_complex_entry(const std::string& raw, int line) {
    const std::string text = trim(raw);
    if (text.empty()) throw ConfigError(line, "empty matrix entry");
    if (text.front() == '(') {
        if (text.back() != ')')
            throw ConfigError(line, "unterminated complex entry '" + text + "'");
        const std::string inner = text.substr(1, text.size() - 2);
        const std::vector<std::string> parts = split(inner, ',');
        if (parts.size() != 2)
            throw ConfigError(line, "complex entry '" + text +
                                        "' must be (re,im)");
        return {parse_double(trim(parts[0]), line, "real part"),
                parse_double(trim(parts[1]), line, "imaginary part")};
    }
    return {parse_double(text, line, "matrix entry"), 0.0};
}

}  // namespace

double parse_double(const std::string& text, int line, const std::string& what) {
    if (text.empty()) throw ConfigError(line, what + ": empty value");
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE)
        throw ConfigError(line, what + ": '" + text + "' is not a number");
    return value;
}

std::int64_t parse_int(const std::string& text, int line, const std::string& what) {
    if (text.empty()) throw ConfigError(line, what + ": empty value");
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || errno == ERANGE)
        throw ConfigError(line, what + ": '" + text + "' is not an integer");
    return static_cast<std::int64_t>(value);
}

Config Config::parse_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream)
        throw ConfigError(0, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_text(buffer.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& name) {
    Config config;
    config.name_ = name;
    std::istringstream stream(text);
    std::string raw;
    std::string current_section;
    int line_number = 0;
    while (std::getline(stream, raw)) {
        ++line_number;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(line_number, "unterminated section header");
            current_section = trim(line.substr(1, line.size() - 2));
            if (current_section.empty())
                throw ConfigError(line_number, "empty section name");
            auto [it, inserted] =
                config.sections_.try_emplace(current_section);
            if (!inserted)
                throw ConfigError(line_number, "duplicate section [" +
                                                   current_section + "]");
            it->second.line = line_number;
            config.section_order_.push_back(current_section);
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_number, "expected key = value");
        if (current_section.empty())
            throw ConfigError(line_number, "key outside any [section]");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_number, "empty key");
        Section& section = config.sections_[current_section];
        auto [it, inserted] = section.entries.try_emplace(key);
        if (!inserted)
            throw ConfigError(line_number,
                              "duplicate key '" + current_section + "." + key +
                                  "' (first at line " +
                                  std::to_string(it->second.line) + ")");
        it->second.value = value;
        it->second.line = line_number;
        section.order.push_back(key);
    }
    return config;
}

bool Config::has_section(const std::string& section) const {
    return sections_.count(section) != 0;
}

bool Config::has_key(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

const Config::Entry* Config::find(const std::string& section,
                                  const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec == sections_.end()) return nullptr;
    const auto entry = sec->second.entries.find(key);
    if (entry == sec->second.entries.end()) return nullptr;
    return &entry->second;
}

Config::Entry* Config::touch(const std::string& section, const std::string& key) {
    const auto sec = sections_.find(section);
    if (sec == sections_.end()) return nullptr;
    sec->second.touched = true;
    const auto entry = sec->second.entries.find(key);
    if (entry == sec->second.entries.end()) return nullptr;
    entry->second.consumed = true;
    return &entry->second;
}

Config::Entry& Config::require_entry(const std::string& section,
                                     const std::string& key) {
    Entry* entry = touch(section, key);
    if (!entry)
        throw ConfigError(0, "missing key '" + section + "." + key + "'");
    return *entry;
}

std::string Config::require_string(const std::string& section,
                                   const std::string& key) {
    return require_entry(section, key).value;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) {
    Entry* entry = touch(section, key);
    if (!entry) {
        note_default(section, key, fallback);
        return fallback;
    }
    return entry->value;
}

double Config::require_double(const std::string& section, const std::string& key) {
    const Entry& entry = require_entry(section, key);
    return parse_double(entry.value, entry.line, section + "." + key);
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) {
    Entry* entry = touch(section, key);
    if (!entry) {
        std::ostringstream text;
        text << fallback;
        note_default(section, key, text.str());
        return fallback;
    }
    return parse_double(entry->value, entry->line, section + "." + key);
}

std::int64_t Config::require_int(const std::string& section,
                                 const std::string& key) {
    const Entry& entry = require_entry(section, key);
    return parse_int(entry.value, entry.line, section + "." + key);
}

std::int64_t Config::get_int(const std::string& section, const std::string& key,
                             std::int64_t fallback) {
    Entry* entry = touch(section, key);
    if (!entry) {
        note_default(section, key, std::to_string(fallback));
        return fallback;
    }
    return parse_int(entry->value, entry->line, section + "." + key);
}

bool Config::get_bool(const std::string& section, const std::string& key,
                      bool fallback) {
    Entry* entry = touch(section, key);
    if (!entry) {
        note_default(section, key, fallback ? "true" : "false");
        return fallback;
    }
    if (entry->value == "true") return true;
    if (entry->value == "false") return false;
    throw ConfigError(entry->line, section + "." + key +
                                       ": expected true or false, got '" +
                                       entry->value + "'");
}

std::vector<double> Config::require_double_list(const std::string& section,
                                                const std::string& key) {
    const Entry& entry = require_entry(section, key);
    std::vector<double> values;
    for (const std::string& part : split(entry.value, ',')) {
        values.push_back(
            parse_double(trim(part), entry.line, section + "." + key));
    }
    return values;
}

std::vector<std::vector<std::complex<double>>> Config::require_complex_rows(
    const std::string& section, const std::string& key) {
    const Entry& entry = require_entry(section, key);
    std::vector<std::vector<std::complex<double>>> rows;
    for (const std::string& row_text : split(entry.value, '|')) {
        std::vector<std::complex<double>> row;
        // Split on commas that sit outside parentheses so "(re,im)" survives.
        std::string current;
        int depth = 0;
        for (char ch : row_text) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ',' && depth == 0) {
                row.push_back(parse_complex_entry(current, entry.line));
                current.clear();
            } else {
                current.push_back(ch);
            }
        }
        row.push_back(parse_complex_entry(current, entry.line));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::complex<double>> Config::require_complex_list(
    const std::string& section, const std::string& key) {
    const auto rows = require_complex_rows(section, key);
    if (rows.size() != 1)
        throw ConfigError(line_of(section, key),
                          section + "." + key + ": expected a single row");
    return rows.front();
}

int Config::line_of(const std::string& section, const std::string& key) const {
    const Entry* entry = find(section, key);
    return entry ? entry->line : 0;
}

void Config::reject_unconsumed() const {
    for (const std::string& name : section_order_) {
        const Section& section = sections_.at(name);
        if (!section.touched)
            throw ConfigError(section.line, "unknown section [" + name + "]");
        for (const std::string& key : section.order) {
            const Entry& entry = section.entries.at(key);
            if (!entry.consumed)
                throw ConfigError(entry.line,
                                  "unknown key '" + name + "." + key + "'");
        }
    }
}

std::vector<std::string> Config::echo_lines() const {
    std::vector<std::string> lines;
    for (const std::string& name : section_order_) {
        const Section& section = sections_.at(name);
        for (const std::string& key : section.order) {
            const Entry& entry = section.entries.at(key);
            if (entry.consumed)
                lines.push_back("config: " + name + "." + key + " = " +
                                entry.value);
        }
    }
    for (const auto& [path, value] : defaults_)
        lines.push_back("config: " + path + " = " + value + " (default)");
    return lines;
}

void Config::note_default(const std::string& section, const std::string& key,
                          const std::string& value) {
    defaults_.emplace_back(section + "." + key, value);
}

}  // namespace zeno::cli
