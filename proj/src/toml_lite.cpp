#include "psalink/harness/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "psalink/errors.hpp"

namespace psalink::harness {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_bare_key(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

// Strips a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

TomlTable::Value parse_value(const std::string& raw, const std::string& where) {
    if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"')
        return raw.substr(1, raw.size() - 2);
    if (raw == "true") return true;
    if (raw == "false") return false;

    // Integer first; anything with '.', 'e', "inf" or "nan" falls through to float.
    if (raw.find_first_of(".eEinfa") == std::string::npos) {
        std::int64_t iv = 0;
        const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), iv);
        if (ec == std::errc() && ptr == raw.data() + raw.size()) return iv;
    }
    try {
        std::size_t used = 0;
        const double dv = std::stod(raw, &used);
        if (used == raw.size()) return dv;
    } catch (const std::exception&) {
    }
    throw ConfigError(where + ": cannot parse value '" + raw + "'");
}

}  // namespace

TomlTable TomlTable::parse(const std::string& text, const std::string& source_name) {
    TomlTable table;
    table.source_ = source_name;
    std::istringstream stream(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string where = source_name + ":" + std::to_string(line_no);
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') throw ConfigError(where + ": unterminated section header");
            section = trim(body.substr(1, body.size() - 2));
            if (!valid_bare_key(section)) throw ConfigError(where + ": invalid section name");
            table.sections_[section];
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (!valid_bare_key(key)) throw ConfigError(where + ": invalid key '" + key + "'");
        if (value.empty()) throw ConfigError(where + ": missing value for '" + key + "'");
        auto& sec = table.sections_[section];
        if (sec.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
        sec.emplace(key, parse_value(value, where));
    }
    return table;
}

TomlTable TomlTable::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const TomlTable::Value* TomlTable::find(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec == sections_.end()) return nullptr;
    const auto it = sec->second.find(key);
    return it == sec->second.end() ? nullptr : &it->second;
}

bool TomlTable::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

bool TomlTable::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (const bool* b = std::get_if<bool>(v)) return *b;
    throw ConfigError(source_ + ": [" + section + "] " + key + " must be a boolean");
}

std::int64_t TomlTable::get_int(const std::string& section, const std::string& key,
                                std::int64_t fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (const std::int64_t* i = std::get_if<std::int64_t>(v)) return *i;
    throw ConfigError(source_ + ": [" + section + "] " + key + " must be an integer");
}

double TomlTable::get_double(const std::string& section, const std::string& key,
                             double fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (const double* d = std::get_if<double>(v)) return *d;
    if (const std::int64_t* i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
    throw ConfigError(source_ + ": [" + section + "] " + key + " must be a number");
}

std::string TomlTable::get_string(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (const std::string* s = std::get_if<std::string>(v)) return *s;
    throw ConfigError(source_ + ": [" + section + "] " + key + " must be a string");
}

std::vector<std::pair<std::string, std::string>> TomlTable::entries() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [section, keys] : sections_)
        for (const auto& [key, value] : keys) out.emplace_back(section, key);
    return out;
}

}  // namespace psalink::harness
