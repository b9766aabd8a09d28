#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace psalink::harness {

/// Minimal TOML reader covering what the experiment config needs: [section]
/// tables one level deep, bare keys, and scalar values (boolean, integer,
/// float, double-quoted string). Comments start with '#'. Anything outside
/// this subset is rejected with a line-numbered error.
class TomlTable {
public:
    using Value = std::variant<bool, std::int64_t, double, std::string>;

    static TomlTable parse(const std::string& text, const std::string& source_name);
    static TomlTable parse_file(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;

    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::int64_t get_int(const std::string& section, const std::string& key,
                         std::int64_t fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;

    /// Every (section, key) pair present, for unknown-key validation.
    std::vector<std::pair<std::string, std::string>> entries() const;

private:
    const Value* find(const std::string& section, const std::string& key) const;
    std::map<std::string, std::map<std::string, Value>> sections_;
    std::string source_;
};

}  // namespace psalink::harness
