#pragma once

/**
 * @file config.hpp
 * @brief Flat key=value configuration text, overridable by CLI flags.
 */

#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace fuss {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

class ConfigMap {
  public:
    static ConfigMap parse(std::istream& in) {
        ConfigMap cfg;
        std::string line;
        unsigned lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string t = detail::trim(line);
            if (t.empty() || t[0] == '#') continue;
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("ConfigMap: line " + std::to_string(lineno) +
                                            " has no '='");
            const std::string key = detail::trim(t.substr(0, eq));
            if (key.empty())
                throw std::invalid_argument("ConfigMap: line " + std::to_string(lineno) +
                                            " has an empty key");
            cfg.values_[key] = detail::trim(t.substr(eq + 1));
        }
        return cfg;
    }

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get_or(const std::string& key, const std::string& fallback) const {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    long long get_int(const std::string& key, long long fallback) const {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        std::size_t used = 0;
        const long long v = std::stoll(it->second, &used);
        if (used != it->second.size())
            throw std::invalid_argument("ConfigMap: key '" + key + "' is not an integer");
        return v;
    }

    double get_double(const std::string& key, double fallback) const {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size())
            throw std::invalid_argument("ConfigMap: key '" + key + "' is not a number");
        return v;
    }

    const std::map<std::string, std::string>& values() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace fuss
