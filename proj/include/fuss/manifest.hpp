#pragma once

/**
 * @file manifest.hpp
 * @brief Plain-text key=value run manifest: config echo, per-check verdicts
 *        with tolerances, and the artifact file list.
 */

#include <ctime>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fuss/csv.hpp"

namespace fuss {

struct ManifestCheck {
    std::string name;
    bool passed = false;
    double tolerance = 0.0;
    double observed = 0.0;
    std::string note;
};

class RunManifest {
  public:
    void set(const std::string& key, const std::string& value) {
        entries_.emplace_back(key, value);
    }
    void set(const std::string& key, long long value) { set(key, std::to_string(value)); }
    void set(const std::string& key, double value) { set(key, format_double(value)); }

    void record(ManifestCheck check) { checks_.push_back(std::move(check)); }
    void add_artifact(const std::string& path) { artifacts_.push_back(path); }

    const std::vector<ManifestCheck>& checks() const { return checks_; }

    bool all_passed() const {
        for (const auto& c : checks_)
            if (!c.passed) return false;
        return true;
    }

    void write(std::ostream& os) const {
        os << "manifest.version=1\n";
        const std::time_t now = std::time(nullptr);
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        os << "timestamp.epoch=" << static_cast<long long>(now) << '\n';
        os << "timestamp.utc=" << stamp << '\n';
        for (const auto& [k, v] : entries_) os << "config." << k << '=' << v << '\n';
        for (const auto& c : checks_) {
            os << "check." << c.name << ".pass=" << (c.passed ? 1 : 0) << '\n';
            os << "check." << c.name << ".tolerance=" << format_double(c.tolerance) << '\n';
            os << "check." << c.name << ".observed=" << format_double(c.observed) << '\n';
            if (!c.note.empty()) os << "check." << c.name << ".note=" << c.note << '\n';
        }
        for (std::size_t i = 0; i < artifacts_.size(); ++i)
            os << "artifact." << i << '=' << artifacts_[i] << '\n';
        os << "result=" << (all_passed() ? "PASS" : "FAIL") << '\n';
    }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<ManifestCheck> checks_;
    std::vector<std::string> artifacts_;
};

}  // namespace fuss
