#pragma once

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "tutteframe/jsonio.hpp"

namespace tutteframe {

inline const char* version_string() { return "tutteframe 0.1.0"; }

// FNV-1a over the canonical request string, two lanes for 128 hex bits.
inline std::string cache_key(const std::string& canonical_spec, const std::string& method) {
    std::string payload = std::string(version_string()) + "\n" + canonical_spec + "\n" + method;
    uint64_t h1 = 0xcbf29ce484222325ull, h2 = 0x9ae16a3b2f90404full;
    for (unsigned char ch : payload) {
        h1 = (h1 ^ ch) * 0x100000001b3ull;
        h2 = (h2 ^ ch) * 0x100000001b3ull;
        h2 ^= h2 >> 29;
    }
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(h1),
                  static_cast<unsigned long long>(h2));
    return buf;
}

// Content-addressed on-disk store of polynomial JSON; writes are atomic
// (temp file + rename).
class ResultCache {
public:
    static ResultCache disabled() { return ResultCache(); }

    static ResultCache at(std::filesystem::path dir) {
        ResultCache c;
        c.enabled_ = true;
        c.dir_ = std::move(dir);
        return c;
    }

    static ResultCache from_environment() {
        if (const char* env = std::getenv("TUTTEFRAME_CACHE")) return at(env);
        if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
            return at(std::filesystem::path(xdg) / "tutteframe");
        if (const char* home = std::getenv("HOME"))
            return at(std::filesystem::path(home) / ".cache" / "tutteframe");
        return at(std::filesystem::path(".tutteframe-cache"));
    }

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<json> load(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        std::ifstream in(dir_ / (key + ".json"));
        if (!in) return std::nullopt;
        try {
            return json::parse(in);
        } catch (const std::exception&) {
            return std::nullopt;  // corrupt entries are treated as misses
        }
    }

    void store(const std::string& key, const json& value) const {
        if (!enabled_) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return;  // caching is best-effort
        auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()));
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << value.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, dir_ / (key + ".json"), ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

private:
    bool enabled_ = false;
    std::filesystem::path dir_;
};

}  // namespace tutteframe
