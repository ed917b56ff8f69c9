#pragma once

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace qcubic::cli {

/// Bad flags, config file contents or parameter ranges (exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem failures (exit code 3).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int precision_digits = 50;
    std::uint64_t prime_limit = 10000;
    int tail_order = 12;
    double x_min = 1e3;
    double x_max = 1e6;
    int x_points = 24;
    unsigned shards = 1;
    std::uint64_t seed = 20240601;
    std::string output_dir = "qcubic-out";
    int lemma_prime_max = 97;
    int lemma_samples = 1000;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;

    void validate() const
    {
        auto need = [](bool ok, const std::string& what) {
            if (!ok)
                throw ConfigError("config: " + what);
        };
        need(precision_digits >= 30 && precision_digits <= 1000, "precision_digits must be in [30, 1000]");
        need(prime_limit >= 100 && prime_limit <= 100'000'000, "prime_limit must be in [100, 1e8]");
        need(tail_order >= 3 && tail_order <= 16, "tail_order must be in [3, 16]");
        need(x_min >= 2 && x_max >= x_min && x_max <= 1e9, "x grid needs 2 <= x_min <= x_max <= 1e9");
        need(x_points >= 1 && x_points <= 1000, "x_points must be in [1, 1000]");
        need(shards >= 1 && shards <= 1024, "shards must be in [1, 1024]");
        need(!output_dir.empty(), "output_dir must be nonempty");
        need(lemma_prime_max >= 3 && lemma_prime_max <= 10000, "lemma_prime_max must be in [3, 10000]");
        need(lemma_samples >= 1 && lemma_samples <= 10'000'000, "lemma_samples must be in [1, 1e7]");
    }
};

namespace detail {

inline std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_int(const std::string& key, const std::string& v)
{
    if (v.empty() || (v[0] == '-' && std::is_unsigned_v<T>))
        throw ConfigError("config: bad integer for " + key + ": '" + v + "'");
    errno = 0;
    char* end = nullptr;
    T out;
    if constexpr (std::is_unsigned_v<T>) {
        const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
        out = static_cast<T>(x);
        if (static_cast<unsigned long long>(out) != x)
            errno = ERANGE;
    } else {
        const long long x = std::strtoll(v.c_str(), &end, 10);
        out = static_cast<T>(x);
        if (static_cast<long long>(out) != x)
            errno = ERANGE;
    }
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw ConfigError("config: bad integer for " + key + ": '" + v + "'");
    return out;
}

inline double parse_double(const std::string& key, const std::string& v)
{
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw ConfigError("config: bad number for " + key + ": '" + v + "'");
    return x;
}

} // namespace detail

/// Canonical key=value text, one key per line in a fixed order.
inline std::string to_kv(const RunConfig& c)
{
    std::ostringstream os;
    os << "precision_digits=" << c.precision_digits << "\n"
       << "prime_limit=" << c.prime_limit << "\n"
       << "tail_order=" << c.tail_order << "\n"
       << "x_min=" << detail::fmt_double(c.x_min) << "\n"
       << "x_max=" << detail::fmt_double(c.x_max) << "\n"
       << "x_points=" << c.x_points << "\n"
       << "shards=" << c.shards << "\n"
       << "seed=" << c.seed << "\n"
       << "output_dir=" << c.output_dir << "\n"
       << "lemma_prime_max=" << c.lemma_prime_max << "\n"
       << "lemma_samples=" << c.lemma_samples << "\n";
    return os.str();
}

inline void set_key(RunConfig& c, const std::string& key, const std::string& v)
{
    using namespace detail;
    if (key == "precision_digits")
        c.precision_digits = parse_int<int>(key, v);
    else if (key == "prime_limit")
        c.prime_limit = parse_int<std::uint64_t>(key, v);
    else if (key == "tail_order")
        c.tail_order = parse_int<int>(key, v);
    else if (key == "x_min")
        c.x_min = parse_double(key, v);
    else if (key == "x_max")
        c.x_max = parse_double(key, v);
    else if (key == "x_points")
        c.x_points = parse_int<int>(key, v);
    else if (key == "shards")
        c.shards = parse_int<unsigned>(key, v);
    else if (key == "seed")
        c.seed = parse_int<std::uint64_t>(key, v);
    else if (key == "output_dir")
        c.output_dir = v;
    else if (key == "lemma_prime_max")
        c.lemma_prime_max = parse_int<int>(key, v);
    else if (key == "lemma_samples")
        c.lemma_samples = parse_int<int>(key, v);
    else
        throw ConfigError("config: unknown key '" + key + "'");
}

/// Applies key=value lines on top of `base`. Blank lines and '#' comments are ignored.
inline RunConfig from_kv(const std::string& text, RunConfig base = {})
{
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + ": expected key=value");
        set_key(base, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
    }
    return base;
}

inline RunConfig load_config_file(const std::string& path, RunConfig base = {})
{
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot read config file " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return from_kv(ss.str(), std::move(base));
}

/// FNV-1a of the canonical text, 16 hex digits.
inline std::string config_hash(const RunConfig& c)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : to_kv(c)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::map<std::string, std::string> kv_map(const RunConfig& c)
{
    std::map<std::string, std::string> m;
    std::istringstream is(to_kv(c));
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find('=');
        m[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return m;
}

} // namespace qcubic::cli
