#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcubic/arith/sieve.hpp"
#include "qcubic/lcentral/lvalue.hpp"
#include "qcubic/numeric/parallel.hpp"

namespace qcubic::lcentral {

/// Cache file could not be written.
struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Skipped {
    std::uint64_t d0;
    std::string reason;
};

struct CentralTable {
    std::uint64_t lo = 0, hi = 0;
    Scheme scheme = Scheme::kernelB;
    std::vector<CentralValue> records; // ascending d0
    std::vector<Skipped> skipped;

    /// Record for d0, or nullptr.
    const CentralValue* find(std::uint64_t d0) const
    {
        auto it = std::lower_bound(records.begin(), records.end(), d0,
                                   [](const CentralValue& r, std::uint64_t v) { return r.d0 < v; });
        return it != records.end() && it->d0 == d0 ? &*it : nullptr;
    }
};

/// Every odd squarefree d0 in [lo, hi]. Shards are contiguous d0 blocks
/// evaluated independently, so the table does not depend on their number.
inline CentralTable l_central_batch(std::uint64_t lo, std::uint64_t hi, unsigned shards,
                                    Scheme scheme = Scheme::kernelB)
{
    if (shards == 0)
        throw std::invalid_argument("l_central_batch: shards must be >= 1");
    CentralTable t;
    t.lo = lo;
    t.hi = hi;
    t.scheme = scheme;
    if (hi < lo || hi == 0)
        return t;

    const arith::SquarefreeTable sf(hi);
    const std::vector<std::uint64_t> ds = sf.odd_in(lo, hi);
    const auto blocks = numeric::split_blocks(ds.size(), shards);

    struct Part {
        std::vector<CentralValue> ok;
        std::vector<Skipped> bad;
    };
    const auto parts = numeric::parallel_map<Part>(
        blocks.size(), std::min<unsigned>(shards, numeric::hardware_workers()), [&](std::size_t b) {
            Part p;
            for (std::size_t i = blocks[b].first; i < blocks[b].second; ++i) {
                try {
                    CentralValue cv = l_central(ds[i], scheme);
                    if (!(cv.est_error < accept_error))
                        p.bad.push_back({ds[i], "est_error " + std::to_string(cv.est_error)});
                    else
                        p.ok.push_back(cv);
                } catch (const std::exception& e) {
                    p.bad.push_back({ds[i], e.what()});
                }
            }
            return p;
        });
    for (const auto& p : parts) {
        t.records.insert(t.records.end(), p.ok.begin(), p.ok.end());
        t.skipped.insert(t.skipped.end(), p.bad.begin(), p.bad.end());
    }
    return t;
}

inline void write_csv(std::ostream& os, const CentralTable& t)
{
    os << "d0,q,value,est_error,scheme\n";
    char buf[160];
    for (const auto& r : t.records) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.17g,%.6e,%s\n",
                      static_cast<unsigned long long>(r.d0), static_cast<unsigned long long>(r.q),
                      r.value, r.est_error, scheme_name(r.scheme));
        os << buf;
    }
}

// Binary cache: magic, kernel version, key (lo, hi, scheme), then records.
namespace cache_detail {

inline constexpr char magic[8] = {'Q', 'C', 'L', 'V', 'C', 'A', 'C', '1'};

template <class T>
void put(std::ostream& os, const T& v)
{
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
bool get(std::istream& is, T& v)
{
    return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof v));
}

} // namespace cache_detail

inline void save_cache(const std::string& path, const CentralTable& t)
{
    using namespace cache_detail;
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw CacheError("save_cache: cannot open " + path);
    os.write(magic, sizeof magic);
    const std::string ver = kernel_version;
    put<std::uint32_t>(os, static_cast<std::uint32_t>(ver.size()));
    os.write(ver.data(), static_cast<std::streamsize>(ver.size()));
    put(os, t.lo);
    put(os, t.hi);
    put<std::uint8_t>(os, static_cast<std::uint8_t>(t.scheme));
    put<std::uint64_t>(os, t.records.size());
    for (const auto& r : t.records) {
        put(os, r.d0);
        put(os, r.value);
        put(os, r.est_error);
    }
    put<std::uint64_t>(os, t.skipped.size());
    for (const auto& s : t.skipped) {
        put(os, s.d0);
        put<std::uint32_t>(os, static_cast<std::uint32_t>(s.reason.size()));
        os.write(s.reason.data(), static_cast<std::streamsize>(s.reason.size()));
    }
    if (!os)
        throw CacheError("save_cache: write failed for " + path);
}

/// Cached table if the file exists and its key matches exactly.
inline std::optional<CentralTable> load_cache(const std::string& path, std::uint64_t lo,
                                              std::uint64_t hi, Scheme scheme)
{
    using namespace cache_detail;
    std::ifstream is(path, std::ios::binary);
    if (!is)
        return std::nullopt;
    char m[8];
    if (!is.read(m, sizeof m) || std::memcmp(m, magic, sizeof m) != 0)
        return std::nullopt;
    std::uint32_t vlen = 0;
    if (!get(is, vlen) || vlen > 256)
        return std::nullopt;
    std::string ver(vlen, '\0');
    if (!is.read(ver.data(), vlen) || ver != kernel_version)
        return std::nullopt;
    CentralTable t;
    std::uint8_t sc = 0;
    if (!get(is, t.lo) || !get(is, t.hi) || !get(is, sc))
        return std::nullopt;
    t.scheme = static_cast<Scheme>(sc);
    if (t.lo != lo || t.hi != hi || t.scheme != scheme)
        return std::nullopt;
    std::uint64_t n = 0;
    if (!get(is, n))
        return std::nullopt;
    t.records.resize(n);
    for (auto& r : t.records) {
        if (!get(is, r.d0) || !get(is, r.value) || !get(is, r.est_error))
            return std::nullopt;
        r.q = 8 * r.d0;
        r.scheme = scheme;
    }
    if (!get(is, n))
        return std::nullopt;
    for (std::uint64_t i = 0; i < n; ++i) {
        Skipped s;
        std::uint32_t len = 0;
        if (!get(is, s.d0) || !get(is, len) || len > 4096)
            return std::nullopt;
        s.reason.resize(len);
        if (!is.read(s.reason.data(), len))
            return std::nullopt;
        t.skipped.push_back(std::move(s));
    }
    return t;
}

/// Load from cache when present, else compute and store.
inline CentralTable cached_batch(const std::string& path, std::uint64_t lo, std::uint64_t hi,
                                 unsigned shards, Scheme scheme = Scheme::kernelB)
{
    if (!path.empty()) {
        if (auto t = load_cache(path, lo, hi, scheme))
            return *t;
    }
    CentralTable t = l_central_batch(lo, hi, shards, scheme);
    if (!path.empty())
        save_cache(path, t);
    return t;
}

} // namespace qcubic::lcentral
