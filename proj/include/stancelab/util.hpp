#pragma once
// Small string/number helpers shared across the library.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stancelab {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
bool contains_ci(std::string_view haystack, std::string_view needle);

// Strips a leading '#' or '@' and lowercases; used for hashtag and token
// normalization.
std::string normalize_tag(std::string_view raw);

// Accepts epoch seconds ("1588291200") or ISO-8601 ("2020-05-01T00:00:00Z",
// "2020-05-01 00:00:00", "2020-05-01"); UTC assumed when no offset given.
std::optional<int64_t> parse_timestamp(std::string_view s);

// Epoch seconds for a UTC date given as "YYYY-MM-DD".
std::optional<int64_t> parse_date(std::string_view s);

// Shortest decimal form that round-trips a double (printf %.17g trimmed).
std::string format_double(double v);

// Deterministic xorshift-based generator. Distribution helpers are written
// out explicitly so generated datasets are stable across platforms and
// standard library versions.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // Uniform in [0, n).
    uint64_t next_below(uint64_t n);
    // Uniform in [0, 1).
    double next_unit();
    bool next_bool(double p_true);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace stancelab
