#include "stancelab/util.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>

namespace stancelab {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (haystack.size() < needle.size()) return false;
    auto eq = [](char a, char b) {
        return std::tolower(static_cast<unsigned char>(a)) ==
               std::tolower(static_cast<unsigned char>(b));
    };
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                          needle.end(), eq);
    return it != haystack.end();
}

std::string normalize_tag(std::string_view raw) {
    std::string_view s = raw;
    if (!s.empty() && (s.front() == '#' || s.front() == '@')) s.remove_prefix(1);
    return to_lower(s);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

// Days since epoch for a civil UTC date; avoids timegm for portability.
int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<int64_t>(era) * 146097 + static_cast<int64_t>(doe) - 719468;
}

}  // namespace

std::optional<int64_t> parse_timestamp(std::string_view s) {
    std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    if (all_digits(t) || (t[0] == '-' && all_digits(t.substr(1)))) {
        return std::strtoll(t.c_str(), nullptr, 10);
    }
    int y = 0, mo = 0, d = 0;
    if (std::sscanf(t.c_str(), "%4d-%2d-%2d", &y, &mo, &d) != 3) return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;
    int64_t base = days_from_civil(y, mo, d) * 86400;
    if (t.size() <= 10) return base;

    char sep = t[10];
    if (sep != 'T' && sep != ' ') return std::nullopt;
    int h = 0, mi = 0, sec = 0;
    if (std::sscanf(t.c_str() + 11, "%2d:%2d:%2d", &h, &mi, &sec) < 2)
        return std::nullopt;
    base += h * 3600 + mi * 60 + sec;

    // Trailing zone: "Z", "+hh:mm" or "-hh:mm"; offsets are subtracted to
    // land on UTC.
    size_t zpos = t.find_first_of("Z+-", 19);
    if (zpos == std::string::npos) zpos = t.find_first_of("Z+-", 16);
    if (zpos != std::string::npos && t[zpos] != 'Z') {
        int zh = 0, zm = 0;
        std::sscanf(t.c_str() + zpos + 1, "%2d:%2d", &zh, &zm);
        int sign = t[zpos] == '+' ? 1 : -1;
        base -= sign * (zh * 3600 + zm * 60);
    }
    return base;
}

std::optional<int64_t> parse_date(std::string_view s) {
    int y = 0, mo = 0, d = 0;
    if (std::sscanf(trim(s).c_str(), "%4d-%2d-%2d", &y, &mo, &d) != 3)
        return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;
    return days_from_civil(y, mo, d) * 86400;
}

std::string format_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

Rng::Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

uint64_t Rng::next_u64() {
    // splitmix64 step
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t Rng::next_below(uint64_t n) {
    if (n == 0) return 0;
    // Rejection sampling to kill modulo bias.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool Rng::next_bool(double p_true) { return next_unit() < p_true; }

}  // namespace stancelab
