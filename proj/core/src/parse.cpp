#include "seqlab/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace seqlab::parse {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::pair<std::string, std::string> head(std::string_view spec) {
    auto pos = spec.find(':');
    if (pos == std::string_view::npos) return {trim(spec), {}};
    return {trim(spec.substr(0, pos)), std::string(spec.substr(pos + 1))};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double to_double(std::string_view s, std::string_view what) {
    auto t = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
        throw SpecError("malformed number for " + std::string(what) + ": '" + t + "'");
    return v;
}

Index to_index(std::string_view s, std::string_view what) {
    auto t = trim(s);
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw SpecError("malformed integer for " + std::string(what) + ": '" + t + "'");
    return static_cast<Index>(v);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        lines.push_back(std::move(t));
    }
    if (lines.empty()) throw SpecError("empty file: " + path);
    return lines;
}

std::vector<std::pair<std::string, std::string>> key_values(std::string_view s) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& field : split(s, ',')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) {
            if (out.empty()) throw SpecError("expected key=value, got '" + field + "'");
            out.back().second += "," + field;
            continue;
        }
        out.emplace_back(trim(field.substr(0, eq)), trim(field.substr(eq + 1)));
    }
    return out;
}

}  // namespace seqlab::parse
