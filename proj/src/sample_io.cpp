#include "modeseek/sample_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modeseek {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

} // namespace

SampleSet load_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open sample file: " + path.string());
    }
    std::vector<double> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view token = trim(line);
        if (token.empty() || token.front() == '#') {
            continue;
        }
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() ||
            !std::isfinite(value)) {
            throw std::runtime_error(path.string() + ":" +
                                     std::to_string(line_no) +
                                     ": cannot parse sample value '" +
                                     std::string(token) + "'");
        }
        points.push_back(value);
    }
    if (points.empty()) {
        throw std::runtime_error("sample file has no data lines: " + path.string());
    }
    return SampleSet(std::move(points));
}

void write_samples(const std::filesystem::path& path, const SampleSet& samples) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    char buf[64];
    for (double x : samples.points()) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out << buf << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

} // namespace modeseek
