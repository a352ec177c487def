#include "ngfisk/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ngfisk/stats.hpp"

namespace ngfisk::data {

const std::vector<double>& dataft() {
    static const std::vector<double> values{
        4.69, 0.01, 1.51, 0.02, 7.89, 0.03, 1.11, 0.04, 0.05, 0.06, 0.07, 0.07, 0.08, 0.09, 0.09,
        0.10, 0.10, 0.11, 0.11, 0.12, 0.13, 0.18, 0.19, 0.20, 0.23, 0.24, 0.24, 0.29, 0.34, 0.35,
        0.36, 0.38, 0.40, 0.42, 0.43, 0.52, 0.54, 0.56, 0.60, 0.60, 0.63, 0.65, 0.67, 0.68, 0.72,
        0.72, 0.72, 0.73, 0.79, 0.79, 0.80, 0.80, 0.83, 0.85, 0.90, 0.92, 0.95, 0.99, 1.00, 1.01,
        1.02, 1.03, 1.05, 1.10, 1.10, 0.03, 1.15, 1.18, 1.20, 1.29, 1.31, 1.33, 1.34, 1.40, 1.43,
        1.45, 1.50, 0.02, 1.52, 1.53, 1.54, 1.54, 1.55, 1.58, 1.60, 1.63, 1.64, 1.80, 1.80, 1.81,
        2.02, 2.05, 2.14, 2.17, 2.33, 3.03, 3.03, 3.34, 4.20, 0.01, 0.02};
    return values;
}

Dataset parse(std::string_view text, std::string source) {
    Dataset d;
    d.source = std::move(source);
    std::size_t line = 1;
    std::size_t i = 0;
    auto is_separator = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (i < text.size()) {
        if (is_separator(text[i])) {
            if (text[i] == '\n') {
                ++line;
            }
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_separator(text[j])) {
            ++j;
        }
        const std::string_view token = text.substr(i, j - i);
        double value = 0.0;
        const char* first = token.data();
        if (!token.empty() && token.front() == '+') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
            throw ParseError(d.source + ":" + std::to_string(line) + ": '" + std::string(token) +
                                 "' is not a number",
                             line, std::string(token));
        }
        if (!(value > 0.0)) {
            throw ParseError(d.source + ":" + std::to_string(line) + ": value " +
                                 std::string(token) + " is not positive",
                             line, std::string(token));
        }
        d.values.push_back(value);
        i = j;
    }
    if (d.values.empty()) {
        throw ParseError(d.source + ": no values found", line, "");
    }
    return d;
}

Dataset ingest(const std::string& path_or_token) {
    if (path_or_token == kBuiltinDataFT) {
        return {dataft(), std::string(kBuiltinDataFT)};
    }
    std::ifstream in(path_or_token, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open data file '" + path_or_token + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path_or_token);
}

SixNumberSummary describe(const Dataset& d) {
    if (d.values.empty()) {
        throw std::invalid_argument("describe: empty dataset");
    }
    std::vector<double> sorted = d.values;
    std::sort(sorted.begin(), sorted.end());
    const double mean =
        std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
    return {sorted.front(),
            stats::quantile_type7(sorted, 0.25),
            stats::quantile_type7(sorted, 0.5),
            mean,
            stats::quantile_type7(sorted, 0.75),
            sorted.back()};
}

}  // namespace ngfisk::data
