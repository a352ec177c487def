#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ngfisk::data {

inline constexpr std::string_view kBuiltinDataFT = "builtin:dataFT";

/// Failure times in hours for 101 units, in the order they are listed in
/// the source appendix.
const std::vector<double>& dataft();

struct Dataset {
    std::vector<double> values;
    std::string source;

    std::size_t n() const noexcept { return values.size(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::string token)
        : std::runtime_error(message), line_(line), token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

/// Parses whitespace/comma/newline-separated positive reals. Throws
/// ParseError naming the line and offending token.
Dataset parse(std::string_view text, std::string source);

/// Reads a file, or returns the builtin set for "builtin:dataFT".
/// Throws std::runtime_error on IO failure and ParseError on bad content.
Dataset ingest(const std::string& path_or_token);

struct SixNumberSummary {
    double min;
    double q1;
    double median;
    double mean;
    double q3;
    double max;
};

/// Quartiles use the type 7 (linear interpolation) rule.
SixNumberSummary describe(const Dataset& d);

}  // namespace ngfisk::data
