#pragma once

// Numeric series ingestion and ordinal-pattern entropy.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vinc/lincomb.hpp"
#include "vinc/vincular_hopf.hpp"

namespace vinc {

/// Plain mode: one value per whitespace/comma token.
/// Column mode (1-based): one CSV record per line; a non-numeric first record is a header.
/// Throws ParseError naming the bad token and its line.
std::vector<double> parse_series(std::istream& in, std::optional<int> column = std::nullopt);

/// `-` reads from `stdin_stream`.
std::vector<double> read_series(const std::string& path, std::optional<int> column, std::istream& stdin_stream);

/// Ties broken left to right.
Permutation standardize_series(const std::vector<double>& series);

struct PatternFrequency {
    std::string pattern;
    Integer count;
    Rational frequency;
};

struct EntropyReport {
    std::string mode;  // "consecutive" or "vincular"
    int order = 0;
    Integer total;
    std::vector<PatternFrequency> patterns;
    double base = 0;  // 0 means natural log
    double entropy = 0;

    std::string to_text() const;
    std::string to_json() const;
};

/// Sliding windows of length `order`; throws std::invalid_argument when order is 0 or exceeds the series.
EntropyReport consecutive_entropy(const std::vector<double>& series, int order, double base = 0);

/// Frequencies over the occurrence counts of the given patterns in the whole series.
EntropyReport vincular_entropy(const std::vector<double>& series, const std::vector<VincularPattern>& patterns,
                               double base = 0);

/// -sum p log p over the nonzero frequencies.
double shannon_entropy(const std::vector<Rational>& freqs, double base = 0);

}  // namespace vinc
