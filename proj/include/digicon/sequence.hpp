#pragma once

#include "digicon/bigcount.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace digicon {

/// Finite prefix of a formal power series; coefficients[i] multiplies x^i.
struct PowerSeries {
    std::vector<BigCount> coefficients;

    std::size_t length() const noexcept { return coefficients.size(); }
    const BigCount& operator[](std::size_t i) const { return coefficients.at(i); }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

/// Builds a sparse polynomial from (exponent, coefficient) pairs.
PowerSeries polynomial(std::initializer_list<std::pair<std::size_t, long long>> terms);

/**
 * f(n) = sum over taps of coefficient * f(n - offset), for n >= first_recurrent_index.
 * Terms below first_recurrent_index come from initial_terms only.
 */
struct LinearRecurrence {
    struct Tap {
        std::int64_t offset;
        BigCount coefficient;
    };

    std::vector<Tap> taps;
    std::map<std::int64_t, BigCount> initial_terms;
    std::int64_t first_recurrent_index = 0;
};

BigCount eval_recurrence(const LinearRecurrence& rec, std::int64_t n);

/// Terms f(from), ..., f(to) in one forward pass.
std::vector<BigCount> eval_recurrence_range(const LinearRecurrence& rec, std::int64_t from, std::int64_t to);

/// Exact long division numerator / denominator, coefficients of x^0 .. x^terms.
/// The denominator's constant term must be +1 or -1.
PowerSeries expand_rational(const PowerSeries& numerator, const PowerSeries& denominator,
                            std::size_t terms);

// --- integer-sequence files ---------------------------------------------------

struct SequenceEntry {
    std::int64_t index;
    BigCount value;
};

/// Parses "n a(n)" lines; blank lines and '#' comments are skipped.
std::vector<SequenceEntry> parse_bfile(std::string_view text);
std::vector<SequenceEntry> read_bfile(const std::filesystem::path& path);

struct ComparisonReport {
    struct Mismatch {
        std::int64_t index;
        BigCount expected; ///< from the computed values
        BigCount found;    ///< from the b-file
    };

    std::size_t matched = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::int64_t> only_left;  ///< computed but absent from the b-file
    std::vector<std::int64_t> only_right; ///< in the b-file but not computed

    bool all_match() const noexcept { return mismatches.empty(); }
    /// {"matched":..,"mismatches":[{"index":..,"expected":"..","found":".."}],"only_left":[..],"only_right":[..]}
    std::string to_json() const;
};

/// Throws EmptyOverlap when no index appears on both sides.
ComparisonReport compare_with_bfile(const std::vector<SequenceEntry>& values,
                                    const std::vector<SequenceEntry>& bfile);

} // namespace digicon
