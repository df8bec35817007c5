#pragma once

#include "digicon/bigcount.hpp"
#include "digicon/convexity.hpp"
#include "digicon/graph.hpp"
#include "digicon/sequence.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace digicon {

/// Bit string read cyclically. Position 0 is printed leftmost.
class CyclicBinaryString {
public:
    /// Throws InvalidParameter on an empty string or characters other than '0'/'1'.
    explicit CyclicBinaryString(std::string_view text);
    explicit CyclicBinaryString(std::vector<std::uint8_t> bits);
    static CyclicBinaryString constant(std::size_t length, bool bit);
    /// Position i takes bit (length - 1 - i) of `mask`, so position 0 is the most significant.
    static CyclicBinaryString from_mask(std::size_t length, std::uint64_t mask);

    std::size_t length() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_.at(i) != 0; }
    bool is_constant() const;
    std::uint64_t to_mask() const;
    std::string to_string() const;
    /// Result position i holds this string's position (i + shift) mod length.
    CyclicBinaryString rotated(std::size_t shift) const;

    friend bool operator==(const CyclicBinaryString&, const CyclicBinaryString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct Run {
    bool bit;
    std::size_t length;
    friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal cyclic runs, wraparound merged, starting with the run that holds position 0.
struct BlockProfile {
    std::size_t first_start = 0; ///< position where the first run begins
    std::vector<Run> runs;
};

BlockProfile cyclic_blocks(const CyclicBinaryString& s);

/// Membership in B_{k,n}: all blocks >= k when n >= k, otherwise constant.
bool is_member_B(std::size_t k, const CyclicBinaryString& s);

/// All members of B_{k,n}, in increasing mask order (position 0 most significant).
std::vector<CyclicBinaryString> enumerate_B(std::size_t k, std::size_t n, const EnumerationBudget& budget = {});
BigCount count_B(std::size_t k, std::size_t n, const EnumerationBudget& budget = {});

/// Recurrence for a_k(n) with initial terms at n = 1 .. 2k+2.
LinearRecurrence a_recurrence(std::size_t k);
BigCount a_count(std::size_t k, std::size_t n);
/// Coefficients of x^0 .. x^terms of (2x - 2x^2 + 2k x^{2k}) / (1 - 2x + x^2 - x^{2k}).
PowerSeries a_series(std::size_t k, std::size_t terms);

/// The cycle-power recurrence in its own indexing: initial terms n = 3 .. 2k+4.
LinearRecurrence cycle_power_recurrence(std::size_t k);

/// S -> S*: each v_i in S switches on bits i .. i+k (mod n). S must be convex in C_n^k.
CyclicBinaryString string_from_convex_set(std::size_t k, std::size_t n, const VertexSet& s);
/// Inverse map; `s` must lie in B_{k+1,n}.
VertexSet convex_set_from_string(std::size_t k, std::size_t n, const CyclicBinaryString& s);

/// n_D(C_n^k), k >= 1, n >= 3.
BigCount count_cycle_power(std::size_t k, std::size_t n);

} // namespace digicon
