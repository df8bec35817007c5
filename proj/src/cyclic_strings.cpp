#include "digicon/cyclic_strings.hpp"

#include "digicon/errors.hpp"
#include "subset_kernel.hpp"

#include <algorithm>
#include <bit>

namespace digicon {

CyclicBinaryString::CyclicBinaryString(std::string_view text) {
    if (text.empty())
        throw InvalidParameter("cyclic binary string must be nonempty");
    bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw InvalidParameter(std::string("invalid bit character '") + c + "'");
        bits_.push_back(c == '1');
    }
}

CyclicBinaryString::CyclicBinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty())
        throw InvalidParameter("cyclic binary string must be nonempty");
    for (auto b : bits_)
        if (b > 1)
            throw InvalidParameter("bits must be 0 or 1");
}

CyclicBinaryString CyclicBinaryString::constant(std::size_t length, bool bit) {
    return CyclicBinaryString(std::vector<std::uint8_t>(length, bit ? 1 : 0));
}

CyclicBinaryString CyclicBinaryString::from_mask(std::size_t length, std::uint64_t mask) {
    if (length == 0 || length > 64)
        throw InvalidParameter("mask-backed strings need 1 <= length <= 64");
    std::vector<std::uint8_t> bits(length);
    for (std::size_t i = 0; i < length; ++i)
        bits[i] = (mask >> (length - 1 - i)) & 1u;
    return CyclicBinaryString(std::move(bits));
}

bool CyclicBinaryString::is_constant() const {
    return std::all_of(bits_.begin(), bits_.end(), [&](auto b) { return b == bits_[0]; });
}

std::uint64_t CyclicBinaryString::to_mask() const {
    if (length() > 64)
        throw InvalidParameter("string longer than 64 bits has no mask form");
    std::uint64_t mask = 0;
    for (auto b : bits_)
        mask = (mask << 1) | b;
    return mask;
}

std::string CyclicBinaryString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_)
        out += b ? '1' : '0';
    return out;
}

CyclicBinaryString CyclicBinaryString::rotated(std::size_t shift) const {
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out[i] = bits_[(i + shift) % bits_.size()];
    return CyclicBinaryString(std::move(out));
}

BlockProfile cyclic_blocks(const CyclicBinaryString& s) {
    const std::size_t n = s.length();
    BlockProfile profile;
    if (s.is_constant()) {
        profile.runs.push_back({s[0], n});
        return profile;
    }
    std::size_t start = 0;
    while (s[(start + n - 1) % n] == s[0])
        start = (start + n - 1) % n;
    profile.first_start = start;
    std::size_t i = 0;
    while (i < n) {
        const bool bit = s[(start + i) % n];
        std::size_t len = 0;
        while (i < n && s[(start + i) % n] == bit) {
            ++len;
            ++i;
        }
        profile.runs.push_back({bit, len});
    }
    return profile;
}

namespace {

void check_block_k(std::size_t k) {
    if (k < 2)
        throw InvalidParameter("block length bound k must be at least 2");
}

// Membership test on the mask form. Bit p of `edges` marks a run boundary between
// bits p and p+1 (cyclically); the gaps between boundaries are the run lengths.
bool mask_in_B(std::uint64_t mask, unsigned n, std::size_t k) {
    const std::uint64_t full = detail::low_bits(n);
    if (mask == 0 || mask == full)
        return true;
    if (n < k)
        return false;
    const std::uint64_t rotated = (mask >> 1) | ((mask & 1u) << (n - 1));
    std::uint64_t edges = (mask ^ rotated) & full;
    const auto first = static_cast<std::size_t>(std::countr_zero(edges));
    std::size_t prev = first;
    edges &= edges - 1;
    while (edges != 0) {
        const auto p = static_cast<std::size_t>(std::countr_zero(edges));
        if (p - prev < k)
            return false;
        prev = p;
        edges &= edges - 1;
    }
    return n - prev + first >= k;
}

void check_length_for_masks(std::size_t n) {
    if (n == 0)
        throw InvalidParameter("string length must be at least 1");
}

} // namespace

bool is_member_B(std::size_t k, const CyclicBinaryString& s) {
    check_block_k(k);
    if (s.is_constant())
        return true;
    if (s.length() < k)
        return false;
    const auto profile = cyclic_blocks(s);
    return std::all_of(profile.runs.begin(), profile.runs.end(),
                       [k](const Run& r) { return r.length >= k; });
}

std::vector<CyclicBinaryString> enumerate_B(std::size_t k, std::size_t n, const EnumerationBudget& budget) {
    check_block_k(k);
    check_length_for_masks(n);
    budget.require(static_cast<unsigned>(std::min<std::size_t>(n, 64)));
    const auto bits = static_cast<unsigned>(n);
    auto masks = detail::filter_masks(std::uint64_t{1} << bits, budget.workers,
                                      [&](std::uint64_t m) { return mask_in_B(m, bits, k); });
    std::vector<CyclicBinaryString> out;
    out.reserve(masks.size());
    for (auto m : masks)
        out.push_back(CyclicBinaryString::from_mask(n, m));
    return out;
}

BigCount count_B(std::size_t k, std::size_t n, const EnumerationBudget& budget) {
    check_block_k(k);
    check_length_for_masks(n);
    budget.require(static_cast<unsigned>(std::min<std::size_t>(n, 64)));
    const auto bits = static_cast<unsigned>(n);
    return BigCount(detail::count_masks(std::uint64_t{1} << bits, budget.workers,
                                        [&](std::uint64_t m) { return mask_in_B(m, bits, k); }));
}

LinearRecurrence a_recurrence(std::size_t k) {
    check_block_k(k);
    const auto kk = static_cast<std::int64_t>(k);
    LinearRecurrence rec;
    rec.taps = {{1, 2}, {2, -1}, {2 * kk, 1}};
    // n = 1, 2 hold only the two constant strings, like the band 3 .. 2k-1.
    for (std::int64_t i = 1; i <= 2 * kk - 1; ++i)
        rec.initial_terms[i] = 2;
    for (std::int64_t j = 2 * kk; j <= 2 * kk + 2; ++j)
        rec.initial_terms[j] = 2 + j * (j - 2 * kk + 1);
    rec.first_recurrent_index = 2 * kk + 3;
    return rec;
}

BigCount a_count(std::size_t k, std::size_t n) {
    check_block_k(k);
    if (n == 0)
        throw InvalidParameter("a_k(n) is defined for n >= 1");
    return eval_recurrence(a_recurrence(k), static_cast<std::int64_t>(n));
}

PowerSeries a_series(std::size_t k, std::size_t terms) {
    check_block_k(k);
    const auto kk = static_cast<long long>(k);
    const PowerSeries numerator = polynomial({{1, 2}, {2, -2}, {2 * k, 2 * kk}});
    const PowerSeries denominator = polynomial({{0, 1}, {1, -2}, {2, 1}, {2 * k, -1}});
    return expand_rational(numerator, denominator, terms);
}

LinearRecurrence cycle_power_recurrence(std::size_t k) {
    if (k < 1)
        throw InvalidParameter("cycle power exponent k must be at least 1");
    const auto kk = static_cast<std::int64_t>(k);
    LinearRecurrence rec;
    rec.taps = {{1, 2}, {2, -1}, {2 * kk + 2, 1}};
    for (std::int64_t i = 3; i <= 2 * kk + 1; ++i)
        rec.initial_terms[i] = 2;
    for (std::int64_t j = 2 * kk + 2; j <= 2 * kk + 4; ++j)
        rec.initial_terms[j] = 2 + j * (j - 2 * kk - 1);
    rec.first_recurrent_index = 2 * kk + 5;
    return rec;
}

namespace {

void check_cycle_power(std::size_t k, std::size_t n) {
    if (k < 1)
        throw InvalidParameter("cycle power exponent k must be at least 1");
    if (n < 3)
        throw InvalidParameter("cycle order n must be at least 3");
}

} // namespace

CyclicBinaryString string_from_convex_set(std::size_t k, std::size_t n, const VertexSet& s) {
    check_cycle_power(k, n);
    if (s.universe_order() != n)
        throw InvalidParameter("vertex set universe does not match cycle order");
    if (!is_digitally_convex(graph_power(make_cycle(n), k), s))
        throw DomainError("set " + s.to_json() + " is not digitally convex in C_" + std::to_string(n) +
                          "^" + std::to_string(k));
    std::vector<std::uint8_t> bits(n, 0);
    for (Vertex v : s.members())
        for (std::size_t j = 0; j <= k; ++j)
            bits[(v + j) % n] = 1;
    return CyclicBinaryString(std::move(bits));
}

VertexSet convex_set_from_string(std::size_t k, std::size_t n, const CyclicBinaryString& s) {
    check_cycle_power(k, n);
    if (s.length() != n)
        throw InvalidParameter("string length does not match cycle order");
    if (!is_member_B(k + 1, s))
        throw DomainError("string " + s.to_string() + " has a block shorter than " + std::to_string(k + 1));
    if (s.is_constant())
        return s[0] ? VertexSet::full(n) : VertexSet(n);

    VertexSet out(n);
    const auto profile = cyclic_blocks(s);
    std::size_t start = profile.first_start;
    for (const auto& run : profile.runs) {
        if (run.bit)
            for (std::size_t j = 0; j + k < run.length; ++j)
                out.insert(static_cast<Vertex>((start + j) % n));
        start = (start + run.length) % n;
    }
    return out;
}

BigCount count_cycle_power(std::size_t k, std::size_t n) {
    check_cycle_power(k, n);
    return a_count(k + 1, n);
}

} // namespace digicon
