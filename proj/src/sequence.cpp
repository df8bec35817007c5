#include "digicon/sequence.hpp"

#include "digicon/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace digicon {

PowerSeries polynomial(std::initializer_list<std::pair<std::size_t, long long>> terms) {
    PowerSeries p;
    for (auto [e, c] : terms) {
        if (p.coefficients.size() <= e)
            p.coefficients.resize(e + 1);
        p.coefficients[e] += c;
    }
    return p;
}

std::vector<BigCount> eval_recurrence_range(const LinearRecurrence& rec, std::int64_t from, std::int64_t to) {
    if (rec.initial_terms.empty())
        throw InvalidParameter("recurrence has no initial terms");
    const std::int64_t lowest = rec.initial_terms.begin()->first;
    if (from < lowest)
        throw InvalidParameter("index " + std::to_string(from) + " is below the first defined index " +
                               std::to_string(lowest));
    if (to < from)
        return {};

    std::map<std::int64_t, BigCount> known = rec.initial_terms;
    auto term = [&](std::int64_t n) -> const BigCount& {
        auto it = known.find(n);
        if (it == known.end())
            throw InvalidParameter("recurrence does not define index " + std::to_string(n));
        return it->second;
    };
    for (std::int64_t n = rec.first_recurrent_index; n <= to; ++n) {
        if (n < lowest || known.contains(n))
            continue;
        BigCount value = 0;
        for (const auto& tap : rec.taps)
            value += tap.coefficient * term(n - tap.offset);
        known.emplace(n, std::move(value));
    }
    std::vector<BigCount> out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    for (std::int64_t n = from; n <= to; ++n)
        out.push_back(term(n));
    return out;
}

BigCount eval_recurrence(const LinearRecurrence& rec, std::int64_t n) {
    return eval_recurrence_range(rec, n, n).front();
}

PowerSeries expand_rational(const PowerSeries& numerator, const PowerSeries& denominator,
                            std::size_t terms) {
    if (denominator.coefficients.empty() ||
        (denominator[0] != 1 && denominator[0] != -1))
        throw InvalidParameter("denominator constant term must be +1 or -1");
    const BigCount& lead = denominator[0];
    PowerSeries out;
    out.coefficients.resize(terms + 1);
    for (std::size_t i = 0; i <= terms; ++i) {
        BigCount acc = i < numerator.length() ? numerator[i] : BigCount(0);
        const std::size_t top = std::min(i, denominator.length() - 1);
        for (std::size_t j = 1; j <= top; ++j)
            acc -= denominator[j] * out.coefficients[i - j];
        out.coefficients[i] = lead == 1 ? acc : BigCount(-acc);
    }
    return out;
}

std::vector<SequenceEntry> parse_bfile(std::string_view text) {
    std::vector<SequenceEntry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream in(line);
        std::string index_text, value_text, extra;
        if (!(in >> index_text))
            continue;
        if (!(in >> value_text))
            throw ParseError(line_no, "expected \"index value\"");
        if (in >> extra)
            throw ParseError(line_no, "unexpected trailing token '" + extra + "'");

        auto is_integer = [](const std::string& s) {
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            return i < s.size() &&
                   std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                               [](unsigned char c) { return std::isdigit(c); });
        };
        if (!is_integer(index_text))
            throw ParseError(line_no, "index '" + index_text + "' is not an integer");
        if (!is_integer(value_text))
            throw ParseError(line_no, "value '" + value_text + "' is not an integer");
        try {
            out.push_back({std::stoll(index_text), BigCount(value_text[0] == '+' ? value_text.substr(1) : value_text)});
        } catch (const std::out_of_range&) {
            throw ParseError(line_no, "index '" + index_text + "' out of range");
        }
    }
    return out;
}

std::vector<SequenceEntry> read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidParameter("cannot open b-file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str());
}

ComparisonReport compare_with_bfile(const std::vector<SequenceEntry>& values,
                                    const std::vector<SequenceEntry>& bfile) {
    std::map<std::int64_t, const BigCount*> left, right;
    for (const auto& e : values)
        left[e.index] = &e.value;
    for (const auto& e : bfile)
        right[e.index] = &e.value;

    ComparisonReport report;
    for (auto [index, value] : left) {
        auto it = right.find(index);
        if (it == right.end())
            report.only_left.push_back(index);
        else if (*value == *it->second)
            ++report.matched;
        else
            report.mismatches.push_back({index, *value, *it->second});
    }
    for (auto [index, value] : right)
        if (!left.contains(index))
            report.only_right.push_back(index);

    if (report.matched == 0 && report.mismatches.empty())
        throw EmptyOverlap("computed values and b-file share no index");
    return report;
}

std::string ComparisonReport::to_json() const {
    nlohmann::ordered_json j;
    j["matched"] = matched;
    j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& m : mismatches)
        j["mismatches"].push_back({{"index", m.index}, {"expected", to_decimal(m.expected)},
                                   {"found", to_decimal(m.found)}});
    j["only_left"] = only_left;
    j["only_right"] = only_right;
    return j.dump();
}

} // namespace digicon
