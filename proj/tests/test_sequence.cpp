#include "digicon/errors.hpp"
#include "digicon/sequence.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace digicon;

namespace {

std::vector<BigCount> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("linear recurrence: Fibonacci with big values") {
    LinearRecurrence fib{{{1, 1}, {2, 1}}, {{0, 0}, {1, 1}}, 2};
    CHECK(eval_recurrence(fib, 10) == 55);
    CHECK(eval_recurrence(fib, 100) == BigCount("354224848179261915075"));
    CHECK(eval_recurrence_range(fib, 5, 9) == ints({5, 8, 13, 21, 34}));
    CHECK_THROWS_AS(eval_recurrence(fib, -1), InvalidParameter);
}

TEST_CASE("linear recurrence with negative taps") {
    // f(n) = 2 f(n-1) - f(n-2): arithmetic progression
    LinearRecurrence ap{{{1, 2}, {2, -1}}, {{1, 3}, {2, 7}}, 3};
    CHECK(eval_recurrence_range(ap, 1, 5) == ints({3, 7, 11, 15, 19}));
}

TEST_CASE("recurrence without enough initial terms is rejected") {
    LinearRecurrence bad{{{1, 1}, {3, 1}}, {{1, 1}, {2, 1}}, 3};
    CHECK_THROWS_AS(eval_recurrence(bad, 5), InvalidParameter);
}

TEST_CASE("rational expansion") {
    const auto geometric = expand_rational(polynomial({{0, 1}}), polynomial({{0, 1}, {1, -1}}), 5);
    CHECK(geometric.coefficients == ints({1, 1, 1, 1, 1, 1}));

    const auto a2 = expand_rational(polynomial({{1, 2}, {2, -2}, {4, 4}}),
                                    polynomial({{0, 1}, {1, -2}, {2, 1}, {4, -1}}), 6);
    CHECK(a2.coefficients == ints({0, 2, 2, 2, 6, 12, 20}));

    CHECK(expand_rational(polynomial({{0, 3}}), polynomial({{0, -1}}), 2).coefficients == ints({-3, 0, 0}));
    CHECK(expand_rational(polynomial({{1, 2}}), polynomial({{0, 1}, {1, -2}}), 0).coefficients == ints({0}));
    CHECK_THROWS_AS(expand_rational(polynomial({{0, 1}}), polynomial({{0, 2}}), 3), InvalidParameter);
}

TEST_CASE("rational expansion satisfies numerator = denominator * result") {
    const auto num = polynomial({{0, 1}, {2, -5}, {3, 7}});
    const auto den = polynomial({{0, -1}, {1, 3}, {5, 2}});
    const std::size_t terms = 25;
    const auto q = expand_rational(num, den, terms);
    for (std::size_t i = 0; i <= terms; ++i) {
        BigCount conv = 0;
        for (std::size_t j = 0; j <= i; ++j)
            if (j < den.length())
                conv += den[j] * q[i - j];
        CHECK(conv == (i < num.length() ? num[i] : BigCount(0)));
    }
}

TEST_CASE("b-file parsing") {
    const auto entries = parse_bfile("# comment\n1 2\n\n2 6\r\n3   16  \n10 12345678901234567890123\n");
    REQUIRE(entries.size() == 4);
    CHECK(entries[1].index == 2);
    CHECK(entries[1].value == 6);
    CHECK(entries[3].value == BigCount("12345678901234567890123"));
    CHECK(parse_bfile("").empty());

    try {
        parse_bfile("1 2\n2 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_bfile("1\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(read_bfile("/nonexistent/b000000.txt"), InvalidParameter);
}

TEST_CASE("b-file read from disk") {
    const std::string path = "test_sequence_bfile.txt";
    {
        std::ofstream out(path);
        out << "1 2\n2 2\n3 4\n";
    }
    const auto entries = read_bfile(path);
    std::remove(path.c_str());
    CHECK(entries.size() == 3);
    CHECK(entries[2].value == 4);
}

TEST_CASE("b-file comparison") {
    const std::vector<SequenceEntry> values{{1, 2}, {2, 2}, {3, 4}, {4, 6}};
    const auto same = compare_with_bfile(values, parse_bfile("1 2\n2 2\n3 4\n5 10\n"));
    CHECK(same.all_match());
    CHECK(same.matched == 3);
    CHECK(same.only_left == std::vector<std::int64_t>{4});
    CHECK(same.only_right == std::vector<std::int64_t>{5});

    const auto perturbed = compare_with_bfile(values, parse_bfile("1 2\n2 3\n3 4\n4 6\n"));
    REQUIRE(perturbed.mismatches.size() == 1);
    CHECK(perturbed.mismatches[0].index == 2);
    CHECK(perturbed.mismatches[0].expected == 2);
    CHECK(perturbed.mismatches[0].found == 3);
    CHECK(perturbed.to_json() ==
          R"({"matched":3,"mismatches":[{"index":2,"expected":"2","found":"3"}],"only_left":[],"only_right":[]})");

    CHECK_THROWS_AS(compare_with_bfile(values, {}), EmptyOverlap);
    CHECK_THROWS_AS(compare_with_bfile(values, parse_bfile("9 1\n")), EmptyOverlap);
}
