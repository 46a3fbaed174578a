#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moran/errors.hpp"
#include "moran/measure.hpp"

using namespace moran;

TEST_CASE("canonicalize_ratio on known values") {
    auto c1 = canonicalize_ratio(4, 9, 4); // (4/9)^(1/4) = (2/3)^(1/2)
    CHECK(c1.p == 2);
    CHECK(c1.q == 3);
    CHECK(c1.r == 2);

    auto c2 = canonicalize_ratio(1, 2, 1);
    CHECK(c2.p == 1);
    CHECK(c2.q == 2);
    CHECK(c2.r == 1);

    auto c3 = canonicalize_ratio(8, 27, 3); // integer cube roots: 2/3
    CHECK(c3.p == 2);
    CHECK(c3.q == 3);
    CHECK(c3.r == 1);

    auto c4 = canonicalize_ratio(1, 4, 2); // (1/4)^(1/2) = 1/2
    CHECK(c4.p == 1);
    CHECK(c4.q == 2);
    CHECK(c4.r == 1);

    auto c5 = canonicalize_ratio(16, 81, 6); // (16/81)^(1/6) = (2/3)^(2/3) -> (4/9)^(1/3)
    CHECK(c5.p == 4);
    CHECK(c5.q == 9);
    CHECK(c5.r == 3);
}

TEST_CASE("canonicalize_ratio rejects bad input") {
    CHECK_THROWS_AS(canonicalize_ratio(3, 2, 1), std::domain_error);  // p >= q
    CHECK_THROWS_AS(canonicalize_ratio(2, 2, 1), std::domain_error);  // p = q
    CHECK_THROWS_AS(canonicalize_ratio(2, 4, 1), std::domain_error);  // gcd > 1
    CHECK_THROWS_AS(canonicalize_ratio(1, 2, 0), std::domain_error);  // r < 1
    CHECK_THROWS_AS(canonicalize_ratio(0, 2, 1), std::domain_error);  // p < 1
}

TEST_CASE("canonicalize_ratio is idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pd(1, 40), qd(2, 60), rd(1, 12);
    int tried = 0;
    while (tried < 300) {
        long p = pd(rng), q = qd(rng), r = rd(rng);
        if (p >= q || gcd_int(Integer(p), Integer(q)) != 1)
            continue;
        ++tried;
        auto once = canonicalize_ratio(p, q, r);
        auto twice = canonicalize_ratio(once.p, once.q, once.r);
        CHECK(once == twice);
        // value preserved: (p/q)^(r') == (p'/q')^r exactly
        CHECK(pow_int(Integer(p), static_cast<unsigned long>(once.r)) *
                  pow_int(once.q, static_cast<unsigned long>(r)) ==
              pow_int(once.p, static_cast<unsigned long>(r)) *
                  pow_int(Integer(q), static_cast<unsigned long>(once.r)));
    }
}

TEST_CASE("digit_at reads preperiod then cycles the period") {
    auto seq = make_digit_sequence({3}, {5, 7});
    CHECK(digit_at(seq, 1) == 3);
    CHECK(digit_at(seq, 2) == 5);
    CHECK(digit_at(seq, 3) == 7);
    CHECK(digit_at(seq, 4) == 5);
    CHECK(digit_at(seq, 5) == 7);

    auto constant = make_digit_sequence({}, {3});
    CHECK(digit_at(constant, 10) == 3);

    CHECK_THROWS_AS(digit_at(seq, 0), std::domain_error);
}

TEST_CASE("digit_at is eventually periodic") {
    auto seq = make_digit_sequence({13, 2}, {3, 5, 7});
    auto pre = static_cast<std::int64_t>(seq.preperiod.size());
    auto per = static_cast<std::int64_t>(seq.period.size());
    for (std::int64_t n = pre + 1; n < pre + 40; ++n)
        CHECK(digit_at(seq, n + per) == digit_at(seq, n));
}

TEST_CASE("sup_digit covers preperiod and period") {
    CHECK(sup_digit(make_digit_sequence({3}, {5, 7})) == 7);
    CHECK(sup_digit(make_digit_sequence({}, {3})) == 3);
    CHECK(sup_digit(make_digit_sequence({13}, {5})) == 13);
}

TEST_CASE("sup_digit equals max over one full horizon of digit_at") {
    auto seq = make_digit_sequence({13, 2}, {3, 5, 7});
    std::int64_t horizon = static_cast<std::int64_t>(seq.preperiod.size() + seq.period.size());
    std::int64_t best = 0;
    for (std::int64_t n = 1; n <= horizon; ++n)
        best = std::max(best, digit_at(seq, n));
    CHECK(best == sup_digit(seq));
}

TEST_CASE("config parsing maps fields and canonicalizes") {
    auto m = parse_measure_config("# demo\np = 2\nq = 3\nr = 2\npreperiod = [3]\nperiod = [5, 7]\n");
    CHECK(m.ratio.p == 2);
    CHECK(m.ratio.q == 3);
    CHECK(m.ratio.r == 2);
    CHECK(m.digits.preperiod == std::vector<std::int64_t>{3});
    CHECK(m.digits.period == std::vector<std::int64_t>{5, 7});
    CHECK(sup_digit(m.digits) == 7);

    auto canon = parse_measure_config("p=4\nq=9\nr=4\nperiod=[5]");
    CHECK(canon.ratio.p == 2);
    CHECK(canon.ratio.q == 3);
    CHECK(canon.ratio.r == 2);

    // keys in any order, tabs and blank lines tolerated
    auto shuffled = parse_measure_config("period=[3]\n\n\tr = 1\nq =\t2\np = 1\n");
    CHECK(shuffled.ratio.q == 2);
}

TEST_CASE("config parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_measure_config("p=1\nq=2\nr=1\nperiod=[4]"), ParseError); // 4 not prime
    CHECK_THROWS_AS(parse_measure_config("p=1\nq=2\nr=1\nperiod=[]"), ParseError);  // empty period
    CHECK_THROWS_AS(parse_measure_config("p=3\nq=2\nr=1\nperiod=[3]"), ParseError); // p >= q
    CHECK_THROWS_AS(parse_measure_config("p=2\nq=4\nr=1\nperiod=[3]"), ParseError); // gcd > 1
    CHECK_THROWS_AS(parse_measure_config("p=1\nq=2\nperiod=[3]"), ParseError);      // missing r
    CHECK_THROWS_AS(parse_measure_config("p=1\np=1\nq=2\nr=1\nperiod=[3]"), ParseError); // dup
    CHECK_THROWS_AS(parse_measure_config("p=1\nq=2\nr=1\nperiod=[3]\nzzz=1"), ParseError);
    CHECK_THROWS_AS(parse_measure_config("p=1\nq=2\nr=1\nperiod=3"), ParseError);   // not a list
    CHECK_THROWS_AS(parse_measure_config("p=x\nq=2\nr=1\nperiod=[3]"), ParseError);
    CHECK_THROWS_AS(parse_measure_config("p 1\nq=2\nr=1\nperiod=[3]"), ParseError); // no '='
    CHECK_THROWS_AS(parse_measure_config("p=1\nq=2\nr=0\nperiod=[3]"), ParseError); // r < 1
    CHECK_THROWS_AS(parse_measure_config("p=1\nq=2\nr=1\nperiod=[1]"), ParseError); // 1 not prime

    try {
        parse_measure_config("p = 1\nq = 2\nr = 1\nperiod = [3,x]\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4); // error location is reported
    }
}

TEST_CASE("load_measure_config reports unreadable paths") {
    CHECK_THROWS_AS(load_measure_config("/nonexistent/measure.cfg"), ParseError);
}
