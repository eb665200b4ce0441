#include "oracles.hpp"

#include "thue/errors.hpp"
#include "thue/square.hpp"
#include "thue/tau.hpp"

#include <doctest.h>

#include <random>

using namespace thue;

namespace {

std::vector<Color> colors(std::string_view s)
{
    std::vector<Color> out;
    for (char c : s)
        out.push_back(*color_from_char(c));
    return out;
}

std::vector<Letter> random_word(std::mt19937_64& rng, std::size_t n, int symbols = 7)
{
    std::vector<Letter> w(n);
    for (auto& l : w)
        l = alphabet()[rng() % symbols];
    return w;
}

} // namespace

TEST_CASE("find_square examples")
{
    const auto w = find_square(colors("abab"), 2);
    REQUIRE(w);
    CHECK(*w == SquareWitness{0, 2});

    const auto aa = parse_word("1a 1a");
    CHECK_FALSE(find_square(aa, 2));
    CHECK(find_square(aa, 1) == SquareWitness{0, 1});

    CHECK_FALSE(find_square(tau_prefix(100), 1));
    CHECK_FALSE(find_square(std::vector<Letter>{}, 1));
}

TEST_CASE("find_square prefers the smallest start, then the smallest period")
{
    // "cabcabab": abab at 4 and cabcab at 0.
    CHECK(find_square(colors("cabcabab"), 2) == SquareWitness{0, 3});
    // "aaaa": period 1 at 0 first, then period 2.
    CHECK(find_square(colors("aaaa"), 1) == SquareWitness{0, 1});
    CHECK(find_square(colors("aaaa"), 2) == SquareWitness{0, 2});
}

TEST_CASE("incremental checker examples")
{
    BasicIncrementalChecker<Color> c(2);
    for (char ch : std::string("abcab"))
        CHECK_FALSE(c.append_and_check(*color_from_char(ch)));
    CHECK(c.append_and_check(Color::c) == SquareWitness{0, 3});

    IncrementalChecker l(2);
    CHECK_FALSE(l.append_and_check(parse_letter("0a")));
    CHECK_FALSE(l.append_and_check(parse_letter("0a")));
    CHECK(l.square_ending_here(1) == SquareWitness{0, 1});
}

TEST_CASE("incremental checker truncation")
{
    IncrementalChecker c(2);
    for (Letter l : parse_word("0a 1b 0a"))
        c.push(l);
    CHECK(c.append_and_check(parse_letter("1b")) == SquareWitness{0, 2});
    c.truncate(3);
    CHECK(c.size() == 3);
    CHECK_FALSE(c.append_and_check(parse_letter("1c")));
    c.truncate(3);
    CHECK(c.append_and_check(parse_letter("1b")) == SquareWitness{0, 2});
}

TEST_CASE("incremental checker agrees with the suffix oracle")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t min_period = 1 + trial % 3;
        // Small alphabets make squares common.
        const auto w = random_word(rng, 1 + rng() % 120, 2 + static_cast<int>(rng() % 6));
        IncrementalChecker c(min_period);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto hit = c.append_and_check(w[i]);
            REQUIRE(hit.has_value() == oracle::has_square_ending_at(w, i + 1, min_period));
            if (hit) {
                CHECK(hit->end() == i + 1);
                CHECK(hit->period >= min_period);
                CHECK(std::equal(w.begin() + hit->start, w.begin() + hit->start + hit->period,
                                 w.begin() + hit->start + hit->period));
            }
        }
    }
}

TEST_CASE("near_square_threat")
{
    // abcab: one letter short of abcabc.
    CHECK(near_square_threat<Color>(colors("abcab")) == 3);
    CHECK(near_square_threat<Color>(colors("abc")) == 0);
    CHECK(near_square_threat<Color>(colors("aba")) == 2);
    CHECK(near_square_threat<Color>(colors("")) == 0);
}

TEST_CASE("check_insertion_claim")
{
    const auto base = colors("abcacb");
    CHECK(check_insertion_claim<Color>(base, {2, 5}, Color::d));
    CHECK(check_insertion_claim<Color>(colors("abc"), {}, Color::d));

    CHECK_THROWS_AS(check_insertion_claim<Color>(colors("abab"), {1}, Color::d), PreconditionError);
    CHECK_THROWS_AS(check_insertion_claim<Color>(colors("abcd"), {1}, Color::d), PreconditionError);
    CHECK_THROWS_AS(check_insertion_claim<Color>(base, {2, 2}, Color::d), PreconditionError);
    CHECK_THROWS_AS(check_insertion_claim<Color>(base, {7}, Color::d), PreconditionError);
}

TEST_CASE("deleting an interleaved letter preserves a square")
{
    std::mt19937_64 rng(17);
    const Letter sep = separator_letter();
    for (int trial = 0; trial < 500; ++trial) {
        // x over the six non-separator letters, |x| >= 2.
        const auto x = random_word(rng, 2 + rng() % 10, 6);
        std::vector<Letter> xx = x;
        xx.insert(xx.end(), x.begin(), x.end());
        std::vector<Letter> word = random_word(rng, rng() % 6, 6);
        for (std::size_t i = 0; i < xx.size(); ++i) {
            word.push_back(xx[i]);
            if (rng() % 3 == 0 && i + 1 < xx.size())
                word.push_back(sep);
        }
        const auto tail = random_word(rng, rng() % 6, 6);
        word.insert(word.end(), tail.begin(), tail.end());
        CHECK(find_square(delete_letter(word, sep), 2).has_value());
    }
}
