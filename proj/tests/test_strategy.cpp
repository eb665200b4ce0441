#include "oracles.hpp"

#include "thue/errors.hpp"
#include "thue/strategy.hpp"
#include "thue/tau.hpp"

#include <doctest.h>

#include <random>

using namespace thue;

namespace {

AnnState steady(int favourite, const char* ben_prev, std::size_t count)
{
    AnnState s;
    s.mode = Starter::AnnStarts;
    s.phase = Phase::AwaitingBen;
    s.favourite_track = favourite;
    s.count = count;
    s.ben_prev = parse_letter(ben_prev);
    s.last_emitted = favourite == 2 ? separator_letter() : make_letter(favourite, tau_at(count - 1));
    return s;
}

} // namespace

TEST_CASE("initial_state")
{
    auto [open_a, a] = initial_state(Starter::AnnStarts);
    REQUIRE(open_a);
    CHECK(*open_a == parse_letter("0a"));
    CHECK(a.phase == Phase::Initial);

    const auto r = respond(a, parse_letter("0c"));
    CHECK(r.letter == parse_letter("1b"));
    CHECK(r.rule == Rule::Opening);
    CHECK(r.state.count == 3);

    // Ben on track 1 or 2 leaves Ann on track 0, still colored b.
    CHECK(respond(a, parse_letter("1a")).letter == parse_letter("0b"));
    CHECK(respond(a, parse_letter("2d")).letter == parse_letter("0b"));

    auto [open_b, b] = initial_state(Starter::BenStarts);
    CHECK_FALSE(open_b);
    CHECK(b.count == 1);
    const auto rb = respond(b, parse_letter("0b"));
    CHECK(rb.letter == parse_letter("1a"));
    CHECK(rb.state.count == 2);
    CHECK(rb.state.ben_prev == parse_letter("0b"));
}

TEST_CASE("switch onto the separator keeps the counter")
{
    const auto s = steady(0, "1a", 5);
    const auto r = respond(s, parse_letter("0b"));
    CHECK(r.rule == Rule::Switch);
    CHECK(r.letter == separator_letter());
    CHECK(r.state.count == 5);
    CHECK(r.state.favourite_track == 2);
}

TEST_CASE("switch away from the separator's neighbour")
{
    // Ben's previous move on (2,d): 3 - 2 - 1 = 0.
    const auto r = respond(steady(1, "2d", 4), parse_letter("1c"));
    CHECK(r.rule == Rule::Switch);
    CHECK(r.letter == make_letter(0, tau_at(4)));
}

TEST_CASE("leaving the separator")
{
    AnnState s = steady(2, "0b", 6);
    const auto r = respond(s, separator_letter());
    CHECK(r.rule == Rule::LeaveSeparator);
    CHECK(r.letter == make_letter(1, tau_at(6)));
    CHECK(r.state.count == 7);

    CHECK(respond(s, parse_letter("0a")).letter.track() == 1);
    CHECK(respond(s, parse_letter("1a")).letter.track() == 0);

    s.ben_prev = separator_letter();
    CHECK_THROWS_AS(respond(s, separator_letter()), StateError);
}

TEST_CASE("keep the favourite when Ben plays another track")
{
    const auto r = respond(steady(1, "0a", 3), parse_letter("0c"));
    CHECK(r.rule == Rule::Keep);
    CHECK(r.letter == make_letter(1, tau_at(3)));
    CHECK(r.state.count == 4);
}

TEST_CASE("unstarted state is rejected")
{
    CHECK_THROWS_AS(respond(AnnState{}, parse_letter("0a")), StateError);
}

TEST_CASE("strict pair matching only switches on an exact repeat")
{
    StrategyOptions strict{true};
    auto [open, s] = initial_state(Starter::AnnStarts, strict);
    s = respond(s, parse_letter("1a")).state; // Ann 0b
    CHECK(s.last_emitted == parse_letter("0b"));
    const auto same_track = respond(s, parse_letter("0c"));
    CHECK(same_track.rule == Rule::Keep);
    CHECK(same_track.letter.track() == 0);
    const auto exact = respond(s, parse_letter("0b"));
    CHECK(exact.rule == Rule::Switch);
    CHECK(exact.letter == separator_letter());
}

TEST_CASE("random traces satisfy the strategy invariants")
{
    std::mt19937_64 rng(11);
    for (Starter mode : {Starter::AnnStarts, Starter::BenStarts}) {
        for (int game = 0; game < 300; ++game) {
            auto [open, state] = initial_state(mode);
            std::vector<Letter> ann;
            if (open)
                ann.push_back(*open);
            std::vector<Letter> bens;
            for (int round = 0; round < 60; ++round) {
                const Letter ben = alphabet()[rng() % 7];
                bens.push_back(ben);
                const auto r = respond(state, ben);
                const auto again = respond(state, ben);
                CHECK(again.letter == r.letter);
                CHECK(again.state == r.state);

                CHECK(r.letter.track() != ben.track());
                if (!ann.empty())
                    CHECK_FALSE((r.letter.is_separator() && ann.back().is_separator()));
                CHECK(r.state.count == state.count + (r.letter.is_separator() ? 0 : 1));
                CHECK((r.state.favourite_track == 2) == r.letter.is_separator());
                ann.push_back(r.letter);
                state = r.state;
            }
            std::vector<Color> colors;
            for (Letter l : ann) {
                if (!l.is_separator())
                    colors.push_back(l.color());
            }
            CHECK(colors == tau_prefix(colors.size()));

            // Same game through the closed-form oracle.
            const auto word = oracle::game_word(mode, bens);
            std::vector<Letter> oracle_ann;
            for (std::size_t i = 0; i < word.size(); ++i) {
                if (player_at(mode, i) == Player::Ann)
                    oracle_ann.push_back(word[i]);
            }
            CHECK(oracle_ann == ann);
        }
    }
}
