#include "oracles.hpp"

#include "thue/arena.hpp"
#include "thue/errors.hpp"
#include "thue/report.hpp"

#include <doctest.h>

using namespace thue;

namespace {

struct OracleSweep
{
    std::uint64_t sequences = 0;
    std::uint64_t losing = 0;
    std::optional<std::vector<Letter>> first_loss; // word truncated at the first square's end
};

OracleSweep sweep(Starter mode, std::size_t depth)
{
    OracleSweep out;
    oracle::for_each_sequence(depth, [&](const std::vector<Letter>& bens) {
        ++out.sequences;
        const auto w = oracle::game_word(mode, bens);
        if (!oracle::has_square(w, 2))
            return;
        ++out.losing;
        if (out.first_loss)
            return;
        for (std::size_t end = 1; end <= w.size(); ++end) {
            if (oracle::has_square_ending_at(w, end, 2)) {
                out.first_loss = std::vector<Letter>(w.begin(), w.begin() + end);
                break;
            }
        }
    });
    return out;
}

std::vector<Letter> letters_of(const std::vector<Move>& moves)
{
    std::vector<Letter> out;
    for (const auto& m : moves)
        out.push_back(m.letter);
    return out;
}

} // namespace

TEST_CASE("depth 1 visits seven leaves")
{
    const auto r = exhaustive_verify(Starter::AnnStarts, 1);
    CHECK(r.nodes_visited == 7);
    CHECK(r.clean());
    CHECK(r.square_events == 0);
}

TEST_CASE("full enumeration count at depth 6")
{
    for (Starter mode : {Starter::AnnStarts, Starter::BenStarts}) {
        const auto r = exhaustive_verify(mode, 6);
        CHECK(r.nodes_visited == 117'649);
    }
}

TEST_CASE("verifier agrees with the brute-force sweep")
{
    // Losing counts frozen from an independent run: (A,5)=1, (A,6)=14, (B,6)=7.
    const std::tuple<Starter, std::size_t, std::uint64_t> frozen[] = {
        {Starter::AnnStarts, 4, 0}, {Starter::BenStarts, 4, 0}, {Starter::AnnStarts, 5, 1},
        {Starter::BenStarts, 5, 0}, {Starter::AnnStarts, 6, 14}, {Starter::BenStarts, 6, 7},
    };
    for (const auto& [mode, depth, losing] : frozen) {
        CAPTURE(depth);
        const auto o = sweep(mode, depth);
        CHECK(o.losing == losing);
        const auto r = exhaustive_verify(mode, depth);
        CHECK(r.nodes_visited == o.sequences);
        CHECK(r.losing_sequences == o.losing);
        CHECK(r.counterexample.has_value() == o.first_loss.has_value());
        if (r.counterexample && o.first_loss)
            CHECK(letters_of(r.counterexample->trace) == *o.first_loss);
    }
}

TEST_CASE("reports do not depend on the split or the job count")
{
    for (Starter mode : {Starter::AnnStarts, Starter::BenStarts}) {
        VerifyOptions base;
        base.split_depth = 0;
        const auto ref = exhaustive_verify(mode, 6, base);
        for (std::size_t split : {1u, 2u, 3u, 6u}) {
            for (unsigned jobs : {1u, 4u}) {
                VerifyOptions o;
                o.split_depth = split;
                o.jobs = jobs;
                CAPTURE(split);
                CAPTURE(jobs);
                CHECK(exhaustive_verify(mode, 6, o).same_outcome(ref));
            }
        }
    }
}

TEST_CASE("counterexample replays to its witness")
{
    const auto r = exhaustive_verify(Starter::AnnStarts, 6);
    REQUIRE(r.counterexample);
    Trace t;
    t.mode = Starter::AnnStarts;
    t.moves = r.counterexample->trace;
    const auto rec = replay(t);
    REQUIRE(rec.square);
    CHECK(*rec.square == r.counterexample->witness);
    CHECK(favourite_changes(rec, *rec.square) == r.counterexample->favourite_changes);

    // And through the JSON report.
    const auto j = to_json(r);
    CHECK(replay(trace_from_json(j)) == rec);
    CHECK(j["nodes"] == 117'649);
    CHECK(j["counterexample"]["witness"]["start"] == r.counterexample->witness.start);
}

TEST_CASE("invariants hold at depth 6")
{
    for (Starter mode : {Starter::AnnStarts, Starter::BenStarts}) {
        const auto r = exhaustive_verify(mode, 6);
        for (auto c : r.invariant_counts)
            CHECK(c == 0);
        CHECK(r.violations.empty());
    }
}

TEST_CASE("strict pair matching collides on tracks")
{
    VerifyOptions o;
    o.strategy.strict_pair_match = true;
    const auto r = exhaustive_verify(Starter::AnnStarts, 4, o);
    CHECK(r.nodes_visited == 2401);
    CHECK(r.invariant_counts[static_cast<std::size_t>(InvariantKind::TrackCollision)] > 0);
    REQUIRE_FALSE(r.violations.empty());
    const auto& v = r.violations.front();
    CHECK(v.trace.size() == v.position + 1);
    CHECK(v.trace[v.position].player == Player::Ann);
    CHECK(r.violations.size() <= o.max_recorded_violations);
}

TEST_CASE("depth limits")
{
    CHECK_THROWS_AS(exhaustive_verify(Starter::AnnStarts, 0), DepthError);
    VerifyOptions o;
    o.max_nodes = 1000;
    CHECK_THROWS_AS(exhaustive_verify(Starter::AnnStarts, 4, o), DepthError);
    CHECK_NOTHROW(exhaustive_verify(Starter::AnnStarts, 3, o));
    CHECK_THROWS_AS(exhaustive_verify(Starter::AnnStarts, 40), DepthError);
}
