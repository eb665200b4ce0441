// verify.cpp -- bounded exhaustive search over Ben's move sequences
//
// The tree is cut at split_depth into 7^k subtrees, one per prefix of Ben
// moves, searched independently and merged in prefix order. A node above
// the cut is shared by several subtrees; it is counted only by the one
// whose remaining prefix moves are all the first letter, which is also the
// earliest of them in depth-first order. Sequential and threaded runs
// therefore produce the same report.

#include "thue/arena.hpp"

#include "thue/errors.hpp"
#include "thue/square.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace thue {

std::string_view to_string(InvariantKind kind)
{
    switch (kind) {
    case InvariantKind::DoubleSeparator:
        return "double-separator";
    case InvariantKind::TrackCollision:
        return "track-collision";
    case InvariantKind::PeriodThreeSquare:
        return "period-three-square";
    }
    return "?";
}

bool VerificationReport::clean() const
{
    if (counterexample)
        return false;
    for (auto c : invariant_counts) {
        if (c)
            return false;
    }
    return true;
}

bool VerificationReport::same_outcome(const VerificationReport& o) const
{
    return mode == o.mode && depth == o.depth && min_period == o.min_period &&
           strategy == o.strategy && nodes_visited == o.nodes_visited &&
           square_events == o.square_events && losing_sequences == o.losing_sequences &&
           invariant_counts == o.invariant_counts && counterexample == o.counterexample &&
           violations == o.violations;
}

namespace {

struct SubtreeResult
{
    std::uint64_t nodes = 0;
    std::uint64_t square_events = 0;
    std::uint64_t losing = 0;
    std::array<std::uint64_t, kInvariantKinds> invariant_counts{};
    std::optional<Counterexample> counterexample;
    std::vector<InvariantViolation> violations;
};

class SubtreeSearch
{
public:
    SubtreeSearch(Starter mode, std::size_t depth, const VerifyOptions& options,
                  std::vector<Letter> prefix)
      : mode_(mode), depth_(depth), options_(options), prefix_(std::move(prefix)),
        owned_from_(prefix_.size() + 1, true), checker_(1)
    {
        for (std::size_t i = prefix_.size(); i-- > 0;)
            owned_from_[i] = owned_from_[i + 1] && prefix_[i] == alphabet()[0];
        path_.reserve(2 * depth + 1);
        rules_.reserve(2 * depth + 1);
    }

    SubtreeResult run()
    {
        auto [opening, state] = initial_state(mode_, options_.strategy);
        std::size_t squares = 0;
        if (opening)
            squares += place(Player::Ann, *opening, Rule::Opening, owned_from_[0]);
        descend(0, state, squares);
        return std::move(result_);
    }

private:
    bool owned_at(std::size_t level) const
    {
        return owned_from_[std::min(level + 1, prefix_.size())];
    }

    void descend(std::size_t level, const AnnState& state, std::size_t squares_on_path)
    {
        if (level == depth_) {
            ++result_.nodes;
            if (squares_on_path)
                ++result_.losing;
            return;
        }
        const bool fixed = level < prefix_.size();
        const bool owned = owned_at(level);
        for (Letter ben : alphabet()) {
            if (fixed && ben != prefix_[level])
                continue;
            const std::size_t mark = path_.size();
            std::size_t squares = squares_on_path;
            squares += place(Player::Ben, ben, std::nullopt, owned);

            const auto reply = respond(state, ben);
            const bool collision = reply.letter.track() == ben.track();
            const bool doubled = reply.letter.is_separator() && state.last_emitted &&
                                 state.last_emitted->is_separator();
            squares += place(Player::Ann, reply.letter, reply.rule, owned);
            if (owned) {
                if (collision)
                    note(InvariantKind::TrackCollision, path_.size() - 1);
                if (doubled)
                    note(InvariantKind::DoubleSeparator, path_.size() - 1);
            }

            descend(level + 1, reply.state, squares);

            path_.resize(mark);
            rules_.resize(mark);
            checker_.truncate(mark);
        }
    }

    // Appends a letter and runs the per-position checks; returns 1 if a
    // square of period >= min_period ends at it.
    std::size_t place(Player player, Letter letter, std::optional<Rule> rule, bool owned)
    {
        path_.push_back({player, letter});
        rules_.push_back(rule);
        checker_.push(letter);
        const auto w = checker_.square_ending_here(options_.min_period);
        if (owned) {
            if (period_three_ends_here())
                note(InvariantKind::PeriodThreeSquare, path_.size() - 1);
            if (w) {
                ++result_.square_events;
                if (!result_.counterexample)
                    result_.counterexample = Counterexample{path_, *w, changes_in(*w)};
            }
        }
        return w ? 1 : 0;
    }

    bool period_three_ends_here() const
    {
        const auto word = checker_.word();
        const std::size_t n = word.size();
        return n >= 6 && std::equal(word.end() - 6, word.end() - 3, word.end() - 3);
    }

    std::size_t changes_in(const SquareWitness& w) const
    {
        std::size_t changes = 0;
        for (std::size_t i = w.start; i < w.end(); ++i) {
            if (rules_[i] && (*rules_[i] == Rule::Switch || *rules_[i] == Rule::LeaveSeparator))
                ++changes;
        }
        return changes;
    }

    void note(InvariantKind kind, std::size_t position)
    {
        ++result_.invariant_counts[static_cast<std::size_t>(kind)];
        if (result_.violations.size() < options_.max_recorded_violations)
            result_.violations.push_back(InvariantViolation{kind, position, path_});
    }

    Starter mode_;
    std::size_t depth_;
    const VerifyOptions& options_;
    std::vector<Letter> prefix_;
    std::vector<bool> owned_from_;
    IncrementalChecker checker_;
    std::vector<Move> path_;
    std::vector<std::optional<Rule>> rules_;
    SubtreeResult result_;
};

std::uint64_t power_of_seven(std::size_t k, std::uint64_t cap)
{
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v > cap / 7)
            return cap + 1;
        v *= 7;
    }
    return v;
}

std::vector<Letter> prefix_for(std::size_t index, std::size_t k)
{
    std::vector<Letter> prefix(k);
    for (std::size_t i = k; i-- > 0;) {
        prefix[i] = alphabet()[index % Letter::kCount];
        index /= Letter::kCount;
    }
    return prefix;
}

} // namespace

VerificationReport exhaustive_verify(Starter mode, std::size_t depth, const VerifyOptions& options)
{
    if (depth == 0)
        throw DepthError("depth must be at least 1");
    const std::uint64_t leaves = power_of_seven(depth, options.max_nodes);
    if (leaves > options.max_nodes) {
        throw DepthError("7^" + std::to_string(depth) + " Ben sequences exceed the node limit of " +
                         std::to_string(options.max_nodes));
    }

    const auto started = std::chrono::steady_clock::now();
    const std::size_t k = std::min(options.split_depth, depth);
    const std::size_t tasks = static_cast<std::size_t>(power_of_seven(k, ~std::uint64_t{0}));
    std::vector<SubtreeResult> results(tasks);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks;)
            results[t] = SubtreeSearch(mode, depth, options, prefix_for(t, k)).run();
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    VerificationReport report;
    report.mode = mode;
    report.depth = depth;
    report.min_period = options.min_period;
    report.strategy = options.strategy;
    for (auto& r : results) {
        report.nodes_visited += r.nodes;
        report.square_events += r.square_events;
        report.losing_sequences += r.losing;
        for (std::size_t i = 0; i < kInvariantKinds; ++i)
            report.invariant_counts[i] += r.invariant_counts[i];
        if (!report.counterexample && r.counterexample)
            report.counterexample = std::move(r.counterexample);
        for (auto& v : r.violations) {
            if (report.violations.size() >= options.max_recorded_violations)
                break;
            report.violations.push_back(std::move(v));
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

} // namespace thue
