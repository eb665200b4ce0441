// arena.cpp -- game play, adversaries, trace files and replay

#include "thue/arena.hpp"

#include "thue/errors.hpp"
#include "thue/square.hpp"

#include <algorithm>
#include <sstream>

namespace thue {

std::string format_move(const Move& move)
{
    std::string out(1, player_tag(move.player));
    out += ' ';
    out += format_letter(move.letter);
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

Move parse_move(std::string_view line)
{
    line = trim(line);
    if (line.size() < 4 || (line[0] != 'A' && line[0] != 'B') ||
        (line[1] != ' ' && line[1] != '\t'))
        throw ParseError("invalid move line '" + std::string(line) + "'");
    return Move{line[0] == 'A' ? Player::Ann : Player::Ben, parse_letter(trim(line.substr(2)))};
}

std::string format_trace(const Trace& trace)
{
    std::string out = "# mode=";
    out += to_string(trace.mode);
    out += '\n';
    if (trace.strategy.strict_pair_match)
        out += "# match=pair\n";
    for (const auto& [key, value] : trace.headers) {
        if (key == "mode" || key == "match")
            continue;
        out += "# " + key + "=" + value + "\n";
    }
    for (const auto& m : trace.moves)
        out += format_move(m) + "\n";
    return out;
}

Trace parse_trace(std::string_view text)
{
    Trace trace;
    bool have_mode = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const auto line = trim(raw);
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const auto body = trim(line.substr(1));
            const auto eq = body.find('=');
            if (eq == std::string_view::npos)
                continue;
            const std::string key(trim(body.substr(0, eq)));
            const std::string value(trim(body.substr(eq + 1)));
            if (key == "mode") {
                trace.mode = parse_starter(value);
                have_mode = true;
            } else if (key == "match") {
                if (value != "pair" && value != "track")
                    throw ParseError("unknown match rule '" + value + "'");
                trace.strategy.strict_pair_match = value == "pair";
            } else {
                trace.headers.emplace_back(key, value);
            }
            continue;
        }
        try {
            trace.moves.push_back(parse_move(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_mode && !trace.moves.empty())
        throw ParseError("trace has moves but no '# mode=' header");
    return trace;
}

GameWord GameRecord::word() const
{
    GameWord w;
    w.starter = mode;
    w.letters.reserve(moves.size());
    for (const auto& m : moves)
        w.letters.push_back(m.letter);
    return w;
}

Trace GameRecord::trace() const
{
    Trace t;
    t.mode = mode;
    t.strategy = strategy;
    t.moves = moves;
    return t;
}

// ---------------------------------------------------------------------------

BenAdversary BenAdversary::exhaustive()
{
    return BenAdversary(Kind::Exhaustive);
}

BenAdversary BenAdversary::random(std::uint64_t seed)
{
    BenAdversary b(Kind::Random);
    b.seed_ = seed;
    b.rng_.seed(seed);
    return b;
}

BenAdversary BenAdversary::greedy(std::size_t min_period)
{
    BenAdversary b(Kind::Greedy);
    b.min_period_ = std::max<std::size_t>(min_period, 1);
    return b;
}

BenAdversary BenAdversary::mirror()
{
    return BenAdversary(Kind::Mirror);
}

BenAdversary BenAdversary::scripted(std::vector<Letter> moves)
{
    BenAdversary b(Kind::Scripted);
    b.script_ = std::move(moves);
    return b;
}

std::optional<Letter> BenAdversary::next(const GameWord& word)
{
    switch (kind_) {
    case Kind::Exhaustive:
        throw StateError("the exhaustive adversary is driven by the verifier");
    case Kind::Random:
        // Raw engine output keeps the sequence identical across standard libraries.
        return alphabet()[rng_() % Letter::kCount];
    case Kind::Mirror: {
        for (std::size_t i = word.size(); i-- > 0;) {
            if (word.player_at(i) == Player::Ann)
                return word.letters[i];
        }
        return alphabet()[0];
    }
    case Kind::Scripted:
        if (cursor_ >= script_.size())
            return std::nullopt;
        return script_[cursor_++];
    case Kind::Greedy: {
        std::vector<Letter> trial = word.letters;
        trial.push_back(alphabet()[0]);
        std::optional<Letter> best;
        std::size_t best_score = 0;
        for (Letter l : alphabet()) {
            trial.back() = l;
            const std::span<const Letter> view(trial);
            const std::size_t n = trial.size();
            bool completes = false;
            for (std::size_t p = min_period_; 2 * p <= n && !completes; ++p)
                completes = std::equal(view.end() - 2 * p, view.end() - p, view.end() - p);
            const std::size_t score = completes ? n + 1 : near_square_threat(view);
            if (!best || score > best_score) {
                best = l;
                best_score = score;
            }
        }
        return best;
    }
    }
    return std::nullopt;
}

std::string_view to_string(BenAdversary::Kind kind)
{
    switch (kind) {
    case BenAdversary::Kind::Exhaustive:
        return "exhaustive";
    case BenAdversary::Kind::Random:
        return "random";
    case BenAdversary::Kind::Greedy:
        return "greedy";
    case BenAdversary::Kind::Mirror:
        return "mirror";
    case BenAdversary::Kind::Scripted:
        return "scripted";
    }
    return "?";
}

BenAdversary::Kind parse_adversary_kind(std::string_view text)
{
    for (auto k : {BenAdversary::Kind::Exhaustive, BenAdversary::Kind::Random,
                   BenAdversary::Kind::Greedy, BenAdversary::Kind::Mirror,
                   BenAdversary::Kind::Scripted}) {
        if (to_string(k) == text)
            return k;
    }
    throw ParseError("unknown adversary '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

namespace {

// Shared bookkeeping of play_game and replay.
class GameBuilder
{
public:
    GameBuilder(Starter mode, const StrategyOptions& strategy, std::size_t min_period)
      : checker_(1)
    {
        record_.mode = mode;
        record_.strategy = strategy;
        record_.min_period = std::max<std::size_t>(min_period, 1);
    }

    /// Appends; returns true when the game is over.
    bool append(Player player, Letter letter)
    {
        record_.moves.push_back({player, letter});
        checker_.push(letter);
        if (auto w = checker_.square_ending_here(record_.min_period)) {
            record_.square = *w;
            return true;
        }
        if (record_.min_period > 1) {
            if (auto w = checker_.square_ending_here(1); w && w->period < record_.min_period)
                record_.trivial_squares.push_back(*w);
        }
        return false;
    }

    GameRecord& record() { return record_; }

private:
    GameRecord record_;
    IncrementalChecker checker_;
};

} // namespace

GameRecord play_game(Starter mode, BenAdversary& adversary, std::size_t rounds,
                     const PlayOptions& options)
{
    if (adversary.kind() == BenAdversary::Kind::Exhaustive)
        throw PreconditionError("play_game needs a concrete adversary");
    GameBuilder game(mode, options.strategy, options.min_period);
    auto [opening, state] = initial_state(mode, options.strategy);
    if (opening) {
        game.record().ann_rules.push_back(Rule::Opening);
        if (game.append(Player::Ann, *opening))
            return game.record();
    }
    for (std::size_t r = 0; r < rounds; ++r) {
        const auto ben = adversary.next(game.record().word());
        if (!ben)
            break;
        if (game.append(Player::Ben, *ben))
            break;
        const auto reply = respond(state, *ben);
        state = reply.state;
        game.record().ann_rules.push_back(reply.rule);
        if (game.append(Player::Ann, reply.letter))
            break;
    }
    return game.record();
}

GameRecord replay(const Trace& trace, std::size_t min_period)
{
    GameBuilder game(trace.mode, trace.strategy, min_period);
    auto [opening, state] = initial_state(trace.mode, trace.strategy);
    std::optional<Letter> pending = opening;
    Rule pending_rule = Rule::Opening;

    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        const Move& m = trace.moves[i];
        const Player expected = player_at(trace.mode, i);
        if (m.player != expected) {
            throw DivergenceError("move " + std::to_string(i + 1) + " is tagged " +
                                  player_tag(m.player) + " but it is " +
                                  player_tag(expected) + "'s turn");
        }
        if (game.record().square)
            throw DivergenceError("trace continues after the game ended at move " +
                                  std::to_string(i));
        if (m.player == Player::Ann) {
            if (pending != m.letter) {
                throw DivergenceError("move " + std::to_string(i + 1) + ": recorded A " +
                                      format_letter(m.letter) + ", strategy plays " +
                                      (pending ? format_letter(*pending) : std::string("nothing")));
            }
            game.record().ann_rules.push_back(pending_rule);
            pending.reset();
        } else {
            const auto reply = respond(state, m.letter);
            state = reply.state;
            pending = reply.letter;
            pending_rule = reply.rule;
        }
        game.append(m.player, m.letter);
    }
    return game.record();
}

std::size_t favourite_changes(const GameRecord& record, const SquareWitness& window)
{
    std::size_t ann_index = 0;
    std::size_t changes = 0;
    for (std::size_t i = 0; i < record.moves.size(); ++i) {
        if (record.moves[i].player != Player::Ann)
            continue;
        if (i >= window.start && i < window.end() && ann_index < record.ann_rules.size()) {
            const Rule r = record.ann_rules[ann_index];
            if (r == Rule::Switch || r == Rule::LeaveSeparator)
                ++changes;
        }
        ++ann_index;
    }
    return changes;
}

} // namespace thue
