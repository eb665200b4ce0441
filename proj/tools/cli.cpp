// cli.cpp -- subcommands: tau, verify, play, check, replay, serve

#include "cli.hpp"

#include "thue/arena.hpp"
#include "thue/errors.hpp"
#include "thue/report.hpp"
#include "thue/service.hpp"
#include "thue/square.hpp"
#include "thue/tau.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace thue::cli {

namespace {

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw IoError("error reading " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write " + path);
}

std::uint64_t node_limit_from_env(std::uint64_t fallback)
{
    const char* raw = std::getenv("THUE_ARENA_MAX_NODES");
    if (!raw || !*raw)
        return fallback;
    char* end = nullptr;
    const auto v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0)
        throw UsageError(std::string("THUE_ARENA_MAX_NODES must be a positive integer, got '") +
                         raw + "'");
    return v;
}

std::string describe(const SquareWitness& w)
{
    return "square at " + std::to_string(w.start) + " period " + std::to_string(w.period);
}

struct Config
{
    std::string mode = "ann-starts";
    std::string match = "track";
    std::string format = "text";
    std::size_t min_period = 2;
    std::string output;

    // tau
    std::size_t length = 0;
    // verify
    std::size_t depth = 0;
    unsigned jobs = 1;
    std::size_t split_depth = 2;
    // play
    std::string ben = "random";
    std::size_t rounds = 100;
    std::optional<std::uint64_t> seed;
    std::string script;
    // check / replay
    std::string input;
    // serve
    ServiceConfig service;
    std::string trace_dir;
    bool debug = false;
};

StrategyOptions strategy_of(const Config& c)
{
    return StrategyOptions{c.match == "pair"};
}

void emit(const Config& c, const std::string& text, std::ostream& out)
{
    if (c.output.empty())
        out << text;
    else
        write_file(c.output, text);
}

int cmd_tau(const Config& c, std::ostream& out)
{
    std::string line;
    line.reserve(c.length);
    for (Color col : tau_prefix(c.length))
        line += to_char(col);
    emit(c, line + "\n", out);
    return kOk;
}

int cmd_verify(const Config& c, std::ostream& out)
{
    VerifyOptions opts;
    opts.min_period = c.min_period;
    opts.strategy = strategy_of(c);
    opts.jobs = c.jobs;
    opts.split_depth = c.split_depth;
    opts.max_nodes = node_limit_from_env(opts.max_nodes);

    std::vector<Starter> modes;
    if (c.mode == "both")
        modes = {Starter::AnnStarts, Starter::BenStarts};
    else
        modes = {parse_starter(c.mode)};

    std::vector<VerificationReport> reports;
    for (Starter m : modes)
        reports.push_back(exhaustive_verify(m, c.depth, opts));

    bool found = false;
    std::ostringstream text;
    if (c.format == "json") {
        nlohmann::json j;
        if (reports.size() == 1) {
            j = to_json(reports.front());
        } else {
            j = nlohmann::json::array();
            for (const auto& r : reports)
                j.push_back(to_json(r));
        }
        text << j.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        found = found || r.counterexample;
        if (c.format == "json")
            continue;
        text << "mode=" << to_string(r.mode) << " depth=" << r.depth << " nodes=" << r.nodes_visited
             << " squares=" << r.square_events << " losing=" << r.losing_sequences;
        for (std::size_t i = 0; i < kInvariantKinds; ++i)
            text << " " << to_string(static_cast<InvariantKind>(i)) << "=" << r.invariant_counts[i];
        text << " elapsed_ms=" << static_cast<long long>(r.elapsed_ms) << "\n";
        if (r.counterexample) {
            const auto& cx = *r.counterexample;
            text << "counterexample: " << describe(cx.witness) << " (0-based), favourite changes "
                 << cx.favourite_changes << "\n";
            for (const auto& m : cx.trace)
                text << "  " << format_move(m) << "\n";
        } else {
            text << "counterexample: none\n";
        }
    }
    emit(c, text.str(), out);
    return found ? kFinding : kOk;
}

int cmd_play(const Config& c, std::ostream& out)
{
    const Starter mode = parse_starter(c.mode);
    const auto kind = parse_adversary_kind(c.ben);
    BenAdversary ben = BenAdversary::mirror();
    Trace meta;
    meta.headers.emplace_back("ben", c.ben);
    switch (kind) {
    case BenAdversary::Kind::Random: {
        const std::uint64_t seed = c.seed ? *c.seed : std::random_device{}();
        ben = BenAdversary::random(seed);
        meta.headers.emplace_back("seed", std::to_string(seed));
        break;
    }
    case BenAdversary::Kind::Greedy:
        ben = BenAdversary::greedy(c.min_period);
        break;
    case BenAdversary::Kind::Mirror:
        break;
    case BenAdversary::Kind::Scripted:
        ben = BenAdversary::scripted(parse_word(c.script));
        break;
    case BenAdversary::Kind::Exhaustive:
        throw UsageError("use `verify` for exhaustive search");
    }

    const GameRecord rec = play_game(mode, ben, c.rounds, {c.min_period, strategy_of(c)});
    Trace trace = rec.trace();
    trace.headers = meta.headers;

    std::string text;
    if (c.format == "json") {
        auto j = to_json(trace);
        j["square"] = rec.square ? to_json(*rec.square) : nlohmann::json(nullptr);
        for (const auto& [k, v] : trace.headers)
            j[k] = v;
        text = j.dump(2) + "\n";
    } else {
        text = format_trace(trace);
        text += rec.square ? "# " + describe(*rec.square) + " (0-based)\n" : "# square-free\n";
    }
    emit(c, text, out);
    return rec.square ? kFinding : kOk;
}

int cmd_check(const Config& c, std::ostream& out)
{
    const auto word = parse_word(read_file(c.input));
    const auto w = find_square(std::span<const Letter>(word), c.min_period);
    out << (w ? describe(*w) : std::string("square-free")) << "\n";
    return w ? kFinding : kOk;
}

int cmd_replay(const Config& c, std::ostream& out)
{
    const std::string text = read_file(c.input);
    Trace trace;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            trace = trace_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
    } else {
        trace = parse_trace(text);
    }
    const GameRecord rec = replay(trace, c.min_period);
    std::string body = format_trace(rec.trace());
    body += rec.square ? "# " + describe(*rec.square) + " (0-based)\n" : "# square-free\n";
    emit(c, body, out);
    return rec.square ? kFinding : kOk;
}

int cmd_serve(Config c, std::ostream& out, std::ostream& err)
{
    if (!c.trace_dir.empty())
        c.service.trace_dir = c.trace_dir;
    c.service.debug_endpoints = c.debug;
    SessionServer server(c.service);
    const int port = server.bind();
    if (port < 0) {
        err << "thue serve: cannot bind " << c.service.host << ":" << c.service.port << "\n";
        return kIoError;
    }
    out << "listening on http://" << c.service.host << ":" << port << std::endl;
    return server.listen() ? kOk : kIoError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Ann's favourite-letter strategy for the non-repetitive game on 7 letters"};
    app.require_subcommand(1);

    const std::vector<std::string> modes = {"ann-starts", "ben-starts"};
    const std::vector<std::string> matches = {"track", "pair"};
    const std::vector<std::string> formats = {"text", "json"};

    auto* tau = app.add_subcommand("tau", "print a prefix of tau as a/b/c characters");
    tau->add_option("--length,-n", c.length, "number of characters")->required();
    tau->add_option("--output,-o", c.output, "write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "exhaustively check every Ben sequence up to a depth");
    verify->add_option("--depth,-d", c.depth, "number of Ben moves")->required()->check(
        CLI::PositiveNumber);
    verify->add_option("--mode,-m", c.mode, "ann-starts, ben-starts or both")
        ->check(CLI::IsMember({"ann-starts", "ben-starts", "both"}));
    verify->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--split-depth", c.split_depth, "Ben moves fixed per work unit");
    verify->add_option("--min-period", c.min_period, "smallest period that loses the game")
        ->check(CLI::PositiveNumber);
    verify->add_option("--match", c.match, "favourite match rule")->check(CLI::IsMember(matches));
    verify->add_option("--format", c.format)->check(CLI::IsMember(formats));
    verify->add_option("--output,-o", c.output, "write the report to a file");

    auto* play = app.add_subcommand("play", "play one game against a Ben adversary and print its trace");
    play->add_option("--ben,-b", c.ben, "random, greedy, mirror or scripted")
        ->required()
        ->check(CLI::IsMember({"random", "greedy", "mirror", "scripted"}));
    play->add_option("--rounds,-r", c.rounds, "Ben moves to play");
    play->add_option("--seed,-s", c.seed, "seed for the random adversary (echoed in the trace)");
    play->add_option("--script", c.script, "Ben's moves for the scripted adversary, e.g. \"0c 1a\"");
    play->add_option("--mode,-m", c.mode)->check(CLI::IsMember(modes));
    play->add_option("--min-period", c.min_period)->check(CLI::PositiveNumber);
    play->add_option("--match", c.match)->check(CLI::IsMember(matches));
    play->add_option("--format", c.format)->check(CLI::IsMember(formats));
    play->add_option("--output,-o", c.output, "write the trace to a file");

    auto* check = app.add_subcommand(
        "check", "report the first square in a word file (positions are 0-based)");
    check->add_option("file", c.input, "whitespace-separated letter tokens")->required();
    check->add_option("--min-period", c.min_period)->check(CLI::PositiveNumber);

    auto* replay_cmd = app.add_subcommand("replay", "re-run the strategy over a trace or JSON report");
    replay_cmd->add_option("file", c.input, "trace file or JSON")->required();
    replay_cmd->add_option("--min-period", c.min_period)->check(CLI::PositiveNumber);
    replay_cmd->add_option("--output,-o", c.output);

    auto* serve = app.add_subcommand("serve", "start the HTTP session service");
    serve->add_option("--port,-p", c.service.port, "0 picks a free port")->required();
    serve->add_option("--host", c.service.host);
    serve->add_option("--trace-dir", c.trace_dir, "append one trace file per session here");
    serve->add_option("--cors-origin", c.service.cors_origin);
    serve->add_flag("--debug", c.debug, "enable the consistency endpoint");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*tau)
            return cmd_tau(c, out);
        if (*verify)
            return cmd_verify(c, out);
        if (*play)
            return cmd_play(c, out);
        if (*check)
            return cmd_check(c, out);
        if (*replay_cmd)
            return cmd_replay(c, out);
        if (*serve)
            return cmd_serve(c, out, err);
    } catch (const IoError& e) {
        err << "thue: " << e.what() << "\n";
        return kIoError;
    } catch (const UsageError& e) {
        err << "thue: " << e.what() << "\n";
        return kUsage;
    } catch (const DepthError& e) {
        err << "thue: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "thue: " << e.what() << "\n";
        return kDataError;
    } catch (const DivergenceError& e) {
        err << "thue: replay diverged: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        err << "thue: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

} // namespace thue::cli
