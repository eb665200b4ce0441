// service.cpp -- session table and HTTP routing

#include "thue/service.hpp"

#include "thue/arena.hpp"
#include "thue/errors.hpp"
#include "thue/report.hpp"
#include "thue/square.hpp"
#include "thue/strategy.hpp"

#include <httplib.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <random>

namespace thue {

using nlohmann::json;

struct Session
{
    std::string id;
    AnnState ann;
    GameRecord record;
    IncrementalChecker checker{1};
    bool finished = false;
    std::string reason;
    std::string created_at;
    std::optional<std::filesystem::path> trace_file;
    mutable std::mutex mutex;
};

namespace {

ApiResponse error(int status, std::string code, std::string message)
{
    return {status, json{{"error", std::move(code)}, {"message", std::move(message)}}};
}

std::string random_id()
{
    std::random_device rd;
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (int i = 0; i < 4; ++i) {
        std::uint32_t v = rd();
        for (int j = 0; j < 8; ++j) {
            out += hex[v & 0xf];
            v >>= 4;
        }
    }
    return out;
}

std::string utc_now()
{
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Caller holds the session lock.
json view(const Session& s)
{
    json word = json::array();
    json players = json::array();
    for (const auto& m : s.record.moves) {
        word.push_back(format_letter(m.letter));
        players.push_back(std::string(1, player_tag(m.player)));
    }
    json out = {
        {"id", s.id},
        {"mode", to_string(s.record.mode)},
        {"word", word},
        {"players", players},
        {"turn", s.finished ? json(nullptr) : json("ben")},
        {"status", s.finished ? "finished" : "awaiting-ben"},
        {"reason", s.finished ? json(s.reason) : json(nullptr)},
        {"ann", {{"favourite_track", s.ann.favourite_track}, {"count", s.ann.count}}},
        {"threat", near_square_threat(s.checker.word())},
        {"square", s.record.square ? to_json(*s.record.square) : json(nullptr)},
        {"trivial_squares", s.record.trivial_squares.size()},
        {"created_at", s.created_at},
        {"indexing", "0-based"},
    };
    return out;
}

void persist(const Session& s, const std::string& text)
{
    if (!s.trace_file)
        return;
    std::ofstream out(*s.trace_file, std::ios::app);
    out << text;
}

// Appends one letter; returns a period-1 witness ending here, if any.
std::optional<SquareWitness> append(Session& s, Player player, Letter letter)
{
    const Move m{player, letter};
    s.record.moves.push_back(m);
    s.checker.push(letter);
    persist(s, format_move(m) + "\n");
    if (auto w = s.checker.square_ending_here(s.record.min_period)) {
        s.record.square = *w;
        s.finished = true;
        s.reason = "strategy-falsified";
        return std::nullopt;
    }
    if (auto w = s.checker.square_ending_here(1)) {
        s.record.trivial_squares.push_back(*w);
        return w;
    }
    return std::nullopt;
}

json summary(const Session& s)
{
    return {{"id", s.id},
            {"mode", to_string(s.record.mode)},
            {"length", s.record.moves.size()},
            {"status", s.finished ? "finished" : "awaiting-ben"},
            {"created_at", s.created_at}};
}

} // namespace

SessionStore::SessionStore(ServiceConfig config) : config_(std::move(config))
{
    if (config_.trace_dir)
        std::filesystem::create_directories(*config_.trace_dir);
}

SessionStore::~SessionStore() = default;

std::shared_ptr<Session> SessionStore::find(const std::string& id) const
{
    std::shared_lock lock(mutex_);
    const auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse SessionStore::create(const std::string& body)
{
    Starter mode;
    try {
        const json req = body.empty() ? json::object() : json::parse(body);
        if (!req.is_object())
            return error(400, "bad_request", "body must be a JSON object");
        const auto it = req.find("mode");
        if (it == req.end() || !it->is_string())
            return error(400, "bad_request", "missing string field 'mode'");
        mode = parse_starter(it->get<std::string>());
    } catch (const json::exception& e) {
        return error(400, "bad_request", std::string("invalid JSON: ") + e.what());
    } catch (const ParseError& e) {
        return error(400, "invalid_mode", e.what());
    }

    auto s = std::make_shared<Session>();
    s->id = random_id();
    s->created_at = utc_now();
    s->record.mode = mode;
    if (config_.trace_dir) {
        s->trace_file = *config_.trace_dir / (s->id + ".trace");
        persist(*s, format_trace(Trace{mode, {}, {}, {}}));
    }
    auto [opening, state] = initial_state(mode);
    s->ann = state;
    if (opening) {
        s->record.ann_rules.push_back(Rule::Opening);
        append(*s, Player::Ann, *opening);
    }

    json out;
    {
        std::lock_guard guard(s->mutex);
        out = view(*s);
    }
    std::unique_lock lock(mutex_);
    sessions_.emplace(s->id, s);
    order_.push_back(s->id);
    return {201, out};
}

ApiResponse SessionStore::submit(const std::string& id, const std::string& body)
{
    const auto s = find(id);
    if (!s)
        return error(404, "not_found", "unknown session " + id);

    std::unique_lock guard(s->mutex, std::try_to_lock);
    if (!guard.owns_lock())
        return error(409, "busy", "another move for this session is being processed");
    if (s->finished)
        return error(409, "finished", "session is finished: " + s->reason);

    Letter ben;
    try {
        const json req = json::parse(body);
        if (!req.is_object())
            return error(400, "bad_request", "body must be a JSON object");
        if (auto seq = req.find("seq"); seq != req.end()) {
            if (!seq->is_number_unsigned() || seq->get<std::size_t>() != s->record.moves.size())
                return error(409, "stale", "word length is " +
                                               std::to_string(s->record.moves.size()));
        }
        const auto it = req.find("letter");
        if (it == req.end() || !it->is_string())
            return error(422, "invalid_letter", "missing string field 'letter'");
        ben = parse_letter(it->get<std::string>());
    } catch (const json::exception& e) {
        return error(400, "bad_request", std::string("invalid JSON: ") + e.what());
    } catch (const ParseError& e) {
        return error(422, "invalid_letter", e.what());
    }

    json unary = json::array();
    json exchange = {{"ben", format_letter(ben)}, {"ann", nullptr}};
    if (auto w = append(*s, Player::Ben, ben))
        unary.push_back(to_json(*w));
    if (!s->finished) {
        const auto reply = respond(s->ann, ben);
        s->ann = reply.state;
        s->record.ann_rules.push_back(reply.rule);
        exchange["ann"] = format_letter(reply.letter);
        exchange["rule"] = to_string(reply.rule);
        if (auto w = append(*s, Player::Ann, reply.letter))
            unary.push_back(to_json(*w));
    }
    json out = view(*s);
    out["exchange"] = exchange;
    out["unary_squares"] = unary;
    return {200, out};
}

ApiResponse SessionStore::get(const std::string& id) const
{
    const auto s = find(id);
    if (!s)
        return error(404, "not_found", "unknown session " + id);
    std::lock_guard guard(s->mutex);
    return {200, view(*s)};
}

ApiResponse SessionStore::list() const
{
    std::vector<std::shared_ptr<Session>> all;
    {
        std::shared_lock lock(mutex_);
        for (const auto& id : order_)
            all.push_back(sessions_.at(id));
    }
    json out = json::array();
    for (const auto& s : all) {
        std::lock_guard guard(s->mutex);
        out.push_back(summary(*s));
    }
    return {200, json{{"sessions", out}}};
}

ApiResponse SessionStore::consistency(const std::string& id) const
{
    const auto s = find(id);
    if (!s)
        return error(404, "not_found", "unknown session " + id);
    std::lock_guard guard(s->mutex);
    try {
        const GameRecord again = replay(s->record.trace(), s->record.min_period);
        const bool same = again.moves == s->record.moves && again.square == s->record.square &&
                          again.ann_rules == s->record.ann_rules;
        return {200, json{{"consistent", same}}};
    } catch (const Error& e) {
        return {200, json{{"consistent", false}, {"message", e.what()}}};
    }
}

std::optional<std::string> SessionStore::trace_text(const std::string& id) const
{
    const auto s = find(id);
    if (!s)
        return std::nullopt;
    std::lock_guard guard(s->mutex);
    return format_trace(s->record.trace());
}

// ---------------------------------------------------------------------------

struct SessionServer::Impl
{
    explicit Impl(ServiceConfig config) : store(std::move(config)) { routes(); }

    void reply(httplib::Response& res, const ApiResponse& r)
    {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    }

    void routes()
    {
        const auto& cfg = store.config();
        server.set_default_headers({
            {"Access-Control-Allow-Origin", cfg.cors_origin},
            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
            {"Access-Control-Allow-Headers", "Content-Type"},
        });
        server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
            res.status = 204;
        });
        server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
            reply(res, store.create(req.body));
        });
        server.Get("/sessions", [this](const httplib::Request&, httplib::Response& res) {
            reply(res, store.list());
        });
        server.Post(R"(/sessions/([A-Za-z0-9_-]+)/moves)",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        reply(res, store.submit(req.matches[1], req.body));
                    });
        server.Get(R"(/sessions/([A-Za-z0-9_-]+))",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       reply(res, store.get(req.matches[1]));
                   });
        server.Get(R"(/sessions/([A-Za-z0-9_-]+)/trace)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       if (auto text = store.trace_text(req.matches[1])) {
                           res.set_content(*text, "text/plain");
                       } else {
                           reply(res, error(404, "not_found", "unknown session"));
                       }
                   });
        if (cfg.debug_endpoints) {
            server.Get(R"(/sessions/([A-Za-z0-9_-]+)/consistency)",
                       [this](const httplib::Request& req, httplib::Response& res) {
                           reply(res, store.consistency(req.matches[1]));
                       });
        }
        server.set_error_handler([this](const httplib::Request&, httplib::Response& res) {
            if (res.body.empty())
                reply(res, error(res.status, res.status == 404 ? "not_found" : "http_error",
                                  "request failed"));
        });
    }

    SessionStore store;
    httplib::Server server;
    bool bound = false;
};

SessionServer::SessionServer(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config)))
{
}

SessionServer::~SessionServer()
{
    stop();
}

int SessionServer::bind()
{
    const auto& cfg = impl_->store.config();
    int port = cfg.port;
    if (port == 0) {
        port = impl_->server.bind_to_any_port(cfg.host);
    } else if (!impl_->server.bind_to_port(cfg.host, port)) {
        port = -1;
    }
    impl_->bound = port > 0;
    return port;
}

bool SessionServer::listen()
{
    if (!impl_->bound && bind() < 0)
        return false;
    return impl_->server.listen_after_bind();
}

void SessionServer::stop()
{
    if (impl_ && impl_->server.is_running())
        impl_->server.stop();
}

void SessionServer::wait_until_ready() const
{
    impl_->server.wait_until_ready();
}

SessionStore& SessionServer::store()
{
    return impl_->store;
}

} // namespace thue
