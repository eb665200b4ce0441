// service.hpp -- turn-based game sessions over a JSON HTTP API
//
// Routes:
//   POST /sessions              {"mode": "ann-starts" | "ben-starts"}
//   POST /sessions/{id}/moves   {"letter": "0c"}   (optional "seq": expected word length)
//   GET  /sessions/{id}
//   GET  /sessions
//   GET  /sessions/{id}/trace   (trace file text)
//   GET  /sessions/{id}/consistency   (only with debug_endpoints)
//
// Errors are {"error": code, "message": text}.

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace thue {

struct ServiceConfig
{
    std::string host = "127.0.0.1";
    /// 0 picks a free port.
    int port = 8080;
    /// When set, each session appends its trace to <trace_dir>/<id>.trace.
    std::optional<std::filesystem::path> trace_dir;
    std::string cors_origin = "*";
    bool debug_endpoints = false;
};

struct ApiResponse
{
    int status = 200;
    nlohmann::json body;
};

struct Session;

/// In-memory session table. Thread-safe; each session is mutated by one
/// request at a time and a concurrent submission gets 409.
class SessionStore
{
public:
    explicit SessionStore(ServiceConfig config = {});
    ~SessionStore();

    ApiResponse create(const std::string& body);
    ApiResponse submit(const std::string& id, const std::string& body);
    ApiResponse get(const std::string& id) const;
    ApiResponse list() const;
    /// Replays the session's trace and compares it with the live state.
    ApiResponse consistency(const std::string& id) const;
    /// Trace file text, or nullopt for an unknown id.
    std::optional<std::string> trace_text(const std::string& id) const;

    const ServiceConfig& config() const { return config_; }

private:
    std::shared_ptr<Session> find(const std::string& id) const;

    ServiceConfig config_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    std::vector<std::string> order_;
};

/// HTTP front end for a SessionStore.
class SessionServer
{
public:
    explicit SessionServer(ServiceConfig config);
    ~SessionServer();

    SessionServer(const SessionServer&) = delete;
    SessionServer& operator=(const SessionServer&) = delete;

    /// Binds the socket and returns the port (useful with port 0); -1 on failure.
    int bind();
    /// Serves until stop(); binds first if needed. Returns false on failure.
    bool listen();
    void stop();
    void wait_until_ready() const;

    SessionStore& store();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace thue
