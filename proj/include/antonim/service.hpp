#pragma once

// Human-vs-engine game sessions and the HTTP API that serves them.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "antonim/core.hpp"
#include "antonim/solver.hpp"
#include "antonim/transcript.hpp"

namespace httplib {
class Server;
}

namespace antonim {

enum class Player : std::uint8_t { human, engine };
enum class GameStatus : std::uint8_t { ongoing, human_won, engine_won };

const char* to_string(Player p) noexcept;
const char* to_string(GameStatus s) noexcept;

struct HistoryEntry {
  Player mover;
  Move move;
  RawState state_after;
};

struct GameSession {
  std::string id;
  RawState state;
  Player to_move;
  std::vector<HistoryEntry> history;
  GameStatus status = GameStatus::ongoing;
};

/// Carries the HTTP status the error maps to (400, 404, 409, 422).
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int http_status, const std::string& message, std::string rule = {})
      : std::runtime_error(message), status_(http_status), rule_(std::move(rule)) {}
  int http_status() const noexcept { return status_; }
  const std::string& rule() const noexcept { return rule_; }

 private:
  int status_;
  std::string rule_;
};

/// The engine's choice: a winning move if there is one, otherwise the least
/// legal move. Precondition: `state` is not terminal.
Move engine_choice(const RawState& state, CompletionCache& cache);

struct SessionView {
  GameSession session;
  Classification classification;  // of session.state
  std::vector<Classification> history_classifications;  // of each state_after
  std::optional<Move> engine_move;  // the engine's reply in this request
};

class SessionManager {
 public:
  /// `transcript` may be null to skip recording.
  explicit SessionManager(std::shared_ptr<TranscriptWriter> transcript = nullptr);

  SessionView new_session(std::vector<HeapSize> heaps, bool human_first);
  SessionView human_move(const std::string& id, const Move& move);
  SessionView get_state(const std::string& id);

  CompletionCache& cache() noexcept { return cache_; }
  std::size_t session_count() const;

 private:
  struct Slot {
    explicit Slot(GameSession s) : session(std::move(s)) {}
    std::mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Slot> find_slot(const std::string& id) const;
  void play(GameSession& session, Player mover, const Move& move);
  SessionView view(const GameSession& session, std::optional<Move> engine_move);
  std::string fresh_id();

  CompletionCache cache_{Threading::shared};
  std::shared_ptr<TranscriptWriter> transcript_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mutex rng_mutex_;
};

/// Installs the JSON API routes. Non-empty `static_dir` is mounted at "/".
void register_routes(httplib::Server& server, SessionManager& manager,
                     const std::filesystem::path& static_dir = {});

struct ServeOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::filesystem::path transcript = "antonim-transcript.ndjson";
  std::filesystem::path static_dir;
};

/// Blocks until the server stops. Returns false if the port could not be bound.
bool serve(const ServeOptions& options);

}  // namespace antonim
