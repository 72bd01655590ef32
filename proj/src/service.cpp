#include "antonim/service.hpp"

#include <random>

#include "antonim/tables.hpp"
#include "httplib.h"
#include "json.hpp"

namespace antonim {

using nlohmann::json;

const char* to_string(Player p) noexcept { return p == Player::human ? "human" : "engine"; }

const char* to_string(GameStatus s) noexcept {
  switch (s) {
    case GameStatus::ongoing:
      return "ongoing";
    case GameStatus::human_won:
      return "human_won";
    case GameStatus::engine_won:
      return "engine_won";
  }
  return "unknown";
}

Move engine_choice(const RawState& state, CompletionCache& cache) {
  if (auto win = best_move(state, cache)) return *win;
  const auto moves = legal_moves(state);
  if (moves.empty()) throw std::logic_error("engine asked to move from a terminal state");
  return moves.front();
}

SessionManager::SessionManager(std::shared_ptr<TranscriptWriter> transcript)
    : transcript_(std::move(transcript)) {}

std::size_t SessionManager::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::string SessionManager::fresh_id() {
  static constexpr char hex[] = "0123456789abcdef";
  std::lock_guard lock(rng_mutex_);
  static std::random_device rd;
  std::string id;
  id.reserve(32);
  for (int i = 0; i < 4; ++i) {
    std::uint32_t word = rd();
    for (int k = 0; k < 8; ++k, word >>= 4) id.push_back(hex[word & 0xF]);
  }
  return id;
}

std::shared_ptr<SessionManager::Slot> SessionManager::find_slot(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "unknown session: " + id);
  return it->second;
}

void SessionManager::play(GameSession& session, Player mover, const Move& move) {
  session.state = apply_move(session.state, move);
  session.history.push_back({mover, move, session.state});
  if (session.state.is_terminal()) {
    // Whoever takes the last chip wins.
    session.status = mover == Player::human ? GameStatus::human_won : GameStatus::engine_won;
  }
  session.to_move = mover == Player::human ? Player::engine : Player::human;

  if (transcript_) {
    std::vector<HeapSize> after(session.state.heaps().begin(), session.state.heaps().end());
    transcript_->append({utc_timestamp(), session.id, to_string(mover), move, std::move(after),
                         classify(canonicalize(session.state), cache_)});
  }
}

SessionView SessionManager::view(const GameSession& session, std::optional<Move> engine_move) {
  SessionView v{session, classify(canonicalize(session.state), cache_), {}, engine_move};
  v.history_classifications.reserve(session.history.size());
  for (const HistoryEntry& h : session.history)
    v.history_classifications.push_back(classify(canonicalize(h.state_after), cache_));
  return v;
}

SessionView SessionManager::new_session(std::vector<HeapSize> heaps, bool human_first) {
  std::optional<RawState> state;
  try {
    state = RawState::validate(std::move(heaps));
  } catch (const std::invalid_argument& e) {
    throw ServiceError(400, e.what());
  }
  if (state->is_terminal()) throw ServiceError(400, "a game needs at least one chip");

  GameSession s{fresh_id(), *state, human_first ? Player::human : Player::engine, {}, GameStatus::ongoing};
  std::optional<Move> reply;
  if (!human_first) {
    reply = engine_choice(s.state, cache_);
    play(s, Player::engine, *reply);
  }
  SessionView v = view(s, reply);
  {
    std::string id = s.id;
    std::unique_lock lock(sessions_mutex_);
    sessions_.emplace(std::move(id), std::make_shared<Slot>(std::move(s)));
  }
  return v;
}

SessionView SessionManager::human_move(const std::string& id, const Move& move) {
  auto slot = find_slot(id);
  std::lock_guard lock(slot->mutex);
  GameSession& s = slot->session;
  if (s.status != GameStatus::ongoing) throw ServiceError(409, "game is over");
  if (s.to_move != Player::human) throw ServiceError(409, "not the human's turn");
  if (auto broken = check_move(s.state, move))
    throw ServiceError(422, std::string("illegal move: ") + to_string(*broken), to_string(*broken));

  play(s, Player::human, move);
  std::optional<Move> reply;
  if (s.status == GameStatus::ongoing) {
    reply = engine_choice(s.state, cache_);
    play(s, Player::engine, *reply);
  }
  return view(s, reply);
}

SessionView SessionManager::get_state(const std::string& id) {
  auto slot = find_slot(id);
  std::lock_guard lock(slot->mutex);
  return view(slot->session, std::nullopt);
}

namespace {

json move_json(const Move& m) { return {{"heap_index", m.heap_index}, {"new_size", m.new_size}}; }

json heaps_json(const RawState& s) {
  return json(std::vector<HeapSize>(s.heaps().begin(), s.heaps().end()));
}

json view_json(const SessionView& v) {
  const GameSession& s = v.session;
  json history = json::array();
  for (std::size_t i = 0; i < s.history.size(); ++i) {
    const HistoryEntry& h = s.history[i];
    history.push_back({{"mover", to_string(h.mover)},
                       {"move", move_json(h.move)},
                       {"state", heaps_json(h.state_after)},
                       {"classification", to_string(v.history_classifications[i])}});
  }
  return {
      {"id", s.id},
      {"state", heaps_json(s.state)},
      {"to_move", to_string(s.to_move)},
      {"classification", to_string(v.classification)},
      {"engine_move", v.engine_move ? move_json(*v.engine_move) : json(nullptr)},
      {"status", to_string(s.status)},
      {"history", std::move(history)},
  };
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, const ServiceError& e) {
  json body{{"error", e.what()}};
  if (!e.rule().empty()) body["rule"] = e.rule();
  send_json(res, e.http_status(), body);
}

HeapSize parse_count(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ServiceError(400, std::string("bad ") + what + ": '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ServiceError(400, std::string(what) + " out of range: " + text);
  }
}

std::vector<HeapSize> parse_list(const std::string& text, const char* what) {
  std::vector<HeapSize> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_count(text.substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string param(const httplib::Request& req, const char* name, bool required = true) {
  if (!req.has_param(name)) {
    if (required) throw ServiceError(400, std::string("missing parameter: ") + name);
    return {};
  }
  return req.get_param_value(name);
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw ServiceError(400, std::string("malformed JSON: ") + e.what());
  }
}

template <class Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const ServiceError& e) {
      send_error(res, e);
    } catch (const json::exception& e) {
      send_error(res, ServiceError(400, std::string("bad request body: ") + e.what()));
    } catch (const std::invalid_argument& e) {
      send_error(res, ServiceError(400, e.what()));
    }
  };
}

}  // namespace

void register_routes(httplib::Server& server, SessionManager& manager,
                     const std::filesystem::path& static_dir) {
  server.Post("/api/sessions", guarded([&manager](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    auto heaps = body.at("heaps").get<std::vector<HeapSize>>();
    const bool human_first = body.value("human_first", true);
    send_json(res, 201, view_json(manager.new_session(std::move(heaps), human_first)));
  }));

  server.Post(R"(/api/sessions/([0-9a-f]+)/moves)",
              guarded([&manager](const httplib::Request& req, httplib::Response& res) {
                const json body = parse_body(req);
                const Move m{body.at("heap_index").get<std::size_t>(), body.at("new_size").get<HeapSize>()};
                send_json(res, 200, view_json(manager.human_move(req.matches[1], m)));
              }));

  server.Get(R"(/api/sessions/([0-9a-f]+))",
             guarded([&manager](const httplib::Request& req, httplib::Response& res) {
               send_json(res, 200, view_json(manager.get_state(req.matches[1])));
             }));

  server.Get("/api/classify", guarded([&manager](const httplib::Request& req, httplib::Response& res) {
    const RawState state = RawState::validate(parse_list(param(req, "heaps"), "heaps"));
    const auto move = best_move(state, manager.cache());
    send_json(res, 200,
              {{"classification", move ? "N" : "P"}, {"best_move", move ? move_json(*move) : json(nullptr)}});
  }));

  server.Get("/api/complete", guarded([&manager](const httplib::Request& req, httplib::Response& res) {
    const auto given = CanonicalPosition::from_heaps(parse_list(param(req, "heaps", false), "heaps"));
    send_json(res, 200, {{"z", completion(given, manager.cache())}});
  }));

  server.Get("/api/table", guarded([&manager](const httplib::Request& req, httplib::Response& res) {
    PTableSpec spec;
    spec.n_heaps = parse_count(param(req, "heaps"), "heaps");
    spec.max_index = parse_count(param(req, "max"), "max");
    spec.layer_prefix = parse_list(param(req, "prefix", false), "prefix");
    if (req.has_param("max_row")) spec.max_row = parse_count(param(req, "max_row"), "max_row");
    if (spec.max_index > 256 || spec.last_row() > 256) throw ServiceError(400, "table too large (limit 256)");
    const PTable table = build_table(spec, manager.cache());
    json cells = json::array();
    for (const auto& row : table.cells) {
      json r = json::array();
      for (const Cell& c : row) r.push_back(c ? json(*c) : json("X"));
      cells.push_back(std::move(r));
    }
    send_json(res, 200,
              {{"heaps", spec.n_heaps}, {"prefix", spec.layer_prefix}, {"max", spec.max_index},
               {"max_row", spec.last_row()}, {"cells", std::move(cells)}});
  }));

  if (!static_dir.empty()) server.set_mount_point("/", static_dir.string());
}

bool serve(const ServeOptions& options) {
  auto transcript = std::make_shared<TranscriptWriter>(options.transcript);
  SessionManager manager(transcript);
  httplib::Server server;
  register_routes(server, manager, options.static_dir);
  return server.listen(options.host, options.port);
}

}  // namespace antonim
