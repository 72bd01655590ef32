#include "antonim/transcript.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

#include "json.hpp"

namespace antonim {

using nlohmann::json;

std::string to_json_line(const TranscriptRecord& r) {
  json j{
      {"timestamp", r.timestamp},
      {"session", r.session_id},
      {"mover", r.mover},
      {"move", {{"heap_index", r.move.heap_index}, {"new_size", r.move.new_size}}},
      {"state_after", r.state_after},
      {"classification_after", to_string(r.classification_after)},
  };
  return j.dump();
}

TranscriptRecord parse_json_line(const std::string& line) {
  const json j = json::parse(line);
  TranscriptRecord r;
  r.timestamp = j.at("timestamp").get<std::string>();
  r.session_id = j.at("session").get<std::string>();
  r.mover = j.at("mover").get<std::string>();
  r.move.heap_index = j.at("move").at("heap_index").get<std::size_t>();
  r.move.new_size = j.at("move").at("new_size").get<HeapSize>();
  r.state_after = j.at("state_after").get<std::vector<HeapSize>>();
  r.classification_after =
      j.at("classification_after").get<std::string>() == "P" ? Classification::P : Classification::N;
  return r;
}

std::string utc_timestamp() {
  using namespace std::chrono;
  const auto now = system_clock::now();
  const std::time_t t = system_clock::to_time_t(now);
  const auto ms = duration_cast<milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

TranscriptWriter::TranscriptWriter(const std::filesystem::path& path)
    : path_(path), out_(path, std::ios::app) {
  if (!out_) throw std::runtime_error("cannot open transcript file: " + path.string());
}

void TranscriptWriter::append(const TranscriptRecord& record) {
  const std::string line = to_json_line(record);
  std::lock_guard lock(mutex_);
  out_ << line << '\n';
  out_.flush();
}

}  // namespace antonim
