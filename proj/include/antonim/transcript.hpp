#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>

#include "antonim/core.hpp"

namespace antonim {

struct TranscriptRecord {
  std::string timestamp;  // UTC, ISO 8601
  std::string session_id;
  std::string mover;  // "human" or "engine"
  Move move;
  std::vector<HeapSize> state_after;
  Classification classification_after = Classification::P;
};

std::string to_json_line(const TranscriptRecord& record);
TranscriptRecord parse_json_line(const std::string& line);

std::string utc_timestamp();

/// Appends one JSON object per line and flushes after each record.
class TranscriptWriter {
 public:
  /// Throws std::runtime_error if the file cannot be opened for append.
  explicit TranscriptWriter(const std::filesystem::path& path);

  void append(const TranscriptRecord& record);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::mutex mutex_;
  std::ofstream out_;
};

}  // namespace antonim
