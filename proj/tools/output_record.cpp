#include "output_record.hpp"

#include <stdexcept>

namespace rabot {

std::string_view to_string(RecordStatus status) noexcept {
  switch (status) {
    case RecordStatus::exact: return "exact";
    case RecordStatus::proven: return "proven";
    case RecordStatus::conjecture: return "conjecture";
    case RecordStatus::refuted: return "refuted";
  }
  return "exact";
}

RecordStatus parse_status(std::string_view text) {
  for (RecordStatus s : {RecordStatus::exact, RecordStatus::proven, RecordStatus::conjecture, RecordStatus::refuted}) {
    if (to_string(s) == text) {
      return s;
    }
  }
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

nlohmann::json OutputRecord::to_json() const {
  return {{"command", command}, {"inputs", inputs}, {"result", result}, {"status", to_string(status)}};
}

OutputRecord OutputRecord::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("record must be a JSON object");
  }
  try {
    OutputRecord record;
    record.command = doc.at("command").get<std::string>();
    record.inputs = doc.at("inputs").get<std::map<std::string, std::string>>();
    record.result = doc.at("result");
    record.status = parse_status(doc.at("status").get<std::string>());
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string OutputRecord::serialize() const { return to_json().dump(); }

OutputRecord OutputRecord::parse(std::string_view text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument("record is not valid JSON");
  }
  return from_json(doc);
}

}  // namespace rabot
