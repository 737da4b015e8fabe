#include "decoreq/report.hpp"

namespace decoreq {

nlohmann::json Report::to_json() const {
  return nlohmann::json{{"command", command},
                        {"status", ok ? "ok" : "fail"},
                        {"elapsed_ms", elapsed_ms},
                        {"details", details}};
}

} // namespace decoreq
