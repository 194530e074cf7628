#include "fattail/error.hpp"

namespace fattail {

std::string_view to_string(Module m) noexcept {
  switch (m) {
    case Module::diffcore: return "diffcore";
    case Module::chaos: return "chaos";
    case Module::stats: return "stats";
    case Module::spatial: return "spatial";
    case Module::ingest: return "ingest";
    case Module::cli: return "cli";
  }
  return "unknown";
}

Error::Error(Module module, const std::string& message)
    : std::runtime_error(std::string(to_string(module)) + ": " + message),
      module_(module),
      message_(message) {}

}  // namespace fattail
