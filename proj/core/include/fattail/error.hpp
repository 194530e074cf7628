#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fattail {

/// Subsystem that raised an error; used to prefix diagnostics.
enum class Module { diffcore, chaos, stats, spatial, ingest, cli };

std::string_view to_string(Module m) noexcept;

/// Every failure in the library is reported as a fattail::Error.
/// what() reads "<module>: <message>", message() is the bare text.
class Error : public std::runtime_error {
 public:
  Error(Module module, const std::string& message);

  Module module() const noexcept { return module_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Module module_;
  std::string message_;
};

}  // namespace fattail
