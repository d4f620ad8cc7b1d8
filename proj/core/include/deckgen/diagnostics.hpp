#pragma once

#include <string>
#include <vector>

namespace deckgen {

// Collects non-fatal findings (unknown schema keys, short outlines, weak
// grounding, ...). Stages take a pointer and tolerate nullptr.
class Diagnostics {
 public:
  void warn(std::string message) { warnings_.push_back(std::move(message)); }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool empty() const { return warnings_.empty(); }

 private:
  std::vector<std::string> warnings_;
};

inline void warn(Diagnostics* diag, std::string message) {
  if (diag != nullptr) diag->warn(std::move(message));
}

}  // namespace deckgen
