#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace moplab {

inline constexpr int kMaxVars = 24;

// Process-wide registry of formal parameter names. Ids fix the lex order of
// ParamPoly terms, so the common names are pre-registered in a stable order.
class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  int id(const std::string& name) {
    std::lock_guard lock(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    if (static_cast<int>(names_.size()) >= kMaxVars)
      throw std::length_error("too many parameter symbols (max " + std::to_string(kMaxVars) + ")");
    int k = static_cast<int>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, k);
    return k;
  }

  std::string name(int id) const {
    std::lock_guard lock(mu_);
    return names_.at(static_cast<size_t>(id));
  }

  bool known(const std::string& name) const {
    std::lock_guard lock(mu_);
    return ids_.count(name) != 0;
  }

 private:
  SymbolTable() {
    for (const char* s : {"N", "a", "b", "c", "d", "u", "v", "z", "lambda", "beta", "s", "w", "x", "x1", "x2", "x3", "x4", "x5"}) {
      ids_.emplace(s, static_cast<int>(names_.size()));
      names_.emplace_back(s);
    }
  }
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

inline int symbol_id(const std::string& name) { return SymbolTable::instance().id(name); }
inline std::string symbol_name(int id) { return SymbolTable::instance().name(id); }

}  // namespace moplab
