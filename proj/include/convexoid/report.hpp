#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace convexoid {

struct ReportField {
  std::string key;
  std::vector<std::string> values;
  bool list = false;  // render as a list even with one value
};

struct ReportBlock {
  std::string name;
  std::vector<ReportField> fields;

  ReportBlock& set(std::string key, std::string value) {
    fields.push_back({std::move(key), {std::move(value)}, false});
    return *this;
  }
  ReportBlock& set(std::string key, bool value) { return set(std::move(key), std::string(value ? "true" : "false")); }
  ReportBlock& set(std::string key, const char* value) { return set(std::move(key), std::string(value)); }
  ReportBlock& set_list(std::string key, std::vector<std::string> values) {
    fields.push_back({std::move(key), std::move(values), true});
    return *this;
  }

  const ReportField* find(std::string_view key) const {
    for (const auto& f : fields) {
      if (f.key == key) return &f;
    }
    return nullptr;
  }
  std::string get(std::string_view key) const {
    const auto* f = find(key);
    return f && !f->values.empty() ? f->values.front() : "";
  }
};

/// Output is a pure function of the blocks: no timings, no addresses.
struct Report {
  std::string command;
  std::vector<ReportBlock> blocks;
  bool ok = true;  // false means a verification failure

  ReportBlock& add(std::string name) {
    blocks.push_back({std::move(name), {}});
    return blocks.back();
  }
  const ReportBlock* find(std::string_view name) const {
    for (const auto& b : blocks) {
      if (b.name == name) return &b;
    }
    return nullptr;
  }

  std::string to_text() const {
    std::string out = "$ convexoid " + command + "\n";
    for (const auto& b : blocks) {
      out += "\n[" + b.name + "]\n";
      for (const auto& f : b.fields) {
        if (!f.list) {
          out += f.key + " = " + (f.values.empty() ? "" : f.values.front()) + "\n";
          continue;
        }
        out += f.key + ":";
        if (f.values.empty()) out += " (none)";
        out += "\n";
        for (const auto& v : f.values) out += "  - " + v + "\n";
      }
    }
    out += "\nstatus = " + std::string(ok ? "ok" : "FAILED") + "\n";
    return out;
  }
};

}  // namespace convexoid
