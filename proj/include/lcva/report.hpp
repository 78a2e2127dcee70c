#ifndef LCVA_REPORT_HPP
#define LCVA_REPORT_HPP

#include <string>
#include <vector>

namespace lcva {

struct CheckItem {
  std::string what;
  bool ok = true;
  std::string detail;  // expanded both sides on failure, certificates on pass
};

struct Report {
  std::string name;
  std::vector<CheckItem> items;

  bool pass() const {
    for (auto& it : items)
      if (!it.ok) return false;
    return true;
  }
  void add(std::string what, bool ok, std::string detail = "") {
    items.push_back({std::move(what), ok, std::move(detail)});
  }
  void merge(const Report& o) {
    for (auto& it : o.items) items.push_back(it);
  }
  std::string text() const {
    std::string out = name + ": " + (pass() ? "pass" : "FAIL") + "\n";
    for (auto& it : items) {
      out += "  [" + std::string(it.ok ? "ok" : "FAIL") + "] " + it.what;
      if (!it.detail.empty()) out += "\n        " + it.detail;
      out += "\n";
    }
    return out;
  }
};

}  // namespace lcva

#endif  // LCVA_REPORT_HPP
