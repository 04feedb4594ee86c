#include "iskk/report.hpp"

#include <sstream>

namespace iskk {

  bool Report::add(std::string name, bool passed, Json detail) {
    _checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }

  void Report::merge(Report const& other, std::string const& prefix) {
    for (auto const& c : other._checks) {
      _checks.push_back({prefix + c.name, c.passed, c.detail});
    }
    for (auto const& [k, v] : other._data.items()) {
      _data[prefix + k] = v;
    }
  }

  bool Report::passed() const {
    return first_failure() == nullptr;
  }

  Check const* Report::first_failure() const {
    for (auto const& c : _checks) {
      if (!c.passed) {
        return &c;
      }
    }
    return nullptr;
  }

  Json Report::to_json() const {
    Json checks = Json::array();
    for (auto const& c : _checks) {
      Json j{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.is_null() && !c.detail.empty()) {
        j["detail"] = c.detail;
      }
      checks.push_back(std::move(j));
    }
    Json out{{"title", _title}, {"passed", passed()}, {"checks", std::move(checks)}};
    if (!_data.empty()) {
      out["data"] = _data;
    }
    return out;
  }

  std::string Report::to_text() const {
    std::ostringstream os;
    os << _title << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    for (auto const& c : _checks) {
      os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
      if (!c.passed && !c.detail.is_null() && !c.detail.empty()) {
        os << "  " << c.detail.dump();
      }
      os << '\n';
    }
    for (auto const& [k, v] : _data.items()) {
      os << "  " << k << " = " << v.dump() << '\n';
    }
    return os.str();
  }

}  // namespace iskk
