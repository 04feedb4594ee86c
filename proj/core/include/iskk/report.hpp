#pragma once

// Structured pass/fail results shared by the verifiers and the CLI.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace iskk {

  using Json = nlohmann::json;

  struct Check {
    std::string name;
    bool        passed;
    Json        detail;
  };

  class Report {
   public:
    explicit Report(std::string title) : _title(std::move(title)) {}

    // Records a check and returns its outcome.
    bool add(std::string name, bool passed, Json detail = Json::object());
    void merge(Report const& other, std::string const& prefix = "");
    void set(std::string const& key, Json value) {
      _data[key] = std::move(value);
    }

    bool passed() const;
    std::string const& title() const noexcept {
      return _title;
    }
    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }
    Json const& data() const noexcept {
      return _data;
    }
    // First failing check, or nullptr.
    Check const* first_failure() const;

    Json        to_json() const;
    std::string to_text() const;

   private:
    std::string        _title;
    std::vector<Check> _checks;
    Json               _data = Json::object();
  };

}  // namespace iskk
