#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cointerval::cocat {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

/// One named sub-check. A failure always carries a witness.
struct CheckItem {
  std::string name;
  Status status = Status::Pass;
  nlohmann::json witness;  // null unless the check failed or produced evidence
  std::string note;
};

class CheckReport {
 public:
  explicit CheckReport(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<CheckItem>& items() const { return items_; }

  void pass(const std::string& check, std::string note = {});
  void fail(const std::string& check, nlohmann::json witness, std::string note = {});
  void inconclusive(const std::string& check, std::string note);
  /// pass when `ok`, otherwise fail with `witness` (evaluated by the caller).
  void expect(const std::string& check, bool ok, const nlohmann::json& witness);
  void add(CheckItem item);
  /// Appends every item of `other`, prefixing names with "prefix/".
  void merge(const CheckReport& other, const std::string& prefix = {});

  /// Free-form facts recorded alongside the items (coverage, verdicts, sizes).
  nlohmann::json& info() { return info_; }
  const nlohmann::json& info() const { return info_; }

  /// Fail dominates inconclusive, which dominates pass. Empty reports pass.
  Status status() const;
  bool passed() const { return status() == Status::Pass; }
  const CheckItem* find(const std::string& check) const;

  nlohmann::json to_json() const;

 private:
  std::string name_;
  std::vector<CheckItem> items_;
  nlohmann::json info_ = nlohmann::json::object();
};

}  // namespace cointerval::cocat
