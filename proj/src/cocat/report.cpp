#include "cointerval/cocat/report.hpp"

namespace cointerval::cocat {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

void CheckReport::pass(const std::string& check, std::string note) {
  items_.push_back({check, Status::Pass, nullptr, std::move(note)});
}

void CheckReport::fail(const std::string& check, nlohmann::json witness, std::string note) {
  if (witness.is_null()) witness = nlohmann::json::object();
  items_.push_back({check, Status::Fail, std::move(witness), std::move(note)});
}

void CheckReport::inconclusive(const std::string& check, std::string note) {
  items_.push_back({check, Status::Inconclusive, nullptr, std::move(note)});
}

void CheckReport::expect(const std::string& check, bool ok, const nlohmann::json& witness) {
  if (ok)
    pass(check);
  else
    fail(check, witness);
}

void CheckReport::add(CheckItem item) { items_.push_back(std::move(item)); }

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (CheckItem item : other.items_) {
    if (!prefix.empty()) item.name = prefix + "/" + item.name;
    items_.push_back(std::move(item));
  }
  if (!other.info_.empty()) {
    const std::string key = prefix.empty() ? other.name_ : prefix;
    info_[key] = other.info_;
  }
}

Status CheckReport::status() const {
  Status s = Status::Pass;
  for (const auto& it : items_) {
    if (it.status == Status::Fail) return Status::Fail;
    if (it.status == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

const CheckItem* CheckReport::find(const std::string& check) const {
  for (const auto& it : items_)
    if (it.name == check) return &it;
  return nullptr;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : items_) {
    nlohmann::json j = {{"name", it.name}, {"status", to_string(it.status)}};
    if (!it.witness.is_null()) j["witness"] = it.witness;
    if (!it.note.empty()) j["note"] = it.note;
    items.push_back(std::move(j));
  }
  nlohmann::json out = {{"name", name_}, {"status", to_string(status())}, {"checks", items}};
  if (!info_.empty()) out["info"] = info_;
  return out;
}

}  // namespace cointerval::cocat
