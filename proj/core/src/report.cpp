#include "hallfix/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace hallfix {

namespace {

nlohmann::ordered_json record_json(Record const &r)
{
  nlohmann::ordered_json j{{"check", r.check},
                           {"group", r.group},
                           {"pi", r.pi},
                           {"status", to_string(r.status)},
                           {"witness", r.witness}};
  if (r.expected_fail)
    j["expected"] = "fail";
  return j;
}

} // namespace

std::string to_string(Status s)
{
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Inapplicable:
    return "inapplicable";
  }
  return "unknown";
}

std::string to_json(Record const &r)
{
  return record_json(r).dump();
}

std::string to_json(std::vector<Record> const &records)
{
  auto arr = nlohmann::ordered_json::array();
  for (auto const &r : records)
    arr.push_back(record_json(r));
  return arr.dump(1);
}

std::string to_text(Record const &r)
{
  std::string res = r.check + " " + r.group + " pi=" + r.pi + " " + to_string(r.status);
  if (r.expected_fail)
    res += " (expected)";
  if (!r.witness.empty())
    res += " " + r.witness;
  return res;
}

int exit_status(std::vector<Record> const &records)
{
  return std::any_of(records.begin(), records.end(),
                     [](Record const &r) { return r.unexpected_failure(); })
           ? 1
           : 0;
}

} // namespace hallfix
