#ifndef HALLFIX_REPORT_HPP
#define HALLFIX_REPORT_HPP

#include <string>
#include <vector>

namespace hallfix {

enum class Status { Pass, Fail, Inapplicable };

std::string to_string(Status s);

/// One verifier outcome. `witness` carries the exact value that decided
/// the status (a factored rational or a decimal string).
struct Record {
  std::string check;
  std::string group;
  std::string pi;
  Status status = Status::Inapplicable;
  std::string witness;
  bool expected_fail = false; ///< a documented non-instance, not a violation

  bool unexpected_failure() const { return status == Status::Fail && !expected_fail; }
};

/// {"check":..,"group":..,"pi":..,"status":..,"witness":..}, plus
/// "expected":"fail" on documented non-instances.
std::string to_json(Record const &r);
std::string to_json(std::vector<Record> const &records);

/// "<check> <group> pi=<pi> <status> <witness>"
std::string to_text(Record const &r);

/// 0 when no record is an unexpected failure, 1 otherwise.
int exit_status(std::vector<Record> const &records);

} // namespace hallfix

#endif // HALLFIX_REPORT_HPP
