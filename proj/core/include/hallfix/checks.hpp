#ifndef HALLFIX_CHECKS_HPP
#define HALLFIX_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallfix/corpus.hpp"
#include "hallfix/number_theory.hpp"
#include "hallfix/perm_group.hpp"
#include "hallfix/report.hpp"
#include "hallfix/verifiers.hpp"

namespace hallfix {

/// Commands understood by run_check.
std::vector<std::string> const &check_commands();

struct CheckOptions {
  std::optional<PiSet> pi;
  std::optional<std::uint64_t> n;             ///< curiosity exponent order; |G| if unset
  std::uint64_t cap = kDefaultElementCap;
  std::uint64_t tuple_cap = kDefaultTupleCap;
};

/// A group to check, with its corpus metadata when it is a builtin.
struct CheckTarget {
  std::string name;
  PermGroup group;
  CorpusEntry const *entry = nullptr;
};

/// Resolves a builtin name or group file path.
CheckTarget resolve_target(std::string const &name_or_path, std::uint64_t cap = kDefaultElementCap);

/// Runs one command against one group. Hypothesis failures produce
/// Status::Inapplicable records, never silent passes. Throws
/// InvalidArgument for unknown commands or a missing required pi.
std::vector<Record> run_check(std::string const &command, CheckTarget const &target,
                              CheckOptions const &options);

/// Every applicable check over every builtin and its scan pi-sets, in corpus order.
std::vector<Record> scan_corpus(CheckOptions const &options);

/// The pi used by the curiosity command when none is given.
inline PiSet default_curiosity_pi() { return PiSet{3}; }

} // namespace hallfix

#endif // HALLFIX_CHECKS_HPP
