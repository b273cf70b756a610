#ifndef HALLFIX_CORPUS_HPP
#define HALLFIX_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hallfix/number_theory.hpp"
#include "hallfix/perm_group.hpp"
#include "hallfix/verifiers.hpp"

namespace hallfix {

/// Contents of a group file: "degree: k" plus "gen: <cycles>" lines.
struct GroupFile {
  unsigned degree = 0;
  std::vector<Permutation> generators;
};

/// Throws ParseError (MalformedFile for structural problems).
GroupFile parse_group_file(std::string_view text);

/// Canonical group file text for a generating set.
std::string format_group_file(unsigned degree, std::vector<Permutation> const &generators);

struct KnownHall {
  PiSet pi;
  std::uint64_t order; ///< Hall order n
  std::uint64_t count; ///< t, number of Hall subgroups
};

struct ExpectedFailure {
  std::string check;
  PiSet pi;
};

struct CorpusEntry {
  std::string name;
  std::string source;               ///< group file text
  std::uint64_t order = 0;
  bool solvable = false;
  std::vector<PiSet> separable_for; ///< sets the group is pi-separable for
  std::vector<PiSet> extra_pis;     ///< scanned besides the single primes
  std::vector<std::string> scenario_n; ///< generators of the normal p'-part
  std::vector<std::string> scenario_h; ///< generators of the complement
  std::vector<KnownHall> known_halls;
  std::vector<ExpectedFailure> expected_failures;
  bool curiosity = false;           ///< report the curiosity value in scans

  bool has_scenario() const { return !scenario_h.empty() || !scenario_n.empty(); }
  bool is_expected_failure(std::string const &check, PiSet const &pi) const;

  /// Closes the generators; throws Error if the order disagrees with `order`.
  PermGroup group(std::uint64_t cap = kDefaultElementCap) const;
  CoprimeActionScenario scenario(PermGroup const &g) const;

  /// Every single prime of |G| followed by extra_pis.
  std::vector<PiSet> scan_pis() const;
};

std::vector<CorpusEntry> const &builtin_corpus();

/// Case-sensitive builtin lookup; nullptr if unknown.
CorpusEntry const *find_builtin(std::string_view name);

/// Loads a builtin by name, or else a group file by path. Throws
/// InvalidArgument for unknown names/unreadable paths, ParseError on bad
/// files, CapExceeded for oversized groups.
PermGroup load_group(std::string const &name_or_path, std::uint64_t cap = kDefaultElementCap);

/// Recomputes every tag of an entry; returns a description of each
/// disagreement (empty when consistent).
std::vector<std::string> verify_tags(CorpusEntry const &entry);

} // namespace hallfix

#endif // HALLFIX_CORPUS_HPP
