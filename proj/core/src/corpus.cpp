#include "hallfix/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hallfix/errors.hpp"
#include "hallfix/hall.hpp"

namespace hallfix {

namespace {

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1u));
}

std::string file_text(unsigned degree, std::initializer_list<char const *> gens)
{
  std::string res = "degree: " + std::to_string(degree) + "\n";
  for (auto g : gens)
    res += std::string("gen: ") + g + "\n";
  return res;
}

std::vector<CorpusEntry> make_corpus()
{
  std::vector<CorpusEntry> c;

  auto add = [&](std::string name, std::uint64_t order, bool solvable, std::string source) -> CorpusEntry & {
    CorpusEntry e;
    e.name = std::move(name);
    e.order = order;
    e.solvable = solvable;
    e.source = std::move(source);
    c.push_back(std::move(e));
    return c.back();
  };

  {
    auto &e = add("Trivial", 1, true, file_text(1, {"()"}));
    e.known_halls = {{{2}, 1, 1}};
    e.extra_pis = {{2}};
  }
  {
    auto &e = add("C6", 6, true, file_text(6, {"(1 2 3 4 5 6)"}));
    e.scenario_n = {"(1 3 5)(2 4 6)"};
    e.scenario_h = {"(1 4)(2 5)(3 6)"};
    e.known_halls = {{{2}, 2, 1}, {{3}, 3, 1}};
  }
  {
    auto &e = add("S3", 6, true, file_text(3, {"(1 2 3)", "(1 2)"}));
    e.scenario_n = {"(1 2 3)"};
    e.scenario_h = {"(1 2)"};
    e.known_halls = {{{2}, 2, 3}, {{3}, 3, 1}};
  }
  {
    auto &e = add("D8", 8, true, file_text(4, {"(1 2 3 4)", "(1 3)"}));
    e.known_halls = {{{2}, 8, 1}};
  }
  {
    auto &e = add("D10", 10, true, file_text(5, {"(1 2 3 4 5)", "(2 5)(3 4)"}));
    e.scenario_n = {"(1 2 3 4 5)"};
    e.scenario_h = {"(2 5)(3 4)"};
    e.known_halls = {{{2}, 2, 5}, {{5}, 5, 1}};
  }
  {
    auto &e = add("A4", 12, true, file_text(4, {"(1 2 3)", "(2 3 4)"}));
    e.scenario_n = {"(1 2)(3 4)", "(1 3)(2 4)"};
    e.scenario_h = {"(1 2 3)"};
    e.known_halls = {{{2}, 4, 1}, {{3}, 3, 4}};
  }
  {
    auto &e = add("S4", 24, true, file_text(4, {"(1 2 3 4)", "(1 2)"}));
    e.extra_pis = {{2, 3}};
    e.known_halls = {{{2}, 8, 3}, {{3}, 3, 4}, {{2, 3}, 24, 1}};
  }
  {
    auto &e = add("SL(2,3)", 24, true, file_text(8, {"(1 4 7)(2 8 5)", "(3 4 5)(6 8 7)"}));
    e.scenario_n = {"(1 6 2 3)(4 7 8 5)", "(1 5 2 7)(3 4 6 8)"};
    e.scenario_h = {"(1 4 7)(2 8 5)"};
    e.known_halls = {{{2}, 8, 1}, {{3}, 3, 4}};
  }
  {
    auto &e = add("F20", 20, true, file_text(5, {"(1 2 3 4 5)", "(1 2 4 3)"}));
    e.scenario_n = {"(1 2 3 4 5)"};
    e.scenario_h = {"(1 2 4 3)"};
    e.known_halls = {{{2}, 4, 5}, {{5}, 5, 1}};
  }
  {
    auto &e = add("F21", 21, true, file_text(7, {"(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"}));
    e.scenario_n = {"(1 2 3 4 5 6 7)"};
    e.scenario_h = {"(1 2 4)(3 6 5)"};
    e.extra_pis = {{3, 7}};
    e.known_halls = {{{3}, 3, 7}, {{7}, 7, 1}, {{3, 7}, 21, 1}};
  }
  {
    auto &e = add("F21xC2", 42, true,
                  file_text(9, {"(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)", "(8 9)"}));
    e.extra_pis = {{3, 7}, {2, 3}, {2, 7}};
    e.known_halls = {{{2}, 2, 1}, {{3}, 3, 7}, {{3, 7}, 21, 1}, {{2, 3}, 6, 7}};
  }
  {
    auto &e = add("F42", 42, true, file_text(7, {"(1 2 3 4 5 6 7)", "(1 3 2 6 4 5)"}));
    e.scenario_n = {"(1 2 3 4 5 6 7)"};
    e.scenario_h = {"(1 3 2 6 4 5)"};
    e.extra_pis = {{2, 3}};
    e.known_halls = {{{2}, 2, 7}, {{3}, 3, 7}, {{2, 3}, 6, 7}};
  }
  {
    auto &e = add("D21", 42, true,
                  file_text(21, {"(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21)",
                                 "(2 21)(3 20)(4 19)(5 18)(6 17)(7 16)(8 15)(9 14)(10 13)(11 12)"}));
    e.scenario_n = {"(1 4 7 10 13 16 19)(2 5 8 11 14 17 20)(3 6 9 12 15 18 21)"};
    e.scenario_h = {"(1 8 15)(2 9 16)(3 10 17)(4 11 18)(5 12 19)(6 13 20)(7 14 21)",
                    "(2 21)(3 20)(4 19)(5 18)(6 17)(7 16)(8 15)(9 14)(10 13)(11 12)"};
    e.extra_pis = {{2, 3}, {3, 7}};
    e.known_halls = {{{2}, 2, 21}, {{3}, 3, 1}, {{7}, 7, 1}, {{2, 3}, 6, 7}};
  }
  {
    auto &e = add("C3^2:V4", 36, true,
                  file_text(9, {"(1 4 7)(2 5 8)(3 6 9)", "(1 2 3)(4 5 6)(7 8 9)",
                                "(4 7)(5 8)(6 9)", "(2 3)(5 6)(8 9)"}));
    e.scenario_n = {"(1 4 7)(2 5 8)(3 6 9)", "(1 2 3)(4 5 6)(7 8 9)"};
    e.scenario_h = {"(4 7)(5 8)(6 9)", "(2 3)(5 6)(8 9)"};
    e.known_halls = {{{2}, 4, 9}, {{3}, 9, 1}};
  }
  {
    auto &e = add("A5", 60, false, file_text(5, {"(1 2 3 4 5)", "(3 4 5)"}));
    e.extra_pis = {{2, 3}, {2, 5}};
    e.known_halls = {{{2}, 4, 5}, {{3}, 3, 10}, {{5}, 5, 6}, {{2, 3}, 12, 5}};
    e.expected_failures = {{"verify-mult", {2}}};
    e.curiosity = true;
  }
  {
    auto &e = add("S5", 120, false, file_text(5, {"(1 2 3 4 5)", "(1 2)"}));
    e.extra_pis = {{2, 3}};
    e.known_halls = {{{2}, 8, 15}, {{3}, 3, 10}, {{5}, 5, 6}, {{2, 3}, 24, 5}};
    e.curiosity = true;
  }
  {
    auto &e = add("GL(3,2)", 168, false, file_text(7, {"(2 6)(3 7)", "(1 4 2)(3 5 6)"}));
    e.extra_pis = {{2, 3}};
    e.known_halls = {{{2}, 8, 21}, {{3}, 3, 28}, {{7}, 7, 8}, {{2, 3}, 24, 14}};
    e.expected_failures = {{"verify-mult", {2}}};
  }
  {
    auto &e = add("PSL(2,9)", 360, false,
                  file_text(10, {"(2 5 8)(3 6 9)(4 7 10)", "(1 2)(5 8)(6 7)(9 10)",
                                 "(3 5 4 8)(6 7 10 9)"}));
    e.known_halls = {{{2}, 8, 45}, {{3}, 9, 10}, {{5}, 5, 36}};
    e.curiosity = true;
  }
  {
    auto &e = add("PGL(2,9)", 720, false,
                  file_text(10, {"(2 5 8)(3 6 9)(4 7 10)", "(1 2)(5 8)(6 7)(9 10)",
                                 "(3 9 5 6 4 7 8 10)"}));
    e.known_halls = {{{2}, 16, 45}, {{3}, 9, 10}, {{5}, 5, 36}};
    e.curiosity = true;
  }

  for (auto &e : c) {
    if (!e.solvable)
      continue;
    for (auto p : prime_divisors(e.order))
      e.separable_for.push_back(PiSet{p});
    for (auto const &pi : e.extra_pis)
      e.separable_for.push_back(pi);
  }
  return c;
}

} // namespace

GroupFile parse_group_file(std::string_view text)
{
  GroupFile res;
  std::vector<std::string> gen_lines;
  bool have_degree = false;

  std::istringstream in{std::string(text)};
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;

    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw ParseError(ParseErrorKind::MalformedFile,
                       "line " + std::to_string(lineno) + ": expected 'key: value'");
    auto key = trim(std::string_view(t).substr(0, colon));
    auto value = trim(std::string_view(t).substr(colon + 1u));

    if (key == "degree") {
      if (have_degree)
        throw ParseError(ParseErrorKind::MalformedFile,
                         "line " + std::to_string(lineno) + ": duplicate degree");
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
          value.size() > 6u || std::stoul(value) == 0u)
        throw ParseError(ParseErrorKind::MalformedFile,
                         "line " + std::to_string(lineno) + ": invalid degree '" + value + "'");
      res.degree = static_cast<unsigned>(std::stoul(value));
      have_degree = true;
    } else if (key == "gen") {
      gen_lines.push_back(value);
    } else {
      throw ParseError(ParseErrorKind::MalformedFile,
                       "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }

  if (!have_degree)
    throw ParseError(ParseErrorKind::MalformedFile, "missing 'degree:' line");
  if (gen_lines.empty())
    throw ParseError(ParseErrorKind::MalformedFile, "missing 'gen:' line");
  for (auto const &g : gen_lines)
    res.generators.push_back(parse_permutation(g, res.degree));
  return res;
}

std::string format_group_file(unsigned degree, std::vector<Permutation> const &generators)
{
  std::string res = "degree: " + std::to_string(degree) + "\n";
  for (auto const &g : generators)
    res += "gen: " + g.to_string() + "\n";
  return res;
}

bool CorpusEntry::is_expected_failure(std::string const &check, PiSet const &pi) const
{
  return std::any_of(expected_failures.begin(), expected_failures.end(),
                     [&](ExpectedFailure const &f) { return f.check == check && f.pi == pi; });
}

PermGroup CorpusEntry::group(std::uint64_t cap) const
{
  auto file = parse_group_file(source);
  auto g = close(file.generators, file.degree, cap);
  if (g.order() != order)
    throw Error("builtin " + name + " closed to order " + std::to_string(g.order()) +
                ", expected " + std::to_string(order));
  return g;
}

CoprimeActionScenario CorpusEntry::scenario(PermGroup const &g) const
{
  if (!has_scenario())
    throw NotApplicable(name + " has no coprime action scenario");

  auto parse_all = [&](std::vector<std::string> const &gens) {
    std::vector<Permutation> res;
    for (auto const &s : gens)
      res.push_back(parse_permutation(s, g.degree()));
    return subgroup(g, res);
  };
  return CoprimeActionScenario(g, parse_all(scenario_n), parse_all(scenario_h));
}

std::vector<PiSet> CorpusEntry::scan_pis() const
{
  std::vector<PiSet> res;
  for (auto p : prime_divisors(order))
    res.push_back(PiSet{p});
  for (auto const &pi : extra_pis) {
    if (std::find(res.begin(), res.end(), pi) == res.end())
      res.push_back(pi);
  }
  return res;
}

std::vector<CorpusEntry> const &builtin_corpus()
{
  static std::vector<CorpusEntry> const corpus = make_corpus();
  return corpus;
}

CorpusEntry const *find_builtin(std::string_view name)
{
  for (auto const &e : builtin_corpus()) {
    if (e.name == name)
      return &e;
  }
  return nullptr;
}

PermGroup load_group(std::string const &name_or_path, std::uint64_t cap)
{
  if (auto const *e = find_builtin(name_or_path))
    return e->group(cap);

  std::ifstream in(name_or_path);
  if (!in)
    throw InvalidArgument("'" + name_or_path + "' is neither a builtin group nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  auto file = parse_group_file(ss.str());
  return close(file.generators, file.degree, cap);
}

std::vector<std::string> verify_tags(CorpusEntry const &entry)
{
  std::vector<std::string> issues;
  auto g = entry.group();

  if (is_solvable(g) != entry.solvable)
    issues.push_back("solvable tag is wrong");

  for (auto const &pi : entry.separable_for) {
    if (!is_pi_separable(g, pi))
      issues.push_back("not " + pi.to_string() + "-separable");
  }

  for (auto const &k : entry.known_halls) {
    try {
      auto ctx = build_hall_context(g, k.pi);
      if (ctx.n() != k.order || ctx.t() != k.count)
        issues.push_back("Hall " + k.pi.to_string() + ": found order " + std::to_string(ctx.n()) +
                         " count " + std::to_string(ctx.t()));
    } catch (NoHallSubgroup const &) {
      issues.push_back("Hall " + k.pi.to_string() + ": none found");
    }
  }

  if (entry.has_scenario()) {
    try {
      (void)entry.scenario(g);
    } catch (Error const &ex) {
      issues.push_back(std::string("scenario: ") + ex.what());
    }
  }
  return issues;
}

} // namespace hallfix
