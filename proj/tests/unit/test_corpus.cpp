#include "doctest.h"

#include <fstream>

#include "hallfix/corpus.hpp"
#include "hallfix/errors.hpp"
#include "helpers.hpp"

using namespace hallfix;

TEST_CASE("group files")
{
  auto f = parse_group_file("# comment\n\ndegree: 4\ngen: (1 2 3 4)\ngen: (1 3)\n");
  CHECK(f.degree == 4u);
  REQUIRE(f.generators.size() == 2u);
  CHECK(f.generators[1].to_string() == "(1 3)");
  auto text = format_group_file(f.degree, f.generators);
  auto again = parse_group_file(text);
  CHECK(again.degree == f.degree);
  CHECK(again.generators == f.generators);

  auto kind = [](std::string const &text) {
    try {
      parse_group_file(text);
    } catch (ParseError const &e) {
      return e.kind();
    }
    FAIL("accepted: " << text);
    return ParseErrorKind::InvalidToken;
  };
  CHECK(kind("gen: (1 2)\n") == ParseErrorKind::MalformedFile);
  CHECK(kind("degree: 2\ndegree: 3\n") == ParseErrorKind::MalformedFile);
  CHECK(kind("degree: x\n") == ParseErrorKind::MalformedFile);
  CHECK(kind("degree: 3\nfoo: bar\n") == ParseErrorKind::MalformedFile);
  CHECK(kind("degree: 3\ngen: (1 2)(2 3)\n") == ParseErrorKind::RepeatedPoint);
  CHECK(kind("degree: 3\ngen: (1 5)\n") == ParseErrorKind::PointOutOfRange);
  CHECK(kind("degree: 3\ngen: (1 2\n") == ParseErrorKind::MalformedParentheses);
}

TEST_CASE("builtin lookup and orders")
{
  CHECK(load_group("A5").order() == 60u);
  auto gl = load_group("GL(3,2)");
  CHECK(gl.order() == 168u);
  CHECK(gl.degree() == 7u);
  CHECK(load_group("PSL(2,9)").order() == 360u);
  CHECK(load_group("PGL(2,9)").order() == 720u);
  CHECK(find_builtin("a5") == nullptr);
  CHECK_THROWS_AS(load_group("NoSuchGroup"), InvalidArgument);
  CHECK_THROWS_AS(load_group("S5", 100), CapExceeded);
}

TEST_CASE("group file loading")
{
  auto path = std::string("corpus_test_c2.group");
  {
    std::ofstream out(path);
    out << "degree: 2\ngen: (1 2)\n";
  }
  CHECK(load_group(path).order() == 2u);
  {
    std::ofstream out(path);
    out << "degree: 2\ngen: (1 2\n";
  }
  CHECK_THROWS_AS(load_group(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("builtin sources use the file format")
{
  for (auto const &e : builtin_corpus()) {
    CAPTURE(e.name);
    auto f = parse_group_file(e.source);
    CHECK(close(f.generators, f.degree).order() == e.order);
  }
}

TEST_CASE("corpus tags agree with computed properties")
{
  for (auto const &e : builtin_corpus()) {
    CAPTURE(e.name);
    auto problems = verify_tags(e);
    CHECK(problems.empty());
    for (auto const &p : problems)
      MESSAGE(p);
  }
}

TEST_CASE("expected failures are exactly the two documented non-instances")
{
  std::vector<std::string> seen;
  for (auto const &e : builtin_corpus())
    for (auto const &f : e.expected_failures)
      seen.push_back(e.name + " " + f.check + " " + f.pi.to_string());
  CHECK(seen == std::vector<std::string>{"A5 verify-mult {2}", "GL(3,2) verify-mult {2}"});
  auto const *a5 = find_builtin("A5");
  CHECK(a5->is_expected_failure("verify-mult", PiSet{2}));
  CHECK_FALSE(a5->is_expected_failure("verify-mult", PiSet{3}));
}
