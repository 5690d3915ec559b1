#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include "oracles.hpp"
#include "picc/catalog.hpp"
#include "picc/class_engine.hpp"
#include "picc/errors.hpp"

using namespace picc;

namespace {
std::string data_path(const std::string& f) {
  const char* dir = std::getenv("PICC_TEST_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + f;
}
}  // namespace

TEST_CASE("family orders and class counts") {
  CHECK(build(GroupSpec::cyclic(1)).order() == 1);
  CHECK(build(GroupSpec::cyclic(7)).order() == 7);
  CHECK(build(GroupSpec::dihedral(8)).order() == 8);
  CHECK(build(GroupSpec::dihedral(4)).order() == 4);
  CHECK(build(GroupSpec::quaternion()).order() == 8);
  CHECK(build(GroupSpec::symmetric(4)).order() == 24);
  CHECK(build(GroupSpec::alternating(5)).order() == 60);
  const PermGroup d8 = build(GroupSpec::dihedral(8));
  CHECK(conjugacy_classes(d8).size() == 5);
  oracle::Table t(oracle::elements(d8));
  CHECK(oracle::classes(t).size() == 5);
  const PermGroup q8 = build(GroupSpec::quaternion());
  CHECK(conjugacy_classes(q8).size() == 5);
  CHECK(conjugacy_classes(build(GroupSpec::dihedral(4))).size() == 4);  // Klein
}

TEST_CASE("names parse and print") {
  for (const char* name : {"C1", "C12", "D8", "Q8", "S4", "A5", "D8 x C3", "A5 x C3 x C2"}) {
    CAPTURE(name);
    const GroupSpec s = GroupSpec::parse(name);
    CHECK(s.name() == name);
    CHECK(build(s).order() == s.expected_order());
  }
  CHECK(GroupSpec::parse("D8 x C3").degree() == 7);
  CHECK(GroupSpec::parse(" D8  x  C3 ").name() == "D8 x C3");
  for (const char* bad : {"", "X3", "C0", "D7", "D2", "Q9", "S", "A1x", "C3 x", "C3 y C2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GroupSpec::parse(bad), InvalidArgument);
  }
}

TEST_CASE("direct product") {
  const PermGroup g = build(GroupSpec::parse("D8 x C3"));
  CHECK(g.order() == 24);
  CHECK(g.degree() == 7);
  const PermGroup h = direct_product({build(GroupSpec::dihedral(8)), build(GroupSpec::cyclic(3))});
  CHECK(serialize_group_file(h) == serialize_group_file(g));
}

TEST_CASE("degree cap") {
  Limits small;
  small.max_degree = 10;
  CHECK_THROWS_AS(build(GroupSpec::symmetric(11), small), ResourceLimit);
  CHECK_NOTHROW(build(GroupSpec::symmetric(10), small));
  CHECK_THROWS_AS(parse_group_file("degree 11\n(0 1)\n", small), ResourceLimit);
}

TEST_CASE("GroupFile parsing") {
  const PermGroup c3 = parse_group_file("degree 3\n(0 1 2)\n");
  CHECK(c3.order() == 3);
  CHECK(parse_group_file("# only identity\ndegree 2\n()\n").order() == 1);
  CHECK(parse_group_file("degree 4\n").order() == 1);

  auto error_line = [](const std::string& text) -> std::size_t {
    try {
      parse_group_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("degree 4\n(0 1)\n(2 5)\n") == 3);
  try {
    parse_group_file("degree 4\n(0 1)\n(2 5)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("point out of range") != std::string::npos);
  }
  CHECK(error_line("(0 1)\n") == 1);             // missing degree line
  CHECK(error_line("degree x\n") == 1);
  CHECK(error_line("degree 3\n(0 1\n") == 2);    // unbalanced
  CHECK(error_line("degree 3\n(0 1)(1 2)\n") == 2);  // not disjoint
  CHECK(error_line("degree 3\n0 1\n") == 2);
  CHECK(error_line("\n\n# c\ndegree 3\n(0 a)\n") == 5);
}

TEST_CASE("GroupFile corpus round trip") {
  for (const char* f : {"a5.txt", "d8_x_c3.txt"}) {
    CAPTURE(f);
    const PermGroup g = read_group_file(data_path(f));
    const std::string text = serialize_group_file(g);
    const PermGroup g2 = parse_group_file(text);
    CHECK(serialize_group_file(g2) == text);
    CHECK(g2.order() == g.order());
    CHECK(g2.generators() == g.generators());
  }
  CHECK(read_group_file(data_path("a5.txt")).order() == 60);
  CHECK(read_group_file(data_path("d8_x_c3.txt")).order() == 24);
  CHECK_THROWS_AS(read_group_file(data_path("bad_point.txt")), ParseError);
  CHECK_THROWS(read_group_file(data_path("no_such_file.txt")));
}

TEST_CASE("round trip of every census group") {
  for (const auto& e : census()) {
    CAPTURE(e.name);
    const std::string text = serialize_group_file(e.group);
    CHECK(serialize_group_file(parse_group_file(text)) == text);
    CHECK(e.group.order() == e.spec.expected_order());
  }
}

TEST_CASE("default census contents") {
  const auto c = census();
  std::vector<std::string> names;
  for (const auto& e : c) names.push_back(e.name);
  for (const char* want : {"S3", "S4", "A4", "A5", "D8", "Q8", "D8 x C3", "A5 x C3"}) {
    CAPTURE(want);
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  }
  for (const auto& e : c) CHECK(e.group.order() <= 2000);
  std::vector<std::string> again;
  for (const auto& e : census()) again.push_back(e.name);
  CHECK(again == names);
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

  CensusConfig capped;
  capped.max_order = 100;
  std::vector<std::string> small;
  for (const auto& e : census(capped)) small.push_back(e.name);
  CHECK(std::find(small.begin(), small.end(), "A5 x C3") == small.end());
  CHECK(std::find(small.begin(), small.end(), "D8 x C3") != small.end());
  CHECK(std::find(small.begin(), small.end(), "S5") == small.end());
}

TEST_CASE("class count is multiplicative over direct products") {
  CensusConfig cc;
  cc.max_order = 400;
  for (const auto& e : census(cc)) {
    if (e.spec.family != GroupSpec::Family::product) continue;
    CAPTURE(e.name);
    std::size_t k = 1;
    for (const auto& f : e.spec.factors) k *= conjugacy_classes(build(f)).size();
    CHECK(conjugacy_classes(e.group).size() == k);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const PiSet pi{p};
      std::uint64_t kp = 1;
      for (const auto& f : e.spec.factors) kp *= k_pi(conjugacy_classes(build(f)), pi);
      CHECK(k_pi(conjugacy_classes(e.group), pi) == kp);
    }
  }
}
