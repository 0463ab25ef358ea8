#include <doctest.h>

#include "support.hpp"
#include "weylgpd/errors.hpp"
#include "weylgpd/nichols_roots.hpp"
#include "weylgpd/pbw.hpp"

using namespace weylgpd;
using testing::roots;

namespace {

Word w(std::initializer_list<int> letters) {
  Word out;
  for (int l : letters) out.push_back(static_cast<Vertex>(l - 1));
  return out;
}

std::vector<Root> g23_roots() {
  return roots(3, {"1", "12", "12^2", "2", "12^33", "12^23", "2^23", "123", "23", "3"});
}

}  // namespace

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon(w({1, 2})));
  CHECK_FALSE(is_lyndon(w({2, 1})));
  CHECK(is_lyndon(w({1, 2, 2})));
  CHECK(is_lyndon(w({1})));
  CHECK_FALSE(is_lyndon(w({1, 1})));
  CHECK_FALSE(is_lyndon(w({1, 2, 1, 2})));
  CHECK(is_lyndon(w({1, 1, 2, 1, 2})));
  CHECK_FALSE(is_lyndon(Word{}));
}

TEST_CASE("A2 table") {
  const LyndonTable t = lyndon_words(roots(2, {"1", "12", "2"}));
  CHECK(t.word(Root::parse("1", 2)) == w({1}));
  CHECK(t.word(Root::parse("2", 2)) == w({2}));
  CHECK(t.word(Root::parse("12", 2)) == w({1, 2}));
  const auto& d = t.decompositions.at(Root::parse("12", 2));
  REQUIRE(d.size() == 1);
  CHECK(d[0] == std::pair{Root::parse("1", 2), Root::parse("2", 2)});
  CHECK(hyperwords(roots(2, {"1", "12", "2"})).bracket(Root::parse("12", 2)).str() == "[x1,x2]");
}

TEST_CASE("singleton list") {
  const LyndonTable t = lyndon_words(roots(1, {"1"}));
  CHECK(t.word(Root::parse("1", 1)) == w({1}));
  CHECK(t.decompositions.at(Root::parse("1", 1)).empty());
  CHECK(hyperwords(roots(1, {"1"})).bracket(Root::parse("1", 1)).str() == "x1");
}

TEST_CASE("g(2,3) Lyndon words and hyperwords") {
  const LyndonTable t = lyndon_words(g23_roots());
  const HyperwordTable h = hyperwords(t);
  const Root r122 = Root::parse("12^2", 3);
  CHECK(t.word(r122) == w({1, 2, 2}));
  CHECK(t.decompositions.at(r122) == std::vector<std::pair<Root, Root>>{{Root::parse("12", 3), Root::parse("2", 3)}});
  CHECK(h.bracket(r122).str() == "[[x1,x2],x2]");
  CHECK(t.word(Root::parse("12^23", 3)) == w({1, 2, 3, 2}));
  CHECK(t.word(Root::parse("12^33", 3)) == w({1, 2, 3, 2, 2}));
  CHECK(h.bracket(Root::parse("123", 3)).str() == "[x1,[x2,x3]]");
  for (const Root& beta : g23_roots()) {
    INFO(beta.str());
    CHECK(is_lyndon(t.word(beta)));
    CHECK(t.word(beta).size() == static_cast<std::size_t>(beta.height()));
    const Word flat = h.bracket(beta).flatten();
    CHECK(flat == t.word(beta));
    Root count = Root::zero(3);
    for (Vertex v : flat) count[v] += 1;
    CHECK(count == beta);
  }
}

TEST_CASE("tables do not depend on the order decompositions are found in") {
  const std::vector<Root> list = g23_roots();
  std::vector<Root> reversed(list.rbegin(), list.rend());
  const LyndonTable a = lyndon_words(list), b = lyndon_words(list), c = lyndon_words(reversed);
  CHECK(a.words == b.words);
  CHECK(a.words == c.words);
  const HyperwordTable ha = hyperwords(a), hc = hyperwords(c);
  for (const Root& beta : list) CHECK(ha.bracket(beta) == hc.bracket(beta));
}

TEST_CASE("malformed root lists") {
  CHECK_THROWS_AS(lyndon_words(roots(2, {"1", "1^22", "2"})), MalformedDelta);
  CHECK_THROWS_AS(lyndon_words(roots(2, {"1", "1", "2"})), MalformedDelta);
  CHECK_THROWS_AS(lyndon_words(roots(1, {"1^2", "1"})), MalformedDelta);
}

TEST_CASE("two-object example lists are accepted") {
  const auto x = roots(3, {"1", "12", "123", "1^22^33^4", "12^23^2", "12^23^3", "12^23^4", "12^33^4", "123^2", "2",
                           "23^2", "23", "3"});
  const LyndonTable t = lyndon_words(x);
  const HyperwordTable h = hyperwords(t);
  for (const Root& beta : x) {
    CHECK(is_lyndon(t.word(beta)));
    CHECK(h.bracket(beta).flatten() == t.word(beta));
  }
}
