#ifndef WEYLGPD_PBW_HPP
#define WEYLGPD_PBW_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weylgpd/root.hpp"

namespace weylgpd {

/// Word in the letters x_1 < x_2 < ... < x_theta; letter k is stored as k-1.
using Word = std::vector<Vertex>;

/// "x1x2x2".
std::string render_word(const Word& w);

/// True iff w is nonempty and strictly smaller than each of its proper suffixes.
bool is_lyndon(const Word& w);

/// Lyndon word of each positive root, with the decompositions that realize it.
struct LyndonTable {
  /// Roots in the convex order the table was built from.
  std::vector<Root> order;
  std::map<Root, Word> words;
  /// (alpha, gamma): alpha + gamma = beta, words[alpha] < words[gamma] and
  /// words[alpha] words[gamma] = words[beta]. Empty for simple roots.
  std::map<Root, std::vector<std::pair<Root, Root>>> decompositions;

  const Word& word(const Root& beta) const { return words.at(beta); }
};

/// Builds the table from a convex-ordered list of positive roots: simple roots
/// get x_k, every other root the lexicographically largest concatenation
/// l_alpha l_gamma over listed pairs alpha + gamma = beta with l_alpha < l_gamma.
/// Throws MalformedDelta when a non-simple root has no such pair.
LyndonTable lyndon_words(const std::vector<Root>& delta);

/// Binary bracket tree: a leaf x_i or [left, right]_c.
class Bracket {
 public:
  static Bracket leaf(Vertex letter);
  static Bracket node(Bracket left, Bracket right);

  bool is_leaf() const noexcept { return !left_; }
  Vertex letter() const noexcept { return letter_; }
  const Bracket& left() const { return *left_; }
  const Bracket& right() const { return *right_; }

  /// Leaves read left to right.
  Word flatten() const;
  /// "[[x1,x2],x2]".
  std::string str() const;

  friend bool operator==(const Bracket& a, const Bracket& b);

 private:
  Vertex letter_ = 0;
  std::shared_ptr<const Bracket> left_;
  std::shared_ptr<const Bracket> right_;
};

struct HyperwordTable {
  std::vector<Root> order;
  std::map<Root, Bracket> brackets;

  const Bracket& bracket(const Root& beta) const { return brackets.at(beta); }
};

/// [l]_c = [[l_1]_c, [l_2]_c]_c with (l_1, l_2) the decomposition whose left
/// factor is shortest, ties broken by the lexicographically smallest l_1.
HyperwordTable hyperwords(const LyndonTable& table);
HyperwordTable hyperwords(const std::vector<Root>& delta);

}  // namespace weylgpd

#endif  // WEYLGPD_PBW_HPP
