#include "weylgpd/pbw.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "weylgpd/errors.hpp"

namespace weylgpd {

std::string render_word(const Word& w) {
  std::string out;
  for (Vertex v : w) out += "x" + std::to_string(v + 1);
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(k),
                                      w.end()))
      return false;
  }
  return true;
}

LyndonTable lyndon_words(const std::vector<Root>& delta) {
  LyndonTable table;
  table.order = delta;
  std::map<Root, std::size_t> position;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    if (!delta[k].is_positive()) throw MalformedDelta("non-positive root " + delta[k].str());
    if (!position.emplace(delta[k], k).second)
      throw MalformedDelta("root " + delta[k].str() + " listed twice");
  }

  // Stable sort by height keeps the convex order among roots of equal height.
  std::vector<std::size_t> by_height(delta.size());
  std::iota(by_height.begin(), by_height.end(), 0);
  std::stable_sort(by_height.begin(), by_height.end(), [&](std::size_t a, std::size_t b) {
    return delta[a].height() < delta[b].height();
  });

  for (std::size_t k : by_height) {
    const Root& beta = delta[k];
    if (beta.height() == 1) {
      const auto letter = static_cast<Vertex>(
          std::find(beta.coords.begin(), beta.coords.end(), 1) - beta.coords.begin());
      table.words[beta] = Word{letter};
      table.decompositions[beta];
      continue;
    }
    // Split beta = alpha + gamma over all listed roots, keeping l_alpha < l_gamma.
    std::vector<std::pair<Root, Root>> candidates;
    for (const Root& alpha : delta) {
      if (alpha.height() >= beta.height()) continue;
      Root rest = beta - alpha;
      if (!position.count(rest)) continue;
      if (table.word(alpha) < table.word(rest)) candidates.emplace_back(alpha, std::move(rest));
    }
    if (candidates.empty())
      throw MalformedDelta("root " + beta.str() + " is not a sum of two listed roots with l_1 < l_2");

    auto concat = [&table](const std::pair<Root, Root>& d) {
      Word w = table.words.at(d.first);
      const Word& tail = table.words.at(d.second);
      w.insert(w.end(), tail.begin(), tail.end());
      return w;
    };
    Word best;
    for (const auto& d : candidates) best = std::max(best, concat(d));
    auto& decs = table.decompositions[beta];
    for (auto& d : candidates)
      if (concat(d) == best) decs.push_back(std::move(d));
    table.words[beta] = std::move(best);
  }
  return table;
}

Bracket Bracket::leaf(Vertex letter) {
  Bracket b;
  b.letter_ = letter;
  return b;
}

Bracket Bracket::node(Bracket left, Bracket right) {
  Bracket b;
  b.left_ = std::make_shared<const Bracket>(std::move(left));
  b.right_ = std::make_shared<const Bracket>(std::move(right));
  return b;
}

Word Bracket::flatten() const {
  if (is_leaf()) return Word{letter_};
  Word w = left_->flatten();
  const Word r = right_->flatten();
  w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string Bracket::str() const {
  if (is_leaf()) return "x" + std::to_string(letter_ + 1);
  return "[" + left_->str() + "," + right_->str() + "]";
}

bool operator==(const Bracket& a, const Bracket& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.letter_ == b.letter_;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

HyperwordTable hyperwords(const LyndonTable& table) {
  HyperwordTable out;
  out.order = table.order;

  // Process by word length so both factors are already bracketed.
  std::vector<Root> roots = table.order;
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Root& a, const Root& b) { return a.height() < b.height(); });
  for (const Root& beta : roots) {
    const Word& w = table.word(beta);
    if (w.size() == 1) {
      out.brackets.emplace(beta, Bracket::leaf(w.front()));
      continue;
    }
    const auto& decs = table.decompositions.at(beta);
    if (decs.empty()) throw MalformedDelta("no decomposition recorded for " + beta.str());
    const auto chosen = std::min_element(decs.begin(), decs.end(), [&](const auto& a, const auto& b) {
      const Word& la = table.word(a.first);
      const Word& lb = table.word(b.first);
      if (la.size() != lb.size()) return la.size() < lb.size();
      return la < lb;
    });
    out.brackets.emplace(beta, Bracket::node(out.brackets.at(chosen->first),
                                             out.brackets.at(chosen->second)));
  }
  return out;
}

HyperwordTable hyperwords(const std::vector<Root>& delta) { return hyperwords(lyndon_words(delta)); }

}  // namespace weylgpd
