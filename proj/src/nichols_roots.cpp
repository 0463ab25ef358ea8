#include "weylgpd/nichols_roots.hpp"

namespace weylgpd {

RootSystemResult compute_root_system(const BraidingMatrix& q) {
  RootSystemResult result;
  result.rank = q.rank();

  auto visit = [&result](const BraidingMatrix& current, Vertex i, const Gcm& c, const Root& root) {
    if (is_cartan_vertex(current, i, c)) result.cartan_roots.push_back(root);
    result.heights.push_back(current(i, i).multiplicative_order());
  };
  auto reflect = [](const BraidingMatrix& current, Vertex i, const Gcm& c) {
    return reflect_braiding(current, i, c);
  };
  auto cartan = [](const BraidingMatrix& current) { return cartan_matrix(current); };

  WalkOutcome walk = longest_word_walk(q, q.rank(), cartan, reflect, visit);
  result.positive_roots = std::move(walk.roots);
  result.longest_word = std::move(walk.word);
  result.verdict = walk.verdict;
  result.diagnostic = std::move(walk.diagnostic);

  if (result.verdict == Verdict::Finite) {
    mpz_class dim = 1;
    bool finite = true;
    for (const Order& h : result.heights) {
      if (!h) {
        finite = false;
        break;
      }
      dim *= static_cast<long>(*h);
    }
    if (finite) result.dimension = dim;
  }
  return result;
}

}  // namespace weylgpd
