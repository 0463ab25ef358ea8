#ifndef WEYLGPD_NICHOLS_ROOTS_HPP
#define WEYLGPD_NICHOLS_ROOTS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "weylgpd/braiding.hpp"
#include "weylgpd/walk.hpp"

namespace weylgpd {

/// Root system of a Nichols algebra of diagonal type.
struct RootSystemResult {
  std::size_t rank = 0;
  /// Positive roots in the convex order of `longest_word`.
  std::vector<Root> positive_roots;
  /// N_beta = ord q(beta, beta), aligned with positive_roots.
  std::vector<Order> heights;
  /// Cartan roots, in the order they were found.
  std::vector<Root> cartan_roots;
  /// Reduced expression sigma_{i_1} ... sigma_{i_N} of the longest element.
  std::vector<Vertex> longest_word;
  /// Product of the heights; nullopt when some height is infinite or the system is infinite.
  std::optional<mpz_class> dimension;
  Verdict verdict = Verdict::Finite;
  /// Why the verdict is Infinite (empty otherwise).
  std::string diagnostic;
};

/// Runs the longest-word walk on q, collecting heights and Cartan roots on the way.
/// Never throws NotAdmissible: it becomes an Infinite verdict with partial data.
RootSystemResult compute_root_system(const BraidingMatrix& q);

}  // namespace weylgpd

#endif  // WEYLGPD_NICHOLS_ROOTS_HPP
