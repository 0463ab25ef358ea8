#ifndef WEYLGPD_WALK_HPP
#define WEYLGPD_WALK_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylgpd/errors.hpp"
#include "weylgpd/root.hpp"

namespace weylgpd {

enum class Verdict { Finite, Infinite };

inline const char* to_string(Verdict v) { return v == Verdict::Finite ? "Finite" : "Infinite"; }

/// Maximum number of positive roots a walk may produce before the system is
/// declared infinite: max(250, theta^2).
inline std::size_t walk_root_guard(std::size_t rank) {
  return std::max<std::size_t>(250, rank * rank);
}

/// Roots and reduced word produced by a longest-word walk.
struct WalkOutcome {
  std::vector<Root> roots;
  std::vector<Vertex> word;
  Verdict verdict = Verdict::Finite;
  std::string diagnostic;
};

/// Greedy construction of a reduced expression of the longest element.
///
/// Starting at `object` with i = 1 and M = id, each step computes the Cartan
/// matrix C of the current object, reports the current root to `visit`,
/// replaces M by M * s_i, moves to rho_i(object), and continues with the
/// smallest k != i whose column M_k is nonnegative; that column is the next
/// root. Column j of M is s_{i_1} ... s_{i_t}(alpha_j), so M_k >= 0 is exactly
/// the condition for sigma_k to extend the word.
///
/// CartanFn:  Gcm(const Object&), may throw NotAdmissible
/// ReflectFn: Object(const Object&, Vertex, const Gcm&)
/// VisitFn:   void(const Object&, Vertex, const Gcm&, const Root&)
template <class Object, class CartanFn, class ReflectFn, class VisitFn>
WalkOutcome longest_word_walk(Object object, std::size_t rank, CartanFn&& cartan_of,
                              ReflectFn&& reflect, VisitFn&& visit,
                              std::optional<std::size_t> guard = std::nullopt) {
  WalkOutcome out;
  const std::size_t limit = guard.value_or(walk_root_guard(rank));
  IntMatrix m = IntMatrix::identity(rank);
  Vertex i = 0;
  out.roots.push_back(Root::simple(rank, 0));
  out.word.push_back(0);
  for (;;) {
    Gcm c;
    try {
      c = cartan_of(object);
    } catch (const NotAdmissible& e) {
      out.verdict = Verdict::Infinite;
      out.diagnostic = std::string(e.what()) + " (after " + std::to_string(out.roots.size()) +
                       " roots)";
      return out;
    }
    visit(object, i, c, out.roots.back());
    try {
      m = m * simple_reflection(c, i);
      object = reflect(object, i, c);
    } catch (const std::overflow_error&) {
      out.verdict = Verdict::Infinite;
      out.diagnostic = "integer overflow after " + std::to_string(out.roots.size()) + " roots";
      return out;
    }

    std::optional<Vertex> next;
    for (Vertex k = 0; k < rank; ++k) {
      if (k != i && m.column(k).is_nonnegative()) {
        next = k;
        break;
      }
    }
    if (!next) return out;
    if (out.roots.size() >= limit) {
      out.verdict = Verdict::Infinite;
      out.diagnostic = "root guard fired: more than " + std::to_string(limit) + " positive roots";
      return out;
    }
    i = *next;
    out.roots.push_back(m.column(i));
    out.word.push_back(i);
  }
}

}  // namespace weylgpd

#endif  // WEYLGPD_WALK_HPP
