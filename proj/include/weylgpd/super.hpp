#ifndef WEYLGPD_SUPER_HPP
#define WEYLGPD_SUPER_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "weylgpd/field_scalar.hpp"
#include "weylgpd/root.hpp"
#include "weylgpd/walk.hpp"

namespace weylgpd {

/// Parity of a simple root: +1 even, -1 odd.
enum class Parity : int { Even = 1, Odd = -1 };

/// A matrix A over F(t) with a parity vector, the datum of a contragredient
/// Lie superalgebra g(A, p). Rows of A are only meaningful up to nonzero
/// scalars; row_canonical() picks a representative.
class SuperPair {
 public:
  /// Validates squareness, a common characteristic, and a_ij = 0 <=> a_ji = 0.
  SuperPair(unsigned characteristic, std::size_t rank, std::vector<FieldScalar> a,
            std::vector<Parity> parity);

  unsigned characteristic() const noexcept { return characteristic_; }
  std::size_t rank() const noexcept { return rank_; }
  const FieldScalar& operator()(Vertex i, Vertex j) const { return a_[i * rank_ + j]; }
  const std::vector<FieldScalar>& entries() const noexcept { return a_; }
  Parity parity(Vertex i) const { return parity_.at(i); }
  const std::vector<Parity>& parities() const noexcept { return parity_; }

  friend bool operator==(const SuperPair&, const SuperPair&) = default;

  /// Parity signs and rows: "(- - -) [0 1 0; 1 2 1; 0 1 0]".
  std::string str() const;

 private:
  unsigned characteristic_;
  std::size_t rank_;
  std::vector<FieldScalar> a_;
  std::vector<Parity> parity_;
};

/// Row i scaled by 2/a_ii when a_ii != 0, otherwise by the inverse of its first
/// nonzero entry. Idempotent.
SuperPair row_canonical(const SuperPair& x);

/// Rank of A over F(t).
std::size_t matrix_rank(const SuperPair& x);

/// Integer representative of a constant a in {1-l, ..., 0} (l > 0), or a itself
/// when l = 0 and a is an integer. Empty when no integer representative exists.
std::optional<std::int64_t> integer_representative(const FieldScalar& a);

/// Cartan matrix of (A, p), computed from the row-canonical form.
/// Throws NotAdmissible when some c_ij is undefined (characteristic 0 only).
Gcm super_cartan_matrix(const SuperPair& x);

/// rho_i(A, p), row-canonicalized.
SuperPair reflect_pair(const SuperPair& x, Vertex i, const Gcm& cartan);
SuperPair reflect_pair(const SuperPair& x, Vertex i);

struct Superdimension {
  std::int64_t even = 0;
  std::int64_t odd = 0;
  friend bool operator==(const Superdimension&, const Superdimension&) = default;
  /// "(12|14)".
  std::string str() const;
};

struct SuperRootResult {
  std::size_t rank = 0;
  std::vector<Root> positive_roots;
  std::vector<Root> odd_roots;
  /// Odd non-degenerate roots.
  std::vector<Root> ond_roots;
  /// positive_roots with 2 beta inserted right after each odd non-degenerate beta.
  std::vector<Root> nabla_plus;
  std::vector<Vertex> longest_word;
  /// dim h = 2 theta - rank A.
  std::size_t cartan_subalgebra_dim = 0;
  Superdimension sdim;
  Verdict verdict = Verdict::Finite;
  std::string diagnostic;
};

/// Longest-word walk over pairs. NotAdmissible becomes an Infinite verdict.
SuperRootResult compute_super_roots(const SuperPair& x);

}  // namespace weylgpd

#endif  // WEYLGPD_SUPER_HPP
