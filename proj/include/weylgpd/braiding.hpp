#ifndef WEYLGPD_BRAIDING_HPP
#define WEYLGPD_BRAIDING_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylgpd/cyclo_monomial.hpp"
#include "weylgpd/root.hpp"

namespace weylgpd {

/// Braiding matrix (q_ij) of a braided vector space of diagonal type.
class BraidingMatrix {
 public:
  BraidingMatrix() = default;
  /// Identity braiding (all q_ij = 1) of the given rank.
  explicit BraidingMatrix(std::size_t rank);
  BraidingMatrix(std::size_t rank, std::vector<CycloMonomial> entries);

  std::size_t rank() const noexcept { return rank_; }
  const CycloMonomial& operator()(Vertex i, Vertex j) const { return q_[i * rank_ + j]; }
  CycloMonomial& operator()(Vertex i, Vertex j) { return q_[i * rank_ + j]; }

  /// q_ij q_ji.
  CycloMonomial edge(Vertex i, Vertex j) const { return (*this)(i, j) * (*this)(j, i); }
  /// The bicharacter value q(a, b) = prod q_ij^{a_i b_j}.
  CycloMonomial bilinear(const Root& a, const Root& b) const;

  BraidingMatrix transpose() const;

  friend bool operator==(const BraidingMatrix&, const BraidingMatrix&) = default;

  std::string str() const;

 private:
  std::size_t rank_ = 0;
  std::vector<CycloMonomial> q_;
};

/// Generalized Dynkin diagram: vertex labels q_ii and edge labels q_ij q_ji != 1.
/// This is the canonical key of a twist-equivalence class.
struct DynkinDiagram {
  std::vector<CycloMonomial> vertices;
  std::map<std::pair<Vertex, Vertex>, CycloMonomial> edges;  // keys (i, j) with i < j

  std::size_t rank() const noexcept { return vertices.size(); }
  /// Edge label, 1 when no edge is stored.
  CycloMonomial edge(Vertex i, Vertex j) const;

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
  friend auto operator<=>(const DynkinDiagram&, const DynkinDiagram&) = default;

  /// "[q11 q22 ...] {1-2:label, ...}".
  std::string str() const;
};

DynkinDiagram dynkin_diagram(const BraidingMatrix& q);

/// The matrix with q_ij = edge label for i < j, q_ji = 1, and the vertex labels on the diagonal.
BraidingMatrix representative(const DynkinDiagram& d);

/// True iff both matrices have the same Dynkin diagram.
bool twist_equivalent(const BraidingMatrix& q, const BraidingMatrix& p);

/// Upper bound on n tried when solving for c_ij.
std::int64_t cartan_search_cap(const CycloMonomial& q_ii);

/// c_ij = -min{ n : (n+1)_{q_ii} (1 - q_ii^n q_ij q_ji) = 0 }. Throws NotAdmissible
/// when no n up to cartan_search_cap(q_ii) qualifies.
Gcm cartan_matrix(const BraidingMatrix& q);

/// rho_i(q)_jk = q(s_i(alpha_j), s_i(alpha_k)) with s_i taken from `cartan`.
BraidingMatrix reflect_braiding(const BraidingMatrix& q, Vertex i, const Gcm& cartan);
BraidingMatrix reflect_braiding(const BraidingMatrix& q, Vertex i);

/// Vertex i is Cartan when q_ij q_ji = q_ii^{c_ij} for every j != i.
bool is_cartan_vertex(const BraidingMatrix& q, Vertex i, const Gcm& cartan);
bool is_cartan_vertex(const BraidingMatrix& q, Vertex i);

}  // namespace weylgpd

#endif  // WEYLGPD_BRAIDING_HPP
