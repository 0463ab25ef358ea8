#ifndef WEYLGPD_GROUPOID_HPP
#define WEYLGPD_GROUPOID_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylgpd/braiding.hpp"
#include "weylgpd/root.hpp"
#include "weylgpd/super.hpp"
#include "weylgpd/walk.hpp"

namespace weylgpd {

inline constexpr std::size_t kDefaultObjectCap = 65536;
inline constexpr std::size_t kDefaultMorphismCap = 1'000'000;

/// Basic datum with a Cartan datum: objects, the involutions rho_i and a GCM per object.
/// Objects are identified by index; keys[x] is the rendered canonical key.
struct CartanScheme {
  std::size_t rank = 0;
  std::vector<std::string> keys;
  std::vector<Gcm> cartan;
  /// rho[x][i] = index of rho_i(x).
  std::vector<std::vector<std::size_t>> rho;
  /// Index of the object the enumeration started from.
  std::size_t seed = 0;
  Verdict verdict = Verdict::Finite;
  std::string diagnostic;

  std::size_t object_count() const noexcept { return keys.size(); }
};

/// Scheme together with one representative per object.
template <class Object>
struct EnumeratedScheme {
  CartanScheme scheme;
  std::vector<Object> objects;
};

/// Breadth-first closure of {seed} under all rho_i. Nichols objects are keyed by
/// Dynkin diagram (representatives are the canonical matrices of the diagrams),
/// super objects by their row-canonical form. Objects are sorted by rendered key.
/// A NotAdmissible object or more than `object_cap` objects yields an Infinite verdict.
EnumeratedScheme<BraidingMatrix> enumerate_objects(const BraidingMatrix& seed,
                                                   std::size_t object_cap = kDefaultObjectCap);
EnumeratedScheme<SuperPair> enumerate_objects(const SuperPair& seed,
                                              std::size_t object_cap = kDefaultObjectCap);

/// Positive roots per object, indexed like the scheme's objects.
using RootBundle = std::vector<std::vector<Root>>;

/// Runs the longest-word walk at every object. Entries for objects whose walk
/// is not Finite are left empty.
RootBundle positive_root_bundle(const EnumeratedScheme<BraidingMatrix>& e);
RootBundle positive_root_bundle(const EnumeratedScheme<SuperPair>& e);

/// m_ij = number of listed nonnegative roots supported on {i, j} (i != j); m_ii = 1.
IntMatrix coxeter_matrix(const std::vector<Root>& roots, std::size_t rank);

enum class Axiom {
  CartanDatum,           // c_ij^x = c_ij^{rho_i x}
  SignDecomposition,     // Delta^x = Delta^x_+ u Delta^x_-
  SimpleMultiples,       // Delta^x n Z alpha_i = {+-alpha_i}
  ReflectionInvariance,  // s_i^x(Delta^x) = Delta^{rho_i x}
  CoxeterRelation,       // (rho_i rho_j)^{m_ij^x}(x) = x and m_ij^x = m_ij^{rho_i x}
};

const char* to_string(Axiom a);

struct AxiomCheck {
  Axiom axiom;
  std::size_t object;
  bool passed;
  std::string witness;  // empty when passed
};

struct GrsReport {
  std::vector<AxiomCheck> checks;

  bool passed() const;
  bool passed(Axiom a) const;
  /// First failing check of the given axiom, if any.
  const AxiomCheck* first_failure(Axiom a) const;
};

/// Checks the root-system axioms for a bundle of positive root lists over a
/// scheme (Delta^x is taken as the listed roots and their negatives).
GrsReport verify_grs(const CartanScheme& scheme, const RootBundle& positives);

struct MorphismSummary {
  /// Number of morphisms, nullopt when the cap was exceeded.
  std::optional<std::uint64_t> count;
  /// Maximal length of a morphism ending at each object.
  std::vector<std::size_t> longest_length;
  /// Number of morphisms ending at each object that have that maximal length.
  std::vector<std::size_t> longest_multiplicity;
  Verdict verdict = Verdict::Finite;
  std::string diagnostic;
};

/// Enumerates all morphisms (x, s_{i_1}^x s_{i_2} ... s_{i_t}, y) by breadth-first
/// search over words, deduplicated by (x, matrix).
MorphismSummary morphism_count(const CartanScheme& scheme,
                               std::size_t morphism_cap = kDefaultMorphismCap);

/// Reflection s_{i_1}^x s_{i_2}^{rho_{i_1} x} ... s_{i_t} as a matrix, and the object it starts from.
IntMatrix word_matrix(const CartanScheme& scheme, std::size_t object, const std::vector<Vertex>& word,
                      std::size_t* end_object = nullptr);

/// For a reduced word ending at `object`, appending sigma_j keeps it reduced
/// iff the word's matrix maps alpha_j to a positive root.
bool length_extension(const CartanScheme& scheme, std::size_t object, const std::vector<Vertex>& word,
                      Vertex j);

/// Closure of the simple roots under all s_i^x: the real roots at each object
/// (positive part). Nullopt when some object exceeds `root_cap` positive roots
/// or a coordinate overflows.
std::optional<RootBundle> real_root_closure(const CartanScheme& scheme, std::size_t root_cap = 4096);

struct GroupoidSummary {
  std::size_t object_count = 0;
  std::vector<IntMatrix> coxeter;
  std::optional<std::uint64_t> morphism_count;
  std::size_t longest_length = 0;
  Verdict verdict = Verdict::Finite;
  std::string diagnostic;
};

GroupoidSummary summarize(const CartanScheme& scheme, const RootBundle& positives,
                          std::size_t morphism_cap = kDefaultMorphismCap);

/// Bound on |Delta_+| of a finite root system of the given rank:
/// 14, 37, 32, 49, 68, 91, 120 for rank 2..8 and rank^2 from 9 on (rank 1: 1).
std::size_t finite_root_bound(std::size_t rank);

}  // namespace weylgpd

#endif  // WEYLGPD_GROUPOID_HPP
