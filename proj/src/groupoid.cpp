#include "weylgpd/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "weylgpd/errors.hpp"
#include "weylgpd/nichols_roots.hpp"

namespace weylgpd {

namespace {

// Backend-independent BFS. KeyFn maps an object to its canonical key string and
// canonical representative.
template <class Object, class CanonFn, class CartanFn, class ReflectFn>
EnumeratedScheme<Object> bfs_objects(const Object& seed, std::size_t rank, std::size_t cap,
                                     CanonFn&& canon, CartanFn&& cartan_of, ReflectFn&& reflect) {
  EnumeratedScheme<Object> out;
  CartanScheme& s = out.scheme;
  s.rank = rank;

  std::map<std::string, std::size_t> index;
  std::vector<Object> objects;
  std::vector<std::string> keys;
  auto intern = [&](const Object& obj) -> std::optional<std::size_t> {
    auto [key, rep] = canon(obj);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (objects.size() >= cap) return std::nullopt;
    index.emplace(key, objects.size());
    keys.push_back(std::move(key));
    objects.push_back(std::move(rep));
    return objects.size() - 1;
  };

  intern(seed);
  std::vector<Gcm> cartan;
  std::vector<std::vector<std::size_t>> rho;
  for (std::size_t x = 0; x < objects.size(); ++x) {
    Gcm c;
    try {
      c = cartan_of(objects[x]);
    } catch (const NotAdmissible& e) {
      s.verdict = Verdict::Infinite;
      s.diagnostic = "object " + keys[x] + ": " + e.what();
      break;
    }
    std::vector<std::size_t> row(rank);
    bool capped = false;
    for (Vertex i = 0; i < rank; ++i) {
      const auto y = intern(reflect(objects[x], i, c));
      if (!y) {
        capped = true;
        break;
      }
      row[i] = *y;
    }
    if (capped) {
      s.verdict = Verdict::Infinite;
      s.diagnostic = "object cap of " + std::to_string(cap) + " exceeded";
      break;
    }
    cartan.push_back(std::move(c));
    rho.push_back(std::move(row));
  }
  if (s.verdict == Verdict::Infinite) {
    // Partial data: the objects discovered so far, without edges.
    s.keys = std::move(keys);
    out.objects = std::move(objects);
    return out;
  }

  std::vector<std::size_t> order(objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> new_index(objects.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_index[order[k]] = k;

  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t old = order[k];
    s.keys.push_back(keys[old]);
    s.cartan.push_back(cartan[old]);
    std::vector<std::size_t> row(rank);
    for (Vertex i = 0; i < rank; ++i) row[i] = new_index[rho[old][i]];
    s.rho.push_back(std::move(row));
    out.objects.push_back(objects[old]);
  }
  s.seed = new_index[0];
  return out;
}

std::set<Root> with_negatives(const std::vector<Root>& positives) {
  std::set<Root> all;
  for (const Root& r : positives) {
    all.insert(r);
    all.insert(-r);
  }
  return all;
}

bool supported_on(const Root& r, Vertex i, Vertex j) {
  for (std::size_t k = 0; k < r.rank(); ++k)
    if (k != i && k != j && r[k] != 0) return false;
  return true;
}

}  // namespace

EnumeratedScheme<BraidingMatrix> enumerate_objects(const BraidingMatrix& seed, std::size_t object_cap) {
  auto canon = [](const BraidingMatrix& q) {
    DynkinDiagram d = dynkin_diagram(q);
    return std::pair{d.str(), representative(d)};
  };
  auto cartan = [](const BraidingMatrix& q) { return cartan_matrix(q); };
  auto reflect = [](const BraidingMatrix& q, Vertex i, const Gcm& c) { return reflect_braiding(q, i, c); };
  return bfs_objects(seed, seed.rank(), object_cap, canon, cartan, reflect);
}

EnumeratedScheme<SuperPair> enumerate_objects(const SuperPair& seed, std::size_t object_cap) {
  auto canon = [](const SuperPair& x) {
    SuperPair y = row_canonical(x);
    std::string key = y.str();
    return std::pair{std::move(key), std::move(y)};
  };
  auto cartan = [](const SuperPair& x) { return super_cartan_matrix(x); };
  auto reflect = [](const SuperPair& x, Vertex i, const Gcm& c) { return reflect_pair(x, i, c); };
  return bfs_objects(seed, seed.rank(), object_cap, canon, cartan, reflect);
}

RootBundle positive_root_bundle(const EnumeratedScheme<BraidingMatrix>& e) {
  RootBundle bundle(e.objects.size());
  for (std::size_t x = 0; x < e.objects.size(); ++x) {
    RootSystemResult r = compute_root_system(e.objects[x]);
    if (r.verdict == Verdict::Finite) bundle[x] = std::move(r.positive_roots);
  }
  return bundle;
}

RootBundle positive_root_bundle(const EnumeratedScheme<SuperPair>& e) {
  RootBundle bundle(e.objects.size());
  for (std::size_t x = 0; x < e.objects.size(); ++x) {
    SuperRootResult r = compute_super_roots(e.objects[x]);
    if (r.verdict == Verdict::Finite) bundle[x] = std::move(r.positive_roots);
  }
  return bundle;
}

IntMatrix coxeter_matrix(const std::vector<Root>& roots, std::size_t rank) {
  IntMatrix m(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    m(i, i) = 1;
    for (std::size_t j = i + 1; j < rank; ++j) {
      std::int64_t count = 0;
      for (const Root& r : roots)
        if (r.is_positive() && supported_on(r, i, j)) ++count;
      m(i, j) = m(j, i) = count;
    }
  }
  return m;
}

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::CartanDatum: return "cartan-datum";
    case Axiom::SignDecomposition: return "(1) sign decomposition";
    case Axiom::SimpleMultiples: return "(2) simple multiples";
    case Axiom::ReflectionInvariance: return "(3) reflection invariance";
    case Axiom::CoxeterRelation: return "(4) coxeter relation";
  }
  return "?";
}

bool GrsReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

bool GrsReport::passed(Axiom a) const { return first_failure(a) == nullptr; }

const AxiomCheck* GrsReport::first_failure(Axiom a) const {
  for (const auto& c : checks)
    if (c.axiom == a && !c.passed) return &c;
  return nullptr;
}

GrsReport verify_grs(const CartanScheme& scheme, const RootBundle& positives) {
  GrsReport report;
  const std::size_t n = scheme.rank;
  const std::size_t objects = scheme.object_count();
  if (positives.size() != objects || scheme.cartan.size() != objects || scheme.rho.size() != objects)
    throw std::invalid_argument("verify_grs: bundle does not match the scheme");

  std::vector<std::set<Root>> full(objects);
  std::vector<IntMatrix> cox(objects);
  for (std::size_t x = 0; x < objects; ++x) {
    full[x] = with_negatives(positives[x]);
    cox[x] = coxeter_matrix(positives[x], n);
  }
  auto add = [&report](Axiom a, std::size_t x, std::string witness) {
    report.checks.push_back({a, x, witness.empty(), std::move(witness)});
  };

  for (std::size_t x = 0; x < objects; ++x) {
    const Gcm& c = scheme.cartan[x];

    std::string w;
    if (!is_gcm(c)) w = "C is not a generalized Cartan matrix";
    for (Vertex i = 0; i < n && w.empty(); ++i) {
      const Gcm& other = scheme.cartan[scheme.rho[x][i]];
      for (Vertex j = 0; j < n && w.empty(); ++j)
        if (c(i, j) != other(i, j))
          w = "c_" + std::to_string(i + 1) + std::to_string(j + 1) + " differs at rho_" +
              std::to_string(i + 1) + "(x)";
    }
    add(Axiom::CartanDatum, x, w);

    w.clear();
    for (const Root& r : positives[x])
      if (r.is_zero() || (!r.is_nonnegative() && !r.is_negative())) {
        w = "root " + r.str() + " is neither positive nor negative";
        break;
      }
    add(Axiom::SignDecomposition, x, w);

    w.clear();
    for (Vertex i = 0; i < n && w.empty(); ++i) {
      const Root a = Root::simple(n, i);
      if (!full[x].count(a)) w = "simple root " + a.str() + " missing";
    }
    for (const Root& r : full[x]) {
      if (!w.empty()) break;
      if (r.is_zero()) {
        w = "zero vector listed";
        break;
      }
      std::size_t nonzero = 0;
      for (auto v : r.coords) nonzero += v != 0;
      if (nonzero == 1 && std::abs(r.height()) != 1) w = "multiple " + r.str() + " of a simple root";
    }
    add(Axiom::SimpleMultiples, x, w);

    w.clear();
    for (Vertex i = 0; i < n && w.empty(); ++i) {
      const IntMatrix s = simple_reflection(c, i);
      const std::size_t y = scheme.rho[x][i];
      std::set<Root> image;
      for (const Root& r : full[x]) image.insert(s.apply(r));
      if (image == full[y]) continue;
      for (const Root& r : full[x]) {
        const Root sr = s.apply(r);
        if (!full[y].count(sr)) {
          w = "s_" + std::to_string(i + 1) + "(" + r.str() + ") = " + sr.str() + " is not a root at " +
              scheme.keys[y];
          break;
        }
      }
      if (w.empty()) w = "s_" + std::to_string(i + 1) + " image misses roots at " + scheme.keys[y];
    }
    add(Axiom::ReflectionInvariance, x, w);

    w.clear();
    for (Vertex i = 0; i < n && w.empty(); ++i) {
      for (Vertex j = 0; j < n && w.empty(); ++j) {
        if (i == j) continue;
        const std::int64_t m = cox[x](i, j);
        std::size_t y = x;
        for (std::int64_t k = 0; k < m; ++k) y = scheme.rho[scheme.rho[y][j]][i];
        if (y != x)
          w = "(rho_" + std::to_string(i + 1) + " rho_" + std::to_string(j + 1) + ")^" + std::to_string(m) +
              " does not fix the object";
        else if (cox[scheme.rho[x][i]](i, j) != m)
          w = "m_" + std::to_string(i + 1) + std::to_string(j + 1) + " differs at rho_" + std::to_string(i + 1) +
              "(x)";
      }
    }
    add(Axiom::CoxeterRelation, x, w);
  }
  return report;
}

MorphismSummary morphism_count(const CartanScheme& scheme, std::size_t morphism_cap) {
  MorphismSummary out;
  const std::size_t n = scheme.rank;
  const std::size_t objects = scheme.object_count();
  out.longest_length.assign(objects, 0);
  out.longest_multiplicity.assign(objects, 0);

  std::vector<std::vector<IntMatrix>> reflections(objects);
  for (std::size_t y = 0; y < objects; ++y)
    for (Vertex i = 0; i < n; ++i) reflections[y].push_back(simple_reflection(scheme.cartan[y], i));

  struct State {
    std::size_t target;
    IntMatrix g;
    std::size_t source;
  };
  std::set<std::pair<std::size_t, IntMatrix>> seen;
  std::vector<State> frontier;
  for (std::size_t x = 0; x < objects; ++x) {
    frontier.push_back({x, IntMatrix::identity(n), x});
    seen.emplace(x, IntMatrix::identity(n));
    out.longest_multiplicity[x] = 1;
  }
  std::size_t depth = 0;
  while (!frontier.empty()) {
    std::vector<State> next;
    for (const State& st : frontier) {
      for (Vertex j = 0; j < n; ++j) {
        IntMatrix g;
        try {
          g = st.g * reflections[st.source][j];
        } catch (const std::overflow_error&) {
          out.verdict = Verdict::Infinite;
          out.diagnostic = "morphism matrix entries overflow 64-bit integers at length " + std::to_string(depth + 1);
          return out;
        }
        if (!seen.emplace(st.target, g).second) continue;
        if (seen.size() > morphism_cap) {
          out.verdict = Verdict::Infinite;
          out.diagnostic = "morphism cap of " + std::to_string(morphism_cap) + " exceeded";
          return out;
        }
        next.push_back({st.target, std::move(g), scheme.rho[st.source][j]});
      }
    }
    if (next.empty()) break;
    ++depth;
    for (std::size_t x = 0; x < objects; ++x) out.longest_multiplicity[x] = 0;
    for (const State& st : next) {
      out.longest_length[st.target] = depth;
      ++out.longest_multiplicity[st.target];
    }
    // Objects without morphisms at this depth keep their previous maxima.
    for (std::size_t x = 0; x < objects; ++x)
      if (out.longest_length[x] != depth) out.longest_multiplicity[x] = 0;
    frontier = std::move(next);
  }
  out.count = seen.size();
  return out;
}

IntMatrix word_matrix(const CartanScheme& scheme, std::size_t object, const std::vector<Vertex>& word,
                      std::size_t* end_object) {
  IntMatrix g = IntMatrix::identity(scheme.rank);
  std::size_t y = object;
  for (Vertex i : word) {
    g = g * simple_reflection(scheme.cartan[y], i);
    y = scheme.rho[y][i];
  }
  if (end_object) *end_object = y;
  return g;
}

bool length_extension(const CartanScheme& scheme, std::size_t object, const std::vector<Vertex>& word,
                      Vertex j) {
  return word_matrix(scheme, object, word).apply(Root::simple(scheme.rank, j)).is_positive();
}

std::optional<RootBundle> real_root_closure(const CartanScheme& scheme, std::size_t root_cap) {
  const std::size_t n = scheme.rank;
  const std::size_t objects = scheme.object_count();
  std::vector<std::set<Root>> roots(objects);
  std::deque<std::pair<std::size_t, Root>> queue;
  for (std::size_t x = 0; x < objects; ++x)
    for (Vertex i = 0; i < n; ++i) {
      roots[x].insert(Root::simple(n, i));
      queue.emplace_back(x, Root::simple(n, i));
    }
  // Delta^x = s_i^x(Delta^{rho_i x}); positive parts are closed up to sign.
  while (!queue.empty()) {
    auto [y, r] = queue.front();
    queue.pop_front();
    for (Vertex i = 0; i < n; ++i) {
      const std::size_t x = scheme.rho[y][i];
      Root image;
      try {
        image = simple_reflection(scheme.cartan[x], i).apply(r);
      } catch (const std::overflow_error&) {
        return std::nullopt;
      }
      if (image.is_negative()) image = -image;
      if (roots[x].insert(image).second) {
        if (roots[x].size() > root_cap) return std::nullopt;
        queue.emplace_back(x, std::move(image));
      }
    }
  }
  RootBundle out(objects);
  for (std::size_t x = 0; x < objects; ++x) out[x].assign(roots[x].begin(), roots[x].end());
  return out;
}

GroupoidSummary summarize(const CartanScheme& scheme, const RootBundle& positives,
                          std::size_t morphism_cap) {
  GroupoidSummary s;
  s.object_count = scheme.object_count();
  s.verdict = scheme.verdict;
  s.diagnostic = scheme.diagnostic;
  if (scheme.verdict != Verdict::Finite) return s;
  for (std::size_t x = 0; x < scheme.object_count(); ++x)
    s.coxeter.push_back(coxeter_matrix(positives.at(x), scheme.rank));
  const MorphismSummary m = morphism_count(scheme, morphism_cap);
  s.morphism_count = m.count;
  if (m.verdict != Verdict::Finite) {
    s.verdict = Verdict::Infinite;
    s.diagnostic = m.diagnostic;
    return s;
  }
  s.longest_length = *std::max_element(m.longest_length.begin(), m.longest_length.end());
  return s;
}

std::size_t finite_root_bound(std::size_t rank) {
  static constexpr std::size_t table[] = {0, 1, 14, 37, 32, 49, 68, 91, 120};
  if (rank < std::size(table)) return table[rank];
  return rank * rank;
}

}  // namespace weylgpd
