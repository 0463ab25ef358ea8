// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "support.hpp"
#include "weylgpd/cli.hpp"
#include "weylgpd/io.hpp"
#include "weylgpd/pbw.hpp"

using namespace weylgpd;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const std::vector<Root> kG23Roots = testing::roots(3, {"1", "12", "12^2", "2", "12^33", "12^23", "2^23", "123", "23", "3"});
const std::vector<Vertex> kG23Word{0, 1, 0, 1, 2, 1, 0, 2, 1, 0};

Outcome nichols_golden() {
  Outcome o;
  const RootSystemResult r = compute_root_system(parse_nichols(testing::read_data("g23_nichols.txt")));
  o.expect(r.verdict == Verdict::Finite, "verdict");
  o.expect(r.positive_roots == kG23Roots, "positive roots " + render_roots(r.positive_roots));
  std::vector<Order> heights;
  for (std::uint64_t h : {2, 3, 2, 6, 2, 3, 2, 2, 3, 2}) heights.push_back(h);
  o.expect(r.heights == heights, "heights");
  o.expect(testing::as_set(r.cartan_roots) == testing::as_set(testing::roots(3, {"12", "2", "12^23", "23"})),
           "cartan roots " + render_roots(r.cartan_roots));
  o.expect(r.longest_word == kG23Word, "longest word");
  o.expect(r.dimension && *r.dimension == 10368, "dimension");
  return o;
}

Outcome super_golden() {
  Outcome o;
  const SuperRootResult r = compute_super_roots(parse_super(testing::read_data("g23_super.txt")));
  o.expect(r.verdict == Verdict::Finite, "verdict " + r.diagnostic);
  o.expect(r.positive_roots == kG23Roots, "positive roots " + render_roots(r.positive_roots));
  o.expect(r.ond_roots == testing::roots(3, {"2"}), "odd non-degenerate roots");
  o.expect(r.nabla_plus ==
               testing::roots(3, {"1", "12", "12^2", "2", "2^2", "12^33", "12^23", "2^23", "123", "23", "3"}),
           "all positive roots " + render_roots(r.nabla_plus));
  o.expect(r.sdim == Superdimension{12, 14}, "sdim " + r.sdim.str());
  o.expect(r.longest_word == kG23Word, "longest word");
  return o;
}

Outcome two_object_example() {
  Outcome o;
  const GrsBundle b = parse_grs_bundle(testing::read_data("two_object_bundle.txt"));
  const GrsReport report = verify_grs(b.scheme, b.positives);
  for (Axiom a : {Axiom::SignDecomposition, Axiom::SimpleMultiples, Axiom::ReflectionInvariance,
                  Axiom::CoxeterRelation, Axiom::CartanDatum})
    o.expect(report.passed(a), std::string("axiom ") + to_string(a));
  const IntMatrix m = coxeter_matrix(b.positives[0], 3);
  o.expect(m(0, 1) == 3, "m12 at x");
  o.expect(m(1, 2) == 4, "m23 at x");
  return o;
}

Outcome cartan_types() {
  Outcome o;
  struct Type {
    char type;
    int rank;
  };
  for (Type t : {Type{'A', 1}, Type{'A', 2}, Type{'A', 3}, Type{'A', 4}, Type{'B', 2}, Type{'B', 3}, Type{'B', 4},
                 Type{'C', 3}, Type{'C', 4}, Type{'D', 4}, Type{'F', 4}, Type{'G', 2}}) {
    const std::string name = std::string(1, t.type) + std::to_string(t.rank);
    const oracle::Mat c = oracle::cartan_of_type(t.type, t.rank);
    const BraidingMatrix q = testing::cartan_braiding(c);
    const auto e = enumerate_objects(q);
    o.expect(e.scheme.verdict == Verdict::Finite && e.scheme.object_count() == 1, name + ": object count");
    const RootSystemResult r = compute_root_system(q);
    o.expect(testing::as_set(r.positive_roots) == oracle::classical_positive_roots(c), name + ": positive roots");
    const MorphismSummary m = morphism_count(e.scheme);
    o.expect(m.count && *m.count == oracle::weyl_group_order(t.type, t.rank), name + ": morphism count");
  }
  const RootSystemResult affine = compute_root_system(parse_nichols(testing::read_data("affine_a1.txt")));
  o.expect(affine.verdict == Verdict::Infinite, "affine A1 verdict");
  o.expect(affine.diagnostic.find("guard") != std::string::npos && affine.positive_roots.size() == 250,
           "affine A1 guard: " + affine.diagnostic);
  return o;
}

Outcome property_corpus() {
  Outcome o;
  std::mt19937 rng(5);
  std::size_t found = 0;
  for (std::size_t tries = 0; found < 60 && tries < 200000; ++tries) {
    const BraidingMatrix q = testing::random_braiding(found % 2 == 0 ? 2 : 3, rng);
    const RootSystemResult r = compute_root_system(q);
    if (r.verdict != Verdict::Finite) continue;
    ++found;
    const std::string name = dynkin_diagram(q).str();
    o.expect(testing::replay(q, r.longest_word) == r.positive_roots, name + ": replay");
    o.expect(testing::convex(r.positive_roots), name + ": convexity");
    const Gcm c = cartan_matrix(q);
    for (Vertex i = 0; i < q.rank(); ++i) {
      const BraidingMatrix p = reflect_braiding(q, i, c);
      o.expect(dynkin_diagram(reflect_braiding(p, i, cartan_matrix(p))) == dynkin_diagram(q), name + ": rho_i^2");
    }
    const auto e = enumerate_objects(q);
    o.expect(e.scheme.verdict == Verdict::Finite && verify_grs(e.scheme, positive_root_bundle(e)).passed(),
             name + ": verify_grs");
  }
  o.expect(found == 60, "corpus has only " + std::to_string(found) + " finite braidings");
  if (o.ok) o.detail = std::to_string(found) + " braidings";
  return o;
}

Outcome rank2_brute_force() {
  Outcome o;
  const auto phases = testing::small_phases();
  std::size_t finite = 0;
  for (std::int64_t a : phases)
    for (std::int64_t b : phases)
      for (std::int64_t edge : phases) {
        const RootSystemResult r = compute_root_system(testing::rank2(a, b, edge));
        const auto expected = oracle::rank2_closure({a, b, edge});
        const std::string name =
            "z^" + std::to_string(a) + ", z^" + std::to_string(b) + ", edge z^" + std::to_string(edge);
        o.expect((r.verdict == Verdict::Finite) == expected.has_value(), name + ": verdict");
        if (r.verdict == Verdict::Finite && expected) {
          o.expect(testing::as_set(r.positive_roots) == *expected, name + ": roots");
          ++finite;
        }
      }
  if (o.ok) o.detail = std::to_string(phases.size() * phases.size() * phases.size()) + " diagrams, " +
                       std::to_string(finite) + " finite";
  return o;
}

Outcome pbw_tables() {
  Outcome o;
  const LyndonTable lyndon = lyndon_words(kG23Roots);
  const HyperwordTable hyper = hyperwords(lyndon);
  for (const Root& beta : kG23Roots) {
    o.expect(is_lyndon(lyndon.word(beta)), beta.str() + ": not Lyndon");
    std::vector<std::int64_t> leaves(3, 0);
    for (Vertex v : hyper.bracket(beta).flatten()) ++leaves[v];
    o.expect(leaves == beta.coords, beta.str() + ": leaf counts");
  }
  const Root b = Root::parse("12^2", 3);
  o.expect(render_word(lyndon.word(b)) == "x1x2x2", "word(12^2)");
  o.expect(hyper.bracket(b).str() == "[[x1,x2],x2]", "bracket(12^2)");
  return o;
}

Outcome sl21() {
  Outcome o;
  const SuperRootResult r = compute_super_roots(parse_super(testing::read_data("sl21.txt")));
  const oracle::SlSuper expected = oracle::sl_super(2, 1);
  o.expect(r.verdict == Verdict::Finite, "verdict");
  o.expect(testing::as_set(r.positive_roots) == expected.positive, "positive roots");
  o.expect(testing::as_set(r.odd_roots) == expected.odd, "odd roots");
  o.expect(r.sdim == Superdimension{expected.even_dim, expected.odd_dim},
           "sdim " + r.sdim.str());
  o.expect(r.sdim.str() == "(4|4)", "sdim " + r.sdim.str());
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const char* file : {"g23_nichols.txt", "g23_super.txt"}) {
    const std::string text = testing::read_data(file);
    JobSpec job;
    job.format = Format::Json;
    std::string first;
    for (int run = 0; run < 3; ++run) {
      std::ostringstream out, err;
      o.expect(run_text(job, text, out, err) == kExitOk, std::string(file) + ": exit code");
      if (run == 0) first = out.str();
      o.expect(out.str() == first, std::string(file) + ": output differs between runs");
    }
    try {
      o.expect(Json::parse(first).dump(2) + "\n" == first, std::string(file) + ": re-serialization differs");
    } catch (const Json::parse_error& e) {
      o.expect(false, std::string(file) + ": " + e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "g(2,3) Nichols golden file", 1, nichols_golden},
      {2, "g(2,3) super golden file", 1, super_golden},
      {3, "two-object root system verification", 1, two_object_example},
      {4, "Cartan-type conformance and affine A1", 10, cartan_types},
      {5, "random corpus property suite", 60, property_corpus},
      {6, "rank-2 brute-force oracle", 60, rank2_brute_force},
      {7, "PBW tables", 1, pbw_tables},
      {8, "sl(2|1) cross-check", 1, sl21},
      {9, "JSON determinism and round-trip", 5, determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (took > c.seconds) o.expect(false, "took longer than " + std::to_string(c.seconds) + " s");
    all = all && o.ok;
    std::ostringstream line;
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << std::fixed << took
         << " s)";
    if (!o.detail.empty()) line << (o.ok ? ", " : ": ") << o.detail;
    std::cout << line.str() << '\n';
  }
  return all ? 0 : 1;
}
