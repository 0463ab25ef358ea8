#include "weylgpd/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

#include "weylgpd/errors.hpp"

namespace weylgpd {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-blank lines split on whitespace; '#' starts a comment.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      const std::size_t begin = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > begin) line.tokens.push_back({raw.substr(begin, pos - begin), begin + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& message, const Line& line, const Token& token) {
  throw ParseError(message, line.number, token.column);
}

[[noreturn]] void fail_end(const std::string& message, std::string_view text) {
  const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  throw ParseError(message, lines + 1, 1);
}

// Rethrows a token-relative ParseError with file coordinates.
template <class F>
auto located(const Line& line, const Token& token, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw e.at(line.number, token.column - 1);
  }
}

std::int64_t read_integer(const Line& line, const Token& token, std::int64_t lo, std::int64_t hi,
                          const char* what) {
  std::int64_t v = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(std::string("expected an integer ") + what, line, token);
  if (v < lo || v > hi)
    fail(std::string(what) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", line,
         token);
  return v;
}

const Line& header(const std::vector<Line>& lines, std::string_view text, std::string_view keyword,
                   std::size_t arity) {
  if (lines.empty()) fail_end("empty input", text);
  const Line& h = lines.front();
  if (h.tokens.front().text != keyword)
    fail("expected header '" + std::string(keyword) + "'", h, h.tokens.front());
  if (h.tokens.size() != arity + 1) {
    const Token& t = h.tokens.size() > arity + 1 ? h.tokens[arity + 1] : h.tokens.back();
    fail("header '" + std::string(keyword) + "' takes " + std::to_string(arity) + " arguments", h, t);
  }
  return h;
}

constexpr std::int64_t kMaxRank = 64;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Json dimension_json(const std::optional<mpz_class>& d) {
  if (!d) return "inf";
  if (mpz_sizeinbase(d->get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, d->get_mpz_t());
    return v;
  }
  return d->get_str();
}

Json roots_json(const std::vector<Root>& roots) {
  Json out = Json::array();
  for (const Root& r : roots) out.push_back(root_json(r));
  return out;
}

Json word_json(const std::vector<Vertex>& word) {
  Json out = Json::array();
  for (Vertex v : word) out.push_back(v + 1);
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(m.row(i));
  return out;
}

std::string render_sigma(const std::vector<Vertex>& word) {
  std::string out;
  for (Vertex v : word) out += (out.empty() ? "s" : " s") + std::to_string(v + 1);
  return out;
}

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
  return out;
}

}  // namespace

std::string input_kind(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail_end("empty input", text);
  const Token& t = lines.front().tokens.front();
  for (const char* k : {"nichols", "super", "roots", "grs"})
    if (t.text == k) return k;
  fail("unknown header '" + std::string(t.text) + "'", lines.front(), t);
}

BraidingMatrix parse_nichols(std::string_view text) {
  const auto lines = tokenize(text);
  const Line& h = header(lines, text, "nichols", 2);
  const auto rank = static_cast<std::size_t>(read_integer(h, h.tokens[1], 1, kMaxRank, "rank"));
  const auto params = static_cast<std::size_t>(read_integer(h, h.tokens[2], 0, 1024, "parameter count"));
  if (lines.size() < rank + 1) fail_end("expected " + std::to_string(rank) + " matrix rows", text);
  if (lines.size() > rank + 1) fail("unexpected line after the matrix", lines[rank + 1], lines[rank + 1].tokens[0]);
  std::vector<CycloMonomial> q;
  for (std::size_t i = 0; i < rank; ++i) {
    const Line& row = lines[i + 1];
    if (row.tokens.size() != rank)
      fail("expected " + std::to_string(rank) + " entries, found " + std::to_string(row.tokens.size()), row,
           row.tokens[std::min(row.tokens.size() - 1, rank)]);
    for (const Token& t : row.tokens)
      q.push_back(located(row, t, [&] { return CycloMonomial::parse(t.text, params); }));
  }
  return BraidingMatrix(rank, std::move(q));
}

SuperPair parse_super(std::string_view text) {
  const auto lines = tokenize(text);
  const Line& h = header(lines, text, "super", 2);
  const auto rank = static_cast<std::size_t>(read_integer(h, h.tokens[1], 1, kMaxRank, "rank"));
  const auto ell = read_integer(h, h.tokens[2], 0, 1'000'003, "characteristic");
  if (ell != 0 && !is_prime(ell)) fail("characteristic must be 0 or a prime", h, h.tokens[2]);
  if (lines.size() < rank + 2) fail_end("expected a parity line and " + std::to_string(rank) + " matrix rows", text);
  if (lines.size() > rank + 2) fail("unexpected line after the matrix", lines[rank + 2], lines[rank + 2].tokens[0]);

  const Line& pl = lines[1];
  std::vector<Parity> parity;
  for (const Token& t : pl.tokens) {
    if (t.text == "+" || t.text == "+1" || t.text == "1")
      parity.push_back(Parity::Even);
    else if (t.text == "-" || t.text == "-1" || t.text == "−" || t.text == "−1")
      parity.push_back(Parity::Odd);
    else
      fail("expected a parity sign '+' or '-'", pl, t);
  }
  if (parity.size() != rank)
    fail("expected " + std::to_string(rank) + " parity signs", pl, pl.tokens.back());

  std::vector<FieldScalar> a;
  for (std::size_t i = 0; i < rank; ++i) {
    const Line& row = lines[i + 2];
    if (row.tokens.size() != rank)
      fail("expected " + std::to_string(rank) + " entries, found " + std::to_string(row.tokens.size()), row,
           row.tokens[std::min(row.tokens.size() - 1, rank)]);
    for (const Token& t : row.tokens)
      a.push_back(located(row, t, [&] { return FieldScalar::parse(t.text, static_cast<unsigned>(ell)); }));
  }
  try {
    return SuperPair(static_cast<unsigned>(ell), rank, std::move(a), std::move(parity));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lines[2].number, 1);
  }
}

std::vector<Root> parse_root_list(std::string_view text) {
  const auto lines = tokenize(text);
  const Line& h = header(lines, text, "roots", 1);
  const auto rank = static_cast<std::size_t>(read_integer(h, h.tokens[1], 1, kMaxRank, "rank"));
  std::vector<Root> roots;
  for (std::size_t k = 1; k < lines.size(); ++k)
    for (const Token& t : lines[k].tokens)
      roots.push_back(located(lines[k], t, [&] { return Root::parse(t.text, rank); }));
  return roots;
}

GrsBundle parse_grs_bundle(std::string_view text) {
  const auto lines = tokenize(text);
  const Line& h = header(lines, text, "grs", 1);
  const auto rank = static_cast<std::size_t>(read_integer(h, h.tokens[1], 1, kMaxRank, "rank"));

  struct Block {
    const Line* name = nullptr;
    std::optional<Gcm> cartan;
    const Line* rho = nullptr;
    std::vector<Root> roots;
    bool has_roots = false;
  };
  std::vector<Block> blocks;
  std::size_t k = 1;
  while (k < lines.size()) {
    const Line& line = lines[k];
    const Token& kw = line.tokens.front();
    if (kw.text == "object") {
      if (line.tokens.size() != 2) fail("expected 'object <name>'", line, kw);
      blocks.push_back({&line, std::nullopt, nullptr, {}, false});
      ++k;
      continue;
    }
    if (blocks.empty()) fail("expected 'object <name>'", line, kw);
    Block& b = blocks.back();
    if (kw.text == "cartan") {
      if (b.cartan) fail("duplicate cartan block", line, kw);
      if (line.tokens.size() != 1) fail("'cartan' takes no arguments", line, line.tokens[1]);
      if (k + rank >= lines.size()) fail_end("cartan block needs " + std::to_string(rank) + " rows", text);
      Gcm c(rank);
      for (std::size_t i = 0; i < rank; ++i) {
        const Line& row = lines[k + 1 + i];
        if (row.tokens.size() != rank)
          fail("expected " + std::to_string(rank) + " entries", row, row.tokens[std::min(row.tokens.size() - 1, rank)]);
        for (std::size_t j = 0; j < rank; ++j)
          c(i, j) = read_integer(row, row.tokens[j], -1'000'000, 1'000'000, "matrix entry");
      }
      b.cartan = std::move(c);
      k += rank + 1;
    } else if (kw.text == "rho") {
      if (b.rho) fail("duplicate rho line", line, kw);
      if (line.tokens.size() != rank + 1) fail("expected " + std::to_string(rank) + " object names", line, kw);
      b.rho = &line;
      ++k;
    } else if (kw.text == "roots") {
      if (b.has_roots) fail("duplicate roots line", line, kw);
      b.has_roots = true;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const Token& tok = line.tokens[t];
        b.roots.push_back(located(line, tok, [&] { return Root::parse(tok.text, rank); }));
      }
      ++k;
      // Continuation lines: anything that is not a keyword.
      while (k < lines.size()) {
        const auto w = lines[k].tokens.front().text;
        if (w == "object" || w == "cartan" || w == "rho" || w == "roots") break;
        for (const Token& tok : lines[k].tokens)
          b.roots.push_back(located(lines[k], tok, [&] { return Root::parse(tok.text, rank); }));
        ++k;
      }
    } else {
      fail("unexpected '" + std::string(kw.text) + "'", line, kw);
    }
  }
  if (blocks.empty()) fail_end("bundle lists no objects", text);

  std::map<std::string_view, std::size_t> index;
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    const Token& name = blocks[x].name->tokens[1];
    if (!index.emplace(name.text, x).second) fail("duplicate object name", *blocks[x].name, name);
  }
  GrsBundle out;
  CartanScheme& s = out.scheme;
  s.rank = rank;
  for (const Block& b : blocks) {
    const Line& nl = *b.name;
    if (!b.cartan) fail("object has no cartan block", nl, nl.tokens[1]);
    if (!b.has_roots) fail("object has no roots line", nl, nl.tokens[1]);
    std::vector<std::size_t> rho(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      if (!b.rho) {
        if (blocks.size() != 1) fail("object has no rho line", nl, nl.tokens[1]);
        rho[i] = 0;
        continue;
      }
      const Token& t = b.rho->tokens[i + 1];
      const auto it = index.find(t.text);
      if (it == index.end()) fail("unknown object '" + std::string(t.text) + "'", *b.rho, t);
      rho[i] = it->second;
    }
    s.keys.emplace_back(nl.tokens[1].text);
    s.cartan.push_back(*b.cartan);
    s.rho.push_back(std::move(rho));
    out.positives.push_back(b.roots);
  }
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t i = 0; i < rank; ++i)
      if (s.rho[s.rho[x][i]][i] != x)
        fail("rho_" + std::to_string(i + 1) + " is not an involution", *blocks[x].rho, blocks[x].rho->tokens[i + 1]);
  return out;
}

Json root_json(const Root& r) {
  Json j;
  j["coords"] = r.coords;
  j["root"] = r.str();
  return j;
}

static std::string labelled(const std::string& label, const std::vector<Root>& roots) {
  return roots.empty() ? label + '\n' : label + ' ' + render_roots(roots) + '\n';
}

std::string render_roots(const std::vector<Root>& roots) {
  std::string out;
  for (const Root& r : roots) out += (out.empty() ? "" : ", ") + r.str();
  return out;
}

Json to_json(const RootSystemResult& r) {
  Json j;
  j["rank"] = r.rank;
  j["verdict"] = to_string(r.verdict);
  j["positive_roots"] = roots_json(r.positive_roots);
  Json heights = Json::array();
  for (const Order& h : r.heights) {
    if (h)
      heights.push_back(*h);
    else
      heights.push_back("inf");
  }
  j["heights"] = std::move(heights);
  j["cartan_roots"] = roots_json(r.cartan_roots);
  j["longest_word"] = word_json(r.longest_word);
  j["dimension"] = r.verdict == Verdict::Finite ? dimension_json(r.dimension) : Json("inf");
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

Json to_json(const SuperRootResult& r) {
  Json j;
  j["rank"] = r.rank;
  j["verdict"] = to_string(r.verdict);
  j["positive_roots"] = roots_json(r.positive_roots);
  j["odd_roots"] = roots_json(r.odd_roots);
  j["ond_roots"] = roots_json(r.ond_roots);
  j["nabla_plus"] = roots_json(r.nabla_plus);
  j["longest_word"] = word_json(r.longest_word);
  j["cartan_subalgebra_dim"] = r.cartan_subalgebra_dim;
  j["sdim"] = r.verdict == Verdict::Finite ? Json(r.sdim.str()) : Json("inf");
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

Json to_json(const LyndonTable& lyndon, const HyperwordTable& hyper) {
  Json words = Json::object();
  Json decs = Json::object();
  Json brackets = Json::object();
  for (const Root& beta : lyndon.order) {
    words[beta.str()] = render_word(lyndon.word(beta));
    Json d = Json::array();
    for (const auto& [l, r] : lyndon.decompositions.at(beta)) d.push_back(Json::array({l.str(), r.str()}));
    decs[beta.str()] = std::move(d);
    brackets[beta.str()] = hyper.bracket(beta).str();
  }
  Json j;
  j["lyndon_words"] = std::move(words);
  j["decompositions"] = std::move(decs);
  j["hyperwords"] = std::move(brackets);
  return j;
}

Json to_json(const CartanScheme& scheme, const GroupoidSummary& summary) {
  Json j;
  j["rank"] = scheme.rank;
  j["verdict"] = to_string(summary.verdict);
  j["object_count"] = summary.object_count;
  j["objects"] = scheme.keys;
  if (summary.verdict == Verdict::Finite) {
    j["seed"] = scheme.seed;
    Json edges = Json::array();
    for (const auto& row : scheme.rho) edges.push_back(row);
    j["edges"] = std::move(edges);
    Json cartan = Json::array();
    for (const Gcm& c : scheme.cartan) cartan.push_back(matrix_json(c));
    j["cartan"] = std::move(cartan);
    Json coxeter = Json::array();
    for (const IntMatrix& m : summary.coxeter) coxeter.push_back(matrix_json(m));
    j["coxeter"] = std::move(coxeter);
  }
  if (summary.morphism_count)
    j["morphism_count"] = *summary.morphism_count;
  else
    j["morphism_count"] = "inf";
  if (summary.verdict == Verdict::Finite) j["longest_length"] = summary.longest_length;
  if (!summary.diagnostic.empty()) j["diagnostic"] = summary.diagnostic;
  return j;
}

Json to_json(const CartanScheme& scheme, const GrsReport& report) {
  Json checks = Json::array();
  for (const AxiomCheck& c : report.checks) {
    Json e;
    e["axiom"] = to_string(c.axiom);
    e["object"] = scheme.keys.at(c.object);
    e["passed"] = c.passed;
    if (!c.passed) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  Json j;
  j["passed"] = report.passed();
  j["checks"] = std::move(checks);
  return j;
}

std::string to_text(const RootSystemResult& r) {
  std::ostringstream out;
  out << "verdict " << to_string(r.verdict) << '\n';
  if (!r.diagnostic.empty()) out << "diagnostic " << r.diagnostic << '\n';
  out << labelled("positive roots", r.positive_roots);
  out << "heights ";
  for (std::size_t k = 0; k < r.heights.size(); ++k)
    out << (k ? ", " : "") << (r.heights[k] ? std::to_string(*r.heights[k]) : "inf");
  out << '\n';
  out << labelled("cartan roots", r.cartan_roots);
  out << "longest word " << render_sigma(r.longest_word) << '\n';
  out << "dimension ";
  if (r.verdict == Verdict::Finite && r.dimension)
    out << r.dimension->get_str();
  else
    out << "inf";
  out << '\n';
  return out.str();
}

std::string to_text(const SuperRootResult& r) {
  std::ostringstream out;
  out << "verdict " << to_string(r.verdict) << '\n';
  if (!r.diagnostic.empty()) out << "diagnostic " << r.diagnostic << '\n';
  out << labelled("positive roots", r.positive_roots);
  out << labelled("odd roots", r.odd_roots);
  out << labelled("odd non-degenerate roots", r.ond_roots);
  out << labelled("all positive roots", r.nabla_plus);
  out << "longest word " << render_sigma(r.longest_word) << '\n';
  out << "dim h " << r.cartan_subalgebra_dim << '\n';
  out << "sdim " << (r.verdict == Verdict::Finite ? r.sdim.str() : "inf") << '\n';
  return out.str();
}

std::string to_text(const LyndonTable& lyndon, const HyperwordTable& hyper) {
  std::ostringstream out;
  out << "lyndon words\n";
  for (const Root& beta : lyndon.order) {
    out << "  " << beta.str() << "  " << render_word(lyndon.word(beta)) << "  " << hyper.bracket(beta).str();
    const auto& decs = lyndon.decompositions.at(beta);
    if (decs.size() > 1) {
      out << "  (";
      for (std::size_t k = 0; k < decs.size(); ++k)
        out << (k ? ", " : "") << decs[k].first.str() << "+" << decs[k].second.str();
      out << ")";
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const CartanScheme& scheme, const GroupoidSummary& summary) {
  std::ostringstream out;
  out << "verdict " << to_string(summary.verdict) << '\n';
  if (!summary.diagnostic.empty()) out << "diagnostic " << summary.diagnostic << '\n';
  out << "objects " << summary.object_count << '\n';
  if (summary.verdict == Verdict::Finite) {
    for (std::size_t x = 0; x < scheme.object_count(); ++x) {
      out << "object " << x << (x == scheme.seed ? " (seed)" : "") << ": " << scheme.keys[x] << '\n';
      out << "  rho";
      for (std::size_t y : scheme.rho[x]) out << ' ' << y;
      out << "\n  cartan\n" << indent(indent(scheme.cartan[x].str()));
      out << "  coxeter\n" << indent(indent(summary.coxeter[x].str()));
    }
    out << "longest length " << summary.longest_length << '\n';
  }
  out << "morphisms " << (summary.morphism_count ? std::to_string(*summary.morphism_count) : "inf") << '\n';
  return out.str();
}

std::string to_text(const CartanScheme& scheme, const GrsReport& report) {
  std::ostringstream out;
  for (const AxiomCheck& c : report.checks) {
    out << (c.passed ? "pass " : "FAIL ") << scheme.keys.at(c.object) << ' ' << to_string(c.axiom);
    if (!c.passed) out << ": " << c.witness;
    out << '\n';
  }
  out << "verification " << (report.passed() ? "passed" : "failed") << '\n';
  return out.str();
}

}  // namespace weylgpd
