#include "weylgpd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "weylgpd/errors.hpp"
#include "weylgpd/io.hpp"

namespace weylgpd {

namespace {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Auto: return "auto";
    case Mode::Nichols: return "nichols";
    case Mode::Super: return "super";
    case Mode::Groupoid: return "groupoid";
    case Mode::Pbw: return "pbw";
    case Mode::Verify: return "verify";
  }
  return "?";
}

void emit(const JobSpec& job, std::ostream& out, const Json& json, const std::string& text) {
  if (job.format == Format::Json)
    out << json.dump(2) << '\n';
  else
    out << text;
}

int verdict_status(Verdict v) { return v == Verdict::Finite ? kExitOk : kExitInfinite; }

void require(bool ok, const std::string& kind, Mode mode) {
  if (!ok) throw ParseError("header '" + kind + "' is not accepted in mode " + mode_name(mode), 1, 1);
}

template <class E>
int groupoid_job(const JobSpec& job, const E& e, std::ostream& out) {
  GroupoidSummary summary;
  if (e.scheme.verdict == Verdict::Finite) {
    summary = summarize(e.scheme, positive_root_bundle(e), job.morphism_cap);
  } else {
    summary.object_count = e.scheme.object_count();
    summary.verdict = e.scheme.verdict;
    summary.diagnostic = e.scheme.diagnostic;
  }
  emit(job, out, to_json(e.scheme, summary), to_text(e.scheme, summary));
  return verdict_status(summary.verdict);
}

int pbw_job(const JobSpec& job, const std::vector<Root>& delta, std::ostream& out) {
  const LyndonTable lyndon = lyndon_words(delta);
  const HyperwordTable hyper = hyperwords(lyndon);
  emit(job, out, to_json(lyndon, hyper), to_text(lyndon, hyper));
  return kExitOk;
}

int dispatch(const JobSpec& job, const std::string& text, std::ostream& out, std::ostream& err) {
  const std::string kind = input_kind(text);
  Mode mode = job.mode;
  if (mode == Mode::Auto) {
    if (kind == "nichols") mode = Mode::Nichols;
    else if (kind == "super") mode = Mode::Super;
    else if (kind == "roots") mode = Mode::Pbw;
    else mode = Mode::Verify;
  }

  switch (mode) {
    case Mode::Nichols: {
      require(kind == "nichols", kind, mode);
      const RootSystemResult r = compute_root_system(parse_nichols(text));
      if (!r.diagnostic.empty()) err << "note: " << r.diagnostic << '\n';
      Json json = to_json(r);
      std::string txt = to_text(r);
      if (job.with_pbw && r.verdict == Verdict::Finite) {
        const LyndonTable lyndon = lyndon_words(r.positive_roots);
        const HyperwordTable hyper = hyperwords(lyndon);
        const Json tables = to_json(lyndon, hyper);
        for (const auto& [k, v] : tables.items()) json[k] = v;
        txt += to_text(lyndon, hyper);
      }
      emit(job, out, json, txt);
      return verdict_status(r.verdict);
    }
    case Mode::Super: {
      require(kind == "super", kind, mode);
      const SuperRootResult r = compute_super_roots(parse_super(text));
      if (!r.diagnostic.empty()) err << "note: " << r.diagnostic << '\n';
      Json json = to_json(r);
      std::string txt = to_text(r);
      if (job.with_pbw && r.verdict == Verdict::Finite) {
        const LyndonTable lyndon = lyndon_words(r.positive_roots);
        const HyperwordTable hyper = hyperwords(lyndon);
        const Json tables = to_json(lyndon, hyper);
        for (const auto& [k, v] : tables.items()) json[k] = v;
        txt += to_text(lyndon, hyper);
      }
      emit(job, out, json, txt);
      return verdict_status(r.verdict);
    }
    case Mode::Groupoid: {
      require(kind == "nichols" || kind == "super", kind, mode);
      const int status = kind == "nichols" ? groupoid_job(job, enumerate_objects(parse_nichols(text), job.object_cap), out)
                                           : groupoid_job(job, enumerate_objects(parse_super(text), job.object_cap), out);
      return status;
    }
    case Mode::Pbw: {
      if (kind == "roots") return pbw_job(job, parse_root_list(text), out);
      if (kind == "nichols") {
        const RootSystemResult r = compute_root_system(parse_nichols(text));
        if (r.verdict != Verdict::Finite) {
          err << "error: root system is infinite: " << r.diagnostic << '\n';
          return kExitInfinite;
        }
        return pbw_job(job, r.positive_roots, out);
      }
      if (kind == "super") {
        const SuperRootResult r = compute_super_roots(parse_super(text));
        if (r.verdict != Verdict::Finite) {
          err << "error: root system is infinite: " << r.diagnostic << '\n';
          return kExitInfinite;
        }
        return pbw_job(job, r.positive_roots, out);
      }
      require(false, kind, mode);
      return kExitInputError;
    }
    case Mode::Verify: {
      require(kind == "grs", kind, mode);
      const GrsBundle b = parse_grs_bundle(text);
      const GrsReport report = verify_grs(b.scheme, b.positives);
      emit(job, out, to_json(b.scheme, report), to_text(b.scheme, report));
      return report.passed() ? kExitOk : kExitInfinite;
    }
    case Mode::Auto: break;
  }
  return kExitInputError;
}

}  // namespace

int run_text(const JobSpec& job, const std::string& text, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(job, text, out, err);
  } catch (const ParseError& e) {
    err << "error: " << job.input << ": " << e.what() << '\n';
  } catch (const MalformedDelta& e) {
    err << "error: " << job.input << ": malformed root list: " << e.what() << '\n';
  } catch (const NotAdmissible& e) {
    err << "error: " << job.input << ": " << e.what() << '\n';
    return kExitInfinite;
  } catch (const std::overflow_error& e) {
    err << "error: " << job.input << ": " << e.what() << '\n';
  }
  return kExitInputError;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  if (job.input == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(job.input, std::ios::binary);
    if (!in) {
      err << "error: cannot read " << job.input << '\n';
      return kExitInputError;
    }
    buffer << in.rdbuf();
  }
  return run_text(job, buffer.str(), out, err);
}

}  // namespace weylgpd
