#include "fqid/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "fqid/algebra_io.hpp"
#include "fqid/bound.hpp"
#include "fqid/error.hpp"
#include "fqid/idtest.hpp"
#include "fqid/report_json.hpp"

namespace fqid::cli {

namespace {

struct Config {
  std::string algebra;
  std::string poly;
  std::string flavor = "free";
  std::uint64_t cap = kDefaultTupleCap;
  int workers = 1;
  std::string out;
  bool human = false;
  bool commutator = false;

  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  int max_codim = -1;
  std::size_t limit = 64;
  std::string ideal;
  std::string reps;
  std::string ideal_i;
  std::string ideal_j;
  int m = 1;
  int d = 1;
  std::uint32_t q = 2;
  bool oracle = false;
  std::optional<int> exhaustive;
};

struct Outcome {
  json report;
  int code = kOk;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Ideal parse_ideal(const Algebra& a, const std::string& text) {
  if (text == "all" || text == "A") return Ideal::from_subspace(a, Subspace::whole(a.field(), a.dim()));
  std::vector<Vec> gens;
  for (const auto& g : split(text, ';')) gens.push_back(a.parse_vector(g));
  return ideal_generated(a, gens);
}

EvalOptions options(const Config& c) { return {c.cap, c.workers, c.commutator}; }

json header(const std::string& command, const Algebra& a, const FreePoly& q) {
  return {{"command", command}, {"algebra", a.name()}, {"poly", q.str()}, {"flavor", to_string(q.flavor())}};
}

struct Inputs {
  Algebra algebra;
  FreePoly poly;
};

Inputs load(const Config& c) {
  if (c.algebra.empty()) throw Error(ErrorKind::InvalidArgument, "--algebra is required");
  if (c.poly.empty()) throw Error(ErrorKind::InvalidArgument, "--poly is required");
  Algebra a = load_algebra(c.algebra);
  FreePoly q = FreePoly::parse(c.poly, parse_flavor(c.flavor), a.field());
  return {std::move(a), std::move(q)};
}

Outcome cmd_check(const Config& c) {
  auto [a, q] = load(c);
  const auto r = zero_probability(q, a, EvalMode::exact(), options(c));
  json j = header("check-identity", a, q);
  j["report"] = report_json(r);
  return {j, r.verdict_consistent ? kOk : kViolation};
}

Outcome cmd_probability(const Config& c) {
  if (c.samples.has_value() != c.seed.has_value()) {
    throw Error(ErrorKind::InvalidArgument, "--samples and --seed must be given together");
  }
  auto [a, q] = load(c);
  const EvalMode mode = c.samples ? EvalMode::sampling(*c.samples, *c.seed) : EvalMode::exact();
  const auto r = zero_probability(q, a, mode, options(c));
  json j = header("probability", a, q);
  j["report"] = report_json(r);
  return {j, r.verdict_consistent ? kOk : kViolation};
}

Outcome cmd_dixon(const Config& c) {
  auto [a, q] = load(c);
  const auto r = dixon_verdict(q, a, options(c));
  json j = header("dixon", a, q);
  j["notes"] = json::array();
  if (!r.homogeneous) j["notes"].push_back("Q is not homogeneous; the threshold uses its total degree");
  j["report"] = report_json(r);
  return {j, r.verdict_consistent && r.functional->consistent ? kOk : kViolation};
}

Outcome cmd_coset(const Config& c) {
  auto [a, q] = load(c);
  const int max_codim = c.max_codim < 0 ? a.dim() : c.max_codim;
  const auto ws = coset_identity_search(q, a, max_codim, options(c));
  json list = json::array();
  std::size_t nontrivial = 0;
  for (const auto& w : ws) {
    if (!w.trivial) ++nontrivial;
    if (list.size() < c.limit) list.push_back(report_json(a, w));
  }
  json j = header("coset-search", a, q);
  j["max_codim"] = max_codim;
  j["witness_count"] = ws.size();
  j["nontrivial_count"] = nontrivial;
  j["witnesses"] = list;
  return {j, kOk};
}

Outcome cmd_descent(const Config& c) {
  auto [a, q] = load(c);
  if (!q.analyze().multilinear) throw Error(ErrorKind::NotMultilinear, "descent needs a multilinear polynomial");
  std::optional<CosetWitness> w;
  if (!c.ideal.empty()) {
    const Ideal ideal = parse_ideal(a, c.ideal);
    std::vector<Vec> reps;
    if (c.reps.empty()) {
      reps.assign(q.nvars(), a.zero());
    } else {
      for (const auto& r : split(c.reps, ';')) reps.push_back(a.parse_vector(r));
    }
    bool inside = true;
    for (const auto& r : reps) inside = inside && ideal.space().contains(r);
    w = CosetWitness{ideal, reps, ideal.codim(), ideal.is_zero() || inside};
  } else {
    const auto ws = coset_identity_search(q, a, c.max_codim < 0 ? a.dim() : c.max_codim, options(c));
    for (const auto& cand : ws) {
      if (!cand.trivial) {
        w = cand;
        break;
      }
    }
    if (!w && !ws.empty()) w = ws.front();
  }
  if (!w) throw Error(ErrorKind::WitnessInvalid, "no coset witness found");
  const auto cert = multilinear_descent(q, a, *w, options(c));
  json j = header("descent", a, q);
  j["witness"] = report_json(a, *w);
  j["certificate"] = report_json(cert);
  return {j, cert.verified ? kOk : kViolation};
}

Outcome cmd_blocks(const Config& c) {
  auto [a, q] = load(c);
  if (c.ideal_i.empty() || c.ideal_j.empty()) throw Error(ErrorKind::InvalidArgument, "--ideal-i and --ideal-j are required");
  const Ideal outer = parse_ideal(a, c.ideal_i);
  const Ideal inner = parse_ideal(a, c.ideal_j);
  const auto r = block_statistics(q, a, outer, inner, options(c));
  json j = header("blocks", a, q);
  j["ideal_i"] = ideal_json(a, outer);
  j["ideal_j"] = ideal_json(a, inner);
  j["report"] = report_json(r, a);
  return {j, r.consistent ? kOk : kViolation};
}

Outcome cmd_engel(const Config& c) {
  if (c.algebra.empty()) throw Error(ErrorKind::InvalidArgument, "--algebra is required");
  const Algebra a = load_algebra(c.algebra);
  const auto r = engel_report(a, c.m, options(c));
  json j = header("engel", a, FreePoly::engel(c.m, a.field()));
  j["m"] = c.m;
  j["report"] = report_json(r);
  return {j, r.verdict_consistent && r.functional->consistent ? kOk : kViolation};
}

Outcome cmd_nagata(const Config& c) {
  if (c.algebra.empty()) throw Error(ErrorKind::InvalidArgument, "--algebra is required");
  const Algebra a = load_algebra(c.algebra);
  const auto r = nagata_higman_check(a, c.d, options(c));
  json j = header("nagata", a, FreePoly::power_word(c.d, a.field()));
  j["report"] = report_json(r);
  return {j, r.consistent ? kOk : kViolation};
}

Outcome cmd_bound(const Config& c) {
  const auto f = f_q(c.q, c.d);
  json j = {{"command", "bound"}, {"f_q", report_json(f)}};
  int code = kOk;
  if (c.oracle) {
    const auto s = minimize_sequences(c.q, c.d);
    j["oracle"] = report_json(s);
    j["oracle_matches"] = s.minimum == f.value;
    if (s.minimum != f.value) code = kViolation;
  }
  if (c.exhaustive) {
    const auto e = exhaustive_min(c.q, *c.exhaustive, c.d, kDefaultPolyCap, c.workers);
    j["exhaustive"] = report_json(e);
    j["exhaustive"]["n"] = *c.exhaustive;
    j["exhaustive_tight"] = Rational(static_cast<std::int64_t>(e.minimum)) == e.bound;
    if (e.violations > 0) code = kViolation;
  }
  return {j, code};
}

void add_common(CLI::App* sub, Config& c, bool needs_poly) {
  sub->add_option("--algebra", c.algebra, "algebra file or builtin:<name>(<params>)");
  if (needs_poly) {
    sub->add_option("--poly", c.poly, "polynomial text");
    sub->add_option("--flavor", c.flavor, "free, assoc or lie")->check(CLI::IsMember({"free", "assoc", "lie"}));
    sub->add_flag("--commutator", c.commutator, "read Lie products as u*v - v*u on non-bracket algebras");
  }
  sub->add_option("--cap", c.cap, "exact enumeration cap")->envname("FQIDTEST_CAP")->check(CLI::PositiveNumber);
  sub->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "json or human")->check(CLI::IsMember({"json", "human"}));
  sub->add_flag("--human", c.human, "render a table");
}

}  // namespace

std::vector<std::vector<std::string>> corpus_commands() {
  return {
      {"bound", "--q", "3", "--d", "3", "--oracle"},
      {"bound", "--q", "2", "--d", "2", "--exhaustive", "2"},
      {"bound", "--q", "3", "--d", "3", "--exhaustive", "2"},
      {"check-identity", "--algebra", "builtin:field(2)", "--poly", "x1*x1 + x1", "--flavor", "assoc"},
      {"dixon", "--algebra", "builtin:field(2)", "--poly", "x1*x1", "--flavor", "assoc"},
      {"dixon", "--algebra", "builtin:heisenberg(2)", "--poly", "[x1,x2]", "--flavor", "lie"},
      {"dixon", "--algebra", "builtin:truncated(2,4)", "--poly", "x1*x1 + x1", "--flavor", "assoc"},
      {"dixon", "--algebra", "builtin:upper_triangular(2,2)", "--poly", "x1*x2 - x2*x1", "--flavor", "assoc"},
      {"probability", "--algebra", "builtin:heisenberg(2)", "--poly", "[x1,x2]", "--flavor", "lie"},
      {"probability", "--algebra", "builtin:heisenberg(2)", "--poly", "[x1,x2]", "--flavor", "lie", "--samples",
       "4000", "--seed", "20240601"},
      {"probability", "--algebra", "builtin:matrix(2,2)", "--poly", "[x1,x2]", "--flavor", "lie", "--commutator",
       "--samples", "3000", "--seed", "7"},
      {"coset-search", "--algebra", "builtin:truncated(2,3)", "--poly", "x1*x1", "--flavor", "assoc"},
      {"coset-search", "--algebra", "builtin:upper_triangular(2,2)", "--poly", "x1*x2", "--flavor", "assoc",
       "--max-codim", "2"},
      {"descent", "--algebra", "builtin:upper_triangular(2,2)", "--poly", "x1*x2", "--flavor", "assoc", "--ideal",
       "e12", "--reps", "e12; e12"},
      {"descent", "--algebra", "builtin:heisenberg(2)", "--poly", "[x1,x2]", "--flavor", "lie", "--ideal", "b3"},
      {"blocks", "--algebra", "builtin:truncated(2,4)", "--poly", "x1*x1", "--flavor", "assoc", "--ideal-i",
       "t^2", "--ideal-j", "0"},
      {"blocks", "--algebra", "builtin:truncated(2,4)", "--poly", "x1*x1", "--flavor", "assoc", "--ideal-i", "t^3",
       "--ideal-j", "0"},
      {"engel", "--algebra", "builtin:heisenberg(2)", "--m", "1"},
      {"engel", "--algebra", "builtin:heisenberg(2)", "--m", "2"},
      {"engel", "--algebra", "builtin:strictly_upper_triangular_lie(4,2)", "--m", "2"},
      {"nagata", "--algebra", "builtin:truncated(5,3)", "--d", "3"},
      {"nagata", "--algebra", "builtin:matrix(2,2)", "--d", "4"},
  };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fqidtest: exact polynomial identity testing over finite algebras", "fqidtest"};
  app.require_subcommand(1);
  Config c;

  using Handler = Outcome (*)(const Config&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto add = [&](const char* name, const char* help, bool poly, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, c, poly);
    handlers.emplace_back(sub, h);
    return sub;
  };

  add("check-identity", "exact test of e_Q = 0", true, cmd_check);
  auto* prob = add("probability", "zero probability, exact or sampled", true, cmd_probability);
  prob->add_option("--samples", c.samples, "sample count")->check(CLI::PositiveNumber);
  prob->add_option("--seed", c.seed, "generator seed");
  add("dixon", "threshold verdict with the functional cross-check", true, cmd_dixon);
  auto* coset = add("coset-search", "coset identities of small codimension", true, cmd_coset);
  coset->add_option("--max-codim", c.max_codim, "largest codimension searched (default: dim)");
  coset->add_option("--limit", c.limit, "witnesses listed");
  auto* descent = add("descent", "multilinear descent certificate", true, cmd_descent);
  descent->add_option("--ideal", c.ideal, "ideal generators, ';'-separated, or 'all'");
  descent->add_option("--reps", c.reps, "coset representatives, ';'-separated");
  descent->add_option("--max-codim", c.max_codim, "search bound when --ideal is absent");
  auto* blocks = add("blocks", "per-block zero statistics for J inside I", true, cmd_blocks);
  blocks->add_option("--ideal-i", c.ideal_i, "outer ideal generators, or 'all'");
  blocks->add_option("--ideal-j", c.ideal_j, "inner ideal generators, or 'all'");
  auto* engel = add("engel", "Engel polynomial report", false, cmd_engel);
  engel->add_option("--m", c.m, "Engel length")->required()->check(CLI::PositiveNumber);
  auto* nagata = add("nagata", "x^d identity and nilpotency", false, cmd_nagata);
  nagata->add_option("--d", c.d, "power")->required()->check(CLI::PositiveNumber);
  auto* bound = add("bound", "the f_q(d) counting bound", false, cmd_bound);
  bound->add_option("--q", c.q, "field order")->required();
  bound->add_option("--d", c.d, "degree")->required()->check(CLI::NonNegativeNumber);
  bound->add_flag("--oracle", c.oracle, "compare against the sequence minimization");
  bound->add_option("--exhaustive", c.exhaustive, "exhaustive minimum over n variables");
  auto* corpus = app.add_subcommand("corpus", "run the built-in demo corpus");
  corpus->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--out", c.out, "json or human")->check(CLI::IsMember({"json", "human"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  const bool human = c.human || c.out == "human";
  try {
    if (corpus->parsed()) {
      json entries = json::array();
      int worst = kOk;
      for (const auto& cmd : corpus_commands()) {
        auto full = cmd;
        full.insert(full.end(), {"--workers", std::to_string(c.workers), "--out", "json"});
        std::ostringstream o, e;
        const int code = run(full, o, e);
        worst = std::max(worst, code);
        entries.push_back({{"args", cmd}, {"exit", code}, {"output", code == kUsage ? json(e.str()) : json::parse(o.str())}});
      }
      out << (human ? render_table(entries) : render(entries));
      return worst;
    }
    for (const auto& [sub, handler] : handlers) {
      if (!sub->parsed()) continue;
      const Outcome o = handler(c);
      if (sub->get_name() == "bound" && c.out.empty() && !c.human && !c.oracle && !c.exhaustive) {
        out << o.report["f_q"]["value"].get<std::string>() << "\n";
      } else if (human) {
        out << render_table(o.report);
        if (o.report.contains("notes")) {
          for (const auto& n : o.report["notes"]) out << "note: " << n.get<std::string>() << "\n";
        }
      } else {
        out << render(o.report);
      }
      if (o.code == kViolation) err << "violation: the report above contradicts a theorem\n";
      return o.code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fqid::cli
