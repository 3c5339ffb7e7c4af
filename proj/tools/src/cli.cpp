#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

#include "arbor/automaton.hpp"
#include "arbor/catalog.hpp"
#include "arbor/claims.hpp"
#include "arbor/errors.hpp"
#include "arbor/growth.hpp"
#include "arbor/hecke.hpp"
#include "arbor/lpres.hpp"
#include "arbor/parabolic.hpp"
#include "arbor/quotient.hpp"
#include "arbor/subgroup_expr.hpp"

namespace arbor::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string group_file;
  std::string format = "json";
  bool timing = false;
  std::size_t budget = default_budget;

  std::string action;
  std::string what;
  std::string word;
  std::string vertex;
  std::string expr;
  std::string sup = "whole";
  std::string ray;
  std::string kind = "lower-central";
  std::string leaves = "identity";
  std::string lpres_file;
  std::string theta = "0.811";
  std::string eta = "0.9";
  std::vector<std::string> suites{"all"};
  int level = 3;
  int coset_level = 10;
  int m = 0;
  int n_const = 0;
  std::size_t depth = 6;
  std::size_t length = 4;
  std::size_t radius = 6;
  std::size_t max_length = 12;
  unsigned max_iter = 3;
  unsigned times = 1;
  unsigned seed = 20240611;
  double tolerance = 1e-8;
};

struct Report {
  Json parameters = Json::object();
  Json result;
  Status status = Status::pass;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

GroupDef load_group(const Options& o) {
  if (!o.group_file.empty()) {
    if (!o.group.empty()) throw UsageError("give either --group or --group-file, not both");
    return parse_groupdef(read_file(o.group_file));
  }
  if (o.group.empty()) throw UsageError("--group or --group-file is required");
  return builtin(o.group);
}

Json big(const BigInt& value, int base) {
  if (value <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(value);
  return render_power(value, static_cast<unsigned>(base));
}

Json decision(Decision d) {
  if (d == Decision::exhausted) return "exhausted";
  return d == Decision::yes;
}

Status status_of(Decision d) {
  if (d == Decision::exhausted) return Status::exhausted;
  return Status::pass;
}

Status pass_if(bool ok) { return ok ? Status::pass : Status::fail; }

std::string render_vertex(const Vertex& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

Vertex parse_vertex(std::string_view text, int degree) {
  Vertex v;
  for (char ch : text) {
    if (ch == ' ' || ch == ',') continue;
    if (ch < '0' || ch - '0' >= degree) {
      throw UsageError("vertex letters must be digits below " + std::to_string(degree));
    }
    v.push_back(ch - '0');
  }
  return v;
}

RaySpec ray_of(const Options& o, int degree) {
  if (o.ray.empty()) return default_ray(degree);
  RaySpec ray{parse_vertex(o.ray, degree)};
  if (ray.period.empty()) throw UsageError("--ray needs at least one letter");
  return ray;
}

std::string render_perm(const Perm& p) {
  std::vector<int> images(p.images().begin(), p.images().end());
  return render_permutation(images);
}

Json portrait_json(const PortraitNode& node) {
  Json j = Json::object();
  if (!node.leaf.empty()) {
    j["leaf"] = node.leaf;
    return j;
  }
  if (node.truncated) {
    j["truncated"] = true;
    return j;
  }
  j["perm"] = render_permutation(node.perm);
  j["children"] = Json::array();
  for (const auto& c : node.children) j["children"].push_back(portrait_json(c));
  return j;
}

void check_level(int level) {
  if (level < 0) throw UsageError("--level must be non-negative");
}

Report element(const Options& o, SelfSimilarGroup& g) {
  Report r;
  r.parameters["action"] = o.action;
  const Word w = o.action == "nucleus" ? Word{} : g.word(o.word);
  if (o.action != "nucleus") r.parameters["word"] = g.render(w);
  if (o.action == "order") {
    const OrderResult res = g.order(w, o.budget);
    if (res.kind == OrderResult::Kind::finite) {
      r.result = big(res.value, g.degree());
      r.parameters["certified"] = res.certified;
    } else if (res.kind == OrderResult::Kind::infinite) {
      r.result = Json::object();
      r.result["order"] = "infinite";
      r.result["cycle_start"] = res.cycle_start;
      Json chain = Json::array();
      for (const auto& s : res.witness) {
        chain.push_back({{"element", g.render(s.element)}, {"exponent", s.exponent}, {"vertex", s.vertex}});
      }
      r.result["witness"] = chain;
    } else {
      r.result = "exhausted";
      r.status = Status::exhausted;
    }
  } else if (o.action == "trivial") {
    const Decision d = g.is_trivial(w, o.budget);
    r.result = decision(d);
    r.status = status_of(d);
  } else if (o.action == "reduce") {
    r.result = g.render(g.reduce(w));
  } else if (o.action == "decompose") {
    const auto dec = g.decompose(w);
    r.result = Json::object();
    r.result["root"] = render_permutation(dec.root);
    r.result["sections"] = Json::array();
    for (const auto& s : dec.sections) r.result["sections"].push_back(g.render(s));
  } else if (o.action == "act") {
    const Vertex v = parse_vertex(o.vertex, g.degree());
    r.parameters["vertex"] = render_vertex(v);
    r.result = render_vertex(g.act(w, v));
  } else if (o.action == "portrait") {
    r.parameters["depth"] = o.depth;
    r.parameters["leaves"] = o.leaves;
    const auto leaves = o.leaves == "generators" ? PortraitLeaves::generators : PortraitLeaves::identity;
    const Portrait p = g.portrait(w, o.depth, leaves, o.budget);
    r.result = Json::object();
    if (p.height) {
      r.result["height"] = *p.height;
    } else {
      r.result["height"] = nullptr;
    }
    r.result["truncated"] = p.truncated;
    r.result["tree"] = portrait_json(p.root);
    if (p.exhausted) r.status = Status::exhausted;
  } else if (o.action == "key") {
    const auto key = g.canonical_key(w, o.budget);
    if (key) {
      r.result = *key;
    } else {
      r.result = "exhausted";
      r.status = Status::exhausted;
    }
  } else if (o.action == "nucleus") {
    const NucleusResult n = g.nucleus(o.budget);
    r.result = Json::object();
    r.result["size"] = n.elements.size();
    r.result["elements"] = Json::array();
    for (const auto& e : n.elements) r.result["elements"].push_back(g.render(e));
    if (n.exhausted) r.status = Status::exhausted;
  }
  return r;
}

Report quotient(const Options& o, SelfSimilarGroup& g) {
  Report r;
  check_level(o.level);
  r.parameters["action"] = o.action;
  r.parameters["level"] = o.level;
  Quotients q(g);
  if (o.action == "order") {
    r.result = render_power(q.ambient(o.level).order(), static_cast<unsigned>(g.degree()));
  } else if (o.action == "hausdorff") {
    r.result = Json::array();
    for (const auto& row : hausdorff_profile(q, o.level)) {
      r.result.push_back({{"level", row.level},
                          {"order", render_power(big_pow(g.degree(), row.log_order), g.degree())},
                          {"ratio", render_rational(row.ratio)}});
    }
  } else if (o.action == "image") {
    const Word w = g.word(o.word);
    r.parameters["word"] = g.render(w);
    r.result = render_perm(q.image(w, o.level));
  }
  return r;
}

Report subgroup(const Options& o, SelfSimilarGroup& g) {
  Report r;
  check_level(o.level);
  r.parameters["action"] = o.action;
  r.parameters["level"] = o.level;
  Quotients q(g);
  const auto base = static_cast<unsigned>(g.degree());
  if (o.action == "qcp") {
    const Word w = g.word(o.word);
    r.parameters["word"] = g.render(w);
    r.parameters["m"] = o.m;
    r.parameters["n_const"] = o.n_const;
    const QcpReport rep = verify_qcp(q, w, o.m, o.n_const, o.level);
    r.result = {{"depth", rep.depth},
                {"required_level", rep.required_level},
                {"vacuous", rep.vacuous},
                {"holds", rep.holds}};
    r.status = pass_if(rep.holds);
    return r;
  }
  if (o.expr.empty()) throw UsageError("--expr is required");
  const SubgroupExpr e = parse_subgroup_expr(o.expr, g.def());
  r.parameters["expr"] = render_subgroup_expr(e, g.def());
  if (o.action == "order") {
    r.result = render_power(q.eval(e, o.level).order(), base);
  } else if (o.action == "index" || o.action == "contains") {
    const SubgroupExpr s = parse_subgroup_expr(o.sup, g.def());
    r.parameters["sup"] = render_subgroup_expr(s, g.def());
    if (o.action == "contains") {
      const bool ok = verify_containment(q, e, s, o.level);
      r.result = ok;
      r.status = pass_if(ok);
    } else {
      try {
        r.result = render_power(index(q.eval(e, o.level), q.eval(s, o.level)), base);
      } catch (const NotASubgroup& ex) {
        r.result = {{"error", ex.what()}};
        r.status = Status::fail;
      }
    }
  } else if (o.action == "regular-branch") {
    const bool ok = verify_regular_branch(q, e, o.level);
    r.result = ok;
    r.status = pass_if(ok);
  } else if (o.action == "series") {
    r.parameters["kind"] = o.kind;
    r.parameters["length"] = o.length;
    const auto kind = o.kind == "derived" ? SeriesKind::derived : SeriesKind::lower_central;
    r.result = Json::array();
    for (const auto& term : series(kind, q.eval(e, o.level), o.length)) {
      r.result.push_back(render_power(term.order(), base));
    }
  }
  return r;
}

Report parabolic(const Options& o, SelfSimilarGroup& g) {
  Report r;
  check_level(o.level);
  const RaySpec ray = ray_of(o, g.degree());
  r.parameters["what"] = o.what;
  r.parameters["ray"] = render_vertex(ray.period);
  r.parameters["level"] = o.level;
  Quotients q(g);
  const auto base = static_cast<unsigned>(g.degree());
  if (o.what == "orbits") {
    const OrbitReport rep = orbit_report(q, ray, o.level);
    r.result = Json::object();
    r.result["count"] = rep.orbits.size();
    r.result["predicted_count"] = rep.predicted_count;
    r.result["shape_match"] = rep.shape_match;
    r.result["orbits"] = Json::array();
    for (const auto& orbit : rep.orbits) {
      r.result["orbits"].push_back(
          {{"size", orbit.size()},
           {"first", render_vertex(decode_vertex(orbit.front(), g.degree(), o.level))}});
    }
    r.status = pass_if(rep.shape_match && rep.orbits.size() == rep.predicted_count);
  } else if (o.what == "index") {
    const BigInt idx = index(parabolic_subgroup(q, ray, o.level), q.ambient(o.level));
    r.result = {{"index", render_power(idx, base)}, {"points", level_size(g.degree(), o.level)}};
    r.status = pass_if(idx == BigInt(level_size(g.degree(), o.level)));
  } else if (o.what == "dcosets") {
    r.result = double_coset_count(q, ray, o.level);
  } else if (o.what == "decomp") {
    const DecompositionRecipe recipe = builtin_decomposition(g.def());
    const auto rep = verify_parabolic_decomposition(q, recipe, o.level);
    r.result = Json::object();
    r.result["parabolic_order"] = render_power(rep.parabolic_order, base);
    r.result["generated_order"] = render_power(rep.generated_order, base);
    r.result["checks"] = Json::array();
    for (const auto& c : rep.checks) {
      r.result["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    r.status = pass_if(rep.passed());
  }
  return r;
}

Report hecke(const Options& o, SelfSimilarGroup& g) {
  Report r;
  check_level(o.level);
  const RaySpec ray = ray_of(o, g.degree());
  r.parameters["what"] = o.what;
  r.parameters["ray"] = render_vertex(ray.period);
  r.parameters["level"] = o.level;
  Quotients q(g);
  const OrbitalSet orb = orbitals(q, ray, o.level);
  r.result = Json::object();
  r.result["points"] = orb.points();
  r.result["rank"] = orb.rank();
  r.result["row_sums"] = orb.valencies();
  if (o.what == "gelfand") {
    const bool ok = check_gelfand(orb);
    r.result["commutative"] = ok;
    r.status = pass_if(ok);
  } else if (o.what == "degrees") {
    r.parameters["seed"] = o.seed;
    r.parameters["tolerance"] = o.tolerance;
    std::optional<DecompositionDegrees> dd;
    std::string last_error;
    unsigned used = o.seed;
    for (unsigned attempt = 0; attempt < 5 && !dd; ++attempt) {
      try {
        used = o.seed + attempt;
        dd = decomposition_degrees(orb, g.degree(), used, o.tolerance);
      } catch (const ClusterAmbiguous& ex) {
        last_error = ex.what();
      }
    }
    if (!dd) {
      r.result["error"] = last_error;
      r.status = Status::fail;
      return r;
    }
    r.result["seed_used"] = used;
    r.result["commutative"] = dd->commutative;
    r.result["degrees"] = dd->degrees;
    r.result["degree_sum"] = dd->degree_sum;
    r.result["predicted"] = dd->predicted;
    r.result["matches_prediction"] = dd->matches_prediction;
    r.result["literal"] = dd->literal;
    r.result["matches_literal"] = dd->matches_literal;
    r.result["trace_check"] = dd->trace_check;
    r.status = pass_if(dd->commutative && dd->matches_prediction && dd->trace_check);
  }
  return r;
}

LPresentation load_lpresentation(const Options& o, const SelfSimilarGroup& g) {
  if (!o.lpres_file.empty()) return parse_lpresentation(read_file(o.lpres_file), g.def().names());
  return builtin_lpresentation(g.def().name);
}

/// Freely reduced words of length at most `n` over the generators and their inverses.
std::vector<Word> short_words(std::size_t rank, std::size_t n) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::uint32_t c = 0; c < 2 * rank; ++c) {
        const Letter l{c};
        if (!w.empty() && w.back() == l.inverse()) continue;
        Word u = w;
        u.push_back(l);
        next.push_back(std::move(u));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Report lpres(const Options& o, SelfSimilarGroup& g) {
  Report r;
  r.parameters["action"] = o.action;
  const LPresentation p = load_lpresentation(o, g);
  if (o.action == "show") {
    r.result = render_lpresentation(p);
  } else if (o.action == "substitute") {
    const Word w = parse_word(o.word, p.names);
    r.parameters["word"] = render_word(w, p.names);
    r.parameters["times"] = o.times;
    r.result = render_word(substitute(p, w, o.times), p.names);
  } else if (o.action == "verify") {
    r.parameters["max_iter"] = o.max_iter;
    const auto rep = verify_lpresentation(g, p, o.max_iter, o.budget);
    r.result = Json::object();
    r.result["relators"] = rep.relators.size();
    r.result["trivial"] = rep.count(Decision::yes);
    r.result["nontrivial"] = rep.count(Decision::no);
    r.result["exhausted"] = rep.count(Decision::exhausted);
    r.result["family"] = Json::array();
    for (const auto& rel : rep.relators) {
      r.result["family"].push_back({{"kind", rel.iterated ? "iterated" : "fixed"},
                                    {"source", rel.source},
                                    {"iteration", rel.iteration},
                                    {"length", rel.word.size()},
                                    {"trivial", decision(rel.trivial)}});
    }
    if (rep.count(Decision::no)) {
      r.status = Status::fail;
    } else if (rep.count(Decision::exhausted)) {
      r.status = Status::exhausted;
    }
  } else if (o.action == "endomorphism") {
    r.parameters["max_iter"] = o.max_iter;
    r.parameters["length"] = o.length;
    const auto sample = short_words(p.names.size(), o.length);
    const auto rep = verify_substitution_endomorphism(g, p, sample, o.max_iter, o.budget);
    r.result = {{"homomorphism", rep.homomorphism},
                {"expanding", rep.expanding},
                {"relators_checked", rep.relators_checked},
                {"sample", sample.size()}};
    if (rep.counterexample) r.result["counterexample"] = render_word(*rep.counterexample, p.names);
    r.status = rep.exhausted ? Status::exhausted : pass_if(rep.homomorphism);
  } else if (o.action == "parity") {
    r.parameters["max_iter"] = o.max_iter;
    std::vector<Word> sample;
    for (const auto& rel : relator_family(g, p, o.max_iter)) sample.push_back(rel.word);
    const ParityReport rep = parity_check(sample);
    r.result = {{"all_even", rep.all_even}, {"checked", rep.checked}};
    if (rep.counterexample) r.result["counterexample"] = g.render(*rep.counterexample);
    r.status = pass_if(rep.all_even);
  }
  return r;
}

std::string masks_to_text(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += " | ";
    out += weight_letter_names[static_cast<std::size_t>(word[i])];
  }
  return out;
}

Json rational_json(const Rational& q) {
  return {{"exact", render_rational(q)}, {"value", static_cast<double>(q)}};
}

Report growth(const Options& o, SelfSimilarGroup& g) {
  Report r;
  r.parameters["what"] = o.what;
  if (o.what == "balls") {
    r.parameters["radius"] = o.radius;
    std::vector<Word> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back({Letter::of(i)});
    const BallSizes b = ball_sizes(g, gens, o.radius, o.budget);
    r.result = b.sizes;
    if (b.exhausted) r.status = Status::exhausted;
  } else if (o.what == "weights") {
    const WeightTable t = weight_table(parse_decimal(o.theta));
    r.parameters["theta"] = o.theta;
    r.result = Json::object();
    for (std::size_t i = 0; i < 8; ++i) {
      r.result[std::string(weight_letter_names[i])] = rational_json(t.weight[i]);
    }
  } else if (o.what == "certificate") {
    r.parameters["theta"] = o.theta;
    r.parameters["eta"] = o.eta;
    r.parameters["max_length"] = o.max_length;
    const ContractionReport c =
        contraction_certificate(parse_decimal(o.theta), parse_decimal(o.eta), o.max_length);
    r.result = Json::object();
    r.result["sample_size"] = c.sample_size;
    r.result["max_ratio"] = rational_json(c.max_ratio);
    r.result["argmax"] = masks_to_text(c.argmax);
    r.result["restricted_size"] = c.restricted_size;
    r.result["max_ratio_restricted"] = rational_json(c.max_ratio_restricted);
    r.result["zeta_literal"] = c.zeta_literal;
    r.result["zeta_corrected"] = c.zeta_corrected;
    r.result["zeta_block"] = c.zeta_block;
    r.result["contracting"] = c.passed();
    r.result["restricted_contracting"] = c.restricted_passed();
    r.status = pass_if(c.passed());
  } else if (o.what == "coset") {
    check_level(o.coset_level);
    const RaySpec ray = ray_of(o, g.degree());
    r.parameters["ray"] = render_vertex(ray.period);
    r.parameters["radius"] = o.radius;
    r.parameters["level"] = o.coset_level;
    const CosetGrowth c = coset_growth(g, ray, o.radius, o.coset_level);
    r.result = {{"sizes", c.sizes}, {"slope", c.slope}};
  }
  return r;
}

Json claims_report(const Options& o, const ClaimRun& run, Status& status) {
  Json criteria = Json::array();
  for (const auto& c : run.criteria) {
    Json item = {{"id", c.criterion},
                 {"title", c.title},
                 {"status", to_string(c.status)},
                 {"checks", c.checks},
                 {"failed", c.failed}};
    if (o.timing) item["seconds"] = c.seconds;
    criteria.push_back(std::move(item));
    status = combine(status, c.status);
  }
  Json results = Json::array();
  for (const auto& c : run.results) {
    results.push_back({{"criterion", c.criterion},
                       {"suite", c.suite},
                       {"statement", c.statement},
                       {"status", to_string(c.status)},
                       {"detail", c.detail}});
  }
  return {{"criteria", criteria}, {"checks", results}};
}

Report verify_paper(const Options& o) {
  Report r;
  ClaimOptions opts;
  opts.budget = o.budget;
  opts.seed = o.seed;
  bool all = false;
  for (const auto& s : o.suites) {
    if (s == "all") {
      all = true;
      continue;
    }
    const auto keys = suite_keys();
    if (std::find(keys.begin(), keys.end(), s) == keys.end()) throw UsageError("unknown suite '" + s + "'");
    opts.suites.push_back(s);
  }
  if (all) opts.suites.clear();
  if (!all && opts.suites.empty()) throw UsageError("empty suite selection");
  r.parameters["suite"] = o.suites;
  r.parameters["seed"] = o.seed;
  r.parameters["budget"] = o.budget;
  const ClaimRun run = verify_claims(opts);
  r.result = claims_report(o, run, r.status);
  return r;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << "\t\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return exit_pass;
    case Status::fail: return exit_fail;
    case Status::exhausted: return exit_exhausted;
  }
  return exit_fail;
}

void add_common(CLI::App* sub, Options& o, bool needs_group = true) {
  if (needs_group) {
    sub->add_option("--group", o.group, "Builtin group name")
        ->check(CLI::IsMember(std::vector<std::string>(builtin_names().begin(), builtin_names().end())));
    sub->add_option("--group-file", o.group_file, "Group definition file");
  }
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  sub->add_flag("--timing", o.timing, "Include wall-clock seconds in the report");
  sub->add_option("--budget", o.budget, "Recursion nodes per budgeted call")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Self-similar groups on rooted trees: word problem, congruence quotients, parabolic "
               "subgroups, orbital algebras, L-presentations and growth."};
  app.name("arbor");
  app.require_subcommand(1);

  auto* el = app.add_subcommand("element", "Element queries");
  el->add_option("action", o.action, "What to compute")
      ->required()
      ->check(CLI::IsMember({"order", "trivial", "reduce", "decompose", "act", "portrait", "key", "nucleus"}));
  el->add_option("--word", o.word, "Word such as 'a d a c'");
  el->add_option("--vertex", o.vertex, "Vertex for 'act', letters separated by spaces");
  el->add_option("--depth", o.depth, "Portrait depth")->capture_default_str();
  el->add_option("--leaves", o.leaves, "Portrait leaves")
      ->check(CLI::IsMember({"identity", "generators"}))
      ->capture_default_str();
  add_common(el, o);

  auto* quot = app.add_subcommand("quotient", "Congruence quotients");
  quot->add_option("action", o.action, "What to compute")
      ->required()
      ->check(CLI::IsMember({"order", "hausdorff", "image"}));
  quot->add_option("--level", o.level, "Tree level (largest level for 'hausdorff')")->capture_default_str();
  quot->add_option("--word", o.word, "Word for 'image'");
  add_common(quot, o);

  auto* sub = app.add_subcommand("subgroup", "Subgroups of a congruence quotient");
  sub->add_option("action", o.action, "What to compute")
      ->required()
      ->check(CLI::IsMember({"order", "index", "contains", "regular-branch", "series", "qcp"}));
  sub->add_option("--expr", o.expr, "Subgroup expression, e.g. 'ncl{(a b)^2}'");
  sub->add_option("--sup", o.sup, "Containing subgroup for 'index' and 'contains'")->capture_default_str();
  sub->add_option("--level", o.level, "Tree level")->capture_default_str();
  sub->add_option("--kind", o.kind, "Series kind")
      ->check(CLI::IsMember({"lower-central", "derived"}))
      ->capture_default_str();
  sub->add_option("--length", o.length, "Number of series terms")->capture_default_str();
  sub->add_option("--word", o.word, "Element for 'qcp'");
  sub->add_option("--m", o.m, "Offset m for 'qcp'")->capture_default_str();
  sub->add_option("--n-const", o.n_const, "Constant n for 'qcp'")->capture_default_str();
  add_common(sub, o);

  auto* para = app.add_subcommand("parabolic", "Parabolic subgroups");
  para->add_option("--what", o.what, "Report")->required()->check(CLI::IsMember({"orbits", "index", "dcosets", "decomp"}));
  para->add_option("--ray", o.ray, "Period of the ray, e.g. '2' (default: 1 on binary, 2 on ternary trees)");
  para->add_option("--level", o.level, "Tree level")->capture_default_str();
  add_common(para, o);

  auto* hk = app.add_subcommand("hecke", "Orbital algebra of the action on a level");
  hk->add_option("--what", o.what, "Report")->required()->check(CLI::IsMember({"rank", "gelfand", "degrees"}));
  hk->add_option("--ray", o.ray, "Period of the ray");
  hk->add_option("--level", o.level, "Tree level")->capture_default_str();
  hk->add_option("--seed", o.seed, "Seed of the random algebra element")->capture_default_str();
  hk->add_option("--tolerance", o.tolerance, "Eigenvalue clustering tolerance")->capture_default_str();
  add_common(hk, o);

  auto* lp = app.add_subcommand("lpres", "L-presentations");
  lp->add_option("action", o.action, "What to do")
      ->required()
      ->check(CLI::IsMember({"verify", "show", "substitute", "endomorphism", "parity"}));
  lp->add_option("--lpres-file", o.lpres_file, "Presentation file (default: the builtin one of the group)");
  lp->add_option("--max-iter", o.max_iter, "Largest substitution power applied to iterated relators")
      ->capture_default_str();
  lp->add_option("--word", o.word, "Word for 'substitute'");
  lp->add_option("--times", o.times, "Substitution power for 'substitute'")->capture_default_str();
  lp->add_option("--length", o.length, "Sample word length for 'endomorphism'")->capture_default_str();
  add_common(lp, o);

  auto* gr = app.add_subcommand("growth", "Growth data");
  gr->add_option("--what", o.what, "Report")
      ->required()
      ->check(CLI::IsMember({"balls", "certificate", "coset", "weights"}));
  gr->add_option("--radius", o.radius, "Ball radius")->capture_default_str();
  gr->add_option("--theta", o.theta, "Weight parameter, a decimal")->capture_default_str();
  gr->add_option("--eta", o.eta, "Largest share of 'b c d' letters in the restricted sample")->capture_default_str();
  gr->add_option("--max-length", o.max_length, "Longest certificate word")->capture_default_str();
  gr->add_option("--ray", o.ray, "Period of the ray for 'coset'");
  gr->add_option("--level", o.coset_level, "Tree level for 'coset'")->capture_default_str();
  add_common(gr, o);

  auto* vp = app.add_subcommand("verify-paper", "Run the acceptance checks");
  vp->add_option("--suite", o.suites, "all, G, Gtilde, gamma, gamma-bar or gamma-bar-bar")
      ->expected(1, -1)
      ->capture_default_str();
  vp->add_option("--seed", o.seed, "Seed of random samples")->capture_default_str();
  add_common(vp, o, false);

  std::vector<std::string> argv_store{"arbor"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  std::string group_name;
  try {
    if (command == "verify-paper") {
      report = verify_paper(o);
    } else {
      SelfSimilarGroup g(load_group(o));
      group_name = g.def().name;
      if ((command == "element" && o.action != "nucleus" && o.word.empty()) ||
          (command == "quotient" && o.action == "image" && o.word.empty()) ||
          (command == "lpres" && o.action == "substitute" && o.word.empty())) {
        throw UsageError("--word is required");
      }
      if (command == "element") report = element(o, g);
      if (command == "quotient") report = quotient(o, g);
      if (command == "subgroup") report = subgroup(o, g);
      if (command == "parabolic") report = parabolic(o, g);
      if (command == "hecke") report = hecke(o, g);
      if (command == "lpres") report = lpres(o, g);
      if (command == "growth") report = growth(o, g);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json doc = Json::object();
  doc["command"] = command;
  if (command != "verify-paper") doc["group"] = group_name;
  doc["parameters"] = report.parameters;
  doc["result"] = report.result;
  doc["status"] = to_string(report.status);
  if (o.timing) doc["timing"] = {{"seconds", seconds}};
  if (o.format == "tsv") {
    flatten(doc, "", out);
  } else {
    out << doc.dump(2) << '\n';
  }
  return exit_code(report.status);
}

}  // namespace arbor::cli
