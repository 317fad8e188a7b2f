#include "hedgehog/cli.hpp"

#include "hedgehog/certificate.hpp"
#include "hedgehog/constructions.hpp"
#include "hedgehog/extractors.hpp"
#include "hedgehog/finder.hpp"
#include "hedgehog/verifiers.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

namespace hedgehog::cli {

namespace {

namespace cons = constructions;
namespace ext = extractors;
namespace ver = verifiers;

Colour parse_colour(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "r" || s == "red")
    return kRed;
  if (s == "b" || s == "blue")
    return kBlue;
  if (s == "g" || s == "green")
    return kGreen;
  if (s == "y" || s == "yellow")
    return kYellow;
  if (!s.empty() && s.size() <= 3 && std::all_of(s.begin(), s.end(), ::isdigit) && std::stoi(s) < 256)
    return static_cast<Colour>(std::stoi(s));
  throw Error(ErrorKind::parse_error, "unknown colour '" + s + "'");
}

// "0,1,2", "R,B,G" or "RBG".
std::vector<Colour> parse_palette(const std::string &text) {
  std::vector<Colour> out;
  if (text.find(',') == std::string::npos &&
      std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isalpha(c); }) && text.size() > 1) {
    for (char ch : text)
      out.push_back(parse_colour(std::string(1, ch)));
  } else {
    std::istringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');)
      out.push_back(parse_colour(tok));
  }
  if (out.empty())
    throw Error(ErrorKind::parse_error, "empty palette");
  return out;
}

std::vector<Colour> default_palette(unsigned q) {
  std::vector<Colour> p(std::max(q, 4u));
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = static_cast<Colour>(i);
  return p;
}

CompleteColouring load(const std::string &path) { return from_hcol(read_file(path)); }

Hypergraph edges_of_colour(const CompleteColouring &c, Colour colour) {
  Hypergraph h(c.n(), c.k());
  std::uint64_t idx = 0;
  for (SubsetCursor cur(c.n(), c.k()); cur.valid(); cur.next(), ++idx)
    if (c.at(idx) == colour)
      h.add_edge(cur.current());
  return h;
}

std::string list(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << (i ? " " : "") << vs[i];
  return out.str();
}

struct Context {
  std::ostream &out;
  std::ostream &err;
  unsigned threads = 1;
  std::string out_path;
  std::string report_path;

  void emit(const std::string &text) const {
    if (out_path.empty())
      out << text;
    else
      write_file(out_path, text);
  }
  void report(const SearchReport &r) const {
    if (report_path.empty())
      err << r.to_text();
    else
      write_file(report_path, r.to_text());
  }
};

// Options shared by several leaves; each leaf binds only what it uses.
struct Options {
  Vertex n = 0;
  unsigned k = 3, q = 2, t = 0;
  std::optional<unsigned> q_opt, base;
  std::uint64_t seed = 0;
  std::uint64_t max_tries = 100, max_steps = 20000;
  std::string mode = "local";
  std::string in, inner, cert, base_path, palette, colour = "auto", scale;
  unsigned trials = 32, max_colours = 2;
  std::string edge_colour = "1";
  std::uint64_t limit = ver::kDefaultExhaustiveLimit;
  Vertex cap = 0, exhaustive_cap = 8;
  std::uint64_t node_budget = std::uint64_t{1} << 32, restarts = 32;
  bool no_cross_check = false;
  std::string manifest;
  bool verbose = false;
};

int generate_random(const Context &ctx, const Options &o) {
  ctx.emit(to_hcol(cons::random_colouring(o.n, o.k, o.q, o.seed)));
  return kOk;
}

int generate_scattered(const Context &ctx, const Options &o) {
  cons::ScatteredColouringSpec spec;
  spec.n = o.n;
  spec.t = o.t;
  spec.q = o.q_opt.value_or(4);
  spec.seed = o.seed;
  spec.max_tries = o.max_tries;
  spec.max_steps = o.max_steps;
  spec.threads = ctx.threads;
  if (o.mode == "local")
    spec.mode = cons::SearchMode::local_search;
  else if (o.mode == "rejection")
    spec.mode = cons::SearchMode::rejection;
  else
    throw Error(ErrorKind::parse_error, "mode must be local or rejection");
  auto result = cons::find_scattered_colouring(spec);
  ctx.report(result.report);
  if (!result.colouring) {
    ctx.err << "no scattered colouring found in " << result.report.tries << " tries\n";
    return kNotFound;
  }
  ctx.emit(to_hcol(*result.colouring));
  return kOk;
}

int generate_gallai(const Context &ctx, const Options &o) {
  SearchReport report;
  auto w = cons::gallai_lower_bound_witness(o.t, o.seed, o.base, o.max_tries, &report);
  ctx.report(report);
  if (!w) {
    ctx.err << "no base colouring found in " << report.tries << " tries\n";
    return kNotFound;
  }
  ctx.emit(to_hcol(w->colouring));
  return kOk;
}

int lift_complement(const Context &ctx, const Options &o) {
  const auto g = load(o.in);
  const auto palette = o.palette.empty() ? default_palette(g.q()) : parse_palette(o.palette);
  ctx.emit(to_hcol(cons::complement_lift(g, palette)));
  return kOk;
}

int find_hedgehog(const Context &ctx, const Options &o) {
  const auto c = load(o.in);
  finder::FinderOptions fo;
  fo.threads = ctx.threads;
  if (o.colour != "auto")
    fo.colour = parse_colour(o.colour);
  SearchReport report;
  report.operation = "find-hedgehog";
  report.param("t", std::to_string(o.t));
  report.param("n", std::to_string(c.n()));
  report.param("colour", o.colour);
  report.tries = 1;
  try {
    const auto emb = finder::find_monochromatic_hedgehog(c, o.t, fo);
    report.outcome = "found";
    report.winning_try = 0;
    report.detail("colour", std::to_string(emb.colour));
    report.detail("body", list(emb.body));
    ctx.report(report);
    ctx.emit(to_certificate(emb));
    return kOk;
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::no_body && e.kind() != ErrorKind::embedding_failed)
      throw;
    report.outcome = "failed";
    report.detail("error", e.what());
    ctx.report(report);
    ctx.err << e.what() << '\n';
    return kNotFound;
  }
}

int extract_spencer(const Context &ctx, const Options &o) {
  const auto c = load(o.in);
  if (c.k() != 3)
    throw Error(ErrorKind::invalid_argument, "spencer extraction needs a k=3 file");
  const auto h = edges_of_colour(c, parse_colour(o.edge_colour));
  const auto r = ext::spencer_independent_set(h, o.seed, o.trials);
  SearchReport report;
  report.operation = "extract-spencer";
  report.seed = o.seed;
  report.param("n", std::to_string(h.n()));
  report.param("edges", std::to_string(h.edge_count()));
  report.param("trials", std::to_string(o.trials));
  report.tries = r.trials;
  report.detail("size", std::to_string(r.vertices.size()));
  report.detail("guarantee", std::to_string(r.guarantee));
  const bool ok = r.vertices.size() >= r.guarantee;
  report.outcome = ok ? "found" : "below-guarantee";
  ctx.report(report);
  ctx.emit(independent_set_certificate(r.vertices));
  return ok ? kOk : kViolation;
}

int extract_gallai(const Context &ctx, const Options &o) {
  auto c = load(o.in);
  if (auto tri = ver::find_rainbow_triangle(c, {kRed, kBlue, kGreen}); c.k() == 2 && c.q() == 3 && tri) {
    ctx.err << "not a Gallai colouring: rainbow triangle " << list(*tri) << '\n';
    return kViolation;
  }
  const auto g = ext::GallaiColouring::verify(std::move(c));
  const auto w = ext::gallai_two_coloured_clique(g, ctx.threads);
  ctx.emit(to_certificate(w));
  return kOk;
}

ext::ScaleOverrides parse_scale(const std::string &text) {
  ext::ScaleOverrides s;
  std::string cleaned;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}' && ch != '"' && ch != '\'')
      cleaned += ch == ':' ? '=' : ch;
  std::istringstream in(cleaned);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty())
      continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::parse_error, "scale entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9)
      throw Error(ErrorKind::parse_error, "scale value for '" + key + "' must be a number");
    const auto v = static_cast<unsigned>(std::stoul(value));
    if (key == "clique_target")
      s.clique_target = v;
    else if (key == "spencer_trials")
      s.spencer_trials = v;
    else
      throw Error(ErrorKind::parse_error, "unknown scale key '" + key + "'");
  }
  return s;
}

int pipeline(const Context &ctx, const Options &o) {
  const auto c = load(o.in);
  auto scale = parse_scale(o.scale);
  scale.seed = o.seed;
  scale.threads = ctx.threads;
  SearchReport report;
  report.operation = "three-colour-pipeline";
  report.seed = o.seed;
  report.param("t", std::to_string(o.t));
  report.param("n", std::to_string(c.n()));
  report.param("clique_target", std::to_string(scale.clique_target.value_or(o.t * o.t * o.t)));
  report.param("spencer_trials", std::to_string(scale.spencer_trials));
  report.tries = 1;
  auto add_stages = [&](const std::vector<ext::PipelineStage> &stages) {
    for (const auto &s : stages)
      report.detail("stage" + std::to_string(s.index) + "." + s.name, s.summary);
  };
  try {
    const auto r = ext::three_colour_pipeline(c, o.t, scale);
    add_stages(r.stages);
    report.outcome = "found";
    report.winning_try = 0;
    report.detail("final_stage", std::to_string(r.final_stage));
    ctx.report(report);
    ctx.emit(to_certificate(r.embedding));
    return kOk;
  } catch (const ext::StagedFailure &f) {
    add_stages(f.completed());
    report.outcome = "failed";
    report.detail("failed_stage", std::to_string(f.stage()) + "." + f.stage_name());
    ctx.report(report);
    ctx.err << f.what() << '\n' << f.counterexample();
    if (!f.counterexample().empty() && f.counterexample().back() != '\n')
      ctx.err << '\n';
    return kNotFound;
  }
}

int f_oracle(const Context &ctx, const Options &o) {
  ext::FOracleOptions fo;
  fo.exhaustive_cap = o.exhaustive_cap;
  fo.node_budget = o.node_budget;
  fo.seed = o.seed;
  fo.restarts = o.restarts;
  fo.max_steps = o.max_steps;
  fo.cross_check = !o.no_cross_check;
  const auto r = ext::f_oracle(o.t, o.cap, fo);
  SearchReport report;
  report.operation = "f-oracle";
  report.seed = o.seed;
  report.param("t", std::to_string(o.t));
  report.param("cap", std::to_string(o.cap));
  report.param("exhaustive_cap", std::to_string(o.exhaustive_cap));
  report.tries = r.steps.size();
  std::ostringstream text;
  for (const auto &s : r.steps) {
    text << "n=" << s.n << " exhaustive=" << (s.exhaustive_run ? ext::to_string(s.exhaustive) : "skipped")
         << " witness_mode=" << (s.witness_run ? ext::to_string(s.witness_mode) : "skipped")
         << " nodes=" << s.nodes << '\n';
  }
  if (r.value)
    text << "F(" << o.t << ") = " << *r.value << '\n';
  else
    text << "F(" << o.t << ") >= " << r.lower_bound << '\n';
  text << "modes_agree " << (r.modes_agree ? "yes" : "no") << '\n';
  report.outcome = r.value ? "determined" : "lower-bound";
  report.detail("value", r.value ? std::to_string(*r.value) : "unknown");
  report.detail("lower_bound", std::to_string(r.lower_bound));
  ctx.report(report);
  ctx.emit(text.str());
  return r.modes_agree ? kOk : kViolation;
}

int verify_embedding(const Context &ctx, const Options &o) {
  const auto host = load(o.in);
  const auto emb = embedding_from_certificate(read_file(o.cert));
  if (auto v = ver::verify_embedding(emb, host)) {
    ctx.out << "violation " << ver::to_string(v->kind) << ": " << v->detail << '\n';
    return kViolation;
  }
  ctx.out << "ok\n";
  return kOk;
}

int verify_lift(const Context &ctx, const Options &o) {
  const auto lifted = load(o.in);
  if (!o.base_path.empty()) {
    const auto base = load(o.base_path);
    const auto palette = o.palette.empty() ? default_palette(base.q()) : parse_palette(o.palette);
    if (auto bad = ver::verify_complement_lift(base, lifted, palette)) {
      ctx.out << "violation lift: " << *bad << '\n';
      return kViolation;
    }
  }
  if (o.t > 0) {
    for (unsigned c = 0; c < lifted.q(); ++c)
      if (auto emb = ver::has_monochromatic_hedgehog(lifted, o.t, static_cast<Colour>(c))) {
        ctx.out << "violation monochromatic hedgehog\n" << to_certificate(*emb);
        return kViolation;
      }
  }
  ctx.out << "ok\n";
  return kOk;
}

int verify_scattered(const Context &ctx, const Options &o) {
  const auto g = load(o.in);
  if (auto w = ver::find_deficient_clique(g, o.t, o.q_opt.value_or(g.q()))) {
    ctx.out << "violation deficient clique\n" << to_certificate(*w);
    return kViolation;
  }
  ctx.out << "ok\n";
  return kOk;
}

int verify_rainbow(const Context &ctx, const Options &o) {
  const auto g = load(o.in);
  const auto p = parse_palette(o.palette.empty() ? "R,B,G" : o.palette);
  if (p.size() != 3)
    throw Error(ErrorKind::parse_error, "rainbow palette needs three colours");
  if (auto tri = ver::find_rainbow_triangle(g, {p[0], p[1], p[2]})) {
    ctx.out << "violation rainbow triangle " << list(*tri) << '\n';
    return kViolation;
  }
  ctx.out << "ok\n";
  return kOk;
}

int verify_f_witness(const Context &ctx, const Options &o) {
  if (auto bad = ver::verify_f_witness(load(o.in), o.t)) {
    ctx.out << "violation " << *bad << '\n';
    return kViolation;
  }
  ctx.out << "ok\n";
  return kOk;
}

int verify_independent(const Context &ctx, const Options &o) {
  const auto h = edges_of_colour(load(o.in), parse_colour(o.edge_colour));
  const auto vs = independent_set_from_certificate(read_file(o.cert));
  if (auto bad = ver::verify_independent_set(h, vs)) {
    ctx.out << "violation " << *bad << '\n';
    return kViolation;
  }
  ctx.out << "ok\n";
  return kOk;
}

int verify_clique(const Context &ctx, const Options &o) {
  const auto g = load(o.in);
  const auto w = clique_from_certificate(read_file(o.cert));
  if (auto bad = ver::verify_clique_witness(g, w, o.max_colours)) {
    ctx.out << "violation " << *bad << '\n';
    return kViolation;
  }
  ctx.out << "ok\n";
  return kOk;
}

int search_exhaustive(const Context &ctx, const Options &o) {
  const auto v = ver::exhaustive_ramsey_check(o.t, o.q, o.n, ctx.threads, o.limit);
  SearchReport report;
  report.operation = "exhaustive-ramsey";
  report.param("t", std::to_string(o.t));
  report.param("q", std::to_string(o.q));
  report.param("n", std::to_string(o.n));
  report.outcome = ver::to_string(v.outcome);
  report.tries = v.colourings_checked;
  report.detail("raw_space", std::to_string(v.raw_space));
  if (!v.note.empty())
    report.detail("note", v.note);
  ctx.report(report);
  std::ostringstream text;
  text << "verdict " << ver::to_string(v.outcome) << " t=" << o.t << " q=" << o.q << " n=" << o.n
       << " checked=" << v.colourings_checked << '\n';
  if (v.counterexample)
    text << to_hcol(*v.counterexample);
  ctx.emit(text.str());
  switch (v.outcome) {
  case ver::RamseyVerdict::Outcome::holds:
    return kOk;
  case ver::RamseyVerdict::Outcome::counterexample:
    return kViolation;
  case ver::RamseyVerdict::Outcome::refused:
    break;
  }
  return kRefused;
}

int batch(const Context &ctx, const Options &o) {
  const auto rows = run_batch(parse_manifest(read_file(o.manifest)), ctx.threads);
  std::string table = format_batch_table(rows);
  if (o.verbose)
    for (const auto &r : rows)
      table += "--- line " + std::to_string(r.entry.line) + "\n" + r.output;
  ctx.emit(table);
  return std::all_of(rows.begin(), rows.end(), [](const BatchRow &r) { return r.passed; }) ? kOk : kNotFound;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::refused:
  case ErrorKind::unsupported:
    return kRefused;
  case ErrorKind::no_body:
  case ErrorKind::embedding_failed:
  case ErrorKind::staged_failure:
    return kNotFound;
  case ErrorKind::guarantee_violated:
  case ErrorKind::precondition_violated:
    return kViolation;
  case ErrorKind::invalid_argument:
  case ErrorKind::infeasible_spec:
  case ErrorKind::parse_error:
    return kUsage;
  }
  return kUsage;
}

unsigned env_threads() {
  if (const char *env = std::getenv("HEDGEHOG_THREADS")) {
    const std::string s(env);
    if (!s.empty() && s.size() < 4 && s.find_first_not_of("0123456789") == std::string::npos)
      return std::max(1, std::stoi(s));
    throw Error(ErrorKind::parse_error, "HEDGEHOG_THREADS must be a positive integer");
  }
  return 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Hedgehog Ramsey toolkit: colourings, lifts, extraction and exact verification.", "hedgehog"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> threads;
  std::string out_path, report_path;
  app.add_option("--threads", threads, "Worker threads (default $HEDGEHOG_THREADS or 1)")
      ->check(CLI::Range(1u, 1024u));

  Options o;
  using Handler = int (*)(const Context &, const Options &);
  std::vector<std::pair<CLI::App *, Handler>> leaves;

  auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help, Handler h) {
    auto *sub = parent->add_subcommand(name, help);
    leaves.emplace_back(sub, h);
    return sub;
  };
  auto with_out = [&](CLI::App *sub) {
    sub->add_option("--out", out_path, "Write the main output here instead of stdout");
  };
  auto with_report = [&](CLI::App *sub) {
    sub->add_option("--report", report_path, "Write the search report here instead of stderr");
  };
  auto in_file = [&](CLI::App *sub, const std::string &help) {
    sub->add_option("--in", o.in, help)->required();
  };
  auto seed = [&](CLI::App *sub) { sub->add_option("--seed", o.seed, "Random seed")->required(); };
  auto t_opt = [&](CLI::App *sub, bool required) {
    auto *opt = sub->add_option("--t", o.t, "Hedgehog body size t");
    if (required)
      opt->required();
    opt->check(CLI::Range(1u, 64u));
  };

  auto *gen = app.add_subcommand("generate", "Generate colourings (HCOL v1)");
  gen->require_subcommand(1);
  {
    auto *s = leaf(gen, "random", "Uniform random colouring of K_n^(k)", generate_random);
    s->add_option("-n", o.n, "Vertices")->required()->check(CLI::Range(1u, 1023u));
    s->add_option("-k", o.k, "Uniformity (2, 3 or 4)")->check(CLI::Range(2u, 4u));
    s->add_option("-q", o.q, "Colours")->check(CLI::Range(1u, 256u));
    seed(s);
    with_out(s);
  }
  {
    auto *s = leaf(gen, "scattered", "Graph colouring where every t-clique shows all q colours",
                   generate_scattered);
    s->add_option("-n", o.n, "Vertices")->required()->check(CLI::Range(1u, 1023u));
    t_opt(s, true);
    s->add_option("-q", o.q_opt, "Colours (default 4)")->check(CLI::Range(1u, 256u));
    seed(s);
    s->add_option("--max-tries", o.max_tries, "Restarts or samples");
    s->add_option("--max-steps", o.max_steps, "Local-search steps per restart");
    s->add_option("--mode", o.mode, "local or rejection");
    with_out(s);
    with_report(s);
  }
  {
    auto *s = leaf(gen, "gallai-witness", "Lex product of three 3-colourings avoiding RBG rainbows",
                   generate_gallai);
    t_opt(s, true);
    seed(s);
    s->add_option("--base", o.base, "Base colouring size (default from t)");
    s->add_option("--max-tries", o.max_tries, "Base search restarts");
    with_out(s);
    with_report(s);
  }

  auto *lift = app.add_subcommand("lift", "Lift colourings to higher uniformity");
  lift->require_subcommand(1);
  {
    auto *s = leaf(lift, "complement", "Triple gets the smallest palette colour missing below it",
                   lift_complement);
    in_file(s, "Graph colouring (k=2)");
    s->add_option("--palette", o.palette, "Palette, e.g. 0,1,2,3 or RBG (default 0..max(q,4)-1)");
    with_out(s);
  }
  {
    auto *s = leaf(lift, "kr-quad", "4-set red iff it holds a red triangle, else blue iff blue triangle",
                   [](const Context &ctx, const Options &o) {
                     ctx.emit(to_hcol(cons::kr_quad_lift(load(o.in))));
                     return static_cast<int>(kOk);
                   });
    in_file(s, "Graph colouring (k=2)");
    with_out(s);
  }
  {
    auto *s = leaf(lift, "quad-set", "4-set coloured by the set of its triple colours",
                   [](const Context &ctx, const Options &o) {
                     ctx.emit(to_hcol(cons::quad_set_lift(load(o.in))));
                     return static_cast<int>(kOk);
                   });
    in_file(s, "Triple colouring (k=3)");
    with_out(s);
  }
  {
    auto *s = leaf(lift, "lex-product", "Lexicographic product of two graph colourings",
                   [](const Context &ctx, const Options &o) {
                     ctx.emit(to_hcol(cons::lex_product(load(o.in), load(o.inner))));
                     return static_cast<int>(kOk);
                   });
    in_file(s, "Outer graph colouring");
    s->add_option("--inner", o.inner, "Inner graph colouring")->required();
    with_out(s);
  }

  auto *find = app.add_subcommand("find", "Find substructures");
  find->require_subcommand(1);
  {
    auto *s = leaf(find, "hedgehog", "Monochromatic hedgehog in a 2-colouring of triples", find_hedgehog);
    t_opt(s, true);
    in_file(s, "Triple colouring (k=3, q=2)");
    s->add_option("--colour", o.colour, "auto, red or blue");
    with_out(s);
    with_report(s);
  }

  auto *extract = app.add_subcommand("extract", "Extraction lemmas");
  extract->require_subcommand(1);
  {
    auto *s = leaf(extract, "spencer", "Independent set in the 3-graph of one colour class", extract_spencer);
    in_file(s, "Triple colouring; edges are the triples of --edge-colour");
    s->add_option("--edge-colour", o.edge_colour, "Colour class forming the hypergraph (default 1)");
    seed(s);
    s->add_option("--trials", o.trials, "Random trials");
    with_out(s);
    with_report(s);
  }
  {
    auto *s = leaf(extract, "gallai", "Two-coloured clique of order >= n^(1/3) in a Gallai colouring",
                   extract_gallai);
    in_file(s, "Graph colouring (k=2, q=3)");
    with_out(s);
  }

  {
    auto *s = leaf(&app, "pipeline", "Hedgehog in a 3-colouring of triples, staged", pipeline);
    t_opt(s, true);
    in_file(s, "Triple colouring (k=3, q=3)");
    seed(s);
    s->add_option("--scale", o.scale, "Overrides: clique_target=<s>,spencer_trials=<m>");
    with_out(s);
    with_report(s);
  }

  auto *verify = app.add_subcommand("verify", "Check certificates (exit 0 ok, 2 violation)");
  verify->require_subcommand(1);
  {
    auto *s = leaf(verify, "embedding", "Hedgehog certificate against its host colouring", verify_embedding);
    in_file(s, "Host colouring");
    s->add_option("--cert", o.cert, "Hedgehog certificate")->required();
  }
  {
    auto *s = leaf(verify, "lift", "Complement lift soundness and hedgehog-freeness", verify_lift);
    in_file(s, "Lifted colouring (k=3)");
    s->add_option("--base", o.base_path, "Base graph colouring to check the lift against");
    s->add_option("--palette", o.palette, "Palette used for the lift");
    t_opt(s, false);
  }
  {
    auto *s = leaf(verify, "scattered", "Every t-clique shows all q colours", verify_scattered);
    in_file(s, "Graph colouring");
    t_opt(s, true);
    s->add_option("-q", o.q_opt, "Colours required (default the file's q)");
  }
  {
    auto *s = leaf(verify, "rainbow", "No triangle coloured exactly by the palette", verify_rainbow);
    in_file(s, "Graph colouring");
    s->add_option("--palette", o.palette, "Three colours (default RBG)");
  }
  {
    auto *s = leaf(verify, "f-witness", "No RBG rainbow triangle, no t-clique with <= 3 colours",
                   verify_f_witness);
    in_file(s, "Graph colouring (q=4)");
    t_opt(s, true);
  }
  {
    auto *s = leaf(verify, "independent-set", "Independent set certificate", verify_independent);
    in_file(s, "Triple colouring");
    s->add_option("--cert", o.cert, "Independent set certificate")->required();
    s->add_option("--edge-colour", o.edge_colour, "Colour class forming the hypergraph (default 1)");
  }
  {
    auto *s = leaf(verify, "clique", "Clique certificate with at most --max-colours colours", verify_clique);
    in_file(s, "Graph colouring");
    s->add_option("--cert", o.cert, "Clique certificate")->required();
    s->add_option("--max-colours", o.max_colours, "Colour budget (default 2)");
  }

  auto *search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  {
    auto *s = leaf(search, "exhaustive", "Does every q-colouring of K_n^(3) hold a monochromatic H_t?",
                   search_exhaustive);
    t_opt(s, true);
    s->add_option("--q", o.q, "Colours")->required()->check(CLI::Range(1u, 16u));
    s->add_option("--n", o.n, "Vertices")->required()->check(CLI::Range(1u, 64u));
    s->add_option("--limit", o.limit, "Refuse above this many canonical colourings");
    with_out(s);
    with_report(s);
  }

  {
    auto *s = leaf(&app, "f-oracle", "Scan n for F(t)", f_oracle);
    t_opt(s, true);
    s->add_option("--cap", o.cap, "Largest n to try")->required()->check(CLI::Range(1u, 64u));
    seed(s);
    s->add_option("--exhaustive-cap", o.exhaustive_cap, "Exhaustive search up to this n (default 8)");
    s->add_option("--node-budget", o.node_budget, "Exhaustive node budget per n");
    s->add_option("--restarts", o.restarts, "Local-search restarts per n");
    s->add_option("--max-steps", o.max_steps, "Local-search steps per restart");
    s->add_flag("--no-cross-check", o.no_cross_check, "Skip the local search where exhaustive applies");
    with_out(s);
    with_report(s);
  }

  {
    auto *s = leaf(&app, "batch", "Run a manifest of commands; nonzero exit iff an entry fails", batch);
    s->add_option("--manifest", o.manifest, "Manifest file")->required();
    s->add_flag("--verbose", o.verbose, "Append each entry's output");
    with_out(s);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Context ctx{out, err, threads ? *threads : env_threads(), out_path, report_path};
    for (auto &[sub, handler] : leaves)
      if (sub->parsed())
        return handler(ctx, o);
    err << "no command given\n";
    return kUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

std::vector<BatchEntry> parse_manifest(const std::string &text) {
  std::vector<BatchEntry> entries;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    BatchEntry e;
    e.line = line_no;
    std::string tok;
    bool quoted = false, have = false;
    auto flush = [&] {
      if (have)
        e.args.push_back(tok);
      tok.clear();
      have = false;
    };
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
        have = true;
      } else if (!quoted && (ch == '#' && !have)) {
        break;
      } else if (!quoted && std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        tok += ch;
        have = true;
      }
    }
    if (quoted)
      throw Error(ErrorKind::parse_error, "unterminated quote on manifest line " + std::to_string(line_no));
    flush();
    if (e.args.empty())
      continue;
    if (e.args[0].rfind("expect=", 0) == 0) {
      const std::string v = e.args[0].substr(7);
      if (v.empty() || v.size() > 3 || v.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::parse_error, "bad expect= on manifest line " + std::to_string(line_no));
      e.expected_exit = std::stoi(v);
      e.args.erase(e.args.begin());
      if (e.args.empty())
        throw Error(ErrorKind::parse_error, "manifest line " + std::to_string(line_no) + " has no command");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<BatchRow> run_batch(const std::vector<BatchEntry> &entries, unsigned threads) {
  std::vector<BatchRow> rows(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      std::ostringstream out, err;
      const auto start = std::chrono::steady_clock::now();
      BatchRow &row = rows[i];
      row.entry = entries[i];
      row.exit_code = run(entries[i].args, out, err);
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      row.passed = row.exit_code == entries[i].expected_exit;
      row.output = out.str() + err.str();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back(work);
  }
  return rows;
}

std::string format_batch_table(const std::vector<BatchRow> &rows) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "line" << std::setw(6) << "result" << ' ' << std::setw(5) << "exit"
      << std::setw(7) << "expect" << std::setw(11) << "ms" << "command\n";
  std::size_t failures = 0;
  for (const auto &r : rows) {
    std::string cmd;
    for (const auto &a : r.entry.args)
      cmd += (cmd.empty() ? "" : " ") + a;
    out << std::left << std::setw(6) << r.entry.line << std::setw(6) << (r.passed ? "PASS" : "FAIL") << ' '
        << std::setw(5) << r.exit_code << std::setw(7) << r.entry.expected_exit << std::setw(11) << std::fixed
        << std::setprecision(1) << r.millis << cmd << '\n';
    failures += !r.passed;
  }
  out << "entries " << rows.size() << " failed " << failures << '\n';
  return out.str();
}

} // namespace hedgehog::cli
