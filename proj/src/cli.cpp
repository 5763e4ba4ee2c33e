#include "lcoalg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lcoalg/coalgebra_io.hpp"
#include "lcoalg/dialgebra.hpp"
#include "lcoalg/error.hpp"
#include "lcoalg/graph.hpp"
#include "lcoalg/lcoalgebra.hpp"
#include "lcoalg/qalgebra.hpp"
#include "lcoalg/tiling.hpp"

namespace lcoalg::cli {

namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write " + path.string());
  o << content;
}

// Options shared by every command.
struct Common {
  std::string report;
  std::string dot_dir;
  std::string q0 = "1";
  std::uint64_t seed = 7;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--report", c.report, "write the JSON report to this path");
  sub->add_option("--dot-dir", c.dot_dir, "directory for DOT files");
  sub->add_option("--q0", c.q0, "rational evaluation point for q");
  sub->add_option("--seed", c.seed, "random seed");
}

class Envelope {
 public:
  explicit Envelope(std::string command) : command_(std::move(command)) {}

  Json& config() { return config_; }
  bool verdict() const { return verdict_; }

  void add(const CheckReport& r) {
    reports_.push_back(to_json(r));
    verdict_ = verdict_ && r.verdict;
  }
  void add(const TilingReport& r) {
    reports_.push_back(to_json(r));
    verdict_ = verdict_ && r.verdict;
  }

  std::string dump() const {
    Json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = kToolVersion;
    j["command"] = command_;
    j["config"] = config_;
    j["reports"] = reports_;
    j["verdict"] = verdict_;
    return j.dump(2) + "\n";
  }

 private:
  std::string command_;
  Json config_ = Json::object();
  Json reports_ = Json::array();
  bool verdict_ = true;
};

// Check commands print the envelope unless it goes to a file.
int finish_checks(const Envelope& env, const Common& c, std::ostream& out) {
  if (c.report.empty()) {
    out << env.dump();
  } else {
    write_file(c.report, env.dump());
    out << "verdict: " << (env.verdict() ? "pass" : "fail") << "\n";
  }
  return env.verdict() ? kExitPass : kExitFail;
}

// Object commands print the object; the envelope only goes to --report.
int finish_object(const Envelope& env, const Common& c) {
  if (!c.report.empty()) write_file(c.report, env.dump());
  return env.verdict() ? kExitPass : kExitFail;
}

Rational q0_of(const Common& c) { return parse_rational(c.q0); }

std::vector<std::size_t> split_sizes(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(part, &used));
      if (used != part.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad " + what + " parameters '" + text + "'");
    }
  }
  if (out.size() != expected) throw InputError("bad " + what + " parameters '" + text + "'");
  return out;
}

// f, flower, fn:N, markov:P:N, attractor:M:N.
LCoalgebra builtin(const std::string& name) {
  if (name == "f") return f_coalgebra();
  if (name == "flower") return flower({"1", "a"}, "1");
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "fn") {
    auto n = split_sizes(rest, 1, "fn")[0];
    FnFamily f = build_fn(n);
    if (n < 2) throw InputError("fn needs n >= 2");
    return LCoalgebra{"F_" + std::to_string(n), f.basis, f.coproducts[0], f.coproducts[1], f.counits[0], f.counits[1]};
  }
  if (head == "markov") {
    auto pn = split_sizes(rest, 2, "markov");
    LCoalgebra c = markov_from_graph(de_bruijn(pn[0], pn[1]),
                                     "markov(" + std::to_string(pn[0]) + "," + std::to_string(pn[1]) + ")");
    return with_constant_counits(std::move(c), Scalar(Rational(1, static_cast<long>(pn[0]))));
  }
  if (head == "attractor") {
    auto mn = split_sizes(rest, 2, "attractor");
    return attractor_codialgebra(mn[0], mn[1]).first;
  }
  throw InputError("unknown builtin '" + name + "'");
}

struct Source {
  std::string coalgebra;
  std::string builtin;
};

void add_source(CLI::App* sub, Source& s) {
  auto* file = sub->add_option("--coalgebra", s.coalgebra, "coalgebra text file");
  auto* b = sub->add_option("--builtin", s.builtin, "f | flower | fn:N | markov:P:N | attractor:M:N");
  file->excludes(b);
}

CoalgebraFile load(const Source& s, Json& config) {
  if (!s.coalgebra.empty()) {
    config["coalgebra"] = s.coalgebra;
    return parse_coalgebra_file(read_file(s.coalgebra));
  }
  if (!s.builtin.empty()) {
    config["builtin"] = s.builtin;
    return CoalgebraFile{builtin(s.builtin), std::nullopt};
  }
  throw InputError("one of --coalgebra or --builtin is required");
}

struct GraphSource {
  std::size_t p = 0;
  std::size_t n = 0;
  std::string graph;
};

void add_graph_source(CLI::App* sub, GraphSource& g) {
  sub->add_option("--p", g.p, "alphabet size");
  sub->add_option("--n", g.n, "word length");
  sub->add_option("--graph", g.graph, "graph text file");
}

DirectedGraph load_graph(const GraphSource& g, Json& config) {
  if (!g.graph.empty()) {
    config["graph"] = g.graph;
    return parse_graph(read_file(g.graph));
  }
  if (g.p == 0 || g.n == 0) throw InputError("give --graph or both --p and --n");
  config["p"] = g.p;
  config["n"] = g.n;
  return de_bruijn(g.p, g.n);
}

CheckReport graph_summary(const DirectedGraph& g, std::string subject) {
  CheckReport r = CheckReport::pass("graph", std::move(subject));
  r.note("vertices", std::to_string(g.vertex_count()));
  r.note("arrows", std::to_string(g.arrow_count()));
  return r;
}

// --- debruijn ---------------------------------------------------------------

struct DebruijnOpts {
  Common common;
  std::size_t p = 2;
  std::size_t n = 1;
  bool dot = false;
};

int cmd_debruijn(const DebruijnOpts& o, std::ostream& out) {
  Envelope env("debruijn");
  env.config()["p"] = o.p;
  env.config()["n"] = o.n;
  DirectedGraph g = de_bruijn(o.p, o.n);
  std::string name = "debruijn_" + std::to_string(o.p) + "_" + std::to_string(o.n);
  out << (o.dot ? to_dot(g, name) : render_graph(g));
  if (!o.common.dot_dir.empty()) write_file(fs::path(o.common.dot_dir) / (name + ".dot"), to_dot(g, name));
  env.add(graph_summary(g, name));
  return finish_object(env, o.common);
}

// --- line-extend ------------------------------------------------------------

struct LineOpts {
  Common common;
  GraphSource source;
  bool dot = false;
};

int cmd_line_extend(const LineOpts& o, std::ostream& out) {
  Envelope env("line-extend");
  DirectedGraph g = load_graph(o.source, env.config());
  DirectedGraph l = line_extension(g);
  out << (o.dot ? to_dot(l, "line_extension") : render_graph(l));
  if (!o.common.dot_dir.empty()) write_file(fs::path(o.common.dot_dir) / "line_extension.dot", to_dot(l, "line_extension"));
  env.add(graph_summary(l, "line_extension"));
  if (o.source.graph.empty()) {
    // The line extension of (p,n) should be the (p,n+1) graph.
    DirectedGraph next = de_bruijn(o.source.p, o.source.n + 1);
    std::string subject = "L(debruijn(" + std::to_string(o.source.p) + "," + std::to_string(o.source.n) + "))";
    if (l.vertex_count() <= kIsomorphismMaxVertices) {
      CheckReport iso = is_isomorphic(l, next)
                            ? CheckReport::pass("isomorphic-to-debruijn", subject)
                            : CheckReport::fail("isomorphic-to-debruijn", subject,
                                                {"graph", render_graph(l), render_graph(next)});
      env.add(iso);
    }
  }
  return finish_object(env, o.common);
}

// --- markov -----------------------------------------------------------------

struct MarkovOpts {
  Common common;
  GraphSource source;
};

int cmd_markov(const MarkovOpts& o, std::ostream& out) {
  Envelope env("markov");
  env.config()["q0"] = o.common.q0;
  DirectedGraph g = load_graph(o.source, env.config());
  LCoalgebra c = markov_from_graph(g);
  if (o.source.graph.empty()) c = with_constant_counits(std::move(c), Scalar(Rational(1, static_cast<long>(o.source.p))));
  out << render_coalgebra(c);
  if (!o.common.dot_dir.empty()) write_file(fs::path(o.common.dot_dir) / "support.dot", to_dot(geometric_support(c), "support"));
  // Stochasticity is a property of the weights, not an axiom.
  CheckReport ent = check_entanglement(c);
  ent.note("stochastic", is_stochastic(g, q0_of(o.common)) ? "true" : "false");
  // Codialgebra and L-cocommutativity hold only for some graphs; recorded, not asserted.
  ent.note("codialgebra", check_codialgebra(c).verdict ? "true" : "false");
  ent.note("l-cocommutative", check_l_cocommutative(c).verdict ? "true" : "false");
  env.add(ent);
  if (c.right_counit) env.add(check_counit(c, Side::Right));
  if (c.left_counit) env.add(check_counit(c, Side::Left));
  return finish_object(env, o.common);
}

// --- verify -----------------------------------------------------------------

struct VerifyOpts {
  Common common;
  Source source;
  std::size_t family = 0;
  std::vector<std::string> checks;
  std::string side = "both";
  std::size_t degree = 3;
  std::string grouplike;
  std::string with;
  std::string expect;
};

const std::vector<std::string> kVerifyChecks{"coassoc", "entangle", "chirality", "codialgebra", "counit", "cocomm",
                                             "coderivation", "kernel", "lift", "grouplike", "tensor"};

std::vector<Side> sides_of(const std::string& s) {
  if (s == "right") return {Side::Right};
  if (s == "left") return {Side::Left};
  return {Side::Right, Side::Left};
}

int verify_family(const VerifyOpts& o, Envelope& env, std::ostream& out) {
  env.config()["family"] = o.family;
  FnFamily f = build_fn(o.family);
  env.add(verify_family_entanglement(f));
  for (std::size_t a = 0; a < f.n; ++a) env.add(counit_alpha(f, a).second);
  env.add(check_shift_forms(f));
  if (f.n >= 2) {
    BasisMap d = canonical_coderivation(f.n);
    LCoalgebra c{"F_" + std::to_string(f.n), f.basis, f.coproducts[0], f.coproducts[1], f.counits[0], f.counits[1]};
    env.add(check_coderivation(c, rebase(d, f.basis), Side::Right));
  }
  return finish_checks(env, o.common, out);
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  Envelope env("verify");
  if (o.family) return verify_family(o, env, out);
  CoalgebraFile file = load(o.source, env.config());
  const LCoalgebra& c = file.coalgebra;

  std::vector<std::string> checks = o.checks;
  if (checks.empty()) {
    checks = {"coassoc", "entangle", "chirality"};
    if (c.right_counit || c.left_counit) checks.push_back("counit");
    if (file.coderivation) checks.push_back("coderivation");
  }
  Json list = Json::array();
  for (const auto& ch : checks) list.push_back(ch);
  env.config()["checks"] = list;

  for (const auto& ch : checks) {
    if (ch == "coassoc") {
      env.add(check_coassoc(c, Side::Right));
      if (!c.degenerate()) env.add(check_coassoc(c, Side::Left));
    } else if (ch == "entangle") {
      env.add(check_entanglement(c));
    } else if (ch == "chirality") {
      ChiralityVerdict v = classify_chirality(c);
      if (!o.expect.empty()) {
        env.config()["expect"] = o.expect;
        std::string got(to_string(v.verdict));
        if (got != o.expect) {
          v.report.verdict = false;
          v.report.counterexample = Counterexample{"class", got, o.expect};
        }
      }
      env.add(v.report);
    } else if (ch == "codialgebra") {
      env.add(check_codialgebra(c));
    } else if (ch == "counit") {
      if (c.right_counit) env.add(check_counit(c, Side::Right));
      if (c.left_counit) env.add(check_counit(c, Side::Left));
      if (!c.right_counit && !c.left_counit) throw Error(ErrorKind::MissingCounit, c.name + " has no counit");
    } else if (ch == "cocomm") {
      env.add(check_l_cocommutative(c));
    } else if (ch == "coderivation") {
      if (!file.coderivation) throw InputError("the coalgebra carries no coderivation");
      env.config()["side"] = o.side;
      for (Side s : sides_of(o.side)) env.add(check_coderivation(c, *file.coderivation, s));
    } else if (ch == "kernel") {
      auto kernel = cocommutator_kernel(c);
      CheckReport r = CheckReport::pass("cocommutator-kernel", c.name);
      r.note("dimension", std::to_string(kernel.size()));
      for (std::size_t i = 0; i < kernel.size(); ++i) r.note("k" + std::to_string(i + 1), kernel[i].to_string());
      env.add(r);
    } else if (ch == "lift") {
      env.config()["degree"] = o.degree;
      env.add(lift_degree(c, o.degree).report);
    } else if (ch == "grouplike") {
      if (o.grouplike.empty()) throw InputError("--grouplike needs a basis label");
      env.config()["grouplike"] = o.grouplike;
      env.add(from_grouplike(c, o.grouplike).second);
    } else if (ch == "tensor") {
      if (o.with.empty()) throw InputError("--with needs a second coalgebra file");
      env.config()["with"] = o.with;
      LCoalgebra second = parse_coalgebra(read_file(o.with));
      env.add(tensor_codialgebra(c, second).second);
    }
  }
  return finish_checks(env, o.common, out);
}

// --- tile -------------------------------------------------------------------

struct TileOpts {
  Common common;
  std::size_t n = 2;
};

int cmd_tile(const TileOpts& o, std::ostream& out) {
  Envelope env("tile");
  env.config()["n"] = o.n;
  TilingReport r = verify_tiling(o.n);
  if (!o.common.dot_dir.empty()) {
    fs::path dir(o.common.dot_dir);
    for (std::size_t a = 0; a < r.supports.size(); ++a) {
      std::string name = "support_" + std::to_string(a);
      write_file(dir / (name + ".dot"), to_dot(r.supports[a], name));
    }
    write_file(dir / "glued.dot", to_dot(r.glued, "glued"));
  }
  env.add(r);
  return finish_checks(env, o.common, out);
}

// --- dialg ------------------------------------------------------------------

struct DialgOpts {
  Common common;
  Source source;
  std::size_t n = 0;
  std::size_t m = 2;
  std::size_t samples = 100;
  std::vector<std::string> checks;
  bool action = false;
};

ScalarMatrix random_z(std::size_t n, std::mt19937_64& rng) {
  ScalarMatrix z(n, std::vector<Scalar>(n));
  for (auto& row : z) {
    for (auto& x : row) x = Scalar(static_cast<long>(rng() % 5) - 2);
  }
  return z;
}

int cmd_dialg(const DialgOpts& o, std::ostream& out) {
  Envelope env("dialg");
  SampleConfig cfg{o.m, o.samples, o.common.seed, q0_of(o.common)};
  env.config()["m"] = o.m;
  env.config()["samples"] = o.samples;
  env.config()["seed"] = o.common.seed;
  env.config()["q0"] = o.common.q0;
  if (o.m == 0) throw InputError("--m must be positive");

  std::vector<std::string> checks = o.checks;
  std::vector<BasisMap> family;
  std::optional<LCoalgebra> coalgebra;
  std::string subject;
  if (o.n) {
    env.config()["n"] = o.n;
    FnFamily f = build_fn(o.n);
    family = f.coproducts;
    subject = "F_" + std::to_string(o.n);
    if (checks.empty()) checks = {"hypercube", "sum"};
  } else {
    coalgebra = load(o.source, env.config()).coalgebra;
    family = {coalgebra->right, coalgebra->left};
    subject = coalgebra->name;
    if (checks.empty()) checks = {"dialgebra", "leibniz"};
  }
  if (o.action) {
    // Z drawn from the seed ahead of the samples.
    std::mt19937_64 rng(o.common.seed);
    auto [moved, report] = matrix_action(family, random_z(family.size(), rng));
    env.config()["action"] = true;
    env.add(report);
    family = std::move(moved);
    subject += "^Z";
  }
  Json list = Json::array();
  for (const auto& ch : checks) list.push_back(ch);
  env.config()["checks"] = list;

  for (const auto& ch : checks) {
    if (ch == "dialgebra" || ch == "leibniz") {
      if (!coalgebra) throw InputError(ch + " needs --coalgebra or --builtin");
      env.add(ch == "dialgebra" ? check_dialgebra_axioms(*coalgebra, cfg) : check_leibniz(*coalgebra, cfg));
    } else if (ch == "hypercube") {
      env.add(check_hypercube(family, cfg, subject));
    } else if (ch == "sum") {
      env.add(check_sum_associative(family, cfg, subject));
    }
  }
  return finish_checks(env, o.common, out);
}

// --- qcheck -----------------------------------------------------------------

struct QcheckOpts {
  Common common;
  std::vector<std::string> which;
  std::string star = "componentwise";
};

int cmd_qcheck(const QcheckOpts& o, std::ostream& out) {
  Envelope env("qcheck");
  std::vector<std::string> which = o.which.empty() ? std::vector<std::string>{"eta", "slq2", "hopf-f", "xpg", "suq2"} : o.which;
  Json list = Json::array();
  for (const auto& w : which) list.push_back(w);
  env.config()["which"] = list;
  env.config()["star"] = o.star;
  for (const auto& w : which) {
    if (w == "eta") env.add(verify_eta_relations());
    if (w == "slq2") env.add(verify_slq2_antipode());
    if (w == "hopf-f") env.add(verify_hopf_f());
    if (w == "xpg") env.add(verify_chiral_xpg());
    if (w == "suq2") {
      env.add(verify_suq2_left(o.star == "leg-reversing" ? StarConvention::LegReversing : StarConvention::Componentwise));
    }
  }
  return finish_checks(env, o.common, out);
}

// --- reconstruct ------------------------------------------------------------

struct ReconstructOpts {
  Common common;
  std::vector<std::string> which;
  std::size_t n = 2;
};

int cmd_reconstruct(const ReconstructOpts& o, std::ostream& out) {
  Envelope env("reconstruct");
  std::vector<std::string> which = o.which.empty() ? std::vector<std::string>{"bracket", "delta0"} : o.which;
  Json list = Json::array();
  for (const auto& w : which) list.push_back(w);
  env.config()["which"] = list;
  env.config()["n"] = o.n;
  for (const auto& w : which) {
    if (w == "bracket") env.add(bracket_reconstruction_n2());
    if (w == "delta0") env.add(reconstruct_delta0(o.n));
    if (w == "shift-forms") env.add(check_shift_forms(build_fn(o.n)));
  }
  return finish_checks(env, o.common, out);
}

}  // namespace

std::vector<std::string> command_names() {
  return {"debruijn", "line-extend", "markov", "verify", "tile", "dialg", "qcheck", "reconstruct"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifier for L-coalgebras, co-dialgebras and their De Bruijn graph models", "lcoalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  DebruijnOpts debruijn;
  auto* s_db = app.add_subcommand("debruijn", "(p,n)-De Bruijn graph");
  add_common(s_db, debruijn.common);
  s_db->add_option("--p", debruijn.p)->required();
  s_db->add_option("--n", debruijn.n)->required();
  s_db->add_flag("--dot", debruijn.dot, "print DOT instead of graph text");

  LineOpts line;
  auto* s_line = app.add_subcommand("line-extend", "line extension of a graph");
  add_common(s_line, line.common);
  add_graph_source(s_line, line.source);
  s_line->add_flag("--dot", line.dot);

  MarkovOpts markov;
  auto* s_markov = app.add_subcommand("markov", "Markov L-coalgebra of a graph and its checks");
  add_common(s_markov, markov.common);
  add_graph_source(s_markov, markov.source);

  VerifyOpts verify;
  auto* s_verify = app.add_subcommand("verify", "axiom checks on a coalgebra or the shift family");
  add_common(s_verify, verify.common);
  add_source(s_verify, verify.source);
  s_verify->add_option("--family", verify.family, "check the shift family F_n instead");
  s_verify->add_option("--check", verify.checks)->delimiter(',')->check(CLI::IsMember(kVerifyChecks));
  s_verify->add_option("--side", verify.side)->check(CLI::IsMember({"right", "left", "both"}));
  s_verify->add_option("--degree", verify.degree, "degree for the lift check");
  s_verify->add_option("--grouplike", verify.grouplike, "group-like basis label");
  s_verify->add_option("--with", verify.with, "second coalgebra file for the tensor check");
  s_verify->add_option("--expect", verify.expect, "expected chirality class")
      ->check(CLI::IsMember({"achiral", "chiral", "not-entangled"}));

  TileOpts tile;
  auto* s_tile = app.add_subcommand("tile", "tiling of the (n^2,1)-De Bruijn graph");
  add_common(s_tile, tile.common);
  s_tile->add_option("--n", tile.n)->required();

  DialgOpts dialg;
  auto* s_dialg = app.add_subcommand("dialg", "convolution dialgebra, Leibniz and hypercube checks");
  add_common(s_dialg, dialg.common);
  add_source(s_dialg, dialg.source);
  s_dialg->add_option("--n", dialg.n, "use the shift family F_n");
  s_dialg->add_option("--m", dialg.m, "matrix size");
  s_dialg->add_option("--samples", dialg.samples);
  s_dialg->add_option("--check", dialg.checks)
      ->delimiter(',')
      ->check(CLI::IsMember({"dialgebra", "leibniz", "hypercube", "sum"}));
  s_dialg->add_flag("--action", dialg.action, "transform the family by a seeded random matrix first");

  QcheckOpts qcheck;
  auto* s_q = app.add_subcommand("qcheck", "quantum algebra identities");
  add_common(s_q, qcheck.common);
  s_q->add_option("--which", qcheck.which)
      ->delimiter(',')
      ->check(CLI::IsMember({"eta", "slq2", "hopf-f", "xpg", "suq2"}));
  s_q->add_option("--star", qcheck.star)->check(CLI::IsMember({"componentwise", "leg-reversing"}));

  ReconstructOpts recon;
  auto* s_r = app.add_subcommand("reconstruct", "rebuild coproducts from Markov data");
  add_common(s_r, recon.common);
  s_r->add_option("--which", recon.which)->delimiter(',')->check(CLI::IsMember({"bracket", "delta0", "shift-forms"}));
  s_r->add_option("--n", recon.n);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*s_db) return cmd_debruijn(debruijn, out);
    if (*s_line) return cmd_line_extend(line, out);
    if (*s_markov) return cmd_markov(markov, out);
    if (*s_verify) return cmd_verify(verify, out);
    if (*s_tile) return cmd_tile(tile, out);
    if (*s_dialg) return cmd_dialg(dialg, out);
    if (*s_q) return cmd_qcheck(qcheck, out);
    if (*s_r) return cmd_reconstruct(recon, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace lcoalg::cli
