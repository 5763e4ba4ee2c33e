// Acceptance criteria 1-11: one PASS/FAIL line each, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lcoalg/cli.hpp"
#include "lcoalg/coalgebra_io.hpp"
#include "lcoalg/dialgebra.hpp"
#include "lcoalg/error.hpp"
#include "lcoalg/qalgebra.hpp"
#include "lcoalg/tiling.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

using namespace lcoalg;
namespace fs = std::filesystem;

namespace {

// Collects failed expectations for one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

LCoalgebra markov_db(std::size_t p) {
  return with_constant_counits(markov_from_graph(de_bruijn(p, 1)), Scalar(Rational(1, static_cast<long>(p))));
}

std::vector<std::vector<int>> adjacency(const DirectedGraph& g) {
  std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (auto [s, t] : g.arrow_pairs()) m[s][t] = 1;
  return m;
}

// Term set of a rendered rank-2 list like "a(x)a + b(x)c".
std::set<std::pair<std::string, std::string>> term_set(const std::string& text) {
  std::set<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term.erase(0, term.find_first_not_of(' '));
    term.erase(term.find_last_not_of(' ') + 1);
    auto x = term.find("(x)");
    out.insert({term.substr(0, x), term.substr(x + 3)});
  }
  return out;
}

// ---------------------------------------------------------------------------

void tiling(Probe& p) {
  auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 8; ++n) {
    TilingReport r = verify_tiling(n);
    std::string tag = "n=" + std::to_string(n);
    p.expect(r.verdict && r.pairwise_disjoint && r.union_is_complete, tag + " verdict");
    std::size_t total = 0;
    for (std::size_t a = 0; a < n; ++a) {
      p.expect(r.arrow_counts.at(a) == n * n * n, tag + " count");
      total += r.arrow_counts[a];
      std::set<std::pair<std::string, std::string>> want;
      for (auto [s, t] : oracle::tiling_support(n, a)) want.insert({std::to_string(s), std::to_string(t)});
      p.expect(r.supports[a].labelled_arrow_pairs() == want, tag + " support " + std::to_string(a));
    }
    p.expect(total == n * n * n * n, tag + " total");
    p.expect(r.glued.labelled_arrow_pairs() == oracle::de_bruijn_arrows(n * n, 1), tag + " glued");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  p.expect(secs < 10.0, "runtime " + std::to_string(secs) + "s");
}

void f_reconstruction(Probe& p) {
  FnFamily f2 = build_fn(2);
  BasisPtr abcd = make_basis({"a", "b", "c", "d"});
  BasisMap right = rebase(f2.coproducts[0], abcd), left = rebase(f2.coproducts[1], abcd);
  const std::map<std::string, std::string> delta{{"a", "a(x)a + b(x)c"},
                                                 {"b", "a(x)b + b(x)d"},
                                                 {"c", "d(x)c + c(x)a"},
                                                 {"d", "d(x)d + c(x)b"}};
  const std::map<std::string, std::string> delta_tilde{{"a", "b(x)a + a(x)c"},
                                                       {"b", "b(x)b + a(x)d"},
                                                       {"c", "c(x)c + d(x)a"},
                                                       {"d", "c(x)d + d(x)b"}};
  std::size_t terms = 0;
  for (const auto& [side, table, map] : {std::tuple{"Delta", &delta, &right}, std::tuple{"Delta~", &delta_tilde, &left}}) {
    for (const auto& [v, text] : *table) {
      bool ones = true;
      auto got = oracle::unit_pairs((*map)(abcd->at(v)), &ones);
      p.expect(ones && got == term_set(text), std::string(side) + " " + v);
      terms += got.size();
    }
  }
  p.expect(terms == 16, "sixteen terms");
  p.expect(slurp(fs::path(LCOALG_DATA_DIR) / "f.coalg") == render_coalgebra(f_coalgebra()), "golden file bytes");
}

void entanglement(Probe& p) {
  for (std::size_t n = 2; n <= 6; ++n) {
    FnFamily f = build_fn(n);
    CheckReport r = verify_family_entanglement(f);
    p.expect(r.verdict && r.parts.size() == n * n, "family n=" + std::to_string(n));
    if (n <= 4) {
      for (const auto& a : f.coproducts)
        for (const auto& b : f.coproducts)
          p.expect(oracle::pair_relation(oracle::dense(a), oracle::dense(b)), "oracle n=" + std::to_string(n));
    }
  }
  p.expect(classify_chirality(f_coalgebra()).verdict == Chirality::Achiral, "F achiral");
  p.expect(classify_chirality(flower({"1", "a", "b", "c", "d"}, "1")).verdict == Chirality::Chiral, "flower chiral");
  CheckReport cd = check_codialgebra(f_coalgebra());
  p.expect(!cd.verdict && cd.counterexample && cd.counterexample->lhs != cd.counterexample->rhs, "F not codialgebra");
}

void markov_layer(Probe& p) {
  for (std::size_t n = 2; n <= 6; ++n) {
    LCoalgebra c = markov_db(n);
    std::string tag = " n=" + std::to_string(n);
    p.expect(check_entanglement(c).verdict, "entanglement" + tag);
    p.expect(oracle::pair_relation(oracle::dense(c.left), oracle::dense(c.right)), "oracle entanglement" + tag);
    p.expect(check_codialgebra(c).verdict, "codialgebra" + tag);
    p.expect(check_l_cocommutative(c).verdict, "l-cocommutative" + tag);
    p.expect(check_counit(c, Side::Right).verdict && check_counit(c, Side::Left).verdict, "counits" + tag);
    p.expect((*c.right_counit)(BasisId{0}) == Scalar(Rational(1, static_cast<long>(n))), "counit value" + tag);
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    DirectedGraph l = line_extension(de_bruijn(n, 1));
    FnFamily f = build_fn(n);
    DirectedGraph support = geometric_support(LCoalgebra::coassociative("F", f.coproducts[0]));
    std::string tag = " n=" + std::to_string(n);
    p.expect(is_isomorphic(l, support), "L ~ support" + tag);
    p.expect(is_isomorphic(l, de_bruijn(n, 2)), "L ~ debruijn" + tag);
    if (n == 2) {
      p.expect(oracle::isomorphic_brute(adjacency(l), adjacency(support)), "brute L ~ support");
      p.expect(oracle::isomorphic_brute(adjacency(l), adjacency(de_bruijn(2, 2))), "brute L ~ debruijn");
    }
  }
}

void coderivation(Probe& p) {
  for (std::size_t n = 2; n <= 5; ++n) {
    FnFamily f = build_fn(n);
    BasisMap d = rebase(canonical_coderivation(n), f.basis);
    LCoalgebra c{"F", f.basis, f.coproducts[0], f.coproducts[n > 1 ? 1 : 0], std::nullopt, std::nullopt};
    p.expect(check_coderivation(c, d, Side::Right).verdict, "Delta_[0] n=" + std::to_string(n));
    // Oracle: D(U_ij) = sum_k U_kj - U_ik, and Delta D = (id (x) D) Delta + (D (x) id) Delta densely.
    std::size_t N = n * n;
    std::vector<std::vector<Rational>> dm(N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          dm[i * n + j][k * n + j] += 1;
          dm[i * n + j][i * n + k] -= 1;
        }
    for (BasisId id : f.basis->ids())
      for (std::size_t w = 0; w < N; ++w)
        p.expect(d(id).coefficient({BasisId{static_cast<std::uint32_t>(w)}}) == Scalar(dm[id.index][w]),
                 "D formula n=" + std::to_string(n));
    oracle::Dense2 delta = oracle::dense(f.coproducts[0]);
    for (std::size_t v = 0; v < N; ++v) {
      std::vector<Rational> lhs(N * N, Rational(0)), rhs(N * N, Rational(0));
      for (std::size_t u = 0; u < N; ++u) {
        if (dm[v][u] == 0) continue;
        for (std::size_t x = 0; x < N; ++x)
          for (std::size_t y = 0; y < N; ++y) lhs[x * N + y] += dm[v][u] * delta.at(u, x, y);
      }
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
          const Rational& c0 = delta.at(v, x, y);
          if (c0 == 0) continue;
          for (std::size_t z = 0; z < N; ++z) {
            rhs[x * N + z] += c0 * dm[y][z];
            rhs[z * N + y] += c0 * dm[x][z];
          }
        }
      p.expect(lhs == rhs, "oracle coderivation n=" + std::to_string(n));
    }
  }
  LCoalgebra f = f_coalgebra();
  BasisMap d = rebase(canonical_coderivation(2), f.basis);
  p.expect(check_coderivation(f, d, Side::Left).verdict, "Delta_[1] n=2");
  auto b = [&](const char* l) { return TensorElem::vector(f.basis, f.basis->at(l)); };
  p.expect(d(f.basis->at("a")) == b("c") - b("b"), "D(a) = c - b");
  p.expect(d(f.basis->at("b")) == b("d") - b("a"), "D(b) = d - a");
  p.expect(d(f.basis->at("d")) == b("b") - b("c"), "D(d) = -D(a)");
  p.expect(d(f.basis->at("c")) == b("a") - b("d"), "D(c) = -D(b)");
}

void matrix_action_splitting(Probe& p) {
  for (std::size_t n = 2; n <= 3; ++n) {
    FnFamily f = build_fn(n);
    std::vector<oracle::Dense2> ds;
    for (const auto& d : f.coproducts) ds.push_back(oracle::dense(d));
    std::mt19937_64 rng(2024 + n);
    std::vector<ScalarMatrix> zs;
    ScalarMatrix id(n, std::vector<Scalar>(n)), zero(n, std::vector<Scalar>(n)), rank1(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        id[i][j] = i == j ? 1 : 0;
        rank1[i][j] = static_cast<long>(i + 1) * (j == 0 ? 1 : (j == 1 ? -1 : 2));
      }
    zs.push_back(id);
    zs.push_back(zero);
    zs.push_back(rank1);
    while (zs.size() < 50) {
      ScalarMatrix z(n, std::vector<Scalar>(n));
      for (auto& row : z)
        for (auto& x : row) x = Scalar(static_cast<long>(rng() % 7) - 3);
      zs.push_back(z);
    }
    std::size_t idx = 0;
    for (const auto& z : zs) {
      std::string tag = "n=" + std::to_string(n) + " Z#" + std::to_string(idx++);
      auto [moved, report] = matrix_action(f.coproducts, z);
      p.expect(report.verdict, tag);
      std::vector<oracle::Dense2> got;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row;
        for (const auto& x : z[i]) row.push_back(*x.as_rational());
        got.push_back(oracle::dense(moved[i]));
        p.expect(got.back() == oracle::combine(ds, row), tag + " combination");
      }
      for (const auto& a : got)
        for (const auto& b : got) p.expect(oracle::pair_relation(a, b), tag + " oracle relations");
    }
    SampleConfig cfg;
    p.expect(check_sum_associative(f.coproducts, cfg, "F_n").verdict, "sum associative n=" + std::to_string(n));
    auto moved = matrix_action(f.coproducts, zs.back()).first;
    p.expect(check_sum_associative(moved, cfg, "F_n^Z").verdict, "sum associative after Z n=" + std::to_string(n));
  }
}

void dialgebras(Probe& p) {
  SampleConfig cfg;
  for (std::size_t n = 2; n <= 3; ++n) {
    LCoalgebra c = markov_db(n);
    std::string tag = " (" + std::to_string(n) + ",1)";
    p.expect(check_dialgebra_axioms(c, cfg).verdict, "dialgebra" + tag);
    p.expect(check_leibniz(c, cfg).verdict, "leibniz" + tag);
    // Independent sampling with dense arithmetic.
    oracle::Dense2 r = oracle::dense(c.right), l = oracle::dense(c.left);
    std::minstd_rand rng(99 + n);
    auto L = [&](const oracle::Map& x, const oracle::Map& y) { return oracle::convolve(x, y, r, 2); };
    auto R = [&](const oracle::Map& x, const oracle::Map& y) { return oracle::convolve(x, y, l, 2); };
    auto br = [&](const oracle::Map& x, const oracle::Map& y) { return oracle::sub(L(x, y), R(y, x)); };
    bool ok = true;
    for (int s = 0; s < 100; ++s) {
      auto x = oracle::random_map(n, 2, rng), y = oracle::random_map(n, 2, rng), z = oracle::random_map(n, 2, rng);
      ok = ok && L(L(x, y), z) == L(x, L(y, z)) && R(R(x, y), z) == R(x, R(y, z)) && L(x, L(y, z)) == L(x, R(y, z)) &&
           R(L(x, y), z) == R(R(x, y), z) && L(R(x, y), z) == R(x, L(y, z)) &&
           br(br(x, y), z) == oracle::add(br(br(x, z), y), br(x, br(y, z)));
    }
    p.expect(ok, "oracle laws" + tag);
  }
  cfg.samples = 50;
  FnFamily f3 = build_fn(3);
  CheckReport h = check_hypercube(f3.coproducts, cfg, "F_3");
  bool nine = false;
  for (const auto& [k, v] : h.notes) nine = nine || (k == "equations" && v == "9");
  p.expect(h.verdict && nine, "cubical trialgebra, 9 equations");
  std::vector<oracle::Dense2> ds;
  for (const auto& d : f3.coproducts) ds.push_back(oracle::dense(d));
  std::minstd_rand rng(7);
  bool ok = true;
  for (int s = 0; s < 50; ++s) {
    auto x = oracle::random_map(9, 2, rng), y = oracle::random_map(9, 2, rng), z = oracle::random_map(9, 2, rng);
    for (const auto& di : ds)
      for (const auto& dj : ds)
        ok = ok && oracle::convolve(oracle::convolve(x, y, di, 2), z, dj, 2) ==
                       oracle::convolve(x, oracle::convolve(y, z, dj, 2), di, 2);
  }
  p.expect(ok, "oracle trialgebra");
}

void quantum(Probe& p) {
  CheckReport eta = verify_eta_relations();
  p.expect(eta.verdict && eta.parts.size() == 8, "eta relations");
  RewriteSystem e = eta_system();
  for (const char* w : {"YX", "YYX", "YXYX", "XYYXX"}) {
    auto [exp, counts] = oracle::eta_normal(w);
    std::string sorted = std::string(counts.first, 'X') + std::string(counts.second, 'Y');
    p.expect(e.normal_form(NCPoly::monomial(e.alphabet().word(w))) ==
                 NCPoly::monomial(e.alphabet().word(sorted), Scalar::q(exp)),
             std::string("eta oracle ") + w);
  }
  CheckReport sl = verify_slq2_antipode();
  p.expect(sl.verdict && sl.find("m(id(x)S~)") && sl.find("m(S~(x)id)"), "Sl_q(2) antipode");
  RewriteSystem r = slq2_system();
  auto w = [&](const char* s) { return NCPoly::monomial(r.alphabet().word(s)); };
  p.expect(r.normal_form(w("ba") - Scalar::q(1) * w("ab")).is_zero(), "ba - q ab -> 0");
  p.expect(r.normal_form(w("ad") - Scalar::q(-1) * w("bc")) == NCPoly::constant(1), "ad - q^-1 bc -> 1");
  p.expect(r.normal_form(w("da") - Scalar::q(1) * w("bc")) == NCPoly::constant(1), "da - q bc -> 1");
  CheckReport hf = verify_hopf_f();
  std::size_t antipode_parts = 0;
  for (const auto& part : hf.parts) antipode_parts += part.check.rfind("m(", 0) == 0;
  p.expect(hf.verdict && antipode_parts == 4, "Hopf F antipodes");
  CheckReport x = verify_chiral_xpg();
  p.expect(x.verdict && x.find("coassoc-right") && x.find("coassoc-right")->verdict, "xpg coassoc");
  p.expect(x.find("entanglement") && x.find("entanglement")->verdict, "xpg entanglement");
  p.expect(x.find("chirality") && x.find("chirality")->verdict, "xpg chiral");
  p.expect(x.find("Delta(xg) = eta Delta(gx)") && x.find("Delta(xg) = eta Delta(gx)")->verdict, "xpg Delta(xg)");
  CheckReport su = verify_suq2_left();
  p.expect(su.verdict && su.find("coassoc-left") && su.find("entanglement") && su.find("swapped-entanglement"),
           "SU_q(2) left part");
}

void reconstruction(Probe& p) {
  CheckReport b = bracket_reconstruction_n2();
  p.expect(b.verdict && b.parts.size() >= 4, "bracket reconstruction");
  for (const char* name : {"<D(X), D~(X)> = Delta(a)", "per(D(X), D~(Y)) = Delta(b)", "per(D(Y), D~(X)) = Delta(c)",
                           "<D(Y), D~(Y)> = Delta(d)"})
    p.expect(b.find(name) && b.find(name)->verdict, name);
  for (std::size_t n = 2; n <= 6; ++n) {
    CheckReport r = reconstruct_delta0(n);
    p.expect(r.verdict && r.parts.size() == n * n, "delta0 n=" + std::to_string(n));
  }
}

void negative_controls(Probe& p) {
  auto suite = mutation::suite();
  p.expect(suite.size() >= 20, "suite size " + std::to_string(suite.size()));
  fs::path dir = fs::path(LCOALG_TEST_TMP);
  fs::create_directories(dir);
  std::size_t i = 0;
  for (const auto& m : suite) {
    fs::path file = dir / ("mutant" + std::to_string(i++) + ".coalg");
    std::ofstream(file) << m.text;
    std::string out;
    int code = run_cli({"verify", "--coalgebra", file.string()}, &out);
    Json j = Json::parse(out);
    bool cx = false;
    for (const auto& r : j["reports"])
      if (!r["verdict"].get<bool>()) {
        cx = r.contains("counterexample");
        break;
      }
    p.expect(code == 1 && cx, m.name);
  }
}

void infrastructure(Probe& p) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ex(-3, 3), co(-5, 5);
  auto rnd = [&] {
    Scalar s;
    for (int k = 0; k < 3; ++k) s += Scalar::monomial(co(rng), ex(rng));
    return s;
  };
  bool ring = true;
  for (int i = 0; i < 200; ++i) {
    Scalar a = rnd(), b = rnd(), c = rnd();
    ring = ring && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + b == b + a && a * b == b * a &&
           Scalar::parse(a.to_string()) == a && (a * b).eval(Rational(2, 3)) == a.eval(Rational(2, 3)) * b.eval(Rational(2, 3));
  }
  p.expect(ring, "scalar ring laws");

  bool confluent = true;
  for (const RewriteSystem& r : {eta_system(), slq2_system(), commutative_f_system(), xpg_system()}) {
    const Alphabet& al = r.alphabet();
    for (int i = 0; i < 200; ++i) {
      Word w;
      for (std::size_t k = rng() % 8; k > 0; --k) w.push_back(static_cast<Letter>(rng() % al.size()));
      NCPoly poly = NCPoly::monomial(w);
      confluent = confluent && r.normal_form(poly, Strategy::Leftmost) == r.normal_form(poly, Strategy::Rightmost);
    }
  }
  p.expect(confluent, "rewriting confluence");

  for (const char* name : {"f.coalg", "f_mutated.coalg", "f_coderivation.coalg"}) {
    std::string text = slurp(fs::path(LCOALG_DATA_DIR) / name);
    auto file = parse_coalgebra_file(text);
    p.expect(render_coalgebra(file.coalgebra, file.coderivation) == text, std::string("round trip ") + name);
  }
  std::string graph = slurp(fs::path(LCOALG_DATA_DIR) / "debruijn_2_1.graph");
  p.expect(render_graph(parse_graph(graph)) == graph, "graph round trip");
  BasisPtr b = make_basis({"a", "b"});
  TensorElem t = parse_tensor(b, 2, "(q^-1 + 2)*a(x)b - 3/4*b(x)b");
  p.expect(parse_tensor(b, 2, t.to_string()) == t, "tensor round trip");

  fs::path dir = fs::path(LCOALG_TEST_TMP);
  std::vector<std::string> outs;
  for (int round = 0; round < 2; ++round) {
    std::string tag = std::to_string(round);
    std::string out;
    run_cli({"tile", "--n", "3", "--report", (dir / ("tile" + tag + ".json")).string(), "--dot-dir",
             (dir / ("dots" + tag)).string()});
    run_cli({"dialg", "--builtin", "markov:2:1", "--samples", "25"}, &out);
    outs.push_back(out + slurp(dir / ("tile" + tag + ".json")) + slurp(dir / ("dots" + tag) / "glued.dot"));
  }
  p.expect(outs[0] == outs[1] && !outs[0].empty(), "determinism");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria{
      {"tiling of the (n^2,1)-De Bruijn graph, n = 2..8", tiling},
      {"F reconstruction and golden file", f_reconstruction},
      {"family entanglement and chirality", entanglement},
      {"Markov co-dialgebras and line extensions", markov_layer},
      {"canonical coderivation", coderivation},
      {"matrix action and summed product", matrix_action_splitting},
      {"dialgebra, Leibniz and cubical trialgebra", dialgebras},
      {"quantum algebra checks", quantum},
      {"reconstruction operators", reconstruction},
      {"negative controls", negative_controls},
      {"infrastructure properties", infrastructure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Probe p;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(p);
    } catch (const std::exception& e) {
      p.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (p.failures.empty() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
         << secs << "s)";
    if (!p.failures.empty()) {
      line << " -- " << p.failures.size() << " failure(s), first: " << p.failures.front();
      ++failed;
    }
    std::cout << line.str() << std::endl;
  }
  return failed ? 1 : 0;
}
