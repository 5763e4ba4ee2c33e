#include "lcoalg/tiling.hpp"

#include "lcoalg/error.hpp"
#include "lcoalg/qalgebra.hpp"

namespace lcoalg {

namespace {

BasisId id_of(std::size_t i) { return BasisId{static_cast<std::uint32_t>(i)}; }

std::size_t shift(std::size_t k, long alpha, std::size_t n) {
  long m = static_cast<long>(n);
  return static_cast<std::size_t>(((static_cast<long>(k) + alpha) % m + m) % m);
}

}  // namespace

FnFamily build_fn(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::PreconditionFailed, "F_n needs n >= 1");
  if (n > kFamilyMaxN) throw Error(ErrorKind::TooLarge, "F_n is bounded to n <= " + std::to_string(kFamilyMaxN));
  BasisPtr basis = matrix_unit_basis(n);
  auto u = [n](std::size_t i, std::size_t j) { return id_of(i * n + j); };
  FnFamily f{n, basis, {}, {}};
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    BasisMap delta(basis, 2);
    Counit eps(basis);
    for (std::size_t i = 0; i < n; ++i) {
      eps.set(u(i, shift(i, static_cast<long>(alpha), n)), 1);
      for (std::size_t j = 0; j < n; ++j) {
        TensorElem img(basis, 2);
        for (std::size_t k = 0; k < n; ++k) img.add_term({u(i, shift(k, static_cast<long>(alpha), n)), u(k, j)}, 1);
        delta.set(u(i, j), std::move(img));
      }
    }
    f.coproducts.push_back(std::move(delta));
    f.counits.push_back(std::move(eps));
  }
  return f;
}

LCoalgebra f_coalgebra() {
  FnFamily f = build_fn(2);
  BasisPtr basis = make_basis({"a", "b", "c", "d"});
  return LCoalgebra{"F",
                    basis,
                    rebase(f.coproducts[0], basis),
                    rebase(f.coproducts[1], basis),
                    rebase(f.counits[0], basis),
                    rebase(f.counits[1], basis)};
}

std::pair<Counit, CheckReport> counit_alpha(const FnFamily& f, std::size_t alpha) {
  if (alpha >= f.n) throw Error(ErrorKind::IndexOutOfRange, "alpha must be below n");
  const Counit& eps = f.counits[alpha];
  const BasisMap& delta = f.coproducts[alpha];
  BlockMap d = BlockMap::from(delta), e = BlockMap::from(eps);
  std::string subject = "F_" + std::to_string(f.n) + "[" + std::to_string(alpha) + "]";
  auto identity = [](const TensorElem& x) { return x; };
  CheckReport report = CheckReport::combine(
      "counit", subject,
      {check_on_basis("(id(x)eps)Delta", subject, f.basis, 1,
                      [&](const TensorElem& x) { return apply_right(e, apply_left(d, x)); }, identity),
       check_on_basis("(eps(x)id)Delta", subject, f.basis, 1,
                      [&](const TensorElem& x) { return apply_left(e, apply_left(d, x)); }, identity)});
  return {eps, std::move(report)};
}

CheckReport check_hypercube_relations(std::span<const BasisMap> coproducts, std::string subject) {
  CheckReport report = CheckReport::pass("hypercube-relations", subject);
  if (coproducts.empty()) return report;
  std::vector<BlockMap> maps;
  for (const auto& d : coproducts) maps.push_back(BlockMap::from(d));
  const BasisPtr& basis = coproducts.front().basis();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      std::string name = "(D" + std::to_string(i) + "(x)id)D" + std::to_string(j) + " = (id(x)D" + std::to_string(j) +
                         ")D" + std::to_string(i);
      report.add_part(check_pair_relation(std::move(name), subject, basis, 1, maps[i], maps[j]));
    }
  }
  return report;
}

CheckReport verify_family_entanglement(const FnFamily& f) {
  CheckReport r = check_hypercube_relations(f.coproducts, "F_" + std::to_string(f.n));
  r.check = "family-entanglement";
  return r;
}

TilingReport verify_tiling(std::size_t n) {
  FnFamily f = build_fn(n);
  DirectedGraph target = de_bruijn(n * n, 1);
  BasisPtr labels = make_basis(target.vertices());
  TilingReport out;
  out.n = n;
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    LCoalgebra c = LCoalgebra::coassociative("F_" + std::to_string(n) + "[" + std::to_string(alpha) + "]",
                                             rebase(f.coproducts[alpha], labels));
    out.supports.push_back(geometric_support(c));
    out.arrow_counts.push_back(out.supports.back().arrow_pairs().size());
  }
  out.pairwise_disjoint = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!arrows_disjoint(out.supports[a], out.supports[b])) out.pairwise_disjoint = false;
    }
  }
  out.glued = arrows_union(out.supports);
  out.union_is_complete = out.glued.labelled_arrow_pairs() == target.labelled_arrow_pairs();
  out.verdict = out.pairwise_disjoint && out.union_is_complete;
  return out;
}

Json to_json(const TilingReport& r) {
  Json j;
  j["check"] = "tiling";
  j["n"] = r.n;
  j["pairwise_disjoint"] = r.pairwise_disjoint;
  j["union_is_complete"] = r.union_is_complete;
  j["arrow_counts"] = r.arrow_counts;
  std::size_t total = 0;
  for (auto c : r.arrow_counts) total += c;
  j["total_arrows"] = total;
  j["verdict"] = r.verdict;
  return j;
}

std::pair<std::vector<BasisMap>, CheckReport> matrix_action(std::span<const BasisMap> coproducts, const ScalarMatrix& z) {
  const std::size_t n = coproducts.size();
  if (z.size() != n) throw Error(ErrorKind::SizeMismatch, "matrix size differs from the number of coproducts");
  for (const auto& row : z) {
    if (row.size() != n) throw Error(ErrorKind::SizeMismatch, "matrix is not square");
  }
  if (!check_hypercube_relations(coproducts, "input").verdict) {
    throw Error(ErrorKind::PreconditionFailed, "input coproducts violate the hypercube relations");
  }
  std::vector<BasisMap> out;
  for (std::size_t i = 0; i < n; ++i) {
    BasisMap d = BasisMap::zero(coproducts.front().basis(), 2);
    for (std::size_t j = 0; j < n; ++j) {
      if (z[i][j].is_zero()) continue;
      BasisMap term = coproducts[j];
      term *= z[i][j];
      d += term;
    }
    out.push_back(std::move(d));
  }
  CheckReport report = check_hypercube_relations(out, "Z-transformed");
  report.check = "matrix-action";
  return {std::move(out), std::move(report)};
}

CheckReport reconstruct_delta0(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::PreconditionFailed, "reconstruction needs n >= 2");
  if (n > 6) throw Error(ErrorKind::TooLarge, "reconstruction is bounded to n <= 6");
  LCoalgebra m = markov_from_graph(de_bruijn(n, 1));
  FnFamily f = build_fn(n);
  // Psi on the two middle legs keeps z_k (x) z_k and kills z_k (x) z_l, k != l.
  BlockMap psi{2, 2, [&](const Key& k) {
                 TensorElem out(m.basis, 2);
                 if (k[0] == k[1]) out.add_term(k, 1);
                 return out;
               }};
  std::string subject = "De Bruijn (" + std::to_string(n) + ",1)";
  CheckReport report = CheckReport::pass("reconstruct-delta0", subject);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TensorElem contracted = apply_on_legs(psi, tensor_product(m.right(id_of(i)), m.left(id_of(j))), 2);
      TensorElem grouped(f.basis, 2);
      for (const auto& [k, s] : contracted.terms()) {
        grouped.add_term({id_of(k[0].index * n + k[1].index), id_of(k[2].index * n + k[3].index)}, s);
      }
      const BasisId uij = id_of(i * n + j);
      const TensorElem& want = f.coproducts[0](uij);
      std::string at = f.basis->label(uij);
      report.add_part(grouped == want ? CheckReport::pass(at, subject)
                                      : CheckReport::fail(at, subject, {at, grouped.to_string(), want.to_string()}));
    }
  }
  return report;
}

namespace {

using Pair = std::pair<NCTensor, NCTensor>;

// (y1 (x) y2) box (y3 (x) y4) = (y1 (x) y3) (x) (y2 (x) y4), bilinearly.
NCTensor box(const NCTensor& a, const NCTensor& b) {
  NCTensor out(4);
  for (const auto& [ka, sa] : a.terms()) {
    for (const auto& [kb, sb] : b.terms()) out.add_term({ka[0], kb[0], ka[1], kb[1]}, sa * sb);
  }
  return out;
}

NCTensor bracket(const Pair& x, const Pair& y) { return box(x.first, y.first) + box(x.second, y.second); }
NCTensor per(const Pair& x, const Pair& y) { return box(x.first, y.second) + box(x.second, y.first); }
NCTensor bracket_star(const Pair& x, const Pair& y) { return x.first * y.first + x.second * y.second; }

}  // namespace

CheckReport bracket_reconstruction_n2() {
  RewriteSystem free = free_xy_system();
  const Alphabet& al = free.alphabet();
  auto t = [&](std::string_view l, std::string_view r) { return NCTensor::pure({al.word(l), al.word(r)}); };
  Pair right_x{t("X", "X"), t("X", "Y")}, right_y{t("Y", "Y"), t("Y", "X")}, right_1{t("1", "1"), t("1", "1")};
  Pair left_x{t("X", "X"), t("Y", "X")}, left_y{t("Y", "Y"), t("X", "Y")};

  LCoalgebra f = f_coalgebra();
  // a = X(x)X, b = X(x)Y, c = Y(x)X, d = Y(x)Y.
  auto to_f = [&](const NCTensor& v) {
    TensorElem out(f.basis, 2);
    for (const auto& [k, s] : v.terms()) {
      Key key;
      for (std::size_t leg = 0; leg < 4; leg += 2) {
        if (k[leg].size() != 1 || k[leg + 1].size() != 1) {
          throw Error(ErrorKind::PreconditionFailed, "box product left the span of arrows");
        }
        key.push_back(id_of(k[leg][0] * 2u + k[leg + 1][0]));
      }
      out.add_term(key, s);
    }
    return out;
  };
  CheckReport report = CheckReport::pass("bracket-reconstruction", "De Bruijn (2,1) and F");
  auto expect = [&](std::string name, const NCTensor& got, std::string_view label) {
    TensorElem g = to_f(got);
    const TensorElem& want = f.right(f.basis->at(label));
    report.add_part(g == want ? CheckReport::pass(name, report.subject)
                              : CheckReport::fail(name, report.subject, {name, g.to_string(), want.to_string()}));
  };
  expect("<D(X), D~(X)> = Delta(a)", bracket(right_x, left_x), "a");
  expect("per(D(X), D~(Y)) = Delta(b)", per(right_x, left_y), "b");
  expect("per(D(Y), D~(X)) = Delta(c)", per(right_y, left_x), "c");
  expect("<D(Y), D~(Y)> = Delta(d)", bracket(right_y, left_y), "d");

  LCoalgebra markov = markov_from_graph(de_bruijn(2, 1));
  // Vertices 0 and 1 of the De Bruijn graph play X and Y.
  auto markov_nc = [&](std::size_t v) {
    NCTensor out(2);
    for (const auto& [k, s] : markov.right(id_of(v)).terms()) {
      out.add_term({Word{static_cast<Letter>(k[0].index)}, Word{static_cast<Letter>(k[1].index)}}, s);
    }
    return out;
  };
  for (const auto& [name, vec, v] : {std::tuple{"<D(X), D(1)>* = Delta_M(X)", &right_x, std::size_t{0}},
                                     std::tuple{"<D(Y), D(1)>* = Delta_M(Y)", &right_y, std::size_t{1}}}) {
    NCTensor got = bracket_star(*vec, right_1).normal_form(free);
    NCTensor want = markov_nc(v);
    report.add_part(got == want ? CheckReport::pass(name, report.subject)
                                : CheckReport::fail(name, report.subject, {name, got.to_string(al), want.to_string(al)}));
  }
  return report;
}

TensorMatrix symbolic_u(const FnFamily& f) {
  TensorMatrix u(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    for (std::size_t j = 0; j < f.n; ++j) u[i].push_back(TensorElem::vector(f.basis, id_of(i * f.n + j)));
  }
  return u;
}

TensorMatrix shift_columns(const TensorMatrix& a, long alpha) {
  const std::size_t n = a.size();
  TensorMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i].push_back(a[i][shift(j, alpha, n)]);
  }
  return out;
}

TensorMatrix bar_tensor(const TensorMatrix& a, const TensorMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::SizeMismatch, "matrix sizes differ");
  TensorMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TensorElem acc(a[0][0].basis(), a[0][0].rank() + b[0][0].rank());
      for (std::size_t k = 0; k < n; ++k) acc += tensor_product(a[i][k], b[k][j]);
      out[i].push_back(std::move(acc));
    }
  }
  return out;
}

CheckReport check_shift_forms(const FnFamily& f) {
  std::string subject = "F_" + std::to_string(f.n);
  CheckReport report = CheckReport::pass("shift-forms", subject);
  TensorMatrix u = symbolic_u(f);
  for (std::size_t alpha = 0; alpha < f.n; ++alpha) {
    long a = static_cast<long>(alpha);
    TensorMatrix lhs_form = shift_columns(bar_tensor(shift_columns(u, a), shift_columns(u, -a)), a);
    TensorMatrix rhs_form = bar_tensor(shift_columns(u, a), u);
    for (std::size_t i = 0; i < f.n; ++i) {
      for (std::size_t j = 0; j < f.n; ++j) {
        const TensorElem& want = f.coproducts[alpha](id_of(i * f.n + j));
        std::string at = "alpha=" + std::to_string(alpha) + " " + f.basis->label(id_of(i * f.n + j));
        if (!(rhs_form[i][j] == want)) {
          report.add_part(CheckReport::fail("closed-form", subject, {at, rhs_form[i][j].to_string(), want.to_string()}));
        }
        if (!(lhs_form[i][j] == want)) {
          report.add_part(CheckReport::fail("left-hand-form", subject, {at, lhs_form[i][j].to_string(), want.to_string()}));
        }
      }
    }
  }
  return report;
}

}  // namespace lcoalg
