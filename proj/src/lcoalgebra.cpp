#include "lcoalg/lcoalgebra.hpp"

#include <algorithm>
#include <map>

#include "lcoalg/error.hpp"

namespace lcoalg {

std::string_view to_string(Side s) { return s == Side::Right ? "right" : "left"; }

std::string_view to_string(Chirality c) {
  switch (c) {
    case Chirality::Achiral: return "achiral";
    case Chirality::Chiral: return "chiral";
    case Chirality::NotEntangled: return "not-entangled";
  }
  return "not-entangled";
}

LCoalgebra LCoalgebra::coassociative(std::string name, BasisMap delta, std::optional<Counit> counit) {
  BasisPtr basis = delta.basis();
  BasisMap left = delta;
  return LCoalgebra{std::move(name), std::move(basis), std::move(delta), std::move(left), counit, counit};
}

namespace {

TensorElem rebase(const TensorElem& t, const BasisPtr& basis) {
  TensorElem out(basis, t.rank());
  for (const auto& [k, c] : t.terms()) out.add_term(k, c);
  return out;
}

}  // namespace

BasisMap rebase(const BasisMap& f, const BasisPtr& basis) {
  if (basis->size() != f.basis()->size()) throw Error(ErrorKind::BasisMismatch, "relabelling changes the dimension");
  BasisMap out(basis, f.out_rank());
  for (BasisId id : basis->ids()) out.set(id, rebase(f(id), basis));
  return out;
}

Counit rebase(const Counit& eps, const BasisPtr& basis) {
  if (basis->size() != eps.basis()->size()) throw Error(ErrorKind::BasisMismatch, "relabelling changes the dimension");
  Counit out(basis);
  for (BasisId id : basis->ids()) out.set(id, eps(id));
  return out;
}

LCoalgebra relabel(const LCoalgebra& c, std::vector<std::string> labels) {
  BasisPtr basis = make_basis(std::move(labels));
  LCoalgebra out{c.name, basis, rebase(c.right, basis), rebase(c.left, basis), std::nullopt, std::nullopt};
  if (c.right_counit) out.right_counit = rebase(*c.right_counit, basis);
  if (c.left_counit) out.left_counit = rebase(*c.left_counit, basis);
  return out;
}

CheckReport check_pair_relation(std::string check, std::string subject, const BasisPtr& basis, std::size_t rank,
                                const BlockMap& a, const BlockMap& b) {
  return check_on_basis(
      std::move(check), std::move(subject), basis, rank,
      [&](const TensorElem& x) { return apply_left(a, apply_left(b, x)); },
      [&](const TensorElem& x) { return apply_right(b, apply_left(a, x)); });
}

DirectedGraph geometric_support(const LCoalgebra& c) {
  DirectedGraph g(c.basis->labels());
  auto emit = [&](const BasisMap& delta, Provenance p) {
    for (BasisId v : c.basis->ids()) {
      for (const auto& [k, w] : delta(v).terms()) g.add_arrow(k[0].index, k[1].index, w, p);
    }
  };
  emit(c.right, Provenance::Right);
  if (!c.degenerate()) emit(c.left, Provenance::Left);
  return g;
}

LCoalgebra markov_from_graph(const DirectedGraph& g, std::string name) {
  BasisPtr basis = make_basis(g.vertices());
  BasisMap right(basis, 2), left(basis, 2);
  std::vector<TensorElem> r(basis->size(), TensorElem(basis, 2));
  std::vector<TensorElem> l(basis->size(), TensorElem(basis, 2));
  for (const Arrow& a : g.arrows()) {
    Key k{BasisId{static_cast<std::uint32_t>(a.source)}, BasisId{static_cast<std::uint32_t>(a.target)}};
    r[a.source].add_term(k, a.weight);
    l[a.target].add_term(k, a.weight);
  }
  for (BasisId id : basis->ids()) {
    right.set(id, std::move(r[id.index]));
    left.set(id, std::move(l[id.index]));
  }
  return LCoalgebra{std::move(name), basis, std::move(right), std::move(left), std::nullopt, std::nullopt};
}

LCoalgebra with_constant_counits(LCoalgebra c, const Scalar& value) {
  Counit eps(c.basis);
  for (BasisId id : c.basis->ids()) eps.set(id, value);
  c.right_counit = eps;
  c.left_counit = std::move(eps);
  return c;
}

CheckReport check_coassoc(const LCoalgebra& c, Side side) {
  BlockMap d = BlockMap::from(c.coproduct(side));
  return check_pair_relation("coassoc-" + std::string(to_string(side)), c.name, c.basis, 1, d, d);
}

CheckReport check_entanglement(const LCoalgebra& c) {
  return check_pair_relation("entanglement", c.name, c.basis, 1, BlockMap::from(c.left), BlockMap::from(c.right));
}

ChiralityVerdict classify_chirality(const LCoalgebra& c) {
  CheckReport ent = check_entanglement(c);
  CheckReport swapped =
      check_pair_relation("swapped-entanglement", c.name, c.basis, 1, BlockMap::from(c.right), BlockMap::from(c.left));
  ChiralityVerdict out{Chirality::Achiral, std::nullopt, std::nullopt, CheckReport::pass("chirality", c.name)};
  if (!ent.verdict) {
    out.verdict = Chirality::NotEntangled;
    out.witness = ent.counterexample->at;
    out.failing_equation = "entanglement";
  } else if (!swapped.verdict) {
    out.verdict = Chirality::Chiral;
    out.witness = swapped.counterexample->at;
    out.failing_equation = "swapped entanglement";
  }
  // The classification itself is the result; failures of the equations are
  // recorded as parts without falsifying the report.
  out.report.parts.push_back(std::move(ent));
  out.report.parts.push_back(std::move(swapped));
  out.report.note("class", std::string(to_string(out.verdict)));
  if (out.witness) out.report.note("witness", *out.witness);
  return out;
}

CheckReport check_counit(const LCoalgebra& c, Side side) {
  const auto& eps = c.counit(side);
  if (!eps) throw Error(ErrorKind::MissingCounit, "no " + std::string(to_string(side)) + " counit on " + c.name);
  BlockMap d = BlockMap::from(c.coproduct(side));
  BlockMap e = BlockMap::from(*eps);
  return check_on_basis(
      "counit-" + std::string(to_string(side)), c.name, c.basis, 1,
      [&](const TensorElem& x) {
        TensorElem dx = apply_left(d, x);
        return side == Side::Right ? apply_right(e, dx) : apply_left(e, dx);
      },
      [](const TensorElem& x) { return x; });
}

CheckReport check_l_cocommutative(const LCoalgebra& c) {
  return check_on_basis(
      "l-cocommutative", c.name, c.basis, 1, [&](const TensorElem& x) { return c.right.apply(x); },
      [&](const TensorElem& x) { return transpose(c.left.apply(x)); });
}

std::vector<TensorElem> cocommutator_kernel(const LCoalgebra& c) {
  const std::size_t cols = c.basis->size();
  std::map<Key, std::vector<Rational>> rows;
  for (BasisId id : c.basis->ids()) {
    TensorElem image = c.right(id) - transpose(c.left(id));
    for (const auto& [k, s] : image.terms()) {
      auto r = s.as_rational();
      if (!r) throw Error(ErrorKind::NonRationalScalars, "cocommutator has coefficient " + s.to_string());
      auto& row = rows.try_emplace(k, std::vector<Rational>(cols, Rational(0))).first->second;
      row[id.index] = *r;
    }
  }
  std::vector<std::vector<Rational>> m;
  for (auto& [k, row] : rows) m.push_back(std::move(row));

  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    Rational inv = 1 / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }

  std::vector<TensorElem> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    TensorElem v(c.basis, 1);
    v.add_term({BasisId{static_cast<std::uint32_t>(free)}}, Scalar(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (m[r][free] != 0) v.add_term({BasisId{static_cast<std::uint32_t>(pivots[r])}}, Scalar(Rational(-m[r][free])));
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

CheckReport check_codialgebra_axioms(std::string subject, const BasisPtr& basis, std::size_t degree,
                                     const BlockMap& right, const BlockMap& left) {
  std::vector<CheckReport> parts;
  parts.push_back(check_pair_relation("axiom1-right-coassoc", subject, basis, degree, right, right));
  parts.push_back(check_pair_relation("axiom1-left-coassoc", subject, basis, degree, left, left));
  parts.push_back(check_on_basis(
      "axiom2", subject, basis, degree, [&](const TensorElem& x) { return apply_right(right, apply_left(right, x)); },
      [&](const TensorElem& x) { return apply_right(left, apply_left(right, x)); }));
  parts.push_back(check_on_basis(
      "axiom3", subject, basis, degree, [&](const TensorElem& x) { return apply_left(left, apply_left(left, x)); },
      [&](const TensorElem& x) { return apply_left(right, apply_left(left, x)); }));
  parts.push_back(check_pair_relation("axiom4-entanglement", subject, basis, degree, left, right));
  return CheckReport::combine("codialgebra", std::move(subject), std::move(parts));
}

CheckReport check_codialgebra(const LCoalgebra& c) {
  return check_codialgebra_axioms(c.name, c.basis, 1, BlockMap::from(c.right), BlockMap::from(c.left));
}

CheckReport check_coderivation(const LCoalgebra& c, const BasisMap& d, Side side) {
  if (!same_basis(d.basis(), c.basis) || d.out_rank() != 1) {
    throw Error(ErrorKind::BasisMismatch, "coderivation must be an endomorphism of the coalgebra's space");
  }
  const BasisMap& delta = c.coproduct(side);
  return check_on_basis(
      "coderivation-" + std::string(to_string(side)), c.name, c.basis, 1,
      [&](const TensorElem& x) { return delta.apply(d.apply(x)); },
      [&](const TensorElem& x) {
        TensorElem dx = delta.apply(x);
        return apply_on_leg(d, dx, 2) + apply_on_leg(d, dx, 1);
      });
}

}  // namespace lcoalg
