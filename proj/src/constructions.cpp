#include <algorithm>

#include "lcoalg/error.hpp"
#include "lcoalg/lcoalgebra.hpp"

namespace lcoalg {

namespace {

BasisId id_of(std::size_t i) { return BasisId{static_cast<std::uint32_t>(i)}; }

Key concat(Key a, const Key& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

DegreeLift lift_degree(const LCoalgebra& c, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::PreconditionFailed, "degree lift needs n >= 2");
  if (!c.right_counit) throw Error(ErrorKind::MissingCounit, "degree lift needs the right counit of " + c.name);
  std::size_t keys = 1;
  for (std::size_t i = 0; i < n; ++i) {
    keys *= c.basis->size();
    if (keys > kLiftMaxKeys) throw Error(ErrorKind::TooLarge, "basis_size^n exceeds " + std::to_string(kLiftMaxKeys));
  }
  if (!check_coassoc(c, Side::Right).verdict) {
    throw Error(ErrorKind::NotCoassociative, c.name + " is not coassociative");
  }

  BasisPtr basis = c.basis;
  BasisMap delta = c.right;
  Counit eps = *c.right_counit;
  BlockMap right{n, n + 1, [basis, delta](const Key& k) {
                   Key head(k.begin(), k.end() - 1);
                   TensorElem out(basis, k.size() + 1);
                   for (const auto& [dk, s] : delta(k.back()).terms()) out.add_term(concat(head, dk), s);
                   return out;
                 }};
  BlockMap left{n, n + 1, [basis, delta](const Key& k) {
                  Key tail(k.begin() + 1, k.end());
                  TensorElem out(basis, k.size() + 1);
                  for (const auto& [dk, s] : delta(k.front()).terms()) out.add_term(concat(dk, tail), s);
                  return out;
                }};
  BlockMap right_counit{n, n - 1, [basis, eps](const Key& k) {
                          TensorElem out(basis, k.size() - 1);
                          out.add_term(Key(k.begin(), k.end() - 1), eps(k.back()));
                          return out;
                        }};
  BlockMap left_counit{n, n - 1, [basis, eps](const Key& k) {
                         TensorElem out(basis, k.size() - 1);
                         out.add_term(Key(k.begin() + 1, k.end()), eps(k.front()));
                         return out;
                       }};

  std::string subject = c.name + "^" + std::to_string(n);
  CheckReport report = CheckReport::pass("degree-lift", subject);
  report.note("degree", std::to_string(n));
  if (n == 2) {
    report.add_part(check_codialgebra_axioms(subject, basis, n, right, left));
  } else {
    report.add_part(check_pair_relation("right-coassoc", subject, basis, n, right, right));
    report.add_part(check_pair_relation("left-coassoc", subject, basis, n, left, left));
    report.add_part(check_pair_relation("entanglement", subject, basis, n, left, right));
  }
  auto identity = [](const TensorElem& x) { return x; };
  report.add_part(check_on_basis(
      "counit-right", subject, basis, n, [&](const TensorElem& x) { return apply_right(right_counit, apply_left(right, x)); },
      identity));
  report.add_part(check_on_basis(
      "counit-left", subject, basis, n, [&](const TensorElem& x) { return apply_left(left_counit, apply_left(left, x)); },
      identity));
  return DegreeLift{n, basis, std::move(right), std::move(left), std::move(right_counit), std::move(left_counit),
                    std::move(report)};
}

LCoalgebra flower(std::vector<std::string> labels, std::string_view unit_label) {
  if (std::find(labels.begin(), labels.end(), unit_label) == labels.end()) {
    throw Error(ErrorKind::MissingUnit, "unit '" + std::string(unit_label) + "' is not a basis label");
  }
  BasisPtr basis = make_basis(std::move(labels));
  BasisId e = basis->at(unit_label);
  BasisMap right(basis, 2), left(basis, 2);
  for (BasisId a : basis->ids()) {
    right.set(a, TensorElem::pure(basis, {a, e}));
    left.set(a, TensorElem::pure(basis, {e, a}));
  }
  return LCoalgebra{"flower", basis, std::move(right), std::move(left), std::nullopt, std::nullopt};
}

std::pair<LCoalgebra, CheckReport> from_grouplike(const LCoalgebra& c, std::string_view e_label) {
  BasisId e = c.basis->at(e_label);
  if (!(c.right(e) == TensorElem::pure(c.basis, {e, e}))) {
    throw Error(ErrorKind::NotGroupLike, "Delta " + std::string(e_label) + " = " + c.right(e).to_string());
  }
  if (!check_coassoc(c, Side::Right).verdict) {
    throw Error(ErrorKind::NotCoassociative, c.name + " is not coassociative");
  }
  BasisMap right(c.basis, 2), left(c.basis, 2);
  for (BasisId x : c.basis->ids()) {
    right.set(x, c.right(x) - TensorElem::pure(c.basis, {x, e}));
    left.set(x, c.right(x) - TensorElem::pure(c.basis, {e, x}));
  }
  LCoalgebra out{c.name + "-grouplike-" + std::string(e_label), c.basis, std::move(right), std::move(left),
                 std::nullopt, std::nullopt};
  CheckReport report = check_entanglement(out);
  return {std::move(out), std::move(report)};
}

std::pair<LCoalgebra, CheckReport> tensor_codialgebra(const LCoalgebra& b, const LCoalgebra& c) {
  if (!check_codialgebra(b).verdict) {
    throw Error(ErrorKind::PreconditionFailed, b.name + " is not a coassociative co-dialgebra");
  }
  if (!check_coassoc(c, Side::Right).verdict) {
    throw Error(ErrorKind::PreconditionFailed, c.name + " is not coassociative");
  }
  const std::size_t nc = c.basis->size();
  std::vector<std::string> labels;
  for (const auto& x : b.basis->labels()) {
    for (const auto& y : c.basis->labels()) labels.push_back(x + "|" + y);
  }
  BasisPtr basis = make_basis(std::move(labels));
  auto pair_id = [nc](BasisId x, BasisId y) { return id_of(x.index * nc + y.index); };

  auto build = [&](const BasisMap& db) {
    BasisMap out(basis, 2);
    for (BasisId x : b.basis->ids()) {
      for (BasisId y : c.basis->ids()) {
        TensorElem img(basis, 2);
        for (const auto& [kb, sb] : db(x).terms()) {
          for (const auto& [kc, sc] : c.right(y).terms()) {
            img.add_term({pair_id(kb[0], kc[0]), pair_id(kb[1], kc[1])}, sb * sc);
          }
        }
        out.set(pair_id(x, y), std::move(img));
      }
    }
    return out;
  };
  auto product_counit = [&](const std::optional<Counit>& eb) -> std::optional<Counit> {
    if (!eb || !c.right_counit) return std::nullopt;
    Counit out(basis);
    for (BasisId x : b.basis->ids()) {
      for (BasisId y : c.basis->ids()) out.set(pair_id(x, y), (*eb)(x) * (*c.right_counit)(y));
    }
    return out;
  };

  LCoalgebra out{b.name + "|" + c.name, basis, build(b.right), build(b.left), product_counit(b.right_counit),
                 product_counit(b.left_counit)};
  CheckReport report = check_codialgebra(out);
  return {std::move(out), std::move(report)};
}

std::pair<LCoalgebra, CheckReport> attractor_codialgebra(std::size_t m, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::PreconditionFailed, "attractor needs n >= 1");
  if (m + n > kAttractorMaxBasis) throw Error(ErrorKind::TooLarge, "m + n exceeds " + std::to_string(kAttractorMaxBasis));
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) labels.push_back("alpha" + std::to_string(j));
  BasisPtr basis = make_basis(std::move(labels));
  BasisMap right(basis, 2), left(basis, 2);
  for (std::size_t v = 0; v < m + n; ++v) {
    TensorElem r(basis, 2), l(basis, 2);
    for (std::size_t j = m; j < m + n; ++j) {
      r.add_term({id_of(v), id_of(j)}, Scalar(1));
      l.add_term({id_of(j), id_of(v)}, Scalar(1));
    }
    right.set(id_of(v), std::move(r));
    left.set(id_of(v), std::move(l));
  }
  LCoalgebra out{"attractor-" + std::to_string(m) + "-" + std::to_string(n), basis, std::move(right), std::move(left),
                 std::nullopt, std::nullopt};
  CheckReport report = check_codialgebra(out);
  return {std::move(out), std::move(report)};
}

BasisPtr matrix_unit_basis(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("U_" + std::to_string(i) + std::to_string(j));
  }
  return make_basis(std::move(labels));
}

BasisMap canonical_coderivation(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::PreconditionFailed, "canonical coderivation needs n >= 2");
  if (n > 8) throw Error(ErrorKind::TooLarge, "canonical coderivation is bounded to n <= 8");
  BasisPtr basis = matrix_unit_basis(n);
  BasisMap d(basis, 1);
  auto u = [n](std::size_t i, std::size_t j) { return id_of(i * n + j); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TensorElem img(basis, 1);
      for (std::size_t k = 0; k < n; ++k) {
        img.add_term({u(k, j)}, Scalar(1));
        img.add_term({u(i, k)}, Scalar(-1));
      }
      d.set(u(i, j), std::move(img));
    }
  }
  return d;
}

}  // namespace lcoalg
