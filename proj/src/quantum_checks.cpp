#include <algorithm>
#include <functional>
#include <tuple>

#include "lcoalg/error.hpp"
#include "lcoalg/lcoalgebra.hpp"
#include "lcoalg/qalgebra.hpp"

namespace lcoalg {

namespace {

// nf(lhs) == nf(rhs) as a named part.
CheckReport poly_check(std::string name, const RewriteSystem& r, const NCPoly& lhs, const NCPoly& rhs) {
  NCPoly l = r.normal_form(lhs), rr = r.normal_form(rhs);
  const Alphabet& al = r.alphabet();
  if (l == rr) {
    CheckReport ok = CheckReport::pass(std::move(name), r.name());
    ok.note("value", l.to_string(al));
    return ok;
  }
  return CheckReport::fail(name, r.name(), {name, l.to_string(al), rr.to_string(al)});
}

CheckReport tensor_check(std::string name, const RewriteSystem& r, const NCTensor& lhs, const NCTensor& rhs) {
  NCTensor l = lhs.normal_form(r), rr = rhs.normal_form(r);
  const Alphabet& al = r.alphabet();
  if (l == rr) return CheckReport::pass(std::move(name), r.name());
  return CheckReport::fail(name, r.name(), {name, l.to_string(al), rr.to_string(al)});
}

NCTensor pair_tensor(const Alphabet& al, std::vector<std::tuple<std::string_view, std::string_view, Scalar>> terms) {
  NCTensor t(2);
  for (const auto& [x, y, s] : terms) t.add_term({al.word(x), al.word(y)}, s);
  return t;
}

NCPoly word(const Alphabet& al, std::string_view w, const Scalar& s = Scalar(1)) {
  return NCPoly::monomial(al.word(w), s);
}

// m (id (x) S) delta (side Right) or m (S (x) id) delta (side Left) applied to
// one generator's coproduct.
NCPoly antipode_convolution(const NCTensor& delta_x, const std::vector<NCPoly>& s, Side antipode_leg,
                            const RewriteSystem& r) {
  NCPoly out;
  for (const auto& [k, c] : delta_x.terms()) {
    NCPoly x1 = NCPoly::monomial(k[0]);
    NCPoly x2 = NCPoly::monomial(k[1]);
    if (antipode_leg == Side::Right) {
      x2 = extend_homomorphism(s, x2, r);
    } else {
      x1 = extend_homomorphism(s, x1, r);
    }
    out += c * (x1 * x2);
  }
  return r.normal_form(out);
}

struct HopfData {
  const RewriteSystem& system;
  std::vector<NCTensor> delta;
  std::vector<NCPoly> antipode;
  std::vector<Scalar> counit;
};

// Both antipode identities on every generator; values joined into a note.
std::vector<CheckReport> antipode_parts(const std::string& label, const HopfData& h) {
  const Alphabet& al = h.system.alphabet();
  std::vector<CheckReport> parts;
  for (Side leg : {Side::Right, Side::Left}) {
    std::string name = leg == Side::Right ? "m(id(x)" + label + ")" : "m(" + label + "(x)id)";
    CheckReport part = CheckReport::pass(name, h.system.name());
    std::string values;
    for (Letter l = 0; l < al.size(); ++l) {
      NCPoly got = antipode_convolution(h.delta[l], h.antipode, leg, h.system);
      NCPoly want = NCPoly::constant(h.counit[l]);
      values += (l ? ", " : "") + std::string(1, al.symbol(l)) + ": " + got.to_string(al);
      part.add_part(poly_check(name + " on " + std::string(1, al.symbol(l)), h.system, got, want));
    }
    part.note("values", values);
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<NCTensor> f_right_tensors(const Alphabet& al) {
  return {pair_tensor(al, {{"a", "a", 1}, {"b", "c", 1}}), pair_tensor(al, {{"a", "b", 1}, {"b", "d", 1}}),
          pair_tensor(al, {{"d", "c", 1}, {"c", "a", 1}}), pair_tensor(al, {{"d", "d", 1}, {"c", "b", 1}})};
}

std::vector<NCTensor> f_left_tensors(const Alphabet& al) {
  return {pair_tensor(al, {{"b", "a", 1}, {"a", "c", 1}}), pair_tensor(al, {{"b", "b", 1}, {"a", "d", 1}}),
          pair_tensor(al, {{"c", "c", 1}, {"d", "a", 1}}), pair_tensor(al, {{"c", "d", 1}, {"d", "b", 1}})};
}

}  // namespace

CheckReport verify_eta_relations() {
  RewriteSystem r = eta_system();
  const Alphabet& al = r.alphabet();
  NCPoly a = word(al, "XX"), b = word(al, "XY"), c = word(al, "YX"), d = word(al, "YY");
  Scalar e2 = Scalar::q(2);
  Scalar em2 = Scalar::q(-2);
  CheckReport report = CheckReport::pass("eta-relations", "k<X,Y>/(XY - eta*YX)");
  report.add_part(poly_check("ab = eta^2 ba", r, a * b, e2 * (b * a)));
  report.add_part(poly_check("cb = bc", r, c * b, b * c));
  report.add_part(poly_check("ac = eta^2 ca", r, a * c, e2 * (c * a)));
  report.add_part(poly_check("ad = eta^2 bc", r, a * d, e2 * (b * c)));
  report.add_part(poly_check("bd = eta^2 db", r, b * d, e2 * (d * b)));
  report.add_part(poly_check("cd = eta^2 dc", r, c * d, e2 * (d * c)));
  report.add_part(poly_check("ad - da = (eta^2 - eta^-2) bc", r, a * d - d * a, (e2 - em2) * (b * c)));
  report.add_part(poly_check("ad - eta^2 bc = 0", r, a * d - e2 * (b * c), NCPoly()));
  report.note("eta", "q");
  return report;
}

CheckReport verify_slq2_antipode() {
  RewriteSystem r = slq2_system();
  const Alphabet& al = r.alphabet();
  std::vector<NCPoly> s{word(al, "a"), word(al, "c", -Scalar::q(-1)), word(al, "b", -Scalar::q(1)), word(al, "d")};
  HopfData h{r, f_left_tensors(al), s, {0, 1, 1, 0}};
  CheckReport report = CheckReport::pass("slq2-left-antipode", "Sl_q(2)");
  for (auto& p : antipode_parts("S~", h)) report.add_part(std::move(p));

  CheckReport fixed = CheckReport::pass("fixed-points", r.name());
  for (std::string_view w : {"1", "a", "d", "bc"}) {
    NCPoly x = word(al, w);
    fixed.add_part(poly_check("S~(" + std::string(w) + ")", r, extend_homomorphism(s, x, r), x));
  }
  report.add_part(std::move(fixed));

  CheckReport relations = CheckReport::pass("antipode-respects-relations", r.name());
  for (const NCPoly& rel : r.relations()) {
    relations.add_part(poly_check("S~(" + rel.to_string(al) + ")", r, extend_homomorphism(s, rel, r), NCPoly()));
  }
  report.add_part(std::move(relations));

  // The left coproduct is not multiplicative for these relations; record one
  // instance without falsifying the report.
  std::vector<NCTensor> delta = f_left_tensors(al);
  for (const NCPoly& rel : r.relations()) {
    NCTensor image = extend_homomorphism(delta, rel, r);
    if (!image.is_zero()) {
      report.note("left-coproduct-not-multiplicative", "Delta~(" + rel.to_string(al) + ") = " + image.to_string(al));
      break;
    }
  }
  return report;
}

CheckReport verify_hopf_f() {
  RewriteSystem r = commutative_f_system();
  const Alphabet& al = r.alphabet();
  std::vector<NCPoly> s{word(al, "d"), word(al, "b", -1), word(al, "c", -1), word(al, "a")};
  std::vector<NCPoly> st{word(al, "a"), word(al, "c", -1), word(al, "b", -1), word(al, "d")};
  CheckReport report = CheckReport::pass("hopf-f", "F/(ad - bc - 1)");
  for (auto& p : antipode_parts("S", HopfData{r, f_right_tensors(al), s, {1, 0, 0, 1}})) report.add_part(std::move(p));
  for (auto& p : antipode_parts("S~", HopfData{r, f_left_tensors(al), st, {0, 1, 1, 0}})) report.add_part(std::move(p));

  CheckReport mult = CheckReport::pass("right-coproduct-multiplicative", r.name());
  std::vector<NCTensor> delta = f_right_tensors(al);
  for (const NCPoly& rel : r.relations()) {
    mult.add_part(tensor_check("Delta(" + rel.to_string(al) + ")", r, extend_homomorphism(delta, rel, r), NCTensor(2)));
  }
  report.add_part(std::move(mult));
  NCPoly det = word(al, "ad") - word(al, "bc");
  report.note("Delta~(ad - bc)", extend_homomorphism(f_left_tensors(al), det, r).to_string(al));
  return report;
}

namespace {

LCoalgebra xpg_coalgebra() {
  BasisPtr basis = make_basis({"x", "p", "g"});
  auto t = [&](std::string_view text) { return parse_tensor(basis, 2, text); };
  BasisMap right(basis, 2), left(basis, 2);
  right.set(basis->at("x"), t("1*x(x)x"));
  right.set(basis->at("p"), t("1*p(x)x"));
  right.set(basis->at("g"), t("1*g(x)x"));
  left.set(basis->at("x"), t("1*x(x)p + 1*g(x)x"));
  left.set(basis->at("p"), t("1*p(x)p"));
  left.set(basis->at("g"), t("1*g(x)g"));
  Counit left_counit(basis);
  left_counit.set(basis->at("p"), 1);
  left_counit.set(basis->at("g"), 1);
  return LCoalgebra{"xpg", basis, std::move(right), std::move(left), std::nullopt, std::move(left_counit)};
}

}  // namespace

CheckReport verify_chiral_xpg() {
  LCoalgebra c = xpg_coalgebra();
  RewriteSystem r = xpg_system();
  const Alphabet& al = r.alphabet();
  CheckReport report = CheckReport::pass("chiral-xpg", "x,p,g");
  report.note("eta", "q");
  report.note("mu", "q^2");
  report.add_part(check_coassoc(c, Side::Right));
  report.add_part(check_coassoc(c, Side::Left));
  report.add_part(check_entanglement(c));
  ChiralityVerdict chir = classify_chirality(c);
  if (chir.verdict == Chirality::Chiral) {
    CheckReport ok = CheckReport::pass("chirality", c.name);
    ok.note("witness", chir.witness.value_or(""));
    const CheckReport* swapped = chir.report.find("swapped-entanglement");
    if (swapped && swapped->counterexample) {
      ok.note("(Delta(x)id)Delta~", swapped->counterexample->lhs);
      ok.note("(id(x)Delta~)Delta", swapped->counterexample->rhs);
    }
    report.add_part(std::move(ok));
  } else {
    report.add_part(CheckReport::fail("chirality", c.name, {"classification", std::string(to_string(chir.verdict)), "chiral"}));
  }
  report.add_part(check_counit(c, Side::Left));

  // Generator images in the presented algebra, letters in alphabet order x, p, g.
  std::vector<NCTensor> delta{pair_tensor(al, {{"x", "x", 1}}), pair_tensor(al, {{"p", "x", 1}}),
                              pair_tensor(al, {{"g", "x", 1}})};
  std::vector<NCTensor> delta_left{pair_tensor(al, {{"x", "p", 1}, {"g", "x", 1}}), pair_tensor(al, {{"p", "p", 1}}),
                                   pair_tensor(al, {{"g", "g", 1}})};
  std::vector<NCTensor> counit_left{NCTensor(0), NCTensor::unit(0), NCTensor::unit(0)};
  for (const auto& [name, images, rank] :
       {std::tuple{"Delta", &delta, std::size_t{2}}, std::tuple{"Delta~", &delta_left, std::size_t{2}},
        std::tuple{"eps~", &counit_left, std::size_t{0}}}) {
    CheckReport mult = CheckReport::pass(std::string(name) + "-multiplicative", r.name());
    for (const NCPoly& rel : r.relations()) {
      mult.add_part(tensor_check(std::string(name) + "(" + rel.to_string(al) + ")", r,
                                 extend_homomorphism(*images, rel, r), NCTensor(rank)));
    }
    report.add_part(std::move(mult));
  }
  NCPoly xg = word(al, "xg"), gx = word(al, "gx");
  report.add_part(tensor_check("Delta(xg) = eta Delta(gx)", r, extend_homomorphism(delta, xg, r),
                               Scalar::q(1) * extend_homomorphism(delta, gx, r)));
  return report;
}

std::string_view to_string(StarConvention s) {
  return s == StarConvention::Componentwise ? "componentwise" : "leg-reversing";
}

CheckReport verify_suq2_left(StarConvention star) {
  BasisPtr basis = make_basis({"a", "a*", "c", "c*"});
  const BasisId a = basis->at("a"), as = basis->at("a*"), c = basis->at("c"), cs = basis->at("c*");
  auto star_id = [&](BasisId x) { return BasisId{x.index ^ 1u}; };
  auto star_tensor = [&](const TensorElem& t) {
    TensorElem out(basis, t.rank());
    for (const auto& [k, s] : t.terms()) {
      Key sk;
      for (BasisId x : k) sk.push_back(star_id(x));
      if (star == StarConvention::LegReversing) std::reverse(sk.begin(), sk.end());
      out.add_term(sk, s);
    }
    return out;
  };
  auto term = [&](BasisId x, BasisId y, const Scalar& s) { return TensorElem::pure(basis, {x, y}, s); };

  BasisMap right(basis, 2), left(basis, 2);
  right.set(a, term(a, a, 1) + term(cs, c, -Scalar::q(1)));
  right.set(c, term(c, a, 1) + term(as, c, 1));
  left.set(a, term(cs, a, 1) + term(a, c, 1));
  left.set(c, term(c, c, 1) + term(as, a, -Scalar::q(-1)));
  for (BasisId x : {a, c}) {
    right.set(star_id(x), star_tensor(right(x)));
    left.set(star_id(x), star_tensor(left(x)));
  }
  Counit left_counit(basis);
  left_counit.set(c, 1);
  left_counit.set(cs, 1);
  LCoalgebra su{"suq2-left-" + std::string(to_string(star)), basis, std::move(right), std::move(left), std::nullopt,
                std::move(left_counit)};

  CheckReport report = CheckReport::pass("suq2-left", su.name);
  report.note("star", std::string(to_string(star)));
  report.add_part(check_coassoc(su, Side::Left));
  report.add_part(check_entanglement(su));
  report.add_part(check_pair_relation("swapped-entanglement", su.name, basis, 1, BlockMap::from(su.right),
                                      BlockMap::from(su.left)));
  report.add_part(check_counit(su, Side::Left));
  report.note("right-coassoc", check_coassoc(su, Side::Right).verdict ? "true" : "false");
  return report;
}

}  // namespace lcoalg
