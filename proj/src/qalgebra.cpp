#include "lcoalg/qalgebra.hpp"

#include <optional>

#include "lcoalg/error.hpp"

namespace lcoalg {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_.find(letters_[i]) != i) throw Error(ErrorKind::PreconditionFailed, "duplicate letter in alphabet");
    if (letters_[i] == '1') throw Error(ErrorKind::PreconditionFailed, "'1' is reserved for the unit");
  }
}

Letter Alphabet::at(char symbol) const {
  auto pos = letters_.find(symbol);
  if (pos == std::string::npos) throw Error(ErrorKind::UnknownLabel, std::string("no letter '") + symbol + "'");
  return static_cast<Letter>(pos);
}

Word Alphabet::word(std::string_view text) const {
  Word w;
  if (text == "1") return w;
  for (char ch : text) w.push_back(at(ch));
  return w;
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) out += symbol(l);
  return out;
}

NCPoly NCPoly::constant(const Scalar& s) { return monomial({}, s); }

NCPoly NCPoly::monomial(Word w, const Scalar& s) {
  NCPoly p;
  p.add_term(w, s);
  return p;
}

void NCPoly::add_term(const Word& w, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly out;
  for (const auto& [w, s] : terms_) out.terms_.emplace(w, -s);
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, s] : o.terms_) add_term(w, s);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, s] : o.terms_) add_term(w, -s);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, sa] : a.terms_) {
    for (const auto& [wb, sb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, sa * sb);
    }
  }
  return out;
}

NCPoly operator*(const Scalar& s, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms_) out.add_term(w, s * c);
  return out;
}

namespace {

// Shared coefficient rendering with TensorElem: a leading sign for negative
// monomials, parentheses around q-dependent coefficients.
template <typename Terms, typename RenderKey>
std::string render_terms(const Terms& terms, RenderKey render_key) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    bool negative = c.is_monomial() && c.terms().begin()->second < 0;
    std::string coef = negative ? (-c).to_string() : c.to_string();
    if (!c.is_rational()) coef = "(" + coef + ")";
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    out += coef;
    std::string key = render_key(k);
    if (!key.empty()) out += "*" + key;
  }
  return out;
}

}  // namespace

std::string NCPoly::to_string(const Alphabet& alphabet) const {
  return render_terms(terms_, [&](const Word& w) { return w.empty() ? std::string() : alphabet.render(w); });
}

RewriteSystem::RewriteSystem(std::string name, Alphabet alphabet, std::vector<Rule> rules, std::size_t step_budget)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), rules_(std::move(rules)), step_budget_(step_budget) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& l = rules_[i].lhs;
    if (l.size() != 2) throw Error(ErrorKind::PreconditionFailed, "rewrite rules need a two-letter pattern");
    if (!index_.emplace(std::make_pair(l[0], l[1]), i).second) {
      throw Error(ErrorKind::PreconditionFailed, "duplicate rewrite pattern " + alphabet_.render(l));
    }
  }
}

const Rule* RewriteSystem::rule_for(Letter a, Letter b) const {
  auto it = index_.find({a, b});
  return it == index_.end() ? nullptr : &rules_[it->second];
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rule_for(w[i], w[i + 1])) return false;
  }
  return true;
}

std::vector<NCPoly> RewriteSystem::relations() const {
  std::vector<NCPoly> out;
  for (const Rule& r : rules_) out.push_back(NCPoly::monomial(r.lhs) - r.rhs);
  return out;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p, Strategy strategy) const {
  NCPoly pending = p;
  NCPoly out;
  std::size_t steps = 0;
  while (!pending.is_zero()) {
    auto it = pending.terms().begin();
    Word w = it->first;
    Scalar c = it->second;
    pending.add_term(w, -c);

    std::optional<std::size_t> pos;
    const Rule* rule = nullptr;
    for (std::size_t n = 0; n + 1 < w.size(); ++n) {
      std::size_t i = strategy == Strategy::Leftmost ? n : w.size() - 2 - n;
      if ((rule = rule_for(w[i], w[i + 1]))) {
        pos = i;
        break;
      }
    }
    if (!pos) {
      out.add_term(w, c);
      continue;
    }
    if (++steps > step_budget_) {
      throw Error(ErrorKind::BudgetExceeded, "normal form in " + name_ + " exceeded " + std::to_string(step_budget_) + " steps");
    }
    for (const auto& [rw, rc] : rule->rhs.terms()) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos + 2), w.end());
      pending.add_term(nw, c * rc);
    }
  }
  return out;
}

NCTensor NCTensor::pure(Key key, const Scalar& s) {
  NCTensor t(key.size());
  t.add_term(key, s);
  return t;
}

NCTensor NCTensor::unit(std::size_t rank) { return pure(Key(rank)); }

void NCTensor::add_term(const Key& k, const Scalar& s) {
  if (k.size() != rank_) throw Error(ErrorKind::SizeMismatch, "tensor key has the wrong rank");
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCTensor::check_rank(const NCTensor& o) const {
  if (rank_ != o.rank_) throw Error(ErrorKind::SizeMismatch, "tensor ranks differ");
}

NCTensor& NCTensor::operator+=(const NCTensor& o) {
  check_rank(o);
  for (const auto& [k, s] : o.terms_) add_term(k, s);
  return *this;
}

NCTensor& NCTensor::operator-=(const NCTensor& o) {
  check_rank(o);
  for (const auto& [k, s] : o.terms_) add_term(k, -s);
  return *this;
}

NCTensor operator*(const Scalar& s, NCTensor t) {
  NCTensor out(t.rank_);
  for (const auto& [k, c] : t.terms_) out.add_term(k, s * c);
  return out;
}

NCTensor operator*(const NCTensor& a, const NCTensor& b) {
  a.check_rank(b);
  NCTensor out(a.rank_);
  for (const auto& [ka, sa] : a.terms_) {
    for (const auto& [kb, sb] : b.terms_) {
      NCTensor::Key k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i].insert(k[i].end(), kb[i].begin(), kb[i].end());
      out.add_term(k, sa * sb);
    }
  }
  return out;
}

NCTensor NCTensor::normal_form(const RewriteSystem& r) const {
  NCTensor out(rank_);
  for (const auto& [k, s] : terms_) {
    // Expand the product of the legs' normal forms.
    std::vector<std::pair<Key, Scalar>> partial{{Key{}, s}};
    for (const Word& w : k) {
      NCPoly leg = r.normal_form(NCPoly::monomial(w));
      std::vector<std::pair<Key, Scalar>> next;
      for (const auto& [pk, ps] : partial) {
        for (const auto& [lw, ls] : leg.terms()) {
          Key nk = pk;
          nk.push_back(lw);
          next.emplace_back(std::move(nk), ps * ls);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pk, ps] : partial) out.add_term(pk, ps);
  }
  return out;
}

std::string NCTensor::to_string(const Alphabet& alphabet) const {
  return render_terms(terms_, [&](const Key& k) {
    std::string out;
    for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "(x)" : "") + alphabet.render(k[i]);
    return out;
  });
}

NCTensor extend_homomorphism(const std::vector<NCTensor>& images, const NCPoly& p, const RewriteSystem& target) {
  if (images.empty()) throw Error(ErrorKind::PreconditionFailed, "no generator images");
  const std::size_t rank = images.front().rank();
  NCTensor out(rank);
  for (const auto& [w, s] : p.terms()) {
    NCTensor prod = NCTensor::unit(rank);
    for (Letter l : w) prod = (prod * images.at(l)).normal_form(target);
    out += s * prod;
  }
  return out.normal_form(target);
}

NCPoly extend_homomorphism(const std::vector<NCPoly>& images, const NCPoly& p, const RewriteSystem& target) {
  NCPoly out;
  for (const auto& [w, s] : p.terms()) {
    NCPoly prod = NCPoly::constant(1);
    for (Letter l : w) prod = target.normal_form(prod * images.at(l));
    out += s * prod;
  }
  return target.normal_form(out);
}

NCPoly multiply_legs(const NCTensor& t) {
  NCPoly out;
  for (const auto& [k, s] : t.terms()) {
    Word w;
    for (const Word& leg : k) w.insert(w.end(), leg.begin(), leg.end());
    out.add_term(w, s);
  }
  return out;
}

namespace {

Rule rule(const Alphabet& al, std::string_view lhs, std::vector<std::pair<std::string_view, Scalar>> rhs) {
  NCPoly p;
  for (const auto& [w, s] : rhs) p.add_term(al.word(w), s);
  return Rule{al.word(lhs), std::move(p)};
}

}  // namespace

RewriteSystem eta_system() {
  Alphabet al("XY");
  return RewriteSystem("eta", al, {rule(al, "YX", {{"XY", Scalar::q(-1)}})});
}

RewriteSystem slq2_system() {
  Alphabet al("abcd");
  return RewriteSystem("slq2", al,
                       {rule(al, "ab", {{"ba", Scalar::q(-1)}}), rule(al, "ac", {{"ca", Scalar::q(-1)}}),
                        rule(al, "db", {{"bd", Scalar::q(1)}}), rule(al, "dc", {{"cd", Scalar::q(1)}}),
                        rule(al, "cb", {{"bc", Scalar(1)}}),
                        rule(al, "ad", {{"1", Scalar(1)}, {"bc", Scalar::q(-1)}}),
                        rule(al, "da", {{"1", Scalar(1)}, {"bc", Scalar::q(1)}})});
}

RewriteSystem commutative_f_system() {
  Alphabet al("abcd");
  return RewriteSystem("commutative-f", al,
                       {rule(al, "ab", {{"ba", Scalar(1)}}), rule(al, "ac", {{"ca", Scalar(1)}}),
                        rule(al, "db", {{"bd", Scalar(1)}}), rule(al, "dc", {{"cd", Scalar(1)}}),
                        rule(al, "cb", {{"bc", Scalar(1)}}), rule(al, "ad", {{"1", Scalar(1)}, {"bc", Scalar(1)}}),
                        rule(al, "da", {{"1", Scalar(1)}, {"bc", Scalar(1)}})});
}

RewriteSystem xpg_system() {
  Alphabet al("xpg");
  return RewriteSystem("xpg", al,
                       {rule(al, "gp", {{"pg", Scalar(1)}}), rule(al, "xg", {{"gx", Scalar::q(1)}}),
                        rule(al, "xp", {{"px", Scalar::q(2)}})});
}

RewriteSystem free_xy_system() { return RewriteSystem("free", Alphabet("XY"), {}); }

}  // namespace lcoalg
