#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcoalg/report.hpp"
#include "lcoalg/scalar.hpp"

namespace lcoalg {

using Letter = std::uint8_t;
/// Empty word is the unit 1.
using Word = std::vector<Letter>;

/// Ordered single-character generators; letter order is index order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);

  std::size_t size() const { return letters_.size(); }
  char symbol(Letter l) const { return letters_.at(l); }
  /// Throws Error(UnknownLabel).
  Letter at(char symbol) const;
  /// "abc" -> word; "1" and "" are the empty word.
  Word word(std::string_view text) const;
  std::string render(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// Noncommutative polynomial: scalar-weighted words, no zero coefficients.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  NCPoly() = default;
  static NCPoly constant(const Scalar& s);
  static NCPoly monomial(Word w, const Scalar& s = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Scalar& s);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& s, const NCPoly& p);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  std::string to_string(const Alphabet& alphabet) const;

 private:
  Terms terms_;
};

/// Oriented rule: a two-letter word rewritten to a polynomial.
struct Rule {
  Word lhs;
  NCPoly rhs;
};

enum class Strategy { Leftmost, Rightmost };

/// q-commutation quotient presented by two-letter rules. Every system built
/// here terminates: each rule lowers (count of the letters it removes,
/// inversion count w.r.t. the documented letter order) lexicographically.
class RewriteSystem {
 public:
  RewriteSystem(std::string name, Alphabet alphabet, std::vector<Rule> rules, std::size_t step_budget = 100000);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t step_budget() const { return step_budget_; }

  /// Rewrites the leftmost (resp. rightmost) redex until no rule applies.
  /// Throws Error(BudgetExceeded) past step_budget rewrites.
  NCPoly normal_form(const NCPoly& p, Strategy strategy = Strategy::Leftmost) const;
  bool is_normal(const Word& w) const;
  /// lhs - rhs of every rule, i.e. the defining relations.
  std::vector<NCPoly> relations() const;

 private:
  const Rule* rule_for(Letter a, Letter b) const;

  std::string name_;
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::map<std::pair<Letter, Letter>, std::size_t> index_;
  std::size_t step_budget_;
};

/// Element of A^{(x) rank} for a presented algebra A, multiplied legwise.
class NCTensor {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, Scalar>;

  explicit NCTensor(std::size_t rank) : rank_(rank) {}
  static NCTensor pure(Key key, const Scalar& s = Scalar(1));
  /// 1 (x) ... (x) 1.
  static NCTensor unit(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Scalar& s);

  NCTensor& operator+=(const NCTensor& o);
  NCTensor& operator-=(const NCTensor& o);
  friend NCTensor operator+(NCTensor a, const NCTensor& b) { return a += b; }
  friend NCTensor operator-(NCTensor a, const NCTensor& b) { return a -= b; }
  friend NCTensor operator*(const Scalar& s, NCTensor t);
  /// Legwise product (x1 (x) y1)(x2 (x) y2) = x1x2 (x) y1y2.
  friend NCTensor operator*(const NCTensor& a, const NCTensor& b);
  friend bool operator==(const NCTensor&, const NCTensor&) = default;

  /// Normal form on every leg.
  NCTensor normal_form(const RewriteSystem& r) const;
  std::string to_string(const Alphabet& alphabet) const;

 private:
  void check_rank(const NCTensor& o) const;

  std::size_t rank_;
  Terms terms_;
};

/// Multiplicative extension of generator images (indexed by letter) to a
/// polynomial, normalized in `target`.
NCTensor extend_homomorphism(const std::vector<NCTensor>& images, const NCPoly& p, const RewriteSystem& target);
NCPoly extend_homomorphism(const std::vector<NCPoly>& images, const NCPoly& p, const RewriteSystem& target);

/// m (x) id ... applied to rank 2: x (x) y -> x y.
NCPoly multiply_legs(const NCTensor& t);

/// X, Y with YX -> q^-1 XY (eta rendered as q).
RewriteSystem eta_system();
/// a, b, c, d with ab -> q^-1 ba, ac -> q^-1 ca, db -> q bd, dc -> q cd,
/// cb -> bc, ad -> 1 + q^-1 bc, da -> 1 + q bc. Normal words are
/// b^j c^k a^i and b^j c^k d^l.
RewriteSystem slq2_system();
/// Commutative a, b, c, d with ad - bc = 1: same orientation at q = 1.
RewriteSystem commutative_f_system();
/// x, p, g with gp -> pg, xg -> eta gx, xp -> mu px (eta = q, mu = q^2).
RewriteSystem xpg_system();
/// Free algebra on X, Y (no rules).
RewriteSystem free_xy_system();

CheckReport verify_eta_relations();
CheckReport verify_slq2_antipode();
CheckReport verify_hopf_f();
CheckReport verify_chiral_xpg();

/// How * acts on a tensor: legs starred in place, or starred and reversed.
enum class StarConvention { Componentwise, LegReversing };
std::string_view to_string(StarConvention s);

CheckReport verify_suq2_left(StarConvention star = StarConvention::Componentwise);

}  // namespace lcoalg
