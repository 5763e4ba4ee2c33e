#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcoalg/graph.hpp"
#include "lcoalg/report.hpp"
#include "lcoalg/tensor.hpp"

namespace lcoalg {

enum class Side { Right, Left };
std::string_view to_string(Side s);

/// Finite-dimensional L-coalgebra: right coproduct, left coproduct and
/// optional counits. A plain coassociative coalgebra is stored with
/// left == right (the degenerate case).
struct LCoalgebra {
  std::string name;
  BasisPtr basis;
  BasisMap right;
  BasisMap left;
  std::optional<Counit> right_counit;
  std::optional<Counit> left_counit;

  /// Degenerate coalgebra with both coproducts equal to `delta`.
  static LCoalgebra coassociative(std::string name, BasisMap delta, std::optional<Counit> counit = std::nullopt);

  bool degenerate() const { return right == left; }
  const BasisMap& coproduct(Side s) const { return s == Side::Right ? right : left; }
  const std::optional<Counit>& counit(Side s) const { return s == Side::Right ? right_counit : left_counit; }
};

/// Same coefficients on a basis with the same size but other labels.
BasisMap rebase(const BasisMap& f, const BasisPtr& basis);
Counit rebase(const Counit& eps, const BasisPtr& basis);
LCoalgebra relabel(const LCoalgebra& c, std::vector<std::string> labels);

/// The pair relation (A (x) id) B = (id (x) B) A on every basis tensor of
/// rank `rank`. Coassociativity is pair_relation(D, D), entanglement is
/// pair_relation(left, right), and the hypercube relations are
/// pair_relation(D_i, D_j).
CheckReport check_pair_relation(std::string check, std::string subject, const BasisPtr& basis, std::size_t rank,
                                const BlockMap& a, const BlockMap& b);

DirectedGraph geometric_support(const LCoalgebra& c);

/// Delta v = sum over arrows v->u of w v(x)u; left Delta v = sum over arrows u->v of w u(x)v.
LCoalgebra markov_from_graph(const DirectedGraph& g, std::string name = "markov");

/// Sets both counits to the constant `value` on every basis element
/// (1/p for the Markov coalgebra of a (p,n)-De Bruijn graph).
LCoalgebra with_constant_counits(LCoalgebra c, const Scalar& value);

CheckReport check_coassoc(const LCoalgebra& c, Side side);
/// (left (x) id) right = (id (x) right) left.
CheckReport check_entanglement(const LCoalgebra& c);

enum class Chirality { Achiral, Chiral, NotEntangled };
std::string_view to_string(Chirality c);

struct ChiralityVerdict {
  Chirality verdict;
  /// Basis element where the failing equation breaks, if any.
  std::optional<std::string> witness;
  /// `entanglement` or `swapped entanglement`.
  std::optional<std::string> failing_equation;
  CheckReport report;
};

/// Achiral when the entanglement equation also holds with the coproducts
/// swapped, chiral when only the original one holds.
ChiralityVerdict classify_chirality(const LCoalgebra& c);

/// (id (x) eps) Delta = id, resp. (eps~ (x) id) Delta~ = id. Throws
/// Error(MissingCounit) when the side's counit is absent.
CheckReport check_counit(const LCoalgebra& c, Side side);

/// Delta v = tau Delta~ v on every basis element.
CheckReport check_l_cocommutative(const LCoalgebra& c);

/// Basis of ker(Delta - tau Delta~) over Q, as rank-1 tensors in reduced
/// echelon form. Throws Error(NonRationalScalars) on q-dependent coefficients.
std::vector<TensorElem> cocommutator_kernel(const LCoalgebra& c);

/// The four co-dialgebra axioms for degree-n coproducts on rank-n tensors:
/// both coassociative, (id (x) R) R = (id (x) L) R, (L (x) id) L = (R (x) id) L,
/// and (L (x) id) R = (id (x) R) L.
CheckReport check_codialgebra_axioms(std::string subject, const BasisPtr& basis, std::size_t degree,
                                     const BlockMap& right, const BlockMap& left);
CheckReport check_codialgebra(const LCoalgebra& c);

/// Upper bound on basis_size^n for degree lifts.
inline constexpr std::size_t kLiftMaxKeys = 4096;

struct DegreeLift {
  std::size_t degree;
  BasisPtr basis;
  BlockMap right;        // id_{n-1} (x) Delta
  BlockMap left;         // Delta (x) id_{n-1}
  BlockMap right_counit; // id_{n-1} (x) eps
  BlockMap left_counit;  // eps (x) id_{n-1}
  CheckReport report;
};

/// Degree-n lift of a counital coassociative coalgebra (c.right, c.right_counit).
/// Checks coassociativity of both lifted coproducts, entanglement and the
/// two counit laws; for n = 2 also the full co-dialgebra axiom set.
/// Throws NotCoassociative, MissingCounit or TooLarge.
DegreeLift lift_degree(const LCoalgebra& c, std::size_t n);

/// delta(a) = a (x) 1 and delta~(a) = 1 (x) a on every basis element.
LCoalgebra flower(std::vector<std::string> labels, std::string_view unit_label);

/// right: x -> Delta x - x (x) e, left: x -> Delta x - e (x) x, for a group-like e
/// of the coassociative coalgebra (c.basis, c.right). The report carries the
/// verified entanglement of the result.
std::pair<LCoalgebra, CheckReport> from_grouplike(const LCoalgebra& c, std::string_view e);

/// Basis labels `b|c`; both coproducts of b paired with the coproduct of c
/// through the middle transposition. Throws PreconditionFailed when b is not
/// a co-dialgebra or c.right is not coassociative.
std::pair<LCoalgebra, CheckReport> tensor_codialgebra(const LCoalgebra& b, const LCoalgebra& c);

/// Upper bound on m + n for the attractor construction.
inline constexpr std::size_t kAttractorMaxBasis = 64;

/// Basis x1..xm, alpha1..alphan with Delta x_i = sum_j x_i (x) alpha_j,
/// Delta~ x_i = sum_j alpha_j (x) x_i, and the Markov coproducts of the
/// complete graph with loops on the alpha block.
std::pair<LCoalgebra, CheckReport> attractor_codialgebra(std::size_t m, std::size_t n);

/// Delta D = (id (x) D) Delta + (D (x) id) Delta against the chosen coproduct.
CheckReport check_coderivation(const LCoalgebra& c, const BasisMap& d, Side side);

/// n^2 labels U_ij (1-based, row-major).
BasisPtr matrix_unit_basis(std::size_t n);

/// D(U_ij) = sum_k U_kj - U_ik on matrix_unit_basis(n); 2 <= n <= 8.
BasisMap canonical_coderivation(std::size_t n);

}  // namespace lcoalg
