#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcoalg/graph.hpp"
#include "lcoalg/lcoalgebra.hpp"
#include "lcoalg/report.hpp"

namespace lcoalg {

/// Upper bound on n for the shift family.
inline constexpr std::size_t kFamilyMaxN = 8;

/// F_n: basis U_ij and the n shift coproducts
///   Delta_[alpha] U_ij = sum_k U_{i p^alpha(k)} (x) U_kj,   p(k) = k + 1 mod n,
/// with counits eps_[alpha](U_{i p^alpha(i)}) = 1.
struct FnFamily {
  std::size_t n;
  BasisPtr basis;
  std::vector<BasisMap> coproducts;
  std::vector<Counit> counits;
};

/// 1 <= n <= 8; throws TooLarge above.
FnFamily build_fn(std::size_t n);

/// F on a, b, c, d: right = Delta_[0], left = Delta_[1] of F_2, with counits.
LCoalgebra f_coalgebra();

/// The counit of Delta_[alpha] and both of its counit laws.
/// Throws IndexOutOfRange unless alpha < n.
std::pair<Counit, CheckReport> counit_alpha(const FnFamily& f, std::size_t alpha);

/// (D_i (x) id) D_j = (id (x) D_j) D_i for every ordered pair (i, j),
/// coassociativity included as i = j.
CheckReport check_hypercube_relations(std::span<const BasisMap> coproducts, std::string subject);
CheckReport verify_family_entanglement(const FnFamily& f);

/// Tiling of the (n^2,1)-De Bruijn graph by the supports of Delta_[alpha];
/// U_ij is identified with De Bruijn vertex (i-1)n + (j-1). Arrow identity
/// is the (source, target) pair.
struct TilingReport {
  std::size_t n = 0;
  bool pairwise_disjoint = false;
  bool union_is_complete = false;
  std::vector<std::size_t> arrow_counts;
  bool verdict = false;
  std::vector<DirectedGraph> supports;
  DirectedGraph glued;
};

TilingReport verify_tiling(std::size_t n);
Json to_json(const TilingReport& r);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// D'_i = sum_j z_ij D_j. Throws PreconditionFailed when the input family
/// violates the hypercube relations, SizeMismatch when z is not n x n.
std::pair<std::vector<BasisMap>, CheckReport> matrix_action(std::span<const BasisMap> coproducts, const ScalarMatrix& z);

/// Delta_M(U_i) [-] Delta~_M(U_j) against Delta_[0] U_ij for all i, j; 2 <= n <= 6.
CheckReport reconstruct_delta0(std::size_t n);

/// The box product, the pairings <.,.>, per and <.,.>_* on the Markov
/// vectors of the (2,1)-De Bruijn graph, against the coproduct of F.
CheckReport bracket_reconstruction_n2();

/// Square matrix of tensors over one basis, all of one rank.
using TensorMatrix = std::vector<std::vector<TensorElem>>;

/// U with entries the rank-1 basis vectors U_ij.
TensorMatrix symbolic_u(const FnFamily& f);
/// P^alpha(A)_ij = A_{i p^alpha(j)}; negative alpha shifts backwards.
TensorMatrix shift_columns(const TensorMatrix& a, long alpha);
/// (A (x)bar B)_ij = sum_k A_ik (x) B_kj.
TensorMatrix bar_tensor(const TensorMatrix& a, const TensorMatrix& b);

/// Compares P^alpha(P^alpha(U) (x)bar P^-alpha(U)) and P^alpha(U) (x)bar U
/// with the materialized Delta_[alpha] for every alpha.
CheckReport check_shift_forms(const FnFamily& f);

}  // namespace lcoalg
