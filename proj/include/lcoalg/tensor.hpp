#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lcoalg/scalar.hpp"

namespace lcoalg {

/// Index into the owning Basis' label table.
struct BasisId {
  std::uint32_t index = 0;
  auto operator<=>(const BasisId&) const = default;
};

/// Finite ordered basis of a free module, identified by labels.
/// Labels are nonempty, contain no whitespace and no `(x)`.
class Basis {
 public:
  explicit Basis(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(BasisId id) const { return labels_.at(id.index); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<BasisId> find(std::string_view label) const;
  /// Throws Error(UnknownLabel).
  BasisId at(std::string_view label) const;
  std::vector<BasisId> ids() const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using BasisPtr = std::shared_ptr<const Basis>;

BasisPtr make_basis(std::vector<std::string> labels);
bool same_basis(const BasisPtr& a, const BasisPtr& b);

using Key = std::vector<BasisId>;

/// Sparse element of the rank-fold tensor power of the free module on `basis`.
/// Rank 0 is a bare scalar stored under the empty key.
class TensorElem {
 public:
  using Terms = std::map<Key, Scalar>;

  TensorElem(BasisPtr basis, std::size_t rank);

  static TensorElem pure(BasisPtr basis, Key key, const Scalar& coefficient = Scalar(1));
  static TensorElem vector(BasisPtr basis, BasisId id);
  static TensorElem scalar(BasisPtr basis, const Scalar& value);

  const BasisPtr& basis() const { return basis_; }
  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of `key` (zero when absent).
  Scalar coefficient(const Key& key) const;

  /// Accumulates coefficient * key; zero results are dropped.
  void add_term(const Key& key, const Scalar& coefficient);
  void add_term(Key&& key, const Scalar& coefficient);

  TensorElem operator-() const;
  TensorElem& operator+=(const TensorElem& other);
  TensorElem& operator-=(const TensorElem& other);
  TensorElem& operator*=(const Scalar& s);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const Scalar& s, TensorElem t) { return t *= s; }

  /// Same basis labels, same rank, same term map.
  friend bool operator==(const TensorElem& a, const TensorElem& b);

  /// `1*a(x)a + 1*b(x)c`; non-rational coefficients are parenthesized,
  /// `(q^-1)*a(x)b`. Zero renders as `0`.
  std::string to_string() const;
  std::string key_string(const Key& key) const;

 private:
  void check_compatible(const TensorElem& other) const;

  BasisPtr basis_;
  std::size_t rank_;
  Terms terms_;
};

/// Parses the rendering of `TensorElem::to_string` for the given rank.
TensorElem parse_tensor(const BasisPtr& basis, std::size_t rank, std::string_view text);

TensorElem tensor_product(const TensorElem& a, const TensorElem& b);

/// Output leg i carries input leg perm[i] (1-based); e.g. {2, 1} is the transposition.
TensorElem permute_legs(const TensorElem& t, std::span<const std::size_t> perm);
TensorElem transpose(const TensorElem& t);

/// Linear map L -> L^{(x) out_rank} given by its images on basis elements.
class BasisMap {
 public:
  BasisMap(BasisPtr basis, std::size_t out_rank);

  static BasisMap identity(BasisPtr basis);
  static BasisMap zero(BasisPtr basis, std::size_t out_rank) { return BasisMap(std::move(basis), out_rank); }

  const BasisPtr& basis() const { return basis_; }
  std::size_t out_rank() const { return out_rank_; }
  const TensorElem& image(BasisId id) const { return images_.at(id.index); }
  const TensorElem& operator()(BasisId id) const { return image(id); }
  void set(BasisId id, TensorElem image);
  /// Image of a rank-1 element.
  TensorElem apply(const TensorElem& v) const;

  BasisMap& operator+=(const BasisMap& other);
  BasisMap& operator*=(const Scalar& s);
  friend bool operator==(const BasisMap& a, const BasisMap& b) { return a.images_ == b.images_; }

 private:
  BasisPtr basis_;
  std::size_t out_rank_;
  std::vector<TensorElem> images_;
};

/// Linear form L -> k given on basis elements.
class Counit {
 public:
  explicit Counit(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  const Scalar& operator()(BasisId id) const { return values_.at(id.index); }
  void set(BasisId id, Scalar value) { values_.at(id.index) = std::move(value); }
  friend bool operator==(const Counit& a, const Counit& b) { return a.values_ == b.values_; }

 private:
  BasisPtr basis_;
  std::vector<Scalar> values_;
};

/// Applies f on leg `leg` (1-based), the identity elsewhere.
TensorElem apply_on_leg(const BasisMap& f, const TensorElem& t, std::size_t leg);
/// Contracts leg `leg` (1-based) with a linear form.
TensorElem apply_counit_on_leg(const Counit& eps, const TensorElem& t, std::size_t leg);

/// Multilinear map L^{(x) in_rank} -> L^{(x) out_rank}, given on basis tensors.
/// Used for the degree-n coproducts id_{n-1} (x) Delta and their counits.
struct BlockMap {
  std::size_t in_rank = 1;
  std::size_t out_rank = 2;
  std::function<TensorElem(const Key&)> on_basis;

  static BlockMap from(const BasisMap& f);
  static BlockMap from(const Counit& eps);
};

/// Applies f to legs [first_leg, first_leg + f.in_rank) (1-based), identity elsewhere.
TensorElem apply_on_legs(const BlockMap& f, const TensorElem& t, std::size_t first_leg);

/// f (x) id^{(x) k}: f on the leading legs.
TensorElem apply_left(const BlockMap& f, const TensorElem& t);
/// id^{(x) k} (x) f: f on the trailing legs.
TensorElem apply_right(const BlockMap& f, const TensorElem& t);

/// All pure basis tensors of the given rank, in lexicographic order.
std::vector<Key> basis_keys(const Basis& basis, std::size_t rank);

}  // namespace lcoalg
