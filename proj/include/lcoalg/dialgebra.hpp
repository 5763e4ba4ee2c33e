#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lcoalg/lcoalgebra.hpp"
#include "lcoalg/report.hpp"

namespace lcoalg {

/// Dense m x m rational matrix.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t m);
  static RatMatrix identity(std::size_t m);

  std::size_t size() const { return m_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * m_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, RatMatrix a);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  /// `[[1, 0], [0, 1]]`.
  std::string to_string() const;

 private:
  void check_size(const RatMatrix& o) const;

  std::size_t m_;
  std::vector<Rational> data_;
};

/// Linear map from a coalgebra's space into M_m(Q), given on the basis.
class LinMapToAlg {
 public:
  LinMapToAlg(BasisPtr basis, std::size_t m);
  /// Entries drawn uniformly from {-2, ..., 2}.
  static LinMapToAlg random(BasisPtr basis, std::size_t m, std::mt19937_64& rng);

  const BasisPtr& basis() const { return basis_; }
  std::size_t m() const { return m_; }
  const RatMatrix& operator()(BasisId id) const { return images_.at(id.index); }
  RatMatrix& operator[](BasisId id) { return images_.at(id.index); }
  bool is_zero() const;

  LinMapToAlg& operator+=(const LinMapToAlg& o);
  LinMapToAlg& operator-=(const LinMapToAlg& o);
  friend LinMapToAlg operator+(LinMapToAlg a, const LinMapToAlg& b) { return a += b; }
  friend LinMapToAlg operator-(LinMapToAlg a, const LinMapToAlg& b) { return a -= b; }
  friend bool operator==(const LinMapToAlg& a, const LinMapToAlg& b) { return a.images_ == b.images_; }

  /// `a: [[..]]; b: [[..]]`.
  std::string to_string() const;

 private:
  void check_compatible(const LinMapToAlg& o) const;

  BasisPtr basis_;
  std::size_t m_;
  std::vector<RatMatrix> images_;
};

/// (f * g)(v) = sum over terms l u (x) w of delta(v) of l(q0) f(u) g(w).
/// Throws SizeMismatch when f and g disagree on basis or matrix size.
LinMapToAlg convolve(const LinMapToAlg& f, const LinMapToAlg& g, const BasisMap& delta, const Rational& q0 = 1);

struct SampleConfig {
  std::size_t m = 2;
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  Rational q0 = 1;
};

/// Associativity of the right (f -| g, from Delta) and left (f |- g, from
/// Delta~) products and the three mixed dialgebra laws on sampled triples.
/// Throws PreconditionFailed unless c is a coassociative co-dialgebra.
CheckReport check_dialgebra_axioms(const LCoalgebra& c, const SampleConfig& cfg);

/// [[x,y],z] = [[x,z],y] + [x,[y,z]] with [x,y] = x -| y - y |- x.
CheckReport check_leibniz(const LCoalgebra& c, const SampleConfig& cfg);

/// (x o_i y) o_j z = x o_i (y o_j z) for all i, j, with o_i the convolution
/// against coproducts[i]. Throws PreconditionFailed unless the family obeys
/// the hypercube relations.
CheckReport check_hypercube(std::span<const BasisMap> coproducts, const SampleConfig& cfg, std::string subject);

/// Associativity of x * y = sum_i x o_i y on sampled triples.
CheckReport check_sum_associative(std::span<const BasisMap> coproducts, const SampleConfig& cfg, std::string subject);

}  // namespace lcoalg
