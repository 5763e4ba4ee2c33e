#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcoalg/scalar.hpp"

namespace lcoalg {

/// Which coproduct produced an arrow of a geometric support.
enum class Provenance { Right, Left, Plain };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

struct Arrow {
  std::size_t source;
  std::size_t target;
  Scalar weight;
  Provenance provenance;
};

/// Weighted directed multigraph with labelled vertices.
///
/// At most one arrow per (source, target, provenance); adding a second one
/// sums the weights, and an arrow whose weight cancels to zero is removed.
/// Arrows with the same endpoints but different provenance coexist.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::vector<std::string> vertices);

  std::size_t add_vertex(std::string label);
  void add_arrow(std::size_t source, std::size_t target, const Scalar& weight, Provenance provenance);
  void add_arrow(std::string_view source, std::string_view target, const Scalar& weight, Provenance provenance);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::optional<std::size_t> find_vertex(std::string_view label) const;
  std::size_t vertex(std::string_view label) const;
  const std::string& label(std::size_t v) const { return vertices_.at(v); }

  /// Arrows ordered by (source index, target index, provenance).
  std::vector<Arrow> arrows() const;
  std::size_t arrow_count() const { return arrows_.size(); }
  /// Distinct (source, target) pairs; weights and provenance ignored.
  std::set<std::pair<std::size_t, std::size_t>> arrow_pairs() const;
  std::set<std::pair<std::string, std::string>> labelled_arrow_pairs() const;

  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;

 private:
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::tuple<std::size_t, std::size_t, Provenance>, Scalar> arrows_;
};

/// Upper bound on p^n accepted by `de_bruijn`.
inline constexpr std::size_t kDeBruijnMaxVertices = 10000;
/// Upper bound on vertex count accepted by `is_isomorphic`.
inline constexpr std::size_t kIsomorphismMaxVertices = 100;

/// Label of a word over p symbols: digits concatenated when p <= 10,
/// decimal symbols joined by '.' otherwise.
std::string de_bruijn_label(const std::vector<std::size_t>& word, std::size_t p);

/// (p,n)-De Bruijn graph: vertices are the length-n words over p symbols in
/// lexicographic order; s1..sn -> s2..sn a for every symbol a, weight 1.
DirectedGraph de_bruijn(std::size_t p, std::size_t n);

/// Directed line graph: one vertex `src->tgt` per distinct (source, target)
/// pair of g, and an arrow (u->v) -> (v->w) for every composable pair.
DirectedGraph line_extension(const DirectedGraph& g);

/// Vertex bijection preserving arrow multiplicity per (source, target).
bool is_isomorphic(const DirectedGraph& g, const DirectedGraph& h);

/// All weights evaluate to >= 0 at q0 and every vertex's outgoing weights sum to 1.
bool is_stochastic(const DirectedGraph& g, const Rational& q0);

/// Arrow sets compared as (source label, target label) pairs. Both graphs
/// must have the same vertex label set, else Error(VertexMismatch).
bool arrows_disjoint(const DirectedGraph& g, const DirectedGraph& h);
DirectedGraph arrows_union(const std::vector<DirectedGraph>& graphs);

/// Deterministic DOT: vertices and arrows sorted by label; provenance as
/// colour (right blue, left red, plain black), weight as label.
std::string to_dot(const DirectedGraph& g, std::string_view name = "G");

/// `vertex a` / `arrow a b <weight> right|left|plain`, one record per line.
std::string render_graph(const DirectedGraph& g);
DirectedGraph parse_graph(std::string_view text);

}  // namespace lcoalg
