#include "lcoalg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lcoalg/error.hpp"

namespace lcoalg {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Right: return "right";
    case Provenance::Left: return "left";
    case Provenance::Plain: return "plain";
  }
  return "plain";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "right") return Provenance::Right;
  if (text == "left") return Provenance::Left;
  if (text == "plain") return Provenance::Plain;
  throw Error(ErrorKind::ParseError, "unknown provenance '" + std::string(text) + "'");
}

DirectedGraph::DirectedGraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(std::move(v));
}

std::size_t DirectedGraph::add_vertex(std::string label) {
  if (label.empty()) throw Error(ErrorKind::ParseError, "empty vertex label");
  auto [it, inserted] = index_.emplace(label, vertices_.size());
  if (!inserted) throw Error(ErrorKind::ParseError, "duplicate vertex '" + label + "'");
  vertices_.push_back(std::move(label));
  return it->second;
}

void DirectedGraph::add_arrow(std::size_t source, std::size_t target, const Scalar& weight, Provenance provenance) {
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "arrow endpoint is not a vertex");
  }
  if (weight.is_zero()) return;
  auto key = std::make_tuple(source, target, provenance);
  auto [it, inserted] = arrows_.try_emplace(key, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second.is_zero()) arrows_.erase(it);
  }
}

void DirectedGraph::add_arrow(std::string_view source, std::string_view target, const Scalar& weight,
                              Provenance provenance) {
  add_arrow(vertex(source), vertex(target), weight, provenance);
}

std::optional<std::size_t> DirectedGraph::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DirectedGraph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw Error(ErrorKind::UnknownLabel, "no vertex '" + std::string(label) + "'");
}

std::vector<Arrow> DirectedGraph::arrows() const {
  std::vector<Arrow> out;
  out.reserve(arrows_.size());
  for (const auto& [key, w] : arrows_) out.push_back({std::get<0>(key), std::get<1>(key), w, std::get<2>(key)});
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> DirectedGraph::arrow_pairs() const {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [key, w] : arrows_) out.emplace(std::get<0>(key), std::get<1>(key));
  return out;
}

std::set<std::pair<std::string, std::string>> DirectedGraph::labelled_arrow_pairs() const {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [key, w] : arrows_) out.emplace(vertices_[std::get<0>(key)], vertices_[std::get<1>(key)]);
  return out;
}

std::size_t DirectedGraph::out_degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& [key, w] : arrows_) d += std::get<0>(key) == v;
  return d;
}

std::size_t DirectedGraph::in_degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& [key, w] : arrows_) d += std::get<1>(key) == v;
  return d;
}

std::string de_bruijn_label(const std::vector<std::size_t>& word, std::size_t p) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (p > 10 && i > 0) out += '.';
    out += std::to_string(word[i]);
  }
  return out;
}

DirectedGraph de_bruijn(std::size_t p, std::size_t n) {
  if (p < 1 || n < 1) throw Error(ErrorKind::PreconditionFailed, "de_bruijn needs p >= 1 and n >= 1");
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= p;
    if (count > kDeBruijnMaxVertices) {
      throw Error(ErrorKind::TooLarge, "p^n exceeds " + std::to_string(kDeBruijnMaxVertices));
    }
  }
  // Vertex index = base-p value of the word, most significant symbol first.
  DirectedGraph g;
  std::vector<std::size_t> word(n, 0);
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t x = v;
    for (std::size_t i = n; i-- > 0;) {
      word[i] = x % p;
      x /= p;
    }
    g.add_vertex(de_bruijn_label(word, p));
  }
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t shifted = (v * p) % count;
    for (std::size_t a = 0; a < p; ++a) g.add_arrow(v, shifted + a, Scalar(1), Provenance::Plain);
  }
  return g;
}

DirectedGraph line_extension(const DirectedGraph& g) {
  auto pairs = g.arrow_pairs();
  std::vector<std::pair<std::size_t, std::size_t>> nodes(pairs.begin(), pairs.end());
  DirectedGraph e;
  for (const auto& [s, t] : nodes) e.add_vertex(g.label(s) + "->" + g.label(t));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (nodes[i].second == nodes[j].first) e.add_arrow(i, j, Scalar(1), Provenance::Plain);
    }
  }
  return e;
}

namespace {

using CountMatrix = std::vector<std::vector<int>>;

CountMatrix count_matrix(const DirectedGraph& g) {
  CountMatrix m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Arrow& a : g.arrows()) ++m[a.source][a.target];
  return m;
}

// Joint colour refinement of two graphs; colours are comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const CountMatrix& a, const CountMatrix& b) {
  const std::size_t n = a.size();
  using Signature = std::vector<long>;
  auto initial = [n](const CountMatrix& m, std::size_t v) {
    long out = 0, in = 0;
    for (std::size_t u = 0; u < n; ++u) {
      out += m[v][u];
      in += m[u][v];
    }
    return Signature{m[v][v], out, in};
  };
  std::vector<int> ca(n), cb(n);
  auto assign = [&](auto&& signature_of) {
    std::map<Signature, int> ids;
    std::vector<Signature> sa(n), sb(n);
    for (std::size_t v = 0; v < n; ++v) {
      sa[v] = signature_of(a, ca, v);
      sb[v] = signature_of(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
    }
    return ids.size();
  };
  std::size_t classes = assign([&](const CountMatrix& m, const std::vector<int>&, std::size_t v) { return initial(m, v); });
  while (true) {
    std::size_t next = assign([&](const CountMatrix& m, const std::vector<int>& colours, std::size_t v) {
      Signature sig{colours[v]};
      std::vector<std::pair<int, int>> outs, ins;
      for (std::size_t u = 0; u < n; ++u) {
        if (m[v][u]) outs.emplace_back(colours[u], m[v][u]);
        if (m[u][v]) ins.emplace_back(colours[u], m[u][v]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig.push_back(static_cast<long>(outs.size()));
      for (auto [c, k] : outs) sig.insert(sig.end(), {c, k});
      sig.push_back(-1);
      for (auto [c, k] : ins) sig.insert(sig.end(), {c, k});
      return sig;
    });
    if (next == classes) break;
    classes = next;
  }
  return {ca, cb};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(CountMatrix a, CountMatrix b, std::vector<int> ca, std::vector<int> cb)
      : a_(std::move(a)), b_(std::move(b)), ca_(std::move(ca)), cb_(std::move(cb)) {
    const std::size_t n = a_.size();
    map_.assign(n, kUnset);
    used_.assign(n, false);
    std::vector<std::size_t> class_size(n + 1, 0);
    for (int c : ca_) ++class_size[static_cast<std::size_t>(c)];
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return class_size[static_cast<std::size_t>(ca_[x])] < class_size[static_cast<std::size_t>(ca_[y])];
    });
  }

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t u, std::size_t v) const {
    if (a_[u][u] != b_[v][v]) return false;
    for (std::size_t w = 0; w < a_.size(); ++w) {
      std::size_t fw = map_[w];
      if (fw == kUnset) continue;
      if (a_[u][w] != b_[v][fw] || a_[w][u] != b_[fw][v]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t u = order_[depth];
    for (std::size_t v = 0; v < b_.size(); ++v) {
      if (used_[v] || cb_[v] != ca_[u] || !consistent(u, v)) continue;
      map_[u] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      map_[u] = kUnset;
      used_[v] = false;
    }
    return false;
  }

  CountMatrix a_, b_;
  std::vector<int> ca_, cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic(const DirectedGraph& g, const DirectedGraph& h) {
  if (g.vertex_count() > kIsomorphismMaxVertices || h.vertex_count() > kIsomorphismMaxVertices) {
    throw Error(ErrorKind::TooLarge, "isomorphism search is bounded to " + std::to_string(kIsomorphismMaxVertices) + " vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.arrow_count() != h.arrow_count()) return false;
  CountMatrix a = count_matrix(g);
  CountMatrix b = count_matrix(h);
  auto [ca, cb] = refine_colours(a, b);
  std::vector<int> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  return IsomorphismSearch(std::move(a), std::move(b), std::move(ca), std::move(cb)).run();
}

bool is_stochastic(const DirectedGraph& g, const Rational& q0) {
  if (q0 == 0) throw Error(ErrorKind::ZeroBase, "stochasticity at q = 0");
  std::vector<Rational> row(g.vertex_count(), Rational(0));
  for (const Arrow& a : g.arrows()) {
    Rational w = a.weight.eval(q0);
    if (w < 0) return false;
    row[a.source] += w;
  }
  return std::all_of(row.begin(), row.end(), [](const Rational& r) { return r == 1; });
}

namespace {

void require_same_vertices(const DirectedGraph& g, const DirectedGraph& h) {
  std::set<std::string> a(g.vertices().begin(), g.vertices().end());
  std::set<std::string> b(h.vertices().begin(), h.vertices().end());
  if (a != b) throw Error(ErrorKind::VertexMismatch, "graphs have different vertex sets");
}

}  // namespace

bool arrows_disjoint(const DirectedGraph& g, const DirectedGraph& h) {
  require_same_vertices(g, h);
  auto a = g.labelled_arrow_pairs();
  for (const auto& p : h.labelled_arrow_pairs()) {
    if (a.count(p)) return false;
  }
  return true;
}

DirectedGraph arrows_union(const std::vector<DirectedGraph>& graphs) {
  if (graphs.empty()) return DirectedGraph();
  DirectedGraph out(graphs.front().vertices());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& g : graphs) {
    require_same_vertices(graphs.front(), g);
    for (const Arrow& a : g.arrows()) {
      if (seen.emplace(g.label(a.source), g.label(a.target)).second) {
        out.add_arrow(g.label(a.source), g.label(a.target), a.weight, a.provenance);
      }
    }
  }
  return out;
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string_view colour(Provenance p) {
  switch (p) {
    case Provenance::Right: return "blue";
    case Provenance::Left: return "red";
    case Provenance::Plain: return "black";
  }
  return "black";
}

}  // namespace

std::string to_dot(const DirectedGraph& g, std::string_view name) {
  std::vector<std::string> vertices = g.vertices();
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::tuple<std::string, std::string, Provenance, std::string>> edges;
  for (const Arrow& a : g.arrows()) {
    edges.emplace_back(g.label(a.source), g.label(a.target), a.provenance, a.weight.to_string());
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (const auto& v : vertices) out << "  " << quoted(v) << ";\n";
  for (const auto& [s, t, p, w] : edges) {
    out << "  " << quoted(s) << " -> " << quoted(t) << " [label=" << quoted(w) << ", color=" << colour(p) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_graph(const DirectedGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
  for (const Arrow& a : g.arrows()) {
    out << "arrow " << g.label(a.source) << " " << g.label(a.target) << " " << a.weight.to_string() << " "
        << to_string(a.provenance) << "\n";
  }
  return out.str();
}

DirectedGraph parse_graph(std::string_view text) {
  DirectedGraph g;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0].front() == '#') continue;
    try {
      if (tok[0] == "vertex" && tok.size() == 2) {
        g.add_vertex(tok[1]);
      } else if (tok[0] == "arrow" && tok.size() >= 5) {
        std::string weight;
        for (std::size_t i = 3; i + 1 < tok.size(); ++i) weight += (i > 3 ? " " : "") + tok[i];
        g.add_arrow(tok[1], tok[2], Scalar::parse(weight), parse_provenance(tok.back()));
      } else {
        throw ParseError(line_no, 1, "expected 'vertex <label>' or 'arrow <src> <tgt> <weight> <provenance>'");
      }
    } catch (const ParseError& e) {
      if (e.line() == line_no) throw;
      throw ParseError(line_no, e.column(), e.detail());
    } catch (const Error& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }
  return g;
}

}  // namespace lcoalg
