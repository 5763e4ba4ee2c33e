#include "lcoalg/dialgebra.hpp"

#include <functional>

#include "lcoalg/error.hpp"
#include "lcoalg/tiling.hpp"

namespace lcoalg {

RatMatrix::RatMatrix(std::size_t m) : m_(m), data_(m * m, Rational(0)) {
  if (m == 0) throw Error(ErrorKind::PreconditionFailed, "matrix size must be positive");
}

RatMatrix RatMatrix::identity(std::size_t m) {
  RatMatrix out(m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = 1;
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

void RatMatrix::check_size(const RatMatrix& o) const {
  if (m_ != o.m_) throw Error(ErrorKind::SizeMismatch, "matrix sizes differ");
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  check_size(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  check_size(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  a.check_size(b);
  RatMatrix out(a.m_);
  for (std::size_t i = 0; i < a.m_; ++i) {
    for (std::size_t k = 0; k < a.m_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.m_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RatMatrix operator*(const Rational& s, RatMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

std::string RatMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < m_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m_; ++j) out += (j ? ", " : "") + lcoalg::to_string((*this)(i, j));
    out += "]";
  }
  return out + "]";
}

LinMapToAlg::LinMapToAlg(BasisPtr basis, std::size_t m)
    : basis_(std::move(basis)), m_(m), images_(basis_->size(), RatMatrix(m)) {}

LinMapToAlg LinMapToAlg::random(BasisPtr basis, std::size_t m, std::mt19937_64& rng) {
  LinMapToAlg f(std::move(basis), m);
  for (auto& img : f.images_) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) img(i, j) = static_cast<long>(rng() % 5) - 2;
    }
  }
  return f;
}

bool LinMapToAlg::is_zero() const {
  for (const auto& img : images_) {
    if (!img.is_zero()) return false;
  }
  return true;
}

void LinMapToAlg::check_compatible(const LinMapToAlg& o) const {
  if (m_ != o.m_ || !same_basis(basis_, o.basis_)) throw Error(ErrorKind::SizeMismatch, "maps have different shapes");
}

LinMapToAlg& LinMapToAlg::operator+=(const LinMapToAlg& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
  return *this;
}

LinMapToAlg& LinMapToAlg::operator-=(const LinMapToAlg& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= o.images_[i];
  return *this;
}

std::string LinMapToAlg::to_string() const {
  std::string out;
  for (BasisId id : basis_->ids()) {
    out += (id.index ? "; " : "") + basis_->label(id) + ": " + images_[id.index].to_string();
  }
  return out;
}

LinMapToAlg convolve(const LinMapToAlg& f, const LinMapToAlg& g, const BasisMap& delta, const Rational& q0) {
  if (f.m() != g.m() || !same_basis(f.basis(), g.basis()) || !same_basis(f.basis(), delta.basis())) {
    throw Error(ErrorKind::SizeMismatch, "convolution of maps with different shapes");
  }
  LinMapToAlg out(f.basis(), f.m());
  for (BasisId v : f.basis()->ids()) {
    RatMatrix acc(f.m());
    for (const auto& [k, s] : delta(v).terms()) acc += s.eval(q0) * (f(k[0]) * g(k[1]));
    out[v] = std::move(acc);
  }
  return out;
}

namespace {

using Product = std::function<LinMapToAlg(const LinMapToAlg&, const LinMapToAlg&)>;

struct Law {
  std::string name;
  std::function<LinMapToAlg(const LinMapToAlg&, const LinMapToAlg&, const LinMapToAlg&)> lhs, rhs;
};

// Evaluates every law on cfg.samples random triples; first failure wins.
CheckReport sample_laws(std::string check, std::string subject, const BasisPtr& basis, const SampleConfig& cfg,
                        const std::vector<Law>& laws) {
  std::mt19937_64 rng(cfg.seed);
  CheckReport report = CheckReport::pass(check, subject);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    LinMapToAlg x = LinMapToAlg::random(basis, cfg.m, rng);
    LinMapToAlg y = LinMapToAlg::random(basis, cfg.m, rng);
    LinMapToAlg z = LinMapToAlg::random(basis, cfg.m, rng);
    for (const Law& law : laws) {
      LinMapToAlg l = law.lhs(x, y, z), r = law.rhs(x, y, z);
      if (!(l == r)) {
        return CheckReport::fail(std::move(check), std::move(subject),
                                 {"sample " + std::to_string(s) + ": " + law.name, l.to_string(), r.to_string()});
      }
    }
  }
  report.note("samples", std::to_string(cfg.samples));
  report.note("equations", std::to_string(laws.size()));
  report.note("seed", std::to_string(cfg.seed));
  return report;
}

void require_codialgebra(const LCoalgebra& c) {
  if (!check_codialgebra(c).verdict) {
    throw Error(ErrorKind::PreconditionFailed, c.name + " is not a coassociative co-dialgebra");
  }
}

}  // namespace

CheckReport check_dialgebra_axioms(const LCoalgebra& c, const SampleConfig& cfg) {
  require_codialgebra(c);
  Product l = [&](const LinMapToAlg& f, const LinMapToAlg& g) { return convolve(f, g, c.right, cfg.q0); };
  Product r = [&](const LinMapToAlg& f, const LinMapToAlg& g) { return convolve(f, g, c.left, cfg.q0); };
  std::vector<Law> laws{
      {"(x -| y) -| z = x -| (y -| z)", [&](auto& x, auto& y, auto& z) { return l(l(x, y), z); },
       [&](auto& x, auto& y, auto& z) { return l(x, l(y, z)); }},
      {"(x |- y) |- z = x |- (y |- z)", [&](auto& x, auto& y, auto& z) { return r(r(x, y), z); },
       [&](auto& x, auto& y, auto& z) { return r(x, r(y, z)); }},
      {"x -| (y -| z) = x -| (y |- z)", [&](auto& x, auto& y, auto& z) { return l(x, l(y, z)); },
       [&](auto& x, auto& y, auto& z) { return l(x, r(y, z)); }},
      {"(x -| y) |- z = (x |- y) |- z", [&](auto& x, auto& y, auto& z) { return r(l(x, y), z); },
       [&](auto& x, auto& y, auto& z) { return r(r(x, y), z); }},
      {"(x |- y) -| z = x |- (y -| z)", [&](auto& x, auto& y, auto& z) { return l(r(x, y), z); },
       [&](auto& x, auto& y, auto& z) { return r(x, l(y, z)); }},
  };
  return sample_laws("dialgebra", c.name, c.basis, cfg, laws);
}

CheckReport check_leibniz(const LCoalgebra& c, const SampleConfig& cfg) {
  require_codialgebra(c);
  Product br = [&](const LinMapToAlg& f, const LinMapToAlg& g) {
    return convolve(f, g, c.right, cfg.q0) - convolve(g, f, c.left, cfg.q0);
  };
  std::vector<Law> laws{{"[[x,y],z] = [[x,z],y] + [x,[y,z]]",
                         [&](auto& x, auto& y, auto& z) { return br(br(x, y), z); },
                         [&](auto& x, auto& y, auto& z) { return br(br(x, z), y) + br(x, br(y, z)); }}};
  CheckReport report = sample_laws("leibniz", c.name, c.basis, cfg, laws);
  // The bracket is not skew: record the first sample with [x,x] != 0.
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    LinMapToAlg x = LinMapToAlg::random(c.basis, cfg.m, rng);
    LinMapToAlg self = br(x, x);
    if (!self.is_zero()) {
      report.note("nonzero-self-bracket", "x = " + x.to_string() + " gives [x,x] = " + self.to_string());
      break;
    }
  }
  return report;
}

CheckReport check_hypercube(std::span<const BasisMap> coproducts, const SampleConfig& cfg, std::string subject) {
  if (coproducts.empty()) throw Error(ErrorKind::PreconditionFailed, "empty coproduct family");
  if (!check_hypercube_relations(coproducts, subject).verdict) {
    throw Error(ErrorKind::PreconditionFailed, subject + " violates the hypercube relations");
  }
  std::vector<Law> laws;
  for (std::size_t i = 0; i < coproducts.size(); ++i) {
    for (std::size_t j = 0; j < coproducts.size(); ++j) {
      const BasisMap* di = &coproducts[i];
      const BasisMap* dj = &coproducts[j];
      Rational q0 = cfg.q0;
      laws.push_back({"(x o" + std::to_string(i) + " y) o" + std::to_string(j) + " z = x o" + std::to_string(i) +
                          " (y o" + std::to_string(j) + " z)",
                      [=](auto& x, auto& y, auto& z) { return convolve(convolve(x, y, *di, q0), z, *dj, q0); },
                      [=](auto& x, auto& y, auto& z) { return convolve(x, convolve(y, z, *dj, q0), *di, q0); }});
    }
  }
  return sample_laws("hypercube", std::move(subject), coproducts.front().basis(), cfg, laws);
}

CheckReport check_sum_associative(std::span<const BasisMap> coproducts, const SampleConfig& cfg, std::string subject) {
  if (coproducts.empty()) throw Error(ErrorKind::PreconditionFailed, "empty coproduct family");
  BasisMap sum = BasisMap::zero(coproducts.front().basis(), 2);
  for (const auto& d : coproducts) sum += d;
  Product p = [&](const LinMapToAlg& f, const LinMapToAlg& g) { return convolve(f, g, sum, cfg.q0); };
  std::vector<Law> laws{{"(x * y) * z = x * (y * z)", [&](auto& x, auto& y, auto& z) { return p(p(x, y), z); },
                         [&](auto& x, auto& y, auto& z) { return p(x, p(y, z)); }}};
  return sample_laws("sum-associative", std::move(subject), coproducts.front().basis(), cfg, laws);
}

}  // namespace lcoalg
