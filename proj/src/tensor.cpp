#include "lcoalg/tensor.hpp"

#include <algorithm>
#include <cctype>

#include "lcoalg/error.hpp"

namespace lcoalg {

Basis::Basis(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    const std::string& l = labels_[i];
    if (l.empty()) throw Error(ErrorKind::ParseError, "empty basis label");
    if (std::any_of(l.begin(), l.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }) ||
        l.find("(x)") != std::string::npos) {
      throw Error(ErrorKind::ParseError, "invalid basis label '" + l + "'");
    }
    if (!index_.emplace(l, i).second) throw Error(ErrorKind::ParseError, "duplicate basis label '" + l + "'");
  }
}

std::optional<BasisId> Basis::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return BasisId{it->second};
}

BasisId Basis::at(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorKind::UnknownLabel, "no basis element '" + std::string(label) + "'");
}

std::vector<BasisId> Basis::ids() const {
  std::vector<BasisId> out(labels_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = BasisId{i};
  return out;
}

BasisPtr make_basis(std::vector<std::string> labels) {
  return std::make_shared<const Basis>(std::move(labels));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) { return a == b || (a && b && *a == *b); }

// TensorElem

TensorElem::TensorElem(BasisPtr basis, std::size_t rank) : basis_(std::move(basis)), rank_(rank) {}

TensorElem TensorElem::pure(BasisPtr basis, Key key, const Scalar& coefficient) {
  TensorElem t(std::move(basis), key.size());
  t.add_term(std::move(key), coefficient);
  return t;
}

TensorElem TensorElem::vector(BasisPtr basis, BasisId id) { return pure(std::move(basis), Key{id}); }

TensorElem TensorElem::scalar(BasisPtr basis, const Scalar& value) { return pure(std::move(basis), Key{}, value); }

Scalar TensorElem::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void TensorElem::add_term(const Key& key, const Scalar& coefficient) { add_term(Key(key), coefficient); }

void TensorElem::add_term(Key&& key, const Scalar& coefficient) {
  if (key.size() != rank_) throw Error(ErrorKind::SizeMismatch, "key rank differs from tensor rank");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElem::check_compatible(const TensorElem& other) const {
  if (!same_basis(basis_, other.basis_)) throw Error(ErrorKind::BasisMismatch, "tensors over different bases");
  if (rank_ != other.rank_) throw Error(ErrorKind::SizeMismatch, "tensors of different rank");
}

TensorElem TensorElem::operator-() const {
  TensorElem t(basis_, rank_);
  for (const auto& [k, c] : terms_) t.terms_.emplace(k, -c);
  return t;
}

TensorElem& TensorElem::operator+=(const TensorElem& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

TensorElem& TensorElem::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const TensorElem& a, const TensorElem& b) {
  return a.rank_ == b.rank_ && same_basis(a.basis_, b.basis_) && a.terms_ == b.terms_;
}

std::string TensorElem::key_string(const Key& key) const {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += "(x)";
    out += basis_->label(key[i]);
  }
  return out;
}

std::string TensorElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string coef;
    bool negative = false;
    if (c.is_monomial() && c.terms().begin()->second < 0) {
      negative = true;
      coef = (-c).to_string();
    } else {
      coef = c.to_string();
    }
    if (!c.is_rational()) coef = "(" + coef + ")";
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coef;
    if (rank_ > 0) out += "*" + key_string(key);
  }
  return out;
}

namespace {

[[noreturn]] void tensor_parse_fail(std::size_t column, const std::string& msg) {
  throw ParseError(1, column, msg);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct RawTerm {
  bool negative;
  std::size_t column;
  std::string_view text;
};

// Splits at top-level " + " / " - " separators; parentheses other than the
// "(x)" leg separator nest.
std::vector<RawTerm> split_terms(std::string_view text) {
  std::vector<RawTerm> out;
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
    while (pos < text.size() && is_space(text[pos])) ++pos;
  }
  std::size_t start = pos;
  int depth = 0;
  std::size_t i = pos;
  while (i < text.size()) {
    if (text.compare(i, 3, "(x)") == 0) {
      i += 3;
      continue;
    }
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && is_space(c)) {
      std::size_t j = i;
      while (j < text.size() && is_space(text[j])) ++j;
      if (j + 1 < text.size() && (text[j] == '+' || text[j] == '-') && is_space(text[j + 1])) {
        out.push_back({negative, start + 1, text.substr(start, i - start)});
        negative = text[j] == '-';
        i = j + 1;
        while (i < text.size() && is_space(text[i])) ++i;
        start = i;
        continue;
      }
    }
    ++i;
  }
  std::string_view last = text.substr(start);
  while (!last.empty() && is_space(last.back())) last.remove_suffix(1);
  out.push_back({negative, start + 1, last});
  return out;
}

}  // namespace

TensorElem parse_tensor(const BasisPtr& basis, std::size_t rank, std::string_view text) {
  TensorElem out(basis, rank);
  std::string_view trimmed = text;
  while (!trimmed.empty() && is_space(trimmed.front())) trimmed.remove_prefix(1);
  while (!trimmed.empty() && is_space(trimmed.back())) trimmed.remove_suffix(1);
  if (trimmed.empty()) tensor_parse_fail(1, "empty tensor");
  if (trimmed == "0") return out;

  for (const RawTerm& raw : split_terms(text)) {
    std::string_view term = raw.text;
    if (term.empty()) tensor_parse_fail(raw.column, "empty term");
    Scalar coef;
    std::string_view rest;
    if (term.front() == '(') {
      int depth = 0;
      std::size_t close = std::string_view::npos;
      for (std::size_t k = 0; k < term.size(); ++k) {
        if (term[k] == '(') ++depth;
        if (term[k] == ')' && --depth == 0) {
          close = k;
          break;
        }
      }
      if (close == std::string_view::npos) tensor_parse_fail(raw.column, "unbalanced '('");
      try {
        coef = Scalar::parse(term.substr(1, close - 1));
      } catch (const ParseError& e) {
        tensor_parse_fail(raw.column + e.column(), "malformed coefficient");
      }
      rest = term.substr(close + 1);
    } else {
      std::size_t k = 0;
      while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
      if (k == 0) tensor_parse_fail(raw.column, "expected coefficient");
      try {
        coef = Scalar(parse_rational(term.substr(0, k)));
      } catch (const ParseError&) {
        tensor_parse_fail(raw.column, "malformed coefficient");
      }
      rest = term.substr(k);
    }
    std::size_t rest_column = raw.column + (term.size() - rest.size());
    Key key;
    if (rank > 0) {
      if (rest.empty() || rest.front() != '*') tensor_parse_fail(rest_column, "expected '*'");
      rest.remove_prefix(1);
      std::size_t start = 0;
      while (true) {
        std::size_t sep = rest.find("(x)", start);
        std::string_view label = rest.substr(start, sep == std::string_view::npos ? sep : sep - start);
        auto id = basis->find(label);
        if (!id) tensor_parse_fail(rest_column + 1 + start, "unknown basis label '" + std::string(label) + "'");
        key.push_back(*id);
        if (sep == std::string_view::npos) break;
        start = sep + 3;
      }
      if (key.size() != rank) {
        tensor_parse_fail(raw.column, "term has rank " + std::to_string(key.size()) + ", expected " + std::to_string(rank));
      }
    } else if (!rest.empty()) {
      tensor_parse_fail(rest_column, "unexpected text after scalar");
    }
    out.add_term(std::move(key), raw.negative ? -coef : coef);
  }
  return out;
}

TensorElem tensor_product(const TensorElem& a, const TensorElem& b) {
  if (!same_basis(a.basis(), b.basis())) throw Error(ErrorKind::BasisMismatch, "tensor product over different bases");
  TensorElem out(a.basis(), a.rank() + b.rank());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add_term(std::move(k), ca * cb);
    }
  }
  return out;
}

TensorElem permute_legs(const TensorElem& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.rank()) throw Error(ErrorKind::BadPermutation, "permutation length differs from rank");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p < 1 || p > perm.size() || seen[p - 1]) throw Error(ErrorKind::BadPermutation, "not a permutation");
    seen[p - 1] = true;
  }
  TensorElem out(t.basis(), t.rank());
  for (const auto& [k, c] : t.terms()) {
    Key nk(k.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nk[i] = k[perm[i] - 1];
    out.add_term(std::move(nk), c);
  }
  return out;
}

TensorElem transpose(const TensorElem& t) {
  static constexpr std::size_t tau[] = {2, 1};
  return permute_legs(t, tau);
}

// BasisMap

BasisMap::BasisMap(BasisPtr basis, std::size_t out_rank) : basis_(std::move(basis)), out_rank_(out_rank) {
  images_.assign(basis_->size(), TensorElem(basis_, out_rank_));
}

BasisMap BasisMap::identity(BasisPtr basis) {
  BasisMap id(basis, 1);
  for (BasisId b : basis->ids()) id.set(b, TensorElem::vector(basis, b));
  return id;
}

void BasisMap::set(BasisId id, TensorElem image) {
  if (image.rank() != out_rank_) throw Error(ErrorKind::SizeMismatch, "image rank differs from map out_rank");
  if (!same_basis(image.basis(), basis_)) throw Error(ErrorKind::BasisMismatch, "image over a different basis");
  images_.at(id.index) = std::move(image);
}

TensorElem BasisMap::apply(const TensorElem& v) const {
  if (v.rank() != 1) throw Error(ErrorKind::SizeMismatch, "BasisMap::apply expects a rank-1 element");
  return apply_on_leg(*this, v, 1);
}

BasisMap& BasisMap::operator+=(const BasisMap& other) {
  if (!same_basis(basis_, other.basis_)) throw Error(ErrorKind::BasisMismatch, "maps over different bases");
  if (out_rank_ != other.out_rank_) throw Error(ErrorKind::SizeMismatch, "maps of different rank");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += other.images_[i];
  return *this;
}

BasisMap& BasisMap::operator*=(const Scalar& s) {
  for (auto& img : images_) img *= s;
  return *this;
}

Counit::Counit(BasisPtr basis) : basis_(std::move(basis)), values_(basis_->size()) {}

TensorElem apply_on_leg(const BasisMap& f, const TensorElem& t, std::size_t leg) {
  if (leg < 1 || leg > t.rank()) throw Error(ErrorKind::LegOutOfRange, "leg " + std::to_string(leg) + " of rank " + std::to_string(t.rank()));
  if (!same_basis(f.basis(), t.basis())) throw Error(ErrorKind::BasisMismatch, "map and tensor over different bases");
  TensorElem out(t.basis(), t.rank() + f.out_rank() - 1);
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [ik, ic] : f.image(k[leg - 1]).terms()) {
      Key nk;
      nk.reserve(out.rank());
      nk.insert(nk.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(leg - 1));
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(leg), k.end());
      out.add_term(std::move(nk), c * ic);
    }
  }
  return out;
}

TensorElem apply_counit_on_leg(const Counit& eps, const TensorElem& t, std::size_t leg) {
  if (leg < 1 || leg > t.rank()) throw Error(ErrorKind::LegOutOfRange, "leg " + std::to_string(leg) + " of rank " + std::to_string(t.rank()));
  if (!same_basis(eps.basis(), t.basis())) throw Error(ErrorKind::BasisMismatch, "counit and tensor over different bases");
  TensorElem out(t.basis(), t.rank() - 1);
  for (const auto& [k, c] : t.terms()) {
    const Scalar& e = eps(k[leg - 1]);
    if (e.is_zero()) continue;
    Key nk = k;
    nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(leg - 1));
    out.add_term(std::move(nk), c * e);
  }
  return out;
}

BlockMap BlockMap::from(const BasisMap& f) {
  return BlockMap{1, f.out_rank(), [f](const Key& k) { return f.image(k[0]); }};
}

BlockMap BlockMap::from(const Counit& eps) {
  return BlockMap{1, 0, [eps](const Key& k) { return TensorElem::scalar(eps.basis(), eps(k[0])); }};
}

TensorElem apply_on_legs(const BlockMap& f, const TensorElem& t, std::size_t first_leg) {
  if (first_leg < 1 || first_leg + f.in_rank - 1 > t.rank()) {
    throw Error(ErrorKind::LegOutOfRange, "block at leg " + std::to_string(first_leg) + " exceeds rank " + std::to_string(t.rank()));
  }
  TensorElem out(t.basis(), t.rank() - f.in_rank + f.out_rank);
  auto begin = static_cast<std::ptrdiff_t>(first_leg - 1);
  auto end = begin + static_cast<std::ptrdiff_t>(f.in_rank);
  std::map<Key, TensorElem> cache;
  for (const auto& [k, c] : t.terms()) {
    Key window(k.begin() + begin, k.begin() + end);
    auto it = cache.find(window);
    if (it == cache.end()) it = cache.emplace(window, f.on_basis(window)).first;
    for (const auto& [ik, ic] : it->second.terms()) {
      Key nk;
      nk.reserve(out.rank());
      nk.insert(nk.end(), k.begin(), k.begin() + begin);
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + end, k.end());
      out.add_term(std::move(nk), c * ic);
    }
  }
  return out;
}

TensorElem apply_left(const BlockMap& f, const TensorElem& t) { return apply_on_legs(f, t, 1); }

TensorElem apply_right(const BlockMap& f, const TensorElem& t) {
  if (f.in_rank > t.rank()) throw Error(ErrorKind::LegOutOfRange, "block wider than tensor");
  return apply_on_legs(f, t, t.rank() - f.in_rank + 1);
}

std::vector<Key> basis_keys(const Basis& basis, std::size_t rank) {
  std::vector<Key> out;
  Key k(rank, BasisId{0});
  if (basis.size() == 0 && rank > 0) return out;
  while (true) {
    out.push_back(k);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (++k[i].index < basis.size()) break;
      k[i].index = 0;
      if (i == 0) return out;
    }
    if (rank == 0) return out;
  }
}

}  // namespace lcoalg
