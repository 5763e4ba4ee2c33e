#include "lcoalg/scalar.hpp"

#include <cctype>
#include <cstdlib>

#include "lcoalg/error.hpp"

namespace lcoalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::LegOutOfRange: return "LegOutOfRange";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::VertexMismatch: return "VertexMismatch";
    case ErrorKind::MissingCounit: return "MissingCounit";
    case ErrorKind::NonRationalScalars: return "NonRationalScalars";
    case ErrorKind::NotCoassociative: return "NotCoassociative";
    case ErrorKind::MissingUnit: return "MissingUnit";
    case ErrorKind::NotGroupLike: return "NotGroupLike";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError(1, 1, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError(1, slash + 2, "zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw Error(ErrorKind::ZeroBase, "negative power of zero");
    return Rational(0);
  }
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -static_cast<long>(exponent) : exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

Scalar::Scalar(long value) {
  if (value != 0) terms_.emplace(0, Rational(value));
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) terms_.emplace(0, value);
}

Scalar Scalar::monomial(const Rational& coefficient, int exponent) {
  Scalar s;
  s.add_term(exponent, coefficient);
  return s;
}

Scalar Scalar::q(int exponent) { return monomial(Rational(1), exponent); }

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<Rational> Scalar::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void Scalar::add_term(int exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar s;
  for (const auto& [e, c] : terms_) s.terms_.emplace(e, Rational(-c));
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Rational(ca * cb));
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInverse, "inverse of 0");
  if (terms_.size() != 1) throw Error(ErrorKind::NotMonomial, "inverse of " + to_string());
  const auto& [e, c] = *terms_.begin();
  return monomial(Rational(1 / c), -e);
}

Rational Scalar::eval(const Rational& q0) const {
  if (q0 == 0) throw Error(ErrorKind::ZeroBase, "evaluation at q = 0");
  Rational sum(0);
  for (const auto& [e, c] : terms_) sum += c * rational_pow(q0, e);
  return sum;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string power;
    if (e == 1) {
      power = "q";
    } else if (e != 0) {
      power = "q^" + std::to_string(e);
    }
    if (power.empty()) {
      out += lcoalg::to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += lcoalg::to_string(mag) + "*" + power;
    }
  }
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    Scalar result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      Scalar t = term();
      result += negative ? -t : t;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(1, pos_ + 1, msg); }

  std::string_view digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  int power() {
    ++pos_;  // 'q'
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::string_view d = digits();
    if (d.size() > 6) fail("exponent too large");
    int e = std::atoi(std::string(d).c_str());
    return negative ? -e : e;
  }

  Scalar term() {
    skip_ws();
    if (at_end()) fail("expected term");
    if (peek() == 'q') return Scalar::q(power());
    std::string num(digits());
    std::string den;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      den = std::string(digits());
      if (mpz_class(den) == 0) fail("zero denominator");
    }
    Rational c = den.empty() ? Rational(mpz_class(num)) : Rational(mpz_class(num), mpz_class(den));
    c.canonicalize();
    std::size_t save = pos_;
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'q') fail("expected 'q' after '*'");
      return Scalar::monomial(c, power());
    }
    pos_ = save;
    return Scalar(c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace lcoalg
