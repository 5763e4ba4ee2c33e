#include "lcoalg/coalgebra_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "lcoalg/error.hpp"

namespace lcoalg {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Offset of the first non-space character at or after `from`.
std::size_t skip_space(std::string_view s, std::size_t from) {
  while (from < s.size() && is_space(s[from])) ++from;
  return from;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Mapping {
  std::size_t line;
  std::size_t label_column;
  std::string label;
  std::size_t value_column;
  std::string value;
};

enum class Section { Right, Left, RightCounit, LeftCounit, Coderivation };

std::optional<Section> section_of(std::string_view key) {
  if (key == "right") return Section::Right;
  if (key == "left") return Section::Left;
  if (key == "right_counit") return Section::RightCounit;
  if (key == "left_counit") return Section::LeftCounit;
  if (key == "coderivation") return Section::Coderivation;
  return std::nullopt;
}

// Re-raises an error from a value parser at the value's position in the file.
[[noreturn]] void rethrow_at(const Mapping& m) {
  try {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(m.line, m.value_column + e.column() - 1, e.detail());
  } catch (const Error& e) {
    throw ParseError(m.line, m.value_column, e.what());
  }
}

}  // namespace

CoalgebraFile parse_coalgebra_file(std::string_view text) {
  std::string name;
  BasisPtr basis;
  std::vector<std::pair<Section, Mapping>> mappings;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim_right(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    std::size_t start = skip_space(line, 0);
    if (start == line.size() || line[start] == '#') continue;
    std::size_t colon = line.find(':', start);
    if (colon == std::string_view::npos) throw ParseError(line_no, start + 1, "expected '<key>:'");
    std::string_view key = trim_right(line.substr(start, colon - start));
    std::size_t rest = skip_space(line, colon + 1);

    if (key == "name") {
      name = std::string(line.substr(rest));
      continue;
    }
    if (key == "basis") {
      if (basis) throw ParseError(line_no, start + 1, "duplicate basis line");
      std::vector<std::string> labels;
      std::istringstream fields{std::string(line.substr(rest))};
      for (std::string t; fields >> t;) labels.push_back(t);
      if (labels.empty()) throw ParseError(line_no, rest + 1, "empty basis");
      try {
        basis = make_basis(std::move(labels));
      } catch (const Error& e) {
        throw ParseError(line_no, rest + 1, e.what());
      }
      continue;
    }
    auto section = section_of(key);
    if (!section) throw ParseError(line_no, start + 1, "unknown key '" + std::string(key) + "'");
    if (!basis) throw ParseError(line_no, start + 1, "mapping before 'basis:' line");
    std::size_t arrow = line.find("->", rest);
    if (arrow == std::string_view::npos) throw ParseError(line_no, rest + 1, "expected '<label> -> <value>'");
    std::string_view label = trim_right(line.substr(rest, arrow - rest));
    if (label.empty()) throw ParseError(line_no, rest + 1, "missing label");
    std::size_t value = skip_space(line, arrow + 2);
    if (value == line.size()) throw ParseError(line_no, arrow + 3, "missing value");
    mappings.emplace_back(*section, Mapping{line_no, rest + 1, std::string(label), value + 1,
                                            std::string(line.substr(value))});
  }
  if (!basis) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'basis:' line");

  BasisMap right(basis, 2), left(basis, 2), coder(basis, 1);
  Counit right_counit(basis), left_counit(basis);
  bool has_left = false, has_right_counit = false, has_left_counit = false, has_coder = false;
  std::vector<std::vector<bool>> seen(5, std::vector<bool>(basis->size(), false));

  for (const auto& [section, m] : mappings) {
    auto id = basis->find(m.label);
    if (!id) throw ParseError(m.line, m.label_column, "unknown basis label '" + m.label + "'");
    auto slot = seen[static_cast<std::size_t>(section)][id->index];
    if (slot) throw ParseError(m.line, m.label_column, "duplicate image for '" + m.label + "'");
    seen[static_cast<std::size_t>(section)][id->index] = true;
    try {
      switch (section) {
        case Section::Right:
          right.set(*id, parse_tensor(basis, 2, m.value));
          break;
        case Section::Left:
          left.set(*id, parse_tensor(basis, 2, m.value));
          has_left = true;
          break;
        case Section::RightCounit:
          right_counit.set(*id, Scalar::parse(m.value));
          has_right_counit = true;
          break;
        case Section::LeftCounit:
          left_counit.set(*id, Scalar::parse(m.value));
          has_left_counit = true;
          break;
        case Section::Coderivation:
          coder.set(*id, parse_tensor(basis, 1, m.value));
          has_coder = true;
          break;
      }
    } catch (const Error&) {
      rethrow_at(m);
    }
  }

  LCoalgebra c{name, basis, right, has_left ? left : right, std::nullopt, std::nullopt};
  if (has_right_counit) c.right_counit = right_counit;
  if (has_left_counit) c.left_counit = left_counit;
  CoalgebraFile out{std::move(c), std::nullopt};
  if (has_coder) out.coderivation = std::move(coder);
  return out;
}

LCoalgebra parse_coalgebra(std::string_view text) { return parse_coalgebra_file(text).coalgebra; }

std::string render_coalgebra(const LCoalgebra& c, const std::optional<BasisMap>& coderivation) {
  std::ostringstream out;
  if (!c.name.empty()) out << "name: " << c.name << "\n";
  out << "basis:";
  for (const auto& l : c.basis->labels()) out << " " << l;
  out << "\n";
  auto maps = [&](std::string_view key, const BasisMap& f) {
    for (BasisId id : c.basis->ids()) out << key << ": " << c.basis->label(id) << " -> " << f(id).to_string() << "\n";
  };
  auto counit = [&](std::string_view key, const std::optional<Counit>& eps) {
    if (!eps) return;
    for (BasisId id : c.basis->ids()) out << key << ": " << c.basis->label(id) << " -> " << (*eps)(id).to_string() << "\n";
  };
  maps("right", c.right);
  if (!c.degenerate()) maps("left", c.left);
  counit("right_counit", c.right_counit);
  counit("left_counit", c.left_counit);
  if (coderivation) maps("coderivation", *coderivation);
  return out.str();
}

}  // namespace lcoalg
