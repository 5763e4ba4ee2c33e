#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lcoalg/tensor.hpp"

namespace lcoalg {

using Json = nlohmann::ordered_json;

/// Where an identity failed, with both sides rendered as text.
struct Counterexample {
  std::string at;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one named verification. A false verdict always carries a
/// counterexample; composite checks keep their sub-checks in `parts` and
/// surface the first failing part's counterexample.
struct CheckReport {
  std::string check;
  std::string subject;
  bool verdict = true;
  std::optional<Counterexample> counterexample;
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<CheckReport> parts;

  static CheckReport pass(std::string check, std::string subject);
  static CheckReport fail(std::string check, std::string subject, Counterexample cx);
  static CheckReport combine(std::string check, std::string subject, std::vector<CheckReport> parts);

  void add_part(CheckReport part);
  void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }
  /// Depth-first search for a part (or self) named `check`.
  const CheckReport* find(std::string_view name) const;
};

Json to_json(const CheckReport& report);

/// Compares lhs(t) and rhs(t) on every pure basis tensor t of `rank`
/// (complete for linear maps). Stops at the first mismatch.
CheckReport check_on_basis(std::string check, std::string subject, const BasisPtr& basis, std::size_t rank,
                           const std::function<TensorElem(const TensorElem&)>& lhs,
                           const std::function<TensorElem(const TensorElem&)>& rhs);

}  // namespace lcoalg
