#include "lcoalg/report.hpp"

namespace lcoalg {

CheckReport CheckReport::pass(std::string check, std::string subject) {
  CheckReport r;
  r.check = std::move(check);
  r.subject = std::move(subject);
  return r;
}

CheckReport CheckReport::fail(std::string check, std::string subject, Counterexample cx) {
  CheckReport r;
  r.check = std::move(check);
  r.subject = std::move(subject);
  r.verdict = false;
  r.counterexample = std::move(cx);
  return r;
}

CheckReport CheckReport::combine(std::string check, std::string subject, std::vector<CheckReport> parts) {
  CheckReport r = pass(std::move(check), std::move(subject));
  for (auto& p : parts) r.add_part(std::move(p));
  return r;
}

void CheckReport::add_part(CheckReport part) {
  if (!part.verdict && verdict) {
    verdict = false;
    counterexample = part.counterexample;
    if (counterexample) counterexample->at = part.check + " @ " + counterexample->at;
  }
  parts.push_back(std::move(part));
}

const CheckReport* CheckReport::find(std::string_view name) const {
  if (check == name) return this;
  for (const auto& p : parts) {
    if (const CheckReport* hit = p.find(name)) return hit;
  }
  return nullptr;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["check"] = report.check;
  j["subject"] = report.subject;
  j["verdict"] = report.verdict;
  if (report.counterexample) {
    j["counterexample"] = {{"at", report.counterexample->at},
                           {"lhs", report.counterexample->lhs},
                           {"rhs", report.counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (!report.notes.empty()) {
    Json notes = Json::object();
    for (const auto& [k, v] : report.notes) notes[k] = v;
    j["notes"] = std::move(notes);
  }
  if (!report.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : report.parts) parts.push_back(to_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

CheckReport check_on_basis(std::string check, std::string subject, const BasisPtr& basis, std::size_t rank,
                           const std::function<TensorElem(const TensorElem&)>& lhs,
                           const std::function<TensorElem(const TensorElem&)>& rhs) {
  for (const Key& k : basis_keys(*basis, rank)) {
    TensorElem t = TensorElem::pure(basis, k);
    TensorElem l = lhs(t);
    TensorElem r = rhs(t);
    if (!(l == r)) {
      return CheckReport::fail(std::move(check), std::move(subject), {t.key_string(k), l.to_string(), r.to_string()});
    }
  }
  return CheckReport::pass(std::move(check), std::move(subject));
}

}  // namespace lcoalg
