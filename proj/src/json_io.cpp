#include "bmkit/json_io.hpp"

namespace bmkit {

std::string big(const Int& v) { return v.get_str(); }

Json to_json(const Partition& p) {
  Json arr = Json::array();
  for (unsigned part : p.parts()) arr.push_back(part);
  return arr;
}

Json to_json(const PartitionMatrix& m) {
  Json order = Json::array();
  for (const Partition& p : m.order) order.push_back(to_json(p));
  Json entries = Json::array();
  for (const auto& row : m.entries) {
    Json jrow = Json::array();
    for (const Int& e : row) jrow.push_back(big(e));
    entries.push_back(std::move(jrow));
  }
  return Json{{"order", std::move(order)}, {"entries", std::move(entries)}};
}

Json to_json(const InertialType& t) {
  Json assignment = Json::array();
  for (const auto& [b, p] : t.entries()) {
    Json entry{{"label", b.label}, {"dim", b.dim}, {"partition", to_json(p)}};
    if (b.dual_label != b.label) entry["dual"] = b.dual_label;
    assignment.push_back(std::move(entry));
  }
  return Json{{"assignment", std::move(assignment)}};
}

namespace {

template <typename Label>
Json sum_json(const std::map<Label, Int>& coeffs, std::string (*name)(const Label&)) {
  Json terms = Json::array();
  for (const auto& [label, c] : coeffs)
    terms.push_back(Json{{"label", name(label)}, {"coefficient", big(c)}});
  return terms;
}

std::string rep_label_name(const RepLabel& label) {
  VirtualRep one;
  one.add(label, 1);
  return render(one);
}

std::string component_label_name(const ComponentLabel& label) {
  Cycle one;
  one.add(label, 1);
  return render(one);
}

}  // namespace

Json to_json(const VirtualRep& v) { return sum_json(v.coeffs(), rep_label_name); }

Json to_json(const Cycle& c) { return sum_json(c.coeffs(), component_label_name); }

Json to_json(const TypeSequence& t) {
  Json arr = Json::array();
  for (const auto& [index, p] : t.entries())
    arr.push_back(Json{{"index", index}, {"partition", to_json(p)}});
  return arr;
}

Json to_json(const VerifyRecord& r) {
  return Json{{"n", r.n},         {"Q", to_json(r.Q)}, {"tau", to_json(r.tau)},
              {"lhs", big(r.lhs)}, {"rhs", big(r.rhs)}, {"ok", r.ok}};
}

Json to_json(const IharaReport& r) {
  Json reds = Json::array();
  for (const auto& [p, c] : r.red_coefficients)
    reds.push_back(Json{{"partition", to_json(p)}, {"coefficient", big(c)}});
  Json checks = Json::array();
  for (const IharaCycleCheck& c : r.cycle_checks)
    checks.push_back(Json{{"Q", to_json(c.Q)},
                          {"ps_side", big(c.ps_side)},
                          {"weighted_sum", big(c.weighted_sum)},
                          {"expected", big(c.expected)}});
  return Json{{"n", r.n},
              {"red_coefficients", std::move(reds)},
              {"cycle_checks", std::move(checks)},
              {"ok", r.ok}};
}

Json to_json(const FrobeniusOrbit& o) {
  return Json{{"min_rep", big(o.min_rep)}, {"size", o.size}};
}

Json to_json(const MarginMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json jrow = Json::array();
    for (unsigned e : row) jrow.push_back(e);
    rows.push_back(std::move(jrow));
  }
  return rows;
}

Json mackey_json(const Partition& p, const Partition& q,
                 const std::map<std::vector<Partition>, Int>& decomposition) {
  Json terms = Json::array();
  for (const auto& [weights, count] : decomposition) {
    Json jw = Json::array();
    for (const Partition& w : weights) jw.push_back(to_json(w));
    terms.push_back(Json{{"weights", std::move(jw)}, {"count", big(count)}});
  }
  return Json{{"shape", to_json(p)}, {"content", to_json(q)}, {"terms", std::move(terms)}};
}

Json components_json(unsigned n, unsigned long q, const Int& modulus,
                     const std::vector<ComponentDatum>& components) {
  Json comps = Json::array();
  for (const ComponentDatum& c : components) {
    Json orbits = Json::array();
    for (const auto& [orbit, p] : c.assignment) {
      Json jo = to_json(orbit);
      jo["partition"] = to_json(p);
      orbits.push_back(std::move(jo));
    }
    comps.push_back(Json{{"orbits", std::move(orbits)}});
  }
  return Json{{"n", n},
              {"q", q},
              {"modulus", big(modulus)},
              {"components", std::move(comps)},
              {"count", components.size()}};
}

Json orbits_json(unsigned long q, const Int& modulus,
                 const std::vector<FrobeniusOrbit>& orbits) {
  Json arr = Json::array();
  for (const FrobeniusOrbit& o : orbits) arr.push_back(to_json(o));
  return Json{{"q", q}, {"modulus", big(modulus)}, {"orbits", std::move(arr)},
              {"count", orbits.size()}};
}

}  // namespace bmkit
