#include "chein/report.hpp"

#include <ostream>
#include <string>

namespace chein {

namespace {

Json matrix_list(const std::vector<OpMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

}  // namespace

Json to_json(const ElementMap& m) { return Json(m.images); }

Json to_json(const PropertyReport& r) {
  Json j = Json::object();
  for (Flag f : kAllFlags) j[std::string(name(f))] = r[f];
  j["neutral"] = r.neutral ? Json(*r.neutral) : Json(nullptr);
  j["moufang_forms"] = Json(std::vector<bool>(r.moufang_forms.begin(), r.moufang_forms.end()));
  Json witness = Json::object();
  for (const auto& [flag, elems] : r.witness) witness[std::string(name(flag))] = elems;
  j["witness"] = std::move(witness);
  Json reason = Json::object();
  for (const auto& [flag, text] : r.reason) reason[std::string(name(flag))] = text;
  j["reason"] = std::move(reason);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j = Json::object();
  j["group"] = r.group;
  j["group_order"] = r.group_order;
  j["group_abelian"] = r.group_abelian;

  Json counts = Json::object();
  for (Flag f : kAllFlags) counts[std::string(name(f))] = r.counts[static_cast<std::size_t>(f)];
  j["counts"] = std::move(counts);

  j["moufang_set"] = matrix_list(r.moufang_set);

  Json classes = Json::array();
  for (const auto& c : r.nonassoc_moufang_classes) {
    Json members = Json::array();
    for (const auto& m : c.members) {
      members.push_back({{"matrix", m.matrix.to_string()},
                         {"relation", std::string(name(m.relation))},
                         {"map", to_json(m.map)}});
    }
    classes.push_back(
        {{"representative", c.representative.to_string()}, {"members", std::move(members)}});
  }
  j["nonassoc_moufang_classes"] = std::move(classes);

  j["theorem6"] = {{"status", std::string(name(r.theorem6.status))},
                   {"missing", matrix_list(r.theorem6.missing)},
                   {"extra", matrix_list(r.theorem6.extra)},
                   {"notes", r.theorem6.notes}};

  Json lemmas = Json::array();
  for (const auto& c : r.lemma_checks) {
    lemmas.push_back({{"name", c.name},
                      {"status", std::string(name(c.status))},
                      {"detail", c.detail}});
  }
  j["lemma_checks"] = std::move(lemmas);
  j["bol_not_moufang"] = matrix_list(r.bol_not_moufang);
  j["ip_discrepancies"] = matrix_list(r.ip_discrepancies);

  Json per = Json::object();
  for (std::size_t i = 0; i < r.per_matrix.size(); ++i) {
    per[OpMatrix::from_index(i).to_string()] = to_json(r.per_matrix[i]);
  }
  j["per_matrix"] = std::move(per);
  return j;
}

Json sidecar_json(const DoubledMagma& d) {
  Json j = Json::object();
  j["group"] = d.group ? Json(d.group->to_string()) : Json(nullptr);
  j["matrix"] = d.matrix.to_string();
  if (auto n = matrix_name(d.matrix)) j["matrix_name"] = std::string(name(*n));
  j["base_order"] = d.base_order;
  j["order"] = d.table.order();
  return j;
}

void write_csv(std::ostream& out, const ClassificationReport& r) {
  out << "matrix";
  for (Flag f : kAllFlags) out << ',' << name(f);
  out << '\n';
  for (std::size_t i = 0; i < r.per_matrix.size(); ++i) {
    out << '"' << OpMatrix::from_index(i).to_string() << '"';
    for (Flag f : kAllFlags) out << ',' << (r.per_matrix[i][f] ? 1 : 0);
    out << '\n';
  }
}

}  // namespace chein
