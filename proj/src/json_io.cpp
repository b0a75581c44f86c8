#include "braidrep/json_io.hpp"

namespace braidrep {

Json to_json(const SolutionFamily& fam) {
  Json out = Json::object();
  if (!fam.label.empty()) out["family"] = fam.label;
  out["free"] = fam.free;
  Json bindings = Json::object();
  for (const auto& [u, e] : fam.bindings) bindings[u] = e.str();
  out["bindings"] = std::move(bindings);
  if (!fam.nonzero.empty()) {
    Json cond = Json::array();
    for (const auto& p : fam.nonzero) cond.push_back(p.str() + " != 0");
    out["conditions"] = std::move(cond);
  }
  out["discarded_zero_equations"] = fam.discarded_zero;
  out["discarded_duplicate_equations"] = fam.discarded_duplicate;
  return out;
}

Json to_json(const SingularFormReport& rep) {
  Json residue = Json::array();
  for (const auto& p : rep.residue_after_imposed) residue.push_back(p.str());
  return Json{{"n", rep.n},
              {"unknowns", rep.unknown_count},
              {"equations", rep.equation_count},
              {"linear", rep.linear_count},
              {"nonlinear", rep.nonlinear_count},
              {"raw", to_json(rep.raw)},
              {"a", rep.a_expr.str()},
              {"c", rep.c_expr.str()},
              {"residual_free", rep.residual_free},
              {"raw_matches_form", rep.raw_matches_form},
              {"imposed", to_json(rep.imposed)},
              {"imposed_matches_form", rep.imposed_matches_form},
              {"residue_after_imposed", std::move(residue)},
              {"unrepresentable", rep.unrepresentable}};
}

Json to_json(const KernelCertificate& cert) {
  Json params = Json::object();
  for (const auto& [k, v] : cert.params) params[k] = v;
  return Json{{"word", cert.word.str()},
              {"length", cert.word.size()},
              {"n", cert.n},
              {"domain", cert.domain},
              {"params", std::move(params)},
              {"image", cert.image_is_identity ? "identity" : "other"},
              {"nontriviality", cert.nontriviality},
              {"verified", cert.nontriviality_verified}};
}

Json to_json(const GridCell& cell) {
  return Json{{"n", cell.n},
              {"t0", rational_str(cell.t0)},
              {"a", rational_str(cell.a)},
              {"c", rational_str(cell.c)},
              {"span_dim", cell.span_dim},
              {"verdict", cell.irreducible ? "irreducible" : "reducible"},
              {"predicted", cell.predicted ? "irreducible" : "reducible"},
              {"agree", cell.agree},
              {"divergence_watch", cell.divergence_watch}};
}

Json grid_summary(const std::vector<GridCell>& cells) {
  std::size_t agreements = 0;
  Json divergences = Json::array();
  for (const auto& c : cells) {
    if (c.agree) {
      ++agreements;
    } else {
      divergences.push_back(to_json(c));
    }
  }
  return Json{{"cells", cells.size()}, {"agreements", agreements}, {"divergences", std::move(divergences)}};
}

}  // namespace braidrep
