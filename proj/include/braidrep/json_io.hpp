#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braidrep/irreducibility.hpp"
#include "braidrep/kernel_probe.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/representation.hpp"
#include "braidrep/solver.hpp"

namespace braidrep {

using Json = nlohmann::ordered_json;

template <class T>
Json to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry_str(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class T>
Json to_json(const Representation<T>& rep) {
  Json assignment = Json::object();
  for (const auto& [g, m] : rep.images()) assignment[g.str()] = to_json(m);
  return Json{{"n", rep.n()}, {"dim", rep.dim()}, {"domain", Representation<T>::domain()},
              {"group", rep.group()}, {"assignment", std::move(assignment)}};
}

template <class F>
Json vector_json(const std::vector<F>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(entry_str(x));
  return out;
}

template <class F>
Json to_json(const IrreducibilityVerdict<F>& v) {
  Json out{{"verdict", v.irreducible ? "irreducible" : "reducible"}, {"span_dim", v.span_dim}, {"dim", v.dim}};
  if (v.witness) {
    Json basis = Json::array();
    for (const auto& b : v.witness->basis) basis.push_back(vector_json(b));
    out["witness"] = Json{{"source", v.witness_source}, {"basis", std::move(basis)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const SolutionFamily& fam);
Json to_json(const SingularFormReport& rep);
Json to_json(const KernelCertificate& cert);
Json to_json(const GridCell& cell);
/// {"cells": N, "agreements": k, "divergences": [cells with verdict != predicted]}.
Json grid_summary(const std::vector<GridCell>& cells);

}  // namespace braidrep
