//
// Copyright 2026 The qleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "qleak/quantum/ensemble_json.h"

#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "qleak/status.h"

namespace qleak {
namespace {

using nlohmann::json;

absl::Status SchemaError(absl::string_view where, absl::string_view what) {
  return MakeError(ErrorKind::kParseError, absl::StrCat(where, ": ", what));
}

// Prefixes an error from a nested call with the symbol it belongs to, keeping
// the original kind.
absl::Status ForSymbol(const std::string& label, const absl::Status& status) {
  const std::optional<ErrorKind> kind = GetErrorKind(status);
  return MakeError(kind.value_or(ErrorKind::kParseError),
                   absl::StrCat("symbol '", label, "': ", status.message()));
}

absl::StatusOr<Complex> ComplexFromJson(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    return SchemaError("complex entry", "expected [re, im]");
  }
  return Complex(v[0].get<double>(), v[1].get<double>());
}

json ComplexToJson(Complex z) { return json::array({z.real(), z.imag()}); }

absl::StatusOr<DensityOperator> StateFromJson(const json& state, int dim) {
  if (!state.is_object() || !state.contains("kind") ||
      !state["kind"].is_string()) {
    return SchemaError("state", "missing string field 'kind'");
  }
  const std::string kind = state["kind"].get<std::string>();
  if (kind == "basis_index") {
    if (!state.contains("index") || !state["index"].is_number_integer()) {
      return SchemaError("basis_index", "missing integer field 'index'");
    }
    const int64_t index = state["index"].get<int64_t>();
    if (index < 0 || index >= dim) {
      return MakeError(
          ErrorKind::kDimensionMismatch,
          absl::StrFormat("basis index %d outside [0, %d)", index, dim));
    }
    return DensityOperator::BasisState(dim, static_cast<int>(index));
  }
  if (kind == "pure_vector") {
    if (!state.contains("amplitudes") || !state["amplitudes"].is_array()) {
      return SchemaError("pure_vector", "missing array field 'amplitudes'");
    }
    const json& amps = state["amplitudes"];
    if (static_cast<int>(amps.size()) != dim) {
      return MakeError(
          ErrorKind::kDimensionMismatch,
          absl::StrFormat("%d amplitudes for dimension %d", amps.size(), dim));
    }
    bool normalize = false;
    if (state.contains("normalize")) {
      if (!state["normalize"].is_boolean()) {
        return SchemaError("pure_vector", "'normalize' must be a boolean");
      }
      normalize = state["normalize"].get<bool>();
    }
    CVector psi(dim);
    for (int i = 0; i < dim; ++i) {
      QLEAK_ASSIGN_OR_RETURN(psi(i), ComplexFromJson(amps[i]));
    }
    return DensityOperator::FromPureState(psi, normalize);
  }
  if (kind == "density_matrix") {
    if (!state.contains("rows")) {
      return SchemaError("density_matrix", "missing field 'rows'");
    }
    QLEAK_ASSIGN_OR_RETURN(CMatrix rho, MatrixFromJson(state["rows"]));
    if (rho.rows() != dim) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       absl::StrFormat("density matrix has %d rows for "
                                       "dimension %d",
                                       rho.rows(), dim));
    }
    return DensityOperator::Create(rho);
  }
  return SchemaError("state", absl::StrCat("unknown kind '", kind, "'"));
}

}  // namespace

absl::StatusOr<CMatrix> MatrixFromJson(const json& rows) {
  if (!rows.is_array() || rows.empty()) {
    return SchemaError("matrix", "expected a non-empty array of rows");
  }
  const size_t ncols = rows[0].is_array() ? rows[0].size() : 0;
  if (ncols == 0) return SchemaError("matrix", "rows must be non-empty arrays");
  CMatrix m(rows.size(), ncols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != ncols) {
      return SchemaError("matrix", absl::StrFormat("row %d is ragged", i));
    }
    for (size_t j = 0; j < ncols; ++j) {
      QLEAK_ASSIGN_OR_RETURN(m(i, j), ComplexFromJson(rows[i][j]));
    }
  }
  return m;
}

json MatrixToJson(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(ComplexToJson(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

absl::StatusOr<Ensemble> EnsembleFromJson(const json& doc) {
  if (!doc.is_object()) return SchemaError("ensemble", "expected an object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    return SchemaError("ensemble", "missing integer field 'dimension'");
  }
  const int64_t dim = doc["dimension"].get<int64_t>();
  if (dim < 1 || dim > 64) {
    return SchemaError("ensemble",
                       absl::StrFormat("dimension %d outside [1, 64]", dim));
  }
  if (!doc.contains("symbols") || !doc["symbols"].is_array() ||
      doc["symbols"].empty()) {
    return SchemaError("ensemble", "'symbols' must be a non-empty array");
  }
  std::vector<std::string> labels;
  std::vector<double> priors;
  std::vector<DensityOperator> states;
  int with_prior = 0;
  const json& symbols = doc["symbols"];
  for (size_t s = 0; s < symbols.size(); ++s) {
    const json& sym = symbols[s];
    if (!sym.is_object() || !sym.contains("label") ||
        !sym["label"].is_string()) {
      return SchemaError(absl::StrFormat("symbol #%d", s),
                         "missing string field 'label'");
    }
    const std::string label = sym["label"].get<std::string>();
    if (sym.contains("prior")) {
      if (!sym["prior"].is_number()) {
        return ForSymbol(label, SchemaError("prior", "must be a number"));
      }
      priors.push_back(sym["prior"].get<double>());
      ++with_prior;
    }
    if (!sym.contains("state")) {
      return ForSymbol(label, SchemaError("state", "missing"));
    }
    absl::StatusOr<DensityOperator> rho =
        StateFromJson(sym["state"], static_cast<int>(dim));
    if (!rho.ok()) return ForSymbol(label, rho.status());
    labels.push_back(label);
    states.push_back(*std::move(rho));
  }
  if (with_prior != 0 && with_prior != static_cast<int>(symbols.size())) {
    return SchemaError("ensemble",
                       "priors must be given for all symbols or for none");
  }
  return Ensemble::Create(std::move(labels), std::move(priors),
                          std::move(states));
}

absl::StatusOr<Ensemble> ParseEnsembleJson(absl::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return SchemaError("ensemble", "malformed JSON");
  return EnsembleFromJson(doc);
}

json EnsembleToJson(const Ensemble& ensemble) {
  json symbols = json::array();
  for (int x = 0; x < ensemble.num_symbols(); ++x) {
    symbols.push_back({
        {"label", ensemble.labels()[x]},
        {"prior", ensemble.priors()[x]},
        {"state",
         {{"kind", "density_matrix"},
          {"rows", MatrixToJson(ensemble.state(x))}}},
    });
  }
  return {{"dimension", ensemble.dim()}, {"symbols", std::move(symbols)}};
}

absl::string_view ChannelKindName(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kGlobal:
      return "global";
    case ChannelKind::kLocal:
      return "local";
    case ChannelKind::kKraus:
      return "kraus";
  }
  return "unknown";
}

absl::StatusOr<ChannelSpec> ParseChannelJson(absl::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return SchemaError("channel", "malformed JSON");
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    return SchemaError("channel", "missing string field 'kind'");
  }
  ChannelSpec spec;
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "global") {
    spec.kind = ChannelKind::kGlobal;
  } else if (kind == "local") {
    spec.kind = ChannelKind::kLocal;
  } else if (kind == "kraus") {
    spec.kind = ChannelKind::kKraus;
  } else {
    return SchemaError("channel", absl::StrCat("unknown kind '", kind, "'"));
  }
  if (spec.kind != ChannelKind::kKraus) {
    if (!doc.contains("p") || !doc["p"].is_number()) {
      return SchemaError("channel", "missing number field 'p'");
    }
    spec.p = doc["p"].get<double>();
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
      return MakeError(
          ErrorKind::kInvalidProbability,
          absl::StrFormat("channel p = %g outside [0, 1]", spec.p));
    }
    return spec;
  }
  if (!doc.contains("kraus_ops") || !doc["kraus_ops"].is_array() ||
      doc["kraus_ops"].empty()) {
    return SchemaError("channel", "kind 'kraus' needs non-empty 'kraus_ops'");
  }
  std::vector<CMatrix> ops;
  for (const json& m : doc["kraus_ops"]) {
    QLEAK_ASSIGN_OR_RETURN(CMatrix op, MatrixFromJson(m));
    ops.push_back(std::move(op));
  }
  QLEAK_ASSIGN_OR_RETURN(KrausChannel channel,
                         KrausChannel::Create(std::move(ops)));
  spec.kraus = std::move(channel);
  return spec;
}

absl::StatusOr<int> QubitCount(int dim) {
  int k = 0;
  while ((1 << k) < dim) ++k;
  if (dim < 2 || (1 << k) != dim) {
    return MakeError(
        ErrorKind::kUnsupportedDimension,
        absl::StrFormat("dimension %d is not a power of two >= 2", dim));
  }
  return k;
}

absl::StatusOr<KrausChannel> BuildChannel(const ChannelSpec& spec, int dim) {
  switch (spec.kind) {
    case ChannelKind::kGlobal:
      return DepolarizingGlobal(spec.p, dim);
    case ChannelKind::kLocal: {
      QLEAK_ASSIGN_OR_RETURN(int k, QubitCount(dim));
      return DepolarizingLocal(spec.p, k);
    }
    case ChannelKind::kKraus:
      if (!spec.kraus.has_value()) {
        return MakeError(ErrorKind::kInvalidChannel, "no Kraus operators");
      }
      if (spec.kraus->dim_in() != dim) {
        return MakeError(ErrorKind::kDimensionMismatch,
                         absl::StrFormat("channel input dim %d vs ensemble dim "
                                         "%d",
                                         spec.kraus->dim_in(), dim));
      }
      return *spec.kraus;
  }
  return MakeError(ErrorKind::kInvalidChannel, "unknown channel kind");
}

}  // namespace qleak
