#pragma once

#include <json.hpp>

#include "twinrep/analysis.hpp"

namespace twinrep {

using json = nlohmann::json;

/// {"degree": d, "entries": [[canonical-string, ...], ...]}
json matrix_to_json(const RfMatrix& m);

/// {"rep": tag, "n": n, "params": {...}}
json rep_descriptor_json(const MatrixRep& rep);

/// [{"gen": "s"|"r", "i": int}, ...]
json twinword_to_json(const TwinWord& w);

json qvector_to_json(const QVector& v);
json witness_to_json(const InvariantLineWitness& w);

/// {"presentation", "representation", "checks": [{"relation", "holds",
///  "lhs", "rhs"}], "all_hold"}
json relation_report_to_json(const RelationReport& report, bool include_matrices = true);

/// {"n", "t": "p/q", "dim", "verdict", "witness": {...}|null}
json verdict_to_json(const IrreducibilityVerdict& v);

json obstruction_to_json(const WtObstructionOutcome& outcome);

} // namespace twinrep
