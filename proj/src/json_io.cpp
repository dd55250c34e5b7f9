#include "twinrep/json_io.hpp"

namespace twinrep {

json matrix_to_json(const RfMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m.at(r, c).to_string());
        }
        entries.push_back(std::move(row));
    }
    return json{{"degree", m.rows()}, {"entries", std::move(entries)}};
}

json rep_descriptor_json(const MatrixRep& rep) {
    json params = json::object();
    for (const auto& [k, v] : rep.params()) {
        params[k] = v;
    }
    return json{{"rep", rep.tag()}, {"n", rep.strands()}, {"params", std::move(params)}};
}

json twinword_to_json(const TwinWord& w) {
    json out = json::array();
    for (const auto& letter : w.letters()) {
        out.push_back(json{{"gen", letter.is_rho ? "r" : "s"}, {"i", letter.index}});
    }
    return out;
}

json qvector_to_json(const QVector& v) {
    json out = json::array();
    for (const auto& q : v) {
        out.push_back(format_rational(q));
    }
    return out;
}

json witness_to_json(const InvariantLineWitness& w) {
    return json{{"vector", qvector_to_json(w.direction)},
                {"signs", w.signs},
                {"side", w.row_side ? "row" : "column"}};
}

json relation_report_to_json(const RelationReport& report, bool include_matrices) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json item{{"relation", c.label + ": " + c.lhs_word + " = " + c.rhs_word},
                  {"holds", c.holds}};
        if (include_matrices) {
            item["lhs"] = matrix_to_json(c.lhs);
            item["rhs"] = matrix_to_json(c.rhs);
        }
        checks.push_back(std::move(item));
    }
    return json{{"presentation", report.presentation},
                {"representation", report.representation},
                {"checks", std::move(checks)},
                {"all_hold", report.all_hold()}};
}

json verdict_to_json(const IrreducibilityVerdict& v) {
    json out{{"n", v.n},
             {"t", format_rational(v.t0)},
             {"dim", v.algebra_dim},
             {"verdict", v.absolutely_irreducible ? "absolutely-irreducible" : "reducible"}};
    out["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    return out;
}

namespace {

json entry_witness_json(const EntryWitness& w) {
    return json{{"i", w.i},
                {"row", w.row + 1},
                {"col", w.col + 1},
                {"lhs", w.lhs.to_string()},
                {"rhs", w.rhs.to_string()}};
}

} // namespace

json obstruction_to_json(const WtObstructionOutcome& outcome) {
    json details = json::array();
    for (const auto& d : outcome.details) {
        json item{{"i", d.i},
                  {"relation8_holds", d.relation8_holds},
                  {"equivalent_form_holds", d.equivalent_form_holds},
                  {"proof_variant_holds", d.proof_variant_holds}};
        item["witness"] = d.witness ? entry_witness_json(*d.witness) : json(nullptr);
        details.push_back(std::move(item));
    }
    json out{{"obstructed", outcome.obstructed}, {"details", std::move(details)}};
    out["first_witness"] =
        outcome.first_witness ? entry_witness_json(*outcome.first_witness) : json(nullptr);
    return out;
}

} // namespace twinrep
