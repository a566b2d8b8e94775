/**
 * @file json_io.hpp
 * @brief JSON views of derivations, residue tables, and census rows.
 *
 * Uses nlohmann's ordered_json so that key order is insertion order;
 * together with the canonical orderings produced by the library this
 * makes every serialization byte-stable for fixed inputs.
 */
#pragma once

#include "lspace/obstruct.hpp"
#include "lspace/spinc.hpp"
#include "lspace/twobridge.hpp"

#include <json.hpp>

namespace lspace {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Step& s) {
    return ordered_json{{"rule", s.rule_id},
                        {"kind", s.kind == RuleKind::AXIOM ? "AXIOM" : "COMPUTED"},
                        {"citation", s.citation},
                        {"inputs", s.inputs},
                        {"conclusion", s.conclusion}};
}

inline ordered_json to_json(const Branch& b) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : b.steps) steps.push_back(to_json(s));
    ordered_json j{{"y0", b.y0.display()}, {"y1", b.y1.display()}, {"steps", steps}};
    switch (b.status) {
        case BranchStatus::RESOLVED: {
            j["status"] = "resolved";
            ordered_json cands = ordered_json::array();
            for (const auto& y : b.candidates) cands.push_back(y.display());
            j["candidates"] = cands;
            break;
        }
        case BranchStatus::EXCLUDED:
            j["status"] = "excluded";
            break;
        case BranchStatus::UNRESOLVED:
            j["status"] = "unresolved";
            j["reason"] = b.unresolved_reason;
            break;
    }
    return j;
}

inline ordered_json to_json(const Derivation& d) {
    ordered_json j{{"det", d.det.str()}};
    if (!d.base_steps.empty()) {
        ordered_json steps = ordered_json::array();
        for (const auto& s : d.base_steps) steps.push_back(to_json(s));
        j["base_steps"] = steps;
    }
    ordered_json splits = ordered_json::array();
    for (const auto& sp : d.splits) {
        ordered_json branches = ordered_json::array();
        for (const auto& b : sp.branches) branches.push_back(to_json(b));
        splits.push_back(ordered_json{{"det_y0", sp.det_y0.str()},
                                      {"det_y1", sp.det_y1.str()},
                                      {"branches", branches}});
    }
    j["splits"] = splits;
    ordered_json cands = ordered_json::array();
    for (const auto& y : d.candidates) cands.push_back(y.display());
    j["candidates"] = cands;
    j["complete"] = d.complete;
    return j;
}

inline ordered_json to_json(const ResiduePairing& t) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : t.entries) {
        ordered_json residues = ordered_json::array();
        for (const auto& k : e.residues) residues.push_back(k.str());
        ordered_json pairs = ordered_json::array();
        for (const auto& [ds, dt] : e.pairs)
            pairs.push_back(ordered_json{{"d_source", to_string(ds)},
                                         {"d_target", to_string(dt)}});
        entries.push_back(ordered_json{{"residues", residues},
                                       {"pairs", pairs},
                                       {"unique", e.unique()}});
    }
    return ordered_json{
        {"modulus", t.modulus.str()},
        {"entries", entries},
        {"status",
         t.status == ResiduePairing::Status::CONSISTENT ? "CONSISTENT" : "INCONSISTENT"}};
}

inline ordered_json census_row_json(const LinkSum& l) {
    ordered_json provenance = ordered_json::array();
    for (auto it = l.summands().rbegin(); it != l.summands().rend(); ++it) {
        const LinkName* e = link_name_entry(*it);
        provenance.push_back(e ? e->provenance : "unnamed fraction");
    }
    return ordered_json{{"name", link_display_name(l)},
                        {"fractions", l.fractions()},
                        {"determinant", det_link(l).str()},
                        {"cover", branched_double_cover(l).display()},
                        {"mirror", link_display_name(l.mirror())},
                        {"name_provenance", provenance}};
}

}  // namespace lspace
