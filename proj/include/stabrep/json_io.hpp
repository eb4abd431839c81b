/*
 * json_io.hpp
 *
 * JSON encodings of the user-facing structures: diagrams ("t0"/"b0" vertex
 * names, optional wall/orient/sign fields), Grothendieck-ring classes,
 * comultiplication tables, finite-rank classes and labeled graphs. All
 * encodings are deterministic: object keys are sorted and term lists follow
 * the canonical label orders.
 */
#pragma once

#include "json.hpp"
#include "stabrep/charring.hpp"
#include "stabrep/diagram.hpp"
#include "stabrep/kring.hpp"

namespace stabrep {

nlohmann::json json_from_mpz(const mpz_class& z);
mpz_class mpz_from_json(const nlohmann::json& j);

nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json label_to_json(const Label& x);  // ["2,1"] or ["2,1", "1"]
Label label_from_json(KCat cat, const nlohmann::json& j);

nlohmann::json kclass_to_json(const KClass& x);
KClass kclass_from_json(const nlohmann::json& j);

nlohmann::json pairs_to_json(KCat cat, const LabelPairMap& m);

nlohmann::json finite_class_to_json(const FiniteClass& x);

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

}  // namespace stabrep
