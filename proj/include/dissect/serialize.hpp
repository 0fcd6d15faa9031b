#pragma once

#include "dissect/arrangement.hpp"
#include "dissect/hopf.hpp"
#include "dissect/itint.hpp"
#include "dissect/numeric.hpp"
#include "dissect/presentation.hpp"

#include <json.hpp>

#include <string>

namespace dissect {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const DissectionDiagram& d);
DissectionDiagram diagram_from_json(const Json& j);

Json to_json(const DecoratedDiagram& d);
DecoratedDiagram decorated_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const AlgebraElement& e);
AlgebraElement algebra_from_json(const Json& j);

Json to_json(const TensorElement& e);
TensorElement tensor_from_json(const Json& j);

Json to_json(const BiArrangement& a);
BiArrangement arrangement_from_json(const Json& j);

Json to_json(const ItIntSymbol& s);
ItIntSymbol symbol_from_json(const Json& j);

Json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const Json& j);

Json to_json(const PresentationK& p);
Json to_json(const EvalRecord& r);

// Graphviz rendering of the total directed graph Γ(D).
std::string to_dot(const DecoratedDiagram& d);

// TikZ rendering: circle, black vertex dots, hollow root, directed chords.
std::string to_tikz(const DecoratedDiagram& d);

} // namespace dissect
