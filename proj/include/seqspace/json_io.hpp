#pragma once

#include <string>

#include <json.hpp>

#include "seqspace/criteria.hpp"
#include "seqspace/exponents.hpp"
#include "seqspace/finite_vector.hpp"
#include "seqspace/greedy.hpp"
#include "seqspace/modular.hpp"
#include "seqspace/orlicz.hpp"
#include "seqspace/space.hpp"
#include "seqspace/weights.hpp"

namespace seqspace {

// All reports use insertion-ordered objects so identical inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

// %.12g, the fixed float formatting used by every CSV emitter.
std::string format_g12(double v);

Json orlicz_to_json(const OrliczFunction& f);
OrliczFunction orlicz_from_json(const Json& j);

Json exponents_to_json(const ExponentSequence& e);
ExponentSequence exponents_from_json(const Json& j);

Json scales_to_json(const ScaleSequence& s);
ScaleSequence scales_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json space_to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const Json& j);

Json vector_to_json(const FiniteVector& x);
FiniteVector vector_from_json(const Json& j);

Json counts_to_json(const CountFunction& c);
CountFunction counts_from_json(const Json& j);

Json verdict_to_json(const CriterionVerdict& v);
Json classification_to_json(const NakanoClassification& c);
Json block_basis_to_json(const BlockBasis& b);
Json weight_properties_to_json(const WeightProperties& p);

Json democracy_to_json(const DemocracyTable& t);
std::string democracy_to_csv(const DemocracyTable& t);

Json greedy_report_to_json(const GreedyReport& r);

}  // namespace seqspace
