#pragma once

#include <nlohmann/json.hpp>

#include "catlim/cubes.hpp"
#include "catlim/equivariant.hpp"
#include "catlim/holim.hpp"
#include "catlim/lydakis.hpp"
#include "catlim/simpl.hpp"

namespace catlim {

using Json = nlohmann::ordered_json;

// categories, functors, diagrams
Json category_to_json(const FinCategory& c);
CatPtr category_from_json(const Json& j);
Json functor_maps_to_json(const Functor& f);  // object_map/morphism_map only
Functor functor_from_maps(const Json& j, const CatPtr& src, const CatPtr& tgt);
Json functor_to_json(const Functor& f);  // with embedded source/target
Functor functor_from_json(const Json& j);
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// groups and equivariant data
Json group_to_json(const FinGroup& g);
FinGroup group_from_json(const Json& j);
Json gdiagram_to_json(const GDiagram& x);
GDiagram gdiagram_from_json(const Json& j);

// simplicial data and homology
Json simplicial_to_json(const SimplicialSet& k);
Json homology_to_json(const HomologyResult& h);

// validation and check reports; every weak-equivalence verdict carries the
// literal string "homology proxy"
Json validation_to_json(const ValidationReport& rep);
Json reedy_report_to_json(const ReedyReport& rep);
Json equivariant_reedy_report_to_json(const EquivariantReedyReport& rep);
Json bn_report_to_json(const BnReport& rep);
Json lydakis_report_to_json(const LydakisReport& rep);
Json cofinality_report_to_json(const LambdaCofinalityReport& rep);
Json cube_report_to_json(const CubeCartesianReport& rep);
Json lemma_report_to_json(const LemmaIso& iso);

extern const char* kProxyNote;

}  // namespace catlim
