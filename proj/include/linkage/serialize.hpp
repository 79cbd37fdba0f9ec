#pragma once

#include <json.hpp>

#include "linkage/catalog.hpp"
#include "linkage/complex.hpp"
#include "linkage/core.hpp"
#include "linkage/geometry.hpp"
#include "linkage/symmetry.hpp"

namespace linkage {

using Json = nlohmann::ordered_json;

Json to_json(const LengthVector& l);
Json to_json(const AutGroup& G);
Json to_json(const ReflectivityResult& r);
Json to_json(const FacePoset& P);
Json to_json(const SimplicialComplex& K);
Json to_json(const HomologyProfile& h);
Json to_json(const GraphInvariants& g);
Json to_json(const QuotientComplex& Q);
Json to_json(const AngleConfig& a, const LengthVector& l);
Json to_json(const ReflectionFixedReport& r, const LengthVector& l);
Json to_json(const RotationFixedReport& r, const LengthVector& l);
Json to_json(const DihedralFixedResult& r, const LengthVector& l);
Json to_json(const QuadCase& c);
Json to_json(const AnnotatedGraph& g);
Json to_json(const PentagonReport& r);
Json to_json(const HexagonReport& r);
Json to_json(const StabilizerCensus& c);

// Rebuilds a face poset from the output of to_json(FacePoset).
FacePoset poset_from_json(const Json& j);

}  // namespace linkage
