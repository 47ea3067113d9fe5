// Stable JSON wire formats. All mathematical integers are serialized as
// decimal strings and rationals as "p/q" strings; small structural fields
// (dimension d, counts) are plain JSON numbers.
#pragma once

#include <latgeo/catalog.hpp>
#include <latgeo/cplxone.hpp>
#include <latgeo/intmat.hpp>
#include <latgeo/kempty.hpp>
#include <latgeo/polytope.hpp>
#include <latgeo/snf.hpp>
#include <latgeo/verify.hpp>

#include <json.hpp>

namespace latgeo {

inline constexpr const char* kSchemaVersion = "1";

Json intvec_to_json(const IntVec& v);
Json ratvec_to_json(const RatVec& v);
Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j);

// {"d": 3, "vertices": [["0","0","0"], ...]} with rational entries allowed.
Json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const Json& j);

// {"r": "2", "blocks": [{"l": ["3","1"], "d": [["1","0"],["-4","0"]]}, ...],
//  "dprime": [["5","1"], ...]}; d rows are (penultimate, last).
Json matrix_to_json(const DefiningMatrix& p);
DefiningMatrix matrix_from_json(const Json& j);

// {"k": "2", "vertices": [["0","0"],["0","1"],["5","3"]]}
Json triangle_to_json(const kempty::LatticeTriangle& t, long long k);
std::pair<kempty::LatticeTriangle, long long> triangle_from_json(const Json& j);

Json snf_to_json(const SmithDecomp& d);
Json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace latgeo
