#pragma once

#include "covrad/covering_radius.hpp"
#include "covrad/lonely_runner.hpp"
#include "covrad/polytope.hpp"

#include <iosfwd>
#include <string>

namespace covrad {

// Rationals appear as "p/q" strings ("p" when q = 1) in all JSON payloads;
// integer entries may also be plain JSON numbers on input.

struct PolytopeInput {
    RatMat A;
    RatVec b;
};

// {"A": [[int or "p/q", ...], ...], "b": [...]}
PolytopeInput read_polytope_json(std::istream& in);

// Normalized integer form echo: {"A": [[int, ...], ...], "b": [int, ...]}
std::string polytope_to_json(const HPolytope& P);

// Certificate object; includes the bounds actually used so verification can
// rebuild the candidate box, plus the normalized polytope echo and the
// recentring translation.
std::string certificate_to_json(const Certificate& cert, const HPolytope& P,
                                const RatVec& translation);

Certificate certificate_from_json(std::istream& in);

// CSV with the fixed column order v1,v2,v3,generators,mu,width,verdict,spectrum.
std::string scan_records_csv(const std::vector<ScanRecord>& records);

std::string scan_result_json(const ScanResult& result);

} // namespace covrad
