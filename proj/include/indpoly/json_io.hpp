#pragma once

#include <string>

#include "json.hpp"

#include "indpoly/analysis.hpp"
#include "indpoly/families.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

using Json = nlohmann::ordered_json;

// Machine output keeps every number as a decimal string: coefficients exceed
// 64-bit range by design, and mixing exact strings with JSON doubles would
// invite silent precision loss downstream.
std::string dec(long long v);
std::string dec(const BigInt& v);

Json poly_to_json(const Polynomial& p);  // coefficient array, constant term first
Json shape_to_json(const ShapeReport& s);
// girth is reported as a decimal string, or the sentinel "acyclic"
Json wellcover_to_json(const WellCoverReport& r);
Json certificate_to_json(const Certificate& c);
Json windows_to_json(const ScanWindows& w);
Json family_to_json(const FamilyReport& r);

}  // namespace indpoly
