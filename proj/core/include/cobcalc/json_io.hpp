#ifndef COBCALC_JSON_IO_HPP
#define COBCALC_JSON_IO_HPP

#include <string>
#include <string_view>

#include "cobcalc/bundles.hpp"
#include "cobcalc/cobordism.hpp"
#include "cobcalc/genus.hpp"
#include "cobcalc/verifier.hpp"

namespace cobcalc {

// JSON wire formats. Rationals are exact "p/q" strings, partitions render
// as "[3,1]" keys or [3,1] arrays with parts in canonical (weakly
// decreasing) order. Output bytes are deterministic: object keys are
// string-sorted and numbers never pass through floating point.
//
//   CobordismClass / Functional: {"dim": n, "coeffs": {"[3,1]": "p/q", ...}}
//   ParametricFunctional:        {"dim": n, "coeffs": {"[2]": ["1/12", ...], ...}}
//   SurfaceModel:                {"c1sq": "p/q", "c2": "p/q"}
//   BundleModel:                 {"rank": r, "c2": "p/q"}
//   VerifyReport: {"kind", "dim", "in_ideal", "annihilator_dim",
//                  "expected_dim", "equal", "witness"?}

std::string to_json_string(const CobordismClass& a);
std::string to_json_string(const Functional& f);
std::string to_json_string(const ParametricFunctional& f);
std::string to_json_string(const SurfaceModel& s);
std::string to_json_string(const BundleModel& e);
std::string to_json_string(const VerifyReport& r);
std::string to_json_string(const UnboundedReport& r);

CobordismClass class_from_json_string(std::string_view text);
Functional functional_from_json_string(std::string_view text);
SurfaceModel surface_from_json_string(std::string_view text);
BundleModel bundle_from_json_string(std::string_view text);

}  // namespace cobcalc

#endif
