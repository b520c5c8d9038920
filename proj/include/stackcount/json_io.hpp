#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stackcount/hseries.hpp"

namespace stackcount {

/* Key order is part of the output contract: reports must be byte-identical
 * across runs, so every encoder speaks ordered_json and iterates containers
 * with deterministic order (std::map, insertion-ordered arrays). */
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/* Polynomials and rational functions: {"num": ["c0","c1",...], "den": [...]},
 * coefficients as canonical "p/q" strings in ascending degree.  A polynomial
 * is the den == ["1"] case of the same shape. */
Json qpoly_to_json(const QPoly& p);
Json qratfun_to_json(const QRatFun& f);
QPoly qpoly_from_json(const Json& j);
QRatFun qratfun_from_json(const Json& j);

// {"base_q": q, "entries": ["p/q", ...]}
Json volume_to_json(const Volume& v);
Volume volume_from_json(const Json& j);

/* {"vars": n, "bound": N, "terms": [{"exp": [...], "coeff": ...}]} with a
 * "caps" array inserted after "bound" when per-variable caps are set.  Terms
 * are emitted in increasing exponent order. */
Json series_to_json(const QRatRing& R, const MSeries<QRatRing>& s);
Json series_to_json(const VolRing& R, const MSeries<VolRing>& s);
MSeries<QRatRing> series_qratfun_from_json(const Json& j);
MSeries<VolRing> series_volume_from_json(const Json& j);

// comma-separated integer lists from the command line ("2,2", "2,3,4,5,7")
std::vector<int> parse_dim_list(const std::string& s);
std::vector<long long> parse_field_list(const std::string& s);

} // namespace stackcount
