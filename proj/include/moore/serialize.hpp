#pragma once

#include "moore/ktheory.hpp"
#include "moore/obstruction.hpp"
#include "moore/trunc_series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace moore {

/// Insertion-ordered JSON so identical inputs serialize byte-identically.
/// Exact rationals always appear as strings ("num/den", "/1" omitted),
/// never as floating point.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QSeries& f);                         // {"modulus": m, "coeffs": [...]}
Json to_json(const PsiMatrix& m);                       // {"q":., "n":., "entries": [[...]]}
Json to_json(const ObstructionReport& report);
Json to_json(const std::vector<RationalVector>& basis);  // arrays of rational strings

/// CSV row "p,k,c,first_failure,n_max" matching the report schema.
std::string csv_row(const ObstructionReport& report);

}  // namespace moore
