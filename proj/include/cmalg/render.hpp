#pragma once
#include <string>

#include <json.hpp>

#include "cmalg/reesalg.hpp"
#include "cmalg/verify.hpp"

namespace cma {

// Extended integers: -inf is null and +inf is the string "inf".
nlohmann::ordered_json ext_json(int v);
std::string ext_text(int v);

// Macaulay2-style grid: columns i, rows j - i, a totals row; "0" for the zero module.
std::string render_betti(const BettiTable& T);
nlohmann::ordered_json betti_json(const RingContext& R, const BettiTable& T);
BettiTable betti_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json ring_json(const RingContext& R);
nlohmann::ordered_json summary_json(const GradedVectorSpaceSummary& s);
std::string render_summary(const GradedVectorSpaceSummary& s);

nlohmann::ordered_json report_json(const BoundReport& r);
std::string render_report(const BoundReport& r);
// "holds", "fails" or "not-applicable"
std::string verdict(const BoundReport& r);

nlohmann::ordered_json fuzz_json(const FuzzReport& f);
std::string render_fuzz(const FuzzReport& f);

}  // namespace cma
