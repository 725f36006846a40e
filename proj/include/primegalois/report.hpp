#ifndef PRIMEGALOIS_REPORT_HPP
#define PRIMEGALOIS_REPORT_HPP

#include "primegalois/classifier.hpp"
#include "primegalois/realize.hpp"

#include <json.hpp>

#include <string>

namespace primegalois {

/// Text report; the last line is exactly "Galois group: <label>".
std::string report_text(const ClassificationReport& r);
nlohmann::json report_json(const ClassificationReport& r);

std::string realization_text(const RealizationResult& r, const ConsistencyReport& cc);
nlohmann::json realization_json(const RealizationResult& r, const ConsistencyReport& cc);

std::string periods_text(std::uint64_t q, std::uint64_t n, std::uint64_t m,
                         const CyclotomicElement& alpha, const IntPoly& minpoly);

std::string consistency_text(const ConsistencyReport& cc);

} // namespace primegalois

#endif
