#pragma once

#include <json.hpp>

#include <string>

#include "birgeom.hpp"
#include "instance.hpp"
#include "verifier.hpp"

namespace coxhyp {

// Deterministic renderers: JSON uses insertion-ordered objects and text
// mirrors the displayed layouts, so identical inputs give identical bytes.

nlohmann::ordered_json degree_to_json(const MultiDegree& d);

nlohmann::ordered_json presentation_to_json(const PresentedCoxRing& p);
std::string presentation_to_text(const PresentedCoxRing& p);

nlohmann::ordered_json hypothesis_report_to_json(const HypothesisReport& r);
std::string hypothesis_report_to_text(const HypothesisReport& r);

nlohmann::ordered_json bundle_to_json(const CertificateBundle& b);
std::string bundle_to_text(const CertificateBundle& b);

nlohmann::ordered_json cone_report_to_json(const ConeReport& r);
std::string cone_report_to_text(const ConeReport& r);

nlohmann::ordered_json map_result_to_json(bool forward, const SourcePoint& source,
                                          const ImagePoint& image);
std::string map_result_to_text(bool forward, const SourcePoint& source, const ImagePoint& image);

}  // namespace coxhyp
