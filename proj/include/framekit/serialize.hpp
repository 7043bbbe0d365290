#pragma once

#include <string>

#include <json.hpp>

#include "framekit/analysis.hpp"
#include "framekit/design2.hpp"
#include "framekit/designsets.hpp"
#include "framekit/framegen.hpp"

namespace framekit {

// All parsers throw Error(parse_error) on malformed input.

nlohmann::json design_set_to_json(const DesignSet& s);
DesignSet design_set_from_json(const nlohmann::json& j);

nlohmann::json frame_to_json(const Frame& f);
Frame frame_from_json(const nlohmann::json& j);

nlohmann::json weighted_frame_to_json(const WeightedFrame& wf);
WeightedFrame weighted_frame_from_json(const nlohmann::json& j);

nlohmann::json analysis_report_to_json(const AnalysisReport& r);
nlohmann::json design_certificate_to_json(const DesignCertificate& c);

// One row per vector, columns re_1,im_1,...,re_K,im_K.
std::string frame_to_csv(const Frame& f);

nlohmann::json parse_json(const std::string& text);

}  // namespace framekit
