#pragma once

#include <string>

#include "ramify/degree.hpp"
#include "ramify/variation.hpp"

namespace ramify {

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& name);

// Wire forms. JSON keys are emitted in schema order and all values are
// deterministic functions of (prime, seed, inputs), so replays with timing
// recording off are byte-identical.
std::string render_degree_report(const DegreeReport& rep, ReportFormat format);
std::string render_rank_report(const RankReport& rep, ReportFormat format);

} // namespace ramify
