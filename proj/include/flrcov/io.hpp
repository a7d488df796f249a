// File formats: header-less CSV for samples (one curve per row) and
// surfaces (n x n, row-major), both written with 17 significant digits so
// doubles round-trip exactly; JSON for reports and cell summaries.

#pragma once

#include "flrcov/bandwidth.hpp"
#include "flrcov/mc.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <string>

namespace flrcov {

/// %.17g — exact round-trip formatting for doubles.
std::string format_double(double v);

void write_surface_csv(const std::filesystem::path& path, const Surface& s);
Surface read_surface_csv(const std::filesystem::path& path);

void write_sample_csv(const std::filesystem::path& path, const CurveSample& sample);
CurveSample read_sample_csv(const std::filesystem::path& path);

nlohmann::json kernel_to_json(const KernelSpec& k);
nlohmann::json report_to_json(const BandwidthReport& r);
nlohmann::json summary_to_json(const LossSummary& s);

}  // namespace flrcov
