#pragma once

// CSV and JSON encodings shared by the command-line tool. Every number is
// written with 12 significant digits; the JSON layouts are described by the
// schemas under schemas/.

#include "flncs/algebra.hpp"
#include "flncs/generation.hpp"
#include "flncs/identity.hpp"
#include "flncs/states.hpp"
#include "flncs/statistics.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace flncs::io {

using nlohmann::ordered_json;

std::string format_number(double value);
// Rounds to 12 significant digits so JSON output matches the CSV text.
double round12(double value);
// "undefined" for an empty optional.
std::string format_optional(const std::optional<double>& value);

std::string state_csv(const FockVector& state);
ordered_json state_json(const ModelParams& params, Complex z, const FockVector& state);

std::string stats_csv(const PhotonStats& stats);
ordered_json stats_json(const ModelParams& params, Complex z, const PhotonStats& stats);

std::string scan_csv(const std::vector<ScanRow>& rows);
ordered_json scan_json(Observable obs, const ModelParams& params,
                       const std::vector<ScanRow>& rows);

// Rows run over the real axis (outer) then the imaginary axis (inner).
std::string qgrid_csv(const QGrid& grid);
ordered_json qgrid_json(const QGrid& grid);

std::string moments_csv(const std::vector<MomentReport>& reports);
ordered_json moments_json(const ModelParams& params, const std::vector<MomentReport>& reports);

std::string profile_csv(const std::vector<WeightPoint>& profile);
ordered_json profile_json(const ModelParams& params, const std::vector<WeightPoint>& profile);

std::string spectrum_csv(const std::array<BranchEnergy, 3>& spectrum);
ordered_json spectrum_json(int n, const std::array<BranchEnergy, 3>& spectrum);

ordered_json plan_json(const GenerationPlan& plan);
// One row per atom: k,gtau,eps_re,eps_im,step_prob, followed by no summary rows.
std::string plan_csv(const GenerationPlan& plan);
ordered_json generation_json(const GenerationPlan& plan, const SimulationResult& sim);
// Intermediate cavity states phi^{(k)}: k,n,re,im.
std::string intermediates_csv(const std::vector<FockVector>& states);

}  // namespace flncs::io
