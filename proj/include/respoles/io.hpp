#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "respoles/stability.hpp"
#include "respoles/types.hpp"

#include "json.hpp"

namespace respoles {

using Json = nlohmann::ordered_json;

// Locale-independent float formatting with 17 significant digits; all CSV
// and JSON numbers go through this so identical configs produce byte
// identical output.
std::string format_float(double x);

Json params_json(const SystemParams& p);

// One comment header line recording the resolved parameters.
void write_csv_header_comment(std::ostream& os, const std::string& command,
                              const SystemParams& p);

// Pole table: columns lambda_re, lambda_im, residue_re, residue_im,
// seed_branch (empty when the pole came from box search), residual.
void write_poles_csv(std::ostream& os, const std::vector<Pole>& poles,
                     const SystemParams& p);
Json poles_json(const std::vector<Pole>& poles, const SystemParams& p);

// Stability grid: columns tau, k, stable, rule, margin.
void write_stability_csv(std::ostream& os, const std::vector<StabilityCell>& cells,
                         double omega0, const std::string& mode);
Json stability_json(const std::vector<StabilityCell>& cells, double omega0,
                    const std::string& mode);

// Trajectory: columns t, re_r, im_r, abs_r.
void write_series_csv(std::ostream& os, const TimeSeries& series,
                      const SystemParams& p, const std::string& command);
Json series_json(const TimeSeries& series, const SystemParams& p);

// Joined simulated/reconstructed trajectory: columns t, re_sim, im_sim,
// abs_sim, re_rec, im_rec, abs_rec (grids must match).
void write_compare_csv(std::ostream& os, const TimeSeries& sim,
                       const TimeSeries& rec, const SystemParams& p);

}  // namespace respoles
