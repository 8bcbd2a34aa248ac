#include "respoles/io.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "respoles/errors.hpp"

namespace respoles {

std::string format_float(double x) {
  char buf[64];
  auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Json params_json(const SystemParams& p) {
  Json j;
  j["k"] = p.k;
  j["tau"] = p.tau;
  j["omega0"] = p.omega0;
  j["h"] = p.h;
  return j;
}

void write_csv_header_comment(std::ostream& os, const std::string& command,
                              const SystemParams& p) {
  os << "# respoles " << command << " k=" << format_float(p.k)
     << " tau=" << format_float(p.tau) << " omega0=" << format_float(p.omega0)
     << " h=" << format_float(p.h) << "\n";
}

void write_poles_csv(std::ostream& os, const std::vector<Pole>& poles,
                     const SystemParams& p) {
  write_csv_header_comment(os, "poles", p);
  os << "lambda_re,lambda_im,residue_re,residue_im,seed_branch,residual\n";
  for (const Pole& pole : poles) {
    os << format_float(pole.lambda.real()) << ','
       << format_float(pole.lambda.imag()) << ','
       << format_float(pole.residue.real()) << ','
       << format_float(pole.residue.imag()) << ',';
    if (pole.seed_branch) os << *pole.seed_branch;
    os << ',' << format_float(pole.final_residual) << '\n';
  }
}

Json poles_json(const std::vector<Pole>& poles, const SystemParams& p) {
  Json j;
  j["command"] = "poles";
  j["params"] = params_json(p);
  j["poles"] = Json::array();
  for (const Pole& pole : poles) {
    Json row;
    row["lambda_re"] = pole.lambda.real();
    row["lambda_im"] = pole.lambda.imag();
    row["residue_re"] = pole.residue.real();
    row["residue_im"] = pole.residue.imag();
    if (pole.seed_branch)
      row["seed_branch"] = *pole.seed_branch;
    else
      row["seed_branch"] = nullptr;
    row["residual"] = pole.final_residual;
    j["poles"].push_back(row);
  }
  return j;
}

void write_stability_csv(std::ostream& os,
                         const std::vector<StabilityCell>& cells,
                         double omega0, const std::string& mode) {
  os << "# respoles stability-map omega0=" << format_float(omega0)
     << " mode=" << mode << "\n";
  os << "tau,k,stable,rule,margin\n";
  for (const StabilityCell& cell : cells) {
    os << format_float(cell.tau) << ',' << format_float(cell.k) << ','
       << (cell.verdict.stable ? '1' : '0') << ','
       << rule_name(cell.verdict.rule) << ','
       << format_float(cell.verdict.margin) << '\n';
  }
}

Json stability_json(const std::vector<StabilityCell>& cells, double omega0,
                    const std::string& mode) {
  Json j;
  j["command"] = "stability-map";
  j["omega0"] = omega0;
  j["mode"] = mode;
  j["cells"] = Json::array();
  for (const StabilityCell& cell : cells) {
    Json row;
    row["tau"] = cell.tau;
    row["k"] = cell.k;
    row["stable"] = cell.verdict.stable;
    row["rule"] = rule_name(cell.verdict.rule);
    row["margin"] = cell.verdict.margin;
    j["cells"].push_back(row);
  }
  return j;
}

void write_series_csv(std::ostream& os, const TimeSeries& series,
                      const SystemParams& p, const std::string& command) {
  write_csv_header_comment(os, command, p);
  os << "t,re_r,im_r,abs_r\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const Complex v = series.values[i];
    os << format_float(series.time_at(i)) << ',' << format_float(v.real())
       << ',' << format_float(v.imag()) << ',' << format_float(std::abs(v))
       << '\n';
  }
}

Json series_json(const TimeSeries& series, const SystemParams& p) {
  Json j;
  j["params"] = params_json(p);
  j["t0"] = series.t0;
  j["dt"] = series.dt;
  j["re"] = Json::array();
  j["im"] = Json::array();
  for (const Complex& v : series.values) {
    j["re"].push_back(v.real());
    j["im"].push_back(v.imag());
  }
  return j;
}

void write_compare_csv(std::ostream& os, const TimeSeries& sim,
                       const TimeSeries& rec, const SystemParams& p) {
  if (sim.size() != rec.size() || sim.t0 != rec.t0 || sim.dt != rec.dt)
    throw ValidationError("write_compare_csv: series grids do not match");
  write_csv_header_comment(os, "compare", p);
  os << "t,re_sim,im_sim,abs_sim,re_rec,im_rec,abs_rec\n";
  for (std::size_t i = 0; i < sim.size(); ++i) {
    const Complex a = sim.values[i];
    const Complex b = rec.values[i];
    os << format_float(sim.time_at(i)) << ',' << format_float(a.real()) << ','
       << format_float(a.imag()) << ',' << format_float(std::abs(a)) << ','
       << format_float(b.real()) << ',' << format_float(b.imag()) << ','
       << format_float(std::abs(b)) << '\n';
  }
}

}  // namespace respoles
