#include "monodromy/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace monodromy {

const char* const kSweepCsvHeader =
    "k_per_mm,f_GHz,abs_T,abs_R,arg_T_unwrapped_rad,phi1_rad,phibar2_rad,"
    "delta_phi_rad,trace_half_re,band_flag,t_monodromy,t_wigner,speed_ratio,d_pen_mm";

std::string format_sig12(double v) {
    if (v == 0.0) v = 0.0; // render -0 as 0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_sweep_csv(const Spectrum& s, std::ostream& out) {
    out << kSweepCsvHeader << "\n";
    const bool em = s.dispersion.electromagnetic_kind();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const ScatteringResult& p = s.points[i];
        out << format_sig12(p.k) << ',';
        if (em) out << format_sig12(s.dispersion.frequency_GHz(p.k));
        out << ',' << format_sig12(std::abs(p.T)) << ',' << format_sig12(std::abs(p.R)) << ','
            << format_sig12(s.unwrapped_phibar2[i]) << ',' << format_sig12(p.phi1) << ','
            << format_sig12(p.phibar2) << ',' << format_sig12(p.delta_phi) << ','
            << format_sig12(s.trace_half_re[i]) << ',' << band_flag_name(s.band_flag[i]) << ','
            << format_sig12(s.t_monodromy[i]) << ',' << format_sig12(s.t_wigner[i]) << ','
            << format_sig12(s.speed_ratio[i]) << ',' << format_sig12(s.d_pen[i]) << "\n";
    }
}

std::string sweep_csv_string(const Spectrum& s) {
    std::ostringstream out;
    write_sweep_csv(s, out);
    return out.str();
}

} // namespace monodromy
