#pragma once

/**
 * @file csv.hpp
 * @brief Writers for the tabular interchange formats.
 *
 * CSV is the single tabular format of the tool. Every writer emits a fixed
 * header row; floating values go through one shared formatter so identical
 * inputs give identical bytes.
 */

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "fuss/monte_carlo.hpp"

namespace fuss {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct CertificateRow {
    unsigned m = 0, p = 0;
    unsigned long path_id = 0;
    std::size_t vertices = 0;      // V
    std::size_t edge_classes = 0;  // E
    bool regular = false;
};

inline void write_certificates_csv(std::ostream& os, const std::vector<CertificateRow>& rows) {
    os << "m,p,path_id,V,E,regular\n";
    for (const auto& r : rows)
        os << r.m << ',' << r.p << ',' << r.path_id << ',' << r.vertices << ','
           << r.edge_classes << ',' << (r.regular ? 1 : 0) << '\n';
}

/// One row per eigenvalue: trial index, position within the trial, value.
inline void write_spectrum_csv(std::ostream& os, const std::vector<std::vector<double>>& spectra) {
    os << "trial,k,lambda\n";
    for (std::size_t t = 0; t < spectra.size(); ++t)
        for (std::size_t k = 0; k < spectra[t].size(); ++k)
            os << t << ',' << k << ',' << format_double(spectra[t][k]) << '\n';
}

inline void write_moment_report_csv(std::ostream& os, const std::vector<MomentReport>& rows) {
    os << "m,p,N,trials,mean,stderr,reference\n";
    for (const auto& r : rows)
        os << r.m << ',' << r.p << ',' << r.n << ',' << r.trials << ','
           << format_double(r.mean) << ',' << format_double(r.std_error) << ','
           << format_double(r.reference) << '\n';
}

inline void write_density_csv(std::ostream& os, unsigned m, const std::vector<double>& xs,
                              const std::vector<double>& density,
                              const std::vector<double>& cdf) {
    if (xs.size() != density.size() || xs.size() != cdf.size())
        throw std::invalid_argument("write_density_csv: column lengths differ");
    os << "m,x,density,cdf\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << m << ',' << format_double(xs[i]) << ',' << format_double(density[i]) << ','
           << format_double(cdf[i]) << '\n';
}

}  // namespace fuss
