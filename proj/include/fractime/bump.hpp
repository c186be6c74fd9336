#ifndef FRACTIME_BUMP_HPP
#define FRACTIME_BUMP_HPP

#include <cmath>

namespace fractime {

// The fixed smooth cutoff family. All Littlewood-Paley constants in reports
// trace back to these exact formulas.
//
//   chi(r) = 1                              r <= 1
//          = exp(1 - 1/(1 - (r-1)^2))       1 < r < 2
//          = 0                              r >= 2
//
//   psi(r)       = chi(r) - chi(2r),   supp psi  in [1/2, 2], psi(1) = 1
//   psi_tilde(r) = chi(r/2) - chi(4r), supp in [1/4, 4], == 1 on [1/2, 2]
inline double chi_cutoff(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    double u = r - 1.0;
    return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

inline double lp_psi(double r) { return chi_cutoff(r) - chi_cutoff(2.0 * r); }

inline double lp_psi_tilde(double r) { return chi_cutoff(r / 2.0) - chi_cutoff(4.0 * r); }

}  // namespace fractime

#endif
