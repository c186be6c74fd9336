#ifndef FRACTIME_INHOM_HPP
#define FRACTIME_INHOM_HPP

#include "fractime/experiment.hpp"
#include "fractime/exponents.hpp"
#include "fractime/fracmeasure.hpp"
#include "fractime/mixednorm.hpp"
#include "fractime/strichartz.hpp"

namespace fractime {

// The Duhamel-type pairing against an atomic measure:
//   out(t) = sum_s w_s e^{+i(t-s)(-Delta)^{gamma/2}} F(s)          (retarded = false)
//   out(t) = sum_{s <= t} w_s e^{-i(t-s)(-Delta)^{gamma/2}} F(s)   (retarded = true)
// F is sampled at the measure atoms; ties s = t carry their full weight.
// Accumulation runs in ascending t via spectral prefix sums, so the cost is
// linear in the number of atoms.
TimeSlices inhom_apply(const TimeSlices& F, double gamma, bool retarded,
                       const std::vector<double>& eval_times);

// T_k(F,G) = double mu-integral of chi_k(t-s) <U_s P_j F(s), U_t P~_j G(t)>,
// checked against C 2^{sigma j} 2^{-lambda k} ||F|| ||G||.
BandFormResult inhom_bandform(const TimeSlices& F, const TimeSlices& G, int k, int j,
                              const InhomExponents& exps);

struct InhomConfig {
    InhomExponents exps;
    bool retarded = false;
    int j_lo = 4;
    int j_hi = 7;
    int trials = 6;
    std::uint64_t seed = 1;
    double L = 16.0;
    int max_n = 1 << 13;
};

// Ratio experiment for the inhomogeneous estimate. Trials alternate between
// independent random band fields per atom and a single-atom band bump; the
// bump family realizes the 2^{sigma j} prefactor exactly through its
// diagonal term.
RatioReport inhom_experiment(const AtomicMeasure& mu, const InhomConfig& ic);

// Validates the region preconditions, naming the violated condition.
void check_inhom_region(const InhomExponents& exps);

}  // namespace fractime

#endif
