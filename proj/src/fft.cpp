#include "fractime/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace fractime {

namespace {

struct PlanKey {
    int d, n, sign;
    bool operator<(const PlanKey& o) const {
        return std::tie(d, n, sign) < std::tie(o.d, o.n, o.sign);
    }
};

std::mutex plan_mutex;
std::map<PlanKey, fftw_plan> plan_cache;

fftw_plan get_plan(int d, int n, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    PlanKey key{d, n, sign};
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;
    std::size_t total = d == 1 ? std::size_t(n) : std::size_t(n) * n;
    fftw_complex* a = fftw_alloc_complex(total);
    fftw_complex* b = fftw_alloc_complex(total);
    fftw_plan p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (d == 1)
        p = fftw_plan_dft_1d(n, a, b, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, flags);
    else
        p = fftw_plan_dft_2d(n, n, a, b, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, flags);
    fftw_free(a);
    fftw_free(b);
    plan_cache.emplace(key, p);
    return p;
}

}  // namespace

std::vector<cplx> fft(const std::vector<cplx>& in, int d, int n, int sign) {
    if (d != 1 && d != 2) throw ConfigError("fft: dimension must be 1 or 2");
    std::size_t total = d == 1 ? std::size_t(n) : std::size_t(n) * n;
    if (in.size() != total) throw ConfigError("fft: size mismatch");
    fftw_plan p = get_plan(d, n, sign);
    std::vector<cplx> out(total);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::vector<cplx> dft_reference(const std::vector<cplx>& in, int d, int n, int sign) {
    std::size_t total = d == 1 ? std::size_t(n) : std::size_t(n) * n;
    if (in.size() != total) throw ConfigError("dft_reference: size mismatch");
    std::vector<cplx> out(total, cplx(0, 0));
    const double w = sign * 2.0 * M_PI / n;
    if (d == 1) {
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) out[k] += in[m] * std::polar(1.0, w * k * m);
    } else {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2) {
                cplx s(0, 0);
                for (int m1 = 0; m1 < n; ++m1)
                    for (int m2 = 0; m2 < n; ++m2)
                        s += in[std::size_t(m1) * n + m2] * std::polar(1.0, w * (k1 * m1 + k2 * m2));
                out[std::size_t(k1) * n + k2] = s;
            }
    }
    return out;
}

}  // namespace fractime
