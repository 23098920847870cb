#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace bsl::detail {

namespace {

std::mutex g_plan_mutex;

fftw_plan plan_for(int n0, int n1, int sign) {
    // Plans are created once per (shape, direction) with ESTIMATE|UNALIGNED so
    // they can be re-executed on any buffer via fftw_execute_dft.
    static std::map<std::tuple<int, int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto key = std::make_tuple(n0, n1, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::complex<double>> a(static_cast<size_t>(n0) * n1);
    std::vector<std::complex<double>> b(a.size());
    fftw_plan p = fftw_plan_dft_2d(n0, n1, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

}  // namespace

void fft2d(int n0, int n1, const std::complex<double>* in, std::complex<double>* out, int sign) {
    fftw_plan p = plan_for(n0, n1, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace bsl::detail
