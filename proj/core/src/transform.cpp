#include "nssp/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nssp {
namespace {

// Plans are created once per (dim, n) with FFTW_ESTIMATE on a cache-owned
// aligned buffer, so planning is deterministic and repeated runs are bitwise
// identical. Data is copied through the buffer on execute.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(int dim, int n, Complex* data, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        Entry& e = entry(dim, n);
        const std::size_t count = size_of(dim, n);
        std::memcpy(e.buf, data, count * sizeof(Complex));
        fftw_execute(sign == FFTW_FORWARD ? e.fwd : e.bwd);
        std::memcpy(data, e.buf, count * sizeof(Complex));
    }

  private:
    struct Entry {
        fftw_complex* buf = nullptr;
        fftw_plan fwd = nullptr;
        fftw_plan bwd = nullptr;
    };

    static std::size_t size_of(int dim, int n) {
        std::size_t s = 1;
        for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(n);
        return s;
    }

    Entry& entry(int dim, int n) {
        auto key = std::make_pair(dim, n);
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
        Entry e;
        const std::size_t count = size_of(dim, n);
        e.buf = fftw_alloc_complex(count);
        if (!e.buf) throw std::bad_alloc();
        if (dim == 2) {
            e.fwd = fftw_plan_dft_2d(n, n, e.buf, e.buf, FFTW_FORWARD, FFTW_ESTIMATE);
            e.bwd = fftw_plan_dft_2d(n, n, e.buf, e.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        } else {
            e.fwd = fftw_plan_dft_3d(n, n, n, e.buf, e.buf, FFTW_FORWARD, FFTW_ESTIMATE);
            e.bwd = fftw_plan_dft_3d(n, n, n, e.buf, e.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        }
        return entries_.emplace(key, e).first->second;
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, Entry> entries_;
};

double unitary_scale(int dim) { return std::pow(kTwoPi, 0.5 * dim); }

}  // namespace

namespace fft {
void forward(int dim, int n, Complex* data) { PlanCache::instance().execute(dim, n, data, FFTW_FORWARD); }
void backward(int dim, int n, Complex* data) { PlanCache::instance().execute(dim, n, data, FFTW_BACKWARD); }
}  // namespace fft

void scatter_component(const SpectralField& f, int c, int m, Complex* out) {
    const GridSpec& g = f.grid;
    if (m < g.n) throw std::invalid_argument("scatter_component: target lattice smaller than source");
    const int n = g.n;
    std::size_t total = 1;
    for (int d = 0; d < g.dim; ++d) total *= static_cast<std::size_t>(m);
    std::fill(out, out + total, Complex(0.0, 0.0));
    auto comp = f.component(c);
    const bool pad = m > n;
    for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
        const Complex z = comp[flat];
        if (z == Complex(0.0, 0.0)) return;
        // On the source cube the slot n/2 stands for both +-n/2. When padding,
        // split it evenly over the two now-distinct target modes so the field
        // stays real-valued.
        int nyq[3];
        int nnyq = 0;
        for (int d = 0; d < g.dim; ++d)
            if (pad && xi[d] == n / 2) nyq[nnyq++] = d;
        const double w = 1.0 / double(1 << nnyq);
        for (int mask = 0; mask < (1 << nnyq); ++mask) {
            std::array<int, 3> t = xi;
            for (int b = 0; b < nnyq; ++b)
                if (mask & (1 << b)) t[nyq[b]] = -n / 2;
            std::size_t ti = static_cast<std::size_t>(freq_to_index(t[0], m));
            ti = ti * m + freq_to_index(t[1], m);
            if (g.dim == 3) ti = ti * m + freq_to_index(t[2], m);
            out[ti] += w * z;
        }
    });
}

RealField to_physical(const SpectralField& f, int oversample) {
    if (oversample != 1 && oversample != 2)
        throw std::invalid_argument("to_physical: oversample must be 1 or 2");
    const GridSpec& g = f.grid;
    GridSpec og = g;
    og.n = g.n * oversample;
    RealField out(og);
    const double scale = 1.0 / unitary_scale(g.dim);
    std::vector<Complex> buf(og.points());
    for (int c = 0; c < g.dim; ++c) {
        scatter_component(f, c, og.n, buf.data());
        fft::backward(g.dim, og.n, buf.data());
        auto vals = out.component(c);
        for (std::size_t i = 0; i < buf.size(); ++i) vals[i] = buf[i].real() * scale;
    }
    return out;
}

std::vector<Complex> forward_scalar(const GridSpec& g, const std::vector<double>& vals) {
    if (vals.size() != g.points()) throw std::invalid_argument("forward_scalar: size mismatch");
    std::vector<Complex> buf(g.points());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = Complex(vals[i], 0.0);
    fft::forward(g.dim, g.n, buf.data());
    const double scale = unitary_scale(g.dim) / double(g.points());
    for (Complex& z : buf) z *= scale;
    return buf;
}

SpectralField to_spectral(const RealField& v) {
    const GridSpec& g = v.grid;
    for (double x : v.values)
        if (!std::isfinite(x)) throw std::invalid_argument("to_spectral: non-finite input");
    SpectralField out(g);
    const double scale = unitary_scale(g.dim) / double(g.points());
    std::vector<Complex> buf(g.points());
    for (int c = 0; c < g.dim; ++c) {
        auto vals = v.component(c);
        for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = Complex(vals[i], 0.0);
        fft::forward(g.dim, g.n, buf.data());
        auto comp = out.component(c);
        for (std::size_t i = 0; i < buf.size(); ++i) comp[i] = buf[i] * scale;
    }
    hermitian_symmetrize(out);
    return out;
}

}  // namespace nssp
