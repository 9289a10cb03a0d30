#include "inls/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace inls {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
constexpr double kPi = 3.14159265358979323846;
}  // namespace

Grid::Grid(int dim, double extent, int points_per_axis)
    : dim_(dim), extent_(extent), n_(points_per_axis) {
    if (dim < 1 || dim > 3) throw BadSize("grid dimension must be 1, 2 or 3");
    if (!(extent > 0)) throw BadSize("grid extent must be positive");
    if (n_ < 8 || !power_of_two(n_))
        throw BadSize("points per axis must be a power of two >= 8, got " + std::to_string(n_));
    h_ = extent_ / n_;
    size_ = 1;
    for (int i = 0; i < dim_; ++i) size_ *= static_cast<std::size_t>(n_);
    coords_.resize(n_);
    waves_.resize(n_);
    for (int j = 0; j < n_; ++j) {
        coords_[j] = -extent_ / 2 + j * h_;
        int m = j < n_ / 2 ? j : j - n_;
        waves_[j] = 2.0 * kPi * m / extent_;
    }
}

std::array<int, 3> Grid::unflatten(std::size_t idx) const {
    std::array<int, 3> out{0, 0, 0};
    for (int ax = dim_ - 1; ax >= 0; --ax) {
        out[ax] = static_cast<int>(idx % n_);
        idx /= n_;
    }
    return out;
}

struct Spectral::Impl {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t size = 0;
};

namespace {
std::mutex planner_mutex;
}

Spectral::Spectral(const Grid& g) : impl_(std::make_unique<Impl>()) {
    impl_->size = g.size();
    std::vector<int> dims(g.dim(), g.n());
    // Plan on scratch storage; execution uses the new-array interface, so
    // UNALIGNED keeps any caller buffer valid.
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_complex* scratch = fftw_alloc_complex(impl_->size);
    impl_->fwd = fftw_plan_dft(g.dim(), dims.data(), scratch, scratch, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
    impl_->bwd = fftw_plan_dft(g.dim(), dims.data(), scratch, scratch, FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (!impl_->fwd || !impl_->bwd) throw Error("FFTW planning failed");
}

Spectral::~Spectral() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

void Spectral::forward(std::vector<cplx>& a) const {
    auto* p = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(impl_->fwd, p, p);
}

void Spectral::inverse(std::vector<cplx>& a) const {
    auto* p = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(impl_->bwd, p, p);
    const double scale = 1.0 / static_cast<double>(impl_->size);
    for (auto& z : a) z *= scale;
}

std::shared_ptr<const Spectral> spectral_for(const Grid& g) {
    static std::mutex m;
    static std::map<std::pair<int, int>, std::weak_ptr<const Spectral>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(g.dim(), g.n());
    if (auto sp = cache[key].lock()) return sp;
    auto sp = std::make_shared<const Spectral>(g);
    cache[key] = sp;
    return sp;
}

struct SpectralL::Impl {
    fftwl_plan fwd = nullptr;
    fftwl_plan bwd = nullptr;
    std::size_t size = 0;
};

SpectralL::SpectralL(const Grid& g) : impl_(std::make_unique<Impl>()) {
    impl_->size = g.size();
    std::vector<int> dims(g.dim(), g.n());
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftwl_complex* scratch = fftwl_alloc_complex(impl_->size);
    impl_->fwd = fftwl_plan_dft(g.dim(), dims.data(), scratch, scratch, FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    impl_->bwd = fftwl_plan_dft(g.dim(), dims.data(), scratch, scratch, FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftwl_free(scratch);
    if (!impl_->fwd || !impl_->bwd) throw Error("FFTW long-double planning failed");
}

SpectralL::~SpectralL() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    if (impl_->fwd) fftwl_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftwl_destroy_plan(impl_->bwd);
}

void SpectralL::forward(std::vector<std::complex<long double>>& a) const {
    auto* p = reinterpret_cast<fftwl_complex*>(a.data());
    fftwl_execute_dft(impl_->fwd, p, p);
}

void SpectralL::inverse(std::vector<std::complex<long double>>& a) const {
    auto* p = reinterpret_cast<fftwl_complex*>(a.data());
    fftwl_execute_dft(impl_->bwd, p, p);
    const long double scale = 1.0L / static_cast<long double>(impl_->size);
    for (auto& z : a) z *= scale;
}

std::shared_ptr<const SpectralL> spectral_long_for(const Grid& g) {
    static std::mutex m;
    static std::map<std::pair<int, int>, std::weak_ptr<const SpectralL>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(g.dim(), g.n());
    if (auto sp = cache[key].lock()) return sp;
    auto sp = std::make_shared<const SpectralL>(g);
    cache[key] = sp;
    return sp;
}

std::vector<cplx> transform_forward(const ComplexField& f) {
    auto out = f.values;
    spectral_for(*f.grid)->forward(out);
    return out;
}

ComplexField transform_inverse(std::shared_ptr<const Grid> g, std::vector<cplx> spectrum) {
    spectral_for(*g)->inverse(spectrum);
    return {std::move(g), std::move(spectrum)};
}

std::vector<ComplexField> spectral_gradient(const ComplexField& f) {
    const Grid& g = *f.grid;
    auto spec = transform_forward(f);
    const auto& k = g.axis_wavenumbers();
    std::vector<ComplexField> out;
    out.reserve(g.dim());
    for (int ax = 0; ax < g.dim(); ++ax) {
        auto comp = spec;
        // multiply coefficient m by i * k_{ax}(m)
        std::size_t stride = 1;
        for (int a2 = ax + 1; a2 < g.dim(); ++a2) stride *= g.n();
        for (std::size_t idx = 0; idx < comp.size(); ++idx) {
            int mj = static_cast<int>((idx / stride) % g.n());
            comp[idx] *= cplx(0.0, k[mj]);
        }
        out.push_back(transform_inverse(f.grid, std::move(comp)));
    }
    return out;
}

ComplexField gaussian_data(std::shared_ptr<const Grid> g, double amplitude, double sigma,
                           const std::array<double, 3>& center,
                           const std::array<double, 3>& phase) {
    if (!(sigma > 0)) throw ConfigError("gaussian width must be positive");
    double edge_dist = g->extent();
    for (int ax = 0; ax < g->dim(); ++ax)
        edge_dist = std::min(edge_dist, g->extent() / 2 - std::abs(center[ax]));
    if (!(edge_dist > 0)) throw TailTooFat("gaussian center outside the box");
    double tail = std::exp(-edge_dist * edge_dist / (2 * sigma * sigma));
    if (tail >= 1e-12)
        throw TailTooFat("gaussian tail at box edge is " + std::to_string(tail) +
                         " of peak (limit 1e-12); enlarge the box or shrink sigma");

    ComplexField f = ComplexField::zero(g);
    const auto& x = g->axis_coords();
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        auto ii = g->unflatten(idx);
        double r2 = 0, px = 0;
        for (int ax = 0; ax < g->dim(); ++ax) {
            double dx = x[ii[ax]] - center[ax];
            r2 += dx * dx;
            px += phase[ax] * x[ii[ax]];
        }
        f.values[idx] = amplitude * std::exp(-r2 / (2 * sigma * sigma)) *
                        std::polar(1.0, px);
    }
    return f;
}

}  // namespace inls
