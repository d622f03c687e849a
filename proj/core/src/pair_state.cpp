#include "eprsim/pair_state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace eprsim::bohm {

namespace {

// 24-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirrored).
constexpr int kGL = 24;
constexpr double kGLx[kGL / 2] = {
    0.0640568928626056, 0.1911188674736163, 0.3150426796961634, 0.4337935076260451,
    0.5454214713888396, 0.6480936519369755, 0.7401241915785544, 0.8200019859739029,
    0.8864155270044011, 0.9382745520027328, 0.9747285559713095, 0.9951872199970213};
constexpr double kGLw[kGL / 2] = {
    0.1279381953467522, 0.1258374563468283, 0.1216704729278034, 0.1155056680537256,
    0.1074442701159656, 0.0976186521041139, 0.0861901615319533, 0.0733464814110803,
    0.0592985849154368, 0.0442774388174198, 0.0285313886289337, 0.0123412297999872};

Complex integrate_panels(const std::function<Complex(double)>& f, double lo, double hi,
                         double panel_width) {
    const int n_panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_width)));
    const double h = (hi - lo) / n_panels;
    Complex sum = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        const double a = lo + p * h;
        const double mid = a + 0.5 * h;
        const double half = 0.5 * h;
        for (int i = 0; i < kGL / 2; ++i) {
            sum += half * kGLw[i] * (f(mid - half * kGLx[i]) + f(mid + half * kGLx[i]));
        }
    }
    return sum;
}

struct Packet {
    double c0, ky;
};

Complex eval_packet(const PhysParams& p, const Packet& pk, double y, double t) {
    return detail::packet_y(p, pk.c0, pk.ky, y, t);
}

// Quadrature range covering every packet center at time t.
void packet_range(const PhysParams& p, const std::vector<Packet>& packets, double t,
                  double extent_sigmas, double& lo, double& hi) {
    const double w = p.envelope_width(t);
    lo = 1e300;
    hi = -1e300;
    for (const auto& pk : packets) {
        const double c = pk.c0 + p.hbar * pk.ky / p.mass * t;
        lo = std::min(lo, c - extent_sigmas * w);
        hi = std::max(hi, c + extent_sigmas * w);
    }
}

double panel_width_for(const PhysParams& p, double t) {
    double h = std::min(p.sigma0, std::abs(p.sigma_t(t)));
    if (p.k_y > 0) h = std::min(h, M_PI / (2.0 * p.k_y));
    return h;
}

// Cross-integral matrix  X_{kl} = integral g_k(y) conj(g_l(y)) dy  for the
// packets guiding one of the particles.
std::vector<Complex> cross_integrals(const PhysParams& p, const std::vector<Packet>& packets,
                                     double t, const GridSpec& grid) {
    double lo, hi;
    packet_range(p, packets, t, grid.extent_sigmas, lo, hi);
    const double h = panel_width_for(p, t);
    const size_t n = packets.size();
    std::vector<Complex> x(n * n);
    for (size_t k = 0; k < n; ++k) {
        for (size_t l = 0; l <= k; ++l) {
            const Complex v = integrate_panels(
                [&](double y) {
                    return eval_packet(p, packets[k], y, t) *
                           std::conj(eval_packet(p, packets[l], y, t));
                },
                lo, hi, h);
            x[k * n + l] = v;
            x[l * n + k] = std::conj(v);
        }
    }
    return x;
}

std::vector<Packet> side_packets(const std::vector<PairTerm>& terms, bool first) {
    std::vector<Packet> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        out.push_back(first ? Packet{t.c0_1, t.ky_1} : Packet{t.c0_2, t.ky_2});
    }
    return out;
}

} // namespace

std::vector<PairTerm> pair_terms(const ExperimentConfig& config) {
    const PhysParams& p = config.params;
    double ca, ka, cb, kb, cap, kap, cbp, kbp;
    detail::packet_params(Slit::A, p, false, ca, ka);
    detail::packet_params(Slit::B, p, false, cb, kb);
    detail::packet_params(Slit::APrime, p, config.uncorrected_prime_packets, cap, kap);
    detail::packet_params(Slit::BPrime, p, config.uncorrected_prime_packets, cbp, kbp);

    switch (config.layout) {
    case Layout::TwoDoubleSlit:
        // A(1)B'(2) + B(1)A'(2); the exchange partner carries the same y
        // structure with 1 <-> 2 and differs only by the x-phase scalar.
        return {{ca, ka, cbp, kbp, 1.0}, {cb, kb, cap, kap, 1.0}};
    case Layout::SingleDoubleSlitEntangled: {
        const double ex = config.exchange == Exchange::Fermionic ? -1.0 : 1.0;
        return {{ca, ka, cb, kb, 1.0}, {cb, kb, ca, ka, ex}};
    }
    case Layout::SingleDoubleSlitDisentangled:
        return {{ca, ka, ca, ka, 1.0},
                {ca, ka, cb, kb, 1.0},
                {cb, kb, ca, ka, 1.0},
                {cb, kb, cb, kb, 1.0}};
    }
    throw SizeError("unknown layout");
}

Complex reduced_amplitude(const ExperimentConfig& config, double y1, double y2, double t) {
    const PhysParams& p = config.params;
    Complex sum = 0.0;
    for (const auto& term : pair_terms(config)) {
        sum += term.coeff * detail::packet_y(p, term.c0_1, term.ky_1, y1, t) *
               detail::packet_y(p, term.c0_2, term.ky_2, y2, t);
    }
    return sum;
}

Complex pair_wavefunction(const ExperimentConfig& config, const PairCoordinates& coords) {
    if (coords.t < 0) throw SizeError("t must be >= 0");
    const PhysParams& p = config.params;
    const double t = coords.t;
    const double ex = config.exchange == Exchange::Fermionic ? -1.0 : 1.0;

    auto wave = [&](Slit s, double x, double y) {
        double c0, ky;
        detail::packet_params(s, p, config.uncorrected_prime_packets, c0, ky);
        const bool primed = (s == Slit::APrime || s == Slit::BPrime);
        const double phase_x = primed ? -p.k_x * (x + p.slit_x) : p.k_x * (x - p.slit_x);
        const double phase_e = -p.hbar * p.k_x * p.k_x * t / (2.0 * p.mass);
        return detail::packet_y(p, c0, ky, y, t) *
               std::exp(Complex(0.0, phase_x + phase_e));
    };

    switch (config.layout) {
    case Layout::TwoDoubleSlit:
        return wave(Slit::A, coords.x1, coords.y1) * wave(Slit::BPrime, coords.x2, coords.y2) +
               ex * wave(Slit::A, coords.x2, coords.y2) * wave(Slit::BPrime, coords.x1, coords.y1) +
               wave(Slit::B, coords.x1, coords.y1) * wave(Slit::APrime, coords.x2, coords.y2) +
               ex * wave(Slit::B, coords.x2, coords.y2) * wave(Slit::APrime, coords.x1, coords.y1);
    case Layout::SingleDoubleSlitEntangled:
        return wave(Slit::A, coords.x1, coords.y1) * wave(Slit::B, coords.x2, coords.y2) +
               ex * wave(Slit::A, coords.x2, coords.y2) * wave(Slit::B, coords.x1, coords.y1);
    case Layout::SingleDoubleSlitDisentangled:
        return (wave(Slit::A, coords.x1, coords.y1) + wave(Slit::B, coords.x1, coords.y1)) *
               (wave(Slit::A, coords.x2, coords.y2) + wave(Slit::B, coords.x2, coords.y2));
    }
    throw SizeError("unknown layout");
}

double packet_peak_scale(const PhysParams& params, double t) {
    const double w = std::abs(params.sigma_t(t));
    return 1.0 / (2.0 * M_PI * w * w);
}

double total_probability(const ExperimentConfig& config, double t, const GridSpec& grid) {
    config.validate();
    if (grid.extent_sigmas < 6.0) {
        throw CoverageError("quadrature grid must extend >= 6 |sigma_t| beyond the packets");
    }
    const auto terms = pair_terms(config);
    const auto u = side_packets(terms, true);
    const auto w = side_packets(terms, false);
    const auto cu = cross_integrals(config.params, u, t, grid);
    const auto cw = cross_integrals(config.params, w, t, grid);
    const size_t n = terms.size();
    double total = 0.0;
    for (size_t k = 0; k < n; ++k) {
        for (size_t l = 0; l < n; ++l) {
            total += terms[k].coeff * terms[l].coeff *
                     std::real(cu[k * n + l] * cw[k * n + l]);
        }
    }
    return total;
}

Normalization normalize_config(const ExperimentConfig& config, double t, const GridSpec& grid) {
    const double total = total_probability(config, t, grid);
    if (!(total > 0.0)) throw StateError("wavefunction norm vanished");
    return {1.0 / std::sqrt(total), t};
}

MarginalDensity::MarginalDensity(const ExperimentConfig& config, const Normalization& norm,
                                 const GridSpec& grid)
    : config_(config), t_(norm.t), scale_(norm.constant * norm.constant),
      terms_(pair_terms(config)) {
    const auto w = side_packets(terms_, false);
    cross_ = cross_integrals(config_.params, w, t_, grid);
}

double MarginalDensity::operator()(double y) const {
    const size_t n = terms_.size();
    std::vector<Complex> u(n);
    for (size_t k = 0; k < n; ++k) {
        u[k] = detail::packet_y(config_.params, terms_[k].c0_1, terms_[k].ky_1, y, t_);
    }
    double density = 0.0;
    for (size_t k = 0; k < n; ++k) {
        for (size_t l = 0; l < n; ++l) {
            density += terms_[k].coeff * terms_[l].coeff *
                       std::real(u[k] * std::conj(u[l]) * cross_[k * n + l]);
        }
    }
    return scale_ * density;
}

double marginal_density(const ExperimentConfig& config, const Normalization& norm, double y) {
    return MarginalDensity(config, norm)(y);
}

} // namespace eprsim::bohm
