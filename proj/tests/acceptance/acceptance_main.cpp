// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 1 drives the CLI binary named by EPRLAB_BIN.

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "eprsim/bsm.hpp"
#include "eprsim/coincidence.hpp"
#include "eprsim/detection.hpp"
#include "eprsim/rates.hpp"
#include "eprsim/tables.hpp"
#include "eprsim/teleport.hpp"
#include "eprsim/velocity.hpp"

#define REQUIRE_MESSAGE(cond, msg) \
    do { \
        if (!(cond)) throw std::runtime_error("fixture load failed"); \
    } while (0)
#include "../test_helpers.hpp"

using namespace eprsim;
namespace bh = eprsim::bohm;
namespace dn = eprsim::dense;
namespace tp = eprsim::tele;

namespace {

int failures = 0;
using Clock = std::chrono::steady_clock;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

struct Criterion {
    Criterion(int id, const char* title) : id_(id), title_(title), start_(Clock::now()) {}
    void finish(bool ok, const std::string& detail, double budget_s = 0.0) {
        const double secs = std::chrono::duration<double>(Clock::now() - start_).count();
        if (budget_s > 0.0 && secs > budget_s) ok = false;
        std::printf("%s criterion %2d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", id_, title_,
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    int id_;
    const char* title_;
    Clock::time_point start_;
};

bh::ExperimentConfig two_slit_config(double k_y = 0.0) {
    bh::ExperimentConfig c;
    c.params.slit_y = 1.0;
    c.params.slit_x = 3.0;
    c.params.k_x = 5.0;
    c.params.k_y = k_y;
    c.params.screen_x = 20.0; // screen time 4 in natural units
    c.layout = bh::Layout::TwoDoubleSlit;
    c.exchange = bh::Exchange::Bosonic;
    return c;
}

// ---- criterion 1: golden tables through the CLI ------------------------

void criterion_tables() {
    Criterion c(1, "golden tables via `dense tables`");
    const char* bin = std::getenv("EPRLAB_BIN");
    if (!bin) {
        c.finish(false, "EPRLAB_BIN not set");
        return;
    }
    const auto dir = std::filesystem::temp_directory_path() / "eprlab_tables";
    std::filesystem::create_directories(dir);

    int bad_rows = 0;
    bool ran = true;
    const std::pair<int, const char*> meas[] = {{1, "meas_n1.csv"},
                                                {2, "meas_n2.csv"},
                                                {4, "meas_n4.csv"}};
    const std::pair<int, const char*> prep[] = {{1, "prep_n1.csv"},
                                                {2, "prep_n2.csv"},
                                                {4, "prep_n4.csv"}};
    for (const auto& [n, fixture] : meas) {
        const std::string cmd = std::string(bin) + " dense tables --n " + std::to_string(n) +
                                " --outdir " + dir.string();
        if (std::system(cmd.c_str()) != 0) {
            ran = false;
            continue;
        }
        const std::string produced =
            testutil::slurp((dir / ("meas_n" + std::to_string(n) + ".csv")).string());
        if (produced != testutil::slurp(testutil::fixture_path(fixture))) ++bad_rows;
    }
    // preparation tables: every printed gate word must prepare its state
    // (up to a global sign) and match the composed encoder as an operator
    for (const auto& [n, fixture] : prep) {
        const auto rows = testutil::parse_csv(testutil::slurp(testutil::fixture_path(fixture)));
        const auto h = dn::default_hadamard(2 * n);
        const Vec psi1 = dn::bell_state(n, h, {1, -1, 1});
        const auto produced = testutil::parse_csv(
            testutil::slurp((dir / ("prep_n" + std::to_string(n) + ".csv")).string()));
        for (size_t r = 1; r < rows.size(); ++r) {
            const int flat = std::stoi(rows[r][0]);
            const auto label = dn::BellLabel::from_flat(flat, n);
            const Mat word = dn::parse_gate_word(rows[r][4], n);
            const Vec got = dn::apply_alice(word, psi1, n);
            const Vec expect = dn::bell_state(n, h, label);
            if (std::min((got - expect).norm(), (got + expect).norm()) > 1e-12) ++bad_rows;
            const Mat mine = dn::parse_gate_word(produced[r][4], n);
            if (max_abs_diff_up_to_sign(mine, word) > 1e-12) ++bad_rows;
        }
    }
    c.finish(ran && bad_rows == 0, "6 tables, mismatched rows = " + std::to_string(bad_rows),
             5.0);
}

// ---- criterion 2: Bell-basis properties --------------------------------

void criterion_bell_properties() {
    Criterion c(2, "Bell bases: Gram, partial traces, encoder unitarity");
    double worst_gram = 0, worst_trace = 0, worst_unitary = 0;
    for (int n : {1, 2, 4, 8}) {
        const auto h = dn::default_hadamard(2 * n);
        const int d = 2 * n, count = 4 * n * n;
        Mat basis(d * d, count);
        for (int flat = 1; flat <= count; ++flat) {
            basis.col(flat - 1) = dn::bell_state(n, h, dn::BellLabel::from_flat(flat, n));
        }
        worst_gram =
            std::max(worst_gram, (basis.adjoint() * basis - Mat::Identity(count, count))
                                     .cwiseAbs()
                                     .maxCoeff());
        for (int flat = 1; flat <= count; ++flat) {
            const Vec v = basis.col(flat - 1);
            Mat tr_b = Mat::Zero(d, d), tr_a = Mat::Zero(d, d);
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    Complex sb = 0, sa = 0;
                    for (int x = 0; x < d; ++x) {
                        sb += v(a * d + x) * std::conj(v(b * d + x));
                        sa += v(x * d + a) * std::conj(v(x * d + b));
                    }
                    tr_b(a, b) = sb;
                    tr_a(a, b) = sa;
                }
            }
            const Mat eye = Mat::Identity(d, d) / double(d);
            worst_trace = std::max({worst_trace, (tr_b - eye).cwiseAbs().maxCoeff(),
                                    (tr_a - eye).cwiseAbs().maxCoeff()});
            worst_unitary =
                std::max(worst_unitary, unitarity_deviation(dn::encode_operator(
                                            n, h, dn::BellLabel::from_flat(flat, n))));
        }
    }
    c.finish(worst_gram < 1e-12 && worst_trace < 1e-12 && worst_unitary < 1e-10,
             "gram " + sci(worst_gram) + ", traces " + sci(worst_trace) + ", unitarity " +
                 sci(worst_unitary),
             30.0);
}

// ---- criterion 3: explicit vs generic U --------------------------------

void criterion_u_equality() {
    Criterion c(3, "U_(N) equals the explicit gate composites");
    using testutil::kron;
    auto gate = [](const std::string& word, int n) { return dn::parse_gate_word(word, n); };

    const Mat u2 = (kron(Mat::Identity(4, 4), gate("P1N1N2P1", 2)) +
                    kron(gate("L+", 2), gate("L+", 2))) /
                   std::sqrt(2.0);
    const Mat u4 = (kron(Mat::Identity(8, 8), gate("P1P4N1N2N3N4P1P4", 4)) +
                    kron(gate("L+", 4), gate("P4N4P4N4L+", 4)) +
                    kron(gate("L+^2", 4), gate("P1P3N1N2N3N4P1P3L+^2", 4)) +
                    kron(gate("L+^3", 4), gate("P3N3P3N3L+^3", 4))) /
                   2.0;
    const Mat u8 =
        (kron(Mat::Identity(16, 16), gate("P1P3P6P8N1N2N3N4N5N6N7N8P1P3P6P8", 8)) +
         kron(gate("L+", 8), gate("P5N5P5N5P6N6P6N6P8N8P8N8L+", 8)) +
         kron(gate("L+^2", 8), gate("P1P3P6P7N1N2N3N4N5N6N7N8P1P3P6P7L+^2", 8)) +
         kron(gate("L+^3", 8), gate("P3N3P3N3P6N6P6N6P7N7P7N7L+^3", 8)) +
         kron(gate("L+^4", 8), gate("P1P4P5P8N1N2N3N4N5N6N7N8P1P4P5P8L+^4", 8)) +
         kron(gate("L+^5", 8), gate("P3N3P3N3P4N4P4N4P8N8P8N8L+^5", 8)) +
         kron(gate("L+^6", 8), gate("P1P4P5P7N1N2N3N4N5N6N7N8P1P4P5P7L+^6", 8)) +
         kron(gate("L+^7", 8), gate("P4N4P4N4P5N5P5N5P7N7P7N7L+^7", 8))) /
        std::sqrt(8.0);

    const double d2 = max_abs_diff(dn::u_gate(2), u2);
    const double d4 = max_abs_diff(dn::u_gate(4), u4);
    const double d8 = max_abs_diff(dn::u_gate(8), u8);
    c.finish(d2 < 1e-12 && d4 < 1e-12 && d8 < 1e-12,
             "max deviation " + sci(std::max({d2, d4, d8})));
}

// ---- criterion 4: dense-coding capacity --------------------------------

void criterion_roundtrips() {
    Criterion c(4, "exhaustive dense-coding round trips");
    int bad = 0, total = 0;
    for (int n : {1, 2, 4}) {
        const dn::BsmContext ctx(n);
        for (int flat = 1; flat <= 4 * n * n; ++flat) {
            const auto rec = dn::dense_roundtrip(ctx, dn::flat_code_to_message(flat, n));
            ++total;
            if (!rec.ok) ++bad;
        }
    }
    c.finish(bad == 0,
             std::to_string(total) + " messages, decode failures = " + std::to_string(bad));
}

// ---- criterion 5: teleportation exactness ------------------------------

void criterion_teleportation() {
    Criterion c(5, "teleportation fidelity and outcome uniformity");
    double min_fid = 1.0, prob_dev = 0.0;
    for (int n : {1, 2, 4}) {
        const auto h = dn::default_hadamard(2 * n);
        for (int s = 0; s < 20; ++s) {
            const Vec phi = testutil::random_state(2 * n, 5000 + 100 * n + s);
            for (const auto& e : tp::bell_expand(phi, n, h)) {
                prob_dev = std::max(prob_dev, std::abs(e.probability - 1.0 / (4.0 * n * n)));
            }
            for (int flat = 1; flat <= 4 * n * n; ++flat) {
                const auto rep =
                    tp::simulate_teleport(phi, n, h, 1, dn::BellLabel::from_flat(flat, n));
                min_fid = std::min(min_fid, rep.fidelity);
            }
        }
    }

    bool uniform_ok = true;
    {
        const int n = 2;
        const auto h = dn::default_hadamard(4);
        const Vec phi = testutil::random_state(4, 4242);
        std::vector<int> counts(16, 0);
        const int runs = 100000;
        for (int i = 0; i < runs; ++i) {
            ++counts[tp::simulate_teleport(phi, n, h, 20000 + i).outcome.flat_code(n) - 1];
        }
        const double expect = runs / 16.0;
        const double sigma = std::sqrt(expect * (1.0 - 1.0 / 16.0));
        for (int v : counts) {
            if (std::abs(v - expect) > 3.0 * sigma) uniform_ok = false;
        }
    }

    double min_fid_3d = 1.0;
    bool uniform_3d_ok = true;
    {
        const int n = 2, m = 2;
        const auto hx = dn::default_hadamard(4), hp = dn::default_hadamard(4);
        for (int s = 0; s < 20; ++s) {
            const Vec phi = testutil::random_state(16, 7000 + s);
            for (int fx = 1; fx <= 16; ++fx) {
                for (int fz = 1; fz <= 16; ++fz) {
                    const auto rep =
                        tp::teleport_3d(phi, n, m, hx, hp, 1, dn::BellLabel::from_flat(fx, n),
                                        dn::BellLabel::from_flat(fz, m));
                    min_fid_3d = std::min(min_fid_3d, rep.fidelity);
                }
            }
        }
        const Vec phi = testutil::random_state(16, 8321);
        std::vector<int> counts(256, 0);
        const int runs = 100000;
        for (int i = 0; i < runs; ++i) {
            const auto rep = tp::teleport_3d(phi, n, m, hx, hp, 60000 + i);
            ++counts[(rep.outcome_position.flat_code(n) - 1) * 16 +
                     rep.outcome_momentum.flat_code(m) - 1];
        }
        const double expect = runs / 256.0;
        const double sigma = std::sqrt(expect * (1.0 - 1.0 / 256.0));
        for (int v : counts) {
            if (std::abs(v - expect) > 3.0 * sigma) uniform_3d_ok = false;
        }
    }

    c.finish(min_fid >= 1.0 - 1e-10 && min_fid_3d >= 1.0 - 1e-10 && prob_dev < 1e-12 &&
                 uniform_ok && uniform_3d_ok,
             "1-fidelity " + sci(1.0 - min_fid) + " (3D " + sci(1.0 - min_fid_3d) +
                 "), prob dev " + sci(prob_dev) +
                 ((uniform_ok && uniform_3d_ok) ? ", 3sigma ok" : ", 3sigma FAIL"));
}

// ---- criterion 6: rate formulas ----------------------------------------

void criterion_rates() {
    Criterion c(6, "information-rate formulas and the logarithmic advantage");
    bool ok = true;
    {
        const double t = 0.37;
        const auto r = dn::info_rates(8, 8, {t, t, 4 * t, 8 * t});
        ok = ok && std::abs(r.r_x - 2.0 * std::log2(16.0) / ((5.0 + 8.0) * t)) < 1e-14;
        ok = ok && std::abs(r.r_p - 1.0 / (8.0 * t)) < 1e-14;
    }
    {
        const double t = 2.5;
        const auto r = dn::info_rates(16, 4, {t, t, t, t});
        ok = ok && std::abs(r.r_p_corrected - 1.0 / t) < 1e-14;
        ok = ok && std::abs(r.r_m_corrected - 1.0 / t) < 1e-14;
    }
    const int n = 1024;
    const auto r = dn::info_rates(n, n, {1.0, 1.0, 4.0, double(n)});
    const double rel = std::abs(r.ratio_x_over_p - r.asymptotic_ratio) / r.asymptotic_ratio;
    ok = ok && rel < 0.01;
    c.finish(ok, "ratio " + std::to_string(r.ratio_x_over_p) + " vs asymptotic " +
                     std::to_string(r.asymptotic_ratio) + " (rel " + sci(rel) + ")");
}

// ---- criterion 7: RK4 vs closed-form center of mass --------------------

void criterion_com() {
    Criterion c(7, "RK4 center of mass against the closed form");
    const auto cfg = two_slit_config(0.4);
    const double t_final = 10.0 * (2.0 * cfg.params.mass * cfg.params.sigma0 *
                                   cfg.params.sigma0 / cfg.params.hbar);
    bh::StepControl control;
    control.record_dt = 0.5;
    double worst = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double y0 = 0.05 * i;
        const auto traj =
            bh::integrate_trajectory(cfg, {0.7 + y0, -0.7 + y0, 0.0}, t_final, control);
        if (traj.truncated) {
            worst = 1.0;
            break;
        }
        for (const auto& s : traj.samples) {
            if (s.t == 0.0) continue;
            const double com = 0.5 * (s.y1 + s.y2);
            const double expect = bh::com_closed_form(y0, cfg.params, s.t);
            worst = std::max(worst, std::abs(com - expect) / expect);
        }
    }
    c.finish(worst < 1e-6, "worst relative error " + sci(worst) + " over 10 offsets", 10.0);
}

// ---- criterion 8: symmetric detection ----------------------------------

void criterion_symmetric_detection() {
    Criterion c(8, "mirror detection at the individual level, SQM P12 > 0");
    auto cfg = two_slit_config(0.0);
    cfg.com_y0 = 0.0;
    cfg.com_spread = 0.0;
    const double t_final = cfg.params.screen_time();

    const auto initials = bh::sample_initial_positions(cfg, 1000, 77);
    bh::StepControl control;
    control.record_dt = t_final;
    int mirrored = 0, kept = 0, selected = 0;
    for (const auto& init : initials) {
        const auto traj = bh::integrate_trajectory(cfg, init, t_final, control);
        if (traj.truncated) continue;
        ++kept;
        const auto& last = traj.samples.back();
        if (std::abs(last.y1 + last.y2) <= 1e-5 * cfg.params.sigma0) ++mirrored;
        if (std::signbit(last.y1) != std::signbit(last.y2)) ++selected;
    }

    const auto norm = bh::normalize_config(cfg, t_final);
    bh::DetectionSpec spec;
    spec.detector_size = 0.5;
    const double same_side =
        bh::joint_detection_probability(cfg, norm, t_final, 0.5, 3.0, spec);

    c.finish(kept > 0 && mirrored == kept && selected == kept && same_side > 0.0,
             std::to_string(mirrored) + "/" + std::to_string(kept) +
                 " mirror pairs, filter removed 0, same-side P12 = " + sci(same_side));
}

// ---- criterion 9: ensemble equivalence (chi-square) --------------------

void criterion_chi_square() {
    Criterion c(9, "unfiltered Bohmian endpoints vs |psi|^2 marginal");
    auto cfg = two_slit_config(0.0);
    cfg.com_y0 = 0.0;
    cfg.com_spread = cfg.params.sigma0 / std::sqrt(2.0); // exact equilibrium width
    const double t_final = 4.0;

    bh::DetectionSpec spec;
    spec.bins = 36;
    spec.y_lo = -9.0;
    spec.y_hi = 9.0;
    const int count = 10000;
    const auto hist = bh::ensemble_endpoint_histogram(cfg, count, 20240, t_final, spec);

    const auto norm = bh::normalize_config(cfg, t_final);
    const bh::MarginalDensity marginal(cfg, norm);
    const double width = (spec.y_hi - spec.y_lo) / spec.bins;
    long kept = 0;
    for (long v : hist) kept += v;

    double stat = 0.0;
    int df = -1;
    for (int b = 0; b < spec.bins; ++b) {
        const double expected = kept * marginal(spec.y_lo + (b + 0.5) * width) * width;
        if (expected < 5.0) continue;
        const double d = hist[b] - expected;
        stat += d * d / expected;
        ++df;
    }
    double p = 0.0;
    if (df >= 19) {
        boost::math::chi_squared dist(df);
        p = boost::math::cdf(boost::math::complement(dist, stat));
    }
    c.finish(p > 0.01, "chi2 " + std::to_string(stat) + ", df " + std::to_string(df) +
                           ", p " + std::to_string(p),
             300.0);
}

// ---- criterion 10: eigenfunction residual ------------------------------

void criterion_eigencheck() {
    Criterion c(10, "total-momentum eigenfunction residual");
    const auto cfg = two_slit_config(0.4);
    std::mt19937_64 rng(4096);
    std::uniform_real_distribution<double> u(-2.0, 2.0), tt(0.0, 2.0);
    int checked = 0;
    double worst = 0.0;
    while (checked < 100) {
        bh::PairCoordinates pc{u(rng), u(rng), tt(rng)};
        bh::on_track_x(cfg, pc.t, pc.x1, pc.x2);
        try {
            worst = std::max(worst, bh::momentum_eigen_check(cfg, pc));
            ++checked;
        } catch (const NodeError&) {
        }
    }
    c.finish(worst < 1e-5, "worst residual " + sci(worst) + " over 100 points");
}

// ---- criterion 11: coincidence formula ---------------------------------

void criterion_coincidence() {
    Criterion c(11, "coincidence fringe period and sinc normalization");
    const bool g_ok = bh::slit_diffraction_factor(0.17, 0.17, 3.0) == 1.0;

    const double kY = 60.0, ks = 1.0;
    std::vector<double> maxima;
    double prev2 = 0, prev1 = 0;
    const double step = 1e-5;
    for (double s = -0.16; s <= 0.16; s += step) {
        const double v = bh::coincidence_pattern(std::asin(s), 0.0, kY, ks, 0.0, 0.0);
        if (prev1 > prev2 && prev1 > v && prev2 > 0) maxima.push_back(s - step);
        prev2 = prev1;
        prev1 = v;
    }
    double rel = 1.0;
    if (maxima.size() >= 4) {
        double sum = 0.0;
        for (size_t i = 1; i < maxima.size(); ++i) sum += maxima[i] - maxima[i - 1];
        const double mean = sum / (maxima.size() - 1);
        rel = std::abs(mean - M_PI / kY) / (M_PI / kY);
    }
    c.finish(g_ok && rel < 0.005,
             "period error " + sci(rel) + std::string(g_ok ? ", g(ti,ti) exact" : ", g FAIL"));
}

} // namespace

int main() {
    std::printf("eprlab acceptance suite\n");
    criterion_tables();
    criterion_bell_properties();
    criterion_u_equality();
    criterion_roundtrips();
    criterion_teleportation();
    criterion_rates();
    criterion_com();
    criterion_symmetric_detection();
    criterion_chi_square();
    criterion_eigencheck();
    criterion_coincidence();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
