#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hidiff/errors.hpp"
#include "hidiff/raunet.hpp"
#include "hidiff/tensor.hpp"

namespace hidiff {

enum class ScheduleKind { LinearBeta, Cosine };

// Cumulative signal fractions, one per sampling slot. Slot 0 is the least
// noisy, slot steps()-1 the noisiest; sampling walks slots downward.
struct NoiseSchedule {
    std::vector<double> alpha_bar;

    int steps() const { return static_cast<int>(alpha_bar.size()); }
    double at(int j) const { return alpha_bar.at(static_cast<std::size_t>(j)); }
    // Signal fraction of the slot below j; the floor of the chain is fully
    // denoised (alpha_bar == 1).
    double prev(int j) const { return j > 0 ? at(j - 1) : 1.0; }
};

// Builds the slot table by subsampling a 1000-step base schedule.
NoiseSchedule make_schedule(ScheduleKind kind, int steps);

// One deterministic update from slot j to slot j-1 given the predicted noise.
Tensor ddim_step(const Tensor& x, const Tensor& eps, const NoiseSchedule& sched, int j);

// Classifier-free guidance mix: uncond + scale * (cond - uncond).
Tensor cfg_combine(const Tensor& uncond, const Tensor& cond, double scale);

// Closed-form denoiser for a scalar Gaussian data distribution. When every
// element of x0 is drawn from N(mu, sigma^2) and x = sqrt(ab) x0 +
// sqrt(1-ab) eps, the posterior mean of x0 given x is linear in x, and the
// implied noise prediction is (x - sqrt(ab) x0_hat) / sqrt(1-ab).
struct AnalyticGaussianModel {
    double mu = 0.0;
    double sigma = 1.0;
};

double analytic_gaussian_x0(double x, double alpha_bar, const AnalyticGaussianModel& m);
Tensor analytic_gaussian_eps(const Tensor& x, double alpha_bar, const AnalyticGaussianModel& m);

// Noise predictor with the execution variant already routed for the step.
using RoutedPredictor = std::function<Tensor(const Tensor& x, int step_index, PlanVariant v)>;

struct SampleOptions {
    NoiseSchedule schedule;
    SwitchConfig switching;
    uint64_t seed = 0;
    double guidance = 1.0;
    RoutedPredictor predict;        // unconditional prediction, required
    RoutedPredictor predict_cond;   // required when guidance != 1
    std::function<void(int step_index, PlanVariant v, const Tensor& x)> on_step;
};

struct SampleResult {
    Tensor x;
    std::vector<PlanVariant> variants; // one entry per sampling step
};

// Runs the full reverse chain from seeded Gaussian noise of the given shape.
SampleResult sample(const TensorShape& shape, const SampleOptions& opts);

} // namespace hidiff
