#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "zetatail/policy.hpp"

namespace zetatail::optimize {

struct Result1D {
    double x = 0;
    double value = 0;
    std::size_t evals = 0;
};

// Golden-section maximization on [lo, hi]; stops when the bracket is narrower
// than tol.
inline Result1D golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                   double tol = 1e-10, std::size_t max_iter = 400) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    std::size_t evals = 2;
    for (std::size_t i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    const double xm = (a + b) / 2;
    return {xm, f(xm), evals + 1};
}

struct ResultND {
    std::vector<double> x;
    double value = 0;
    std::size_t evals = 0;
    bool converged = false;
};

// Nelder-Mead maximization with jittered restarts. Coordinates are clamped to
// [-bound, bound] so plateaus at infinity terminate.
class NelderMead {
  public:
    double diameter_tol = 1e-9;
    std::size_t max_evals = 100'000;
    int restarts = 5;
    double bound = 40.0;

    ResultND maximize(const std::function<double(const std::vector<double>&)>& f,
                      std::vector<double> start) const {
        ResultND best;
        std::uint64_t jitter_state = 0x6b43a9b5d88bccdbULL;
        auto jitter = [&jitter_state]() {
            jitter_state = jitter_state * 6364136223846793005ULL + 1442695040888963407ULL;
            return (static_cast<double>(jitter_state >> 11) * 0x1.0p-53 - 0.5);
        };
        std::vector<double> x0 = start;
        for (int r = 0; r <= restarts; ++r) {
            ResultND run = run_once(f, x0);
            if (best.x.empty() || run.value > best.value) best = run;
            x0 = best.x;
            for (auto& v : x0) v += jitter() * (0.5 + 0.2 * r);
        }
        return best;
    }

  private:
    ResultND run_once(const std::function<double(const std::vector<double>&)>& f,
                      const std::vector<double>& start) const {
        const std::size_t n = start.size();
        std::size_t evals = 0;
        auto clamp = [this](std::vector<double> v) {
            for (auto& c : v) c = std::clamp(c, -bound, bound);
            return v;
        };
        auto eval = [&](const std::vector<double>& v) {
            ++evals;
            const double val = f(v);
            return std::isfinite(val) ? val : -1e300;
        };

        std::vector<std::vector<double>> pts(n + 1, clamp(start));
        std::vector<double> vals(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            auto& p = pts[i + 1];
            p[i] += p[i] != 0 ? 0.05 * std::fabs(p[i]) + 0.05 : 0.1;
            p = clamp(p);
        }
        for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

        auto order = [&]() {
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    if (vals[j] > vals[i]) {
                        std::swap(vals[i], vals[j]);
                        std::swap(pts[i], pts[j]);
                    }
        };

        while (evals < max_evals) {
            order();
            double diam = 0;
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    diam = std::max(diam, std::fabs(pts[i][k] - pts[0][k]));
            if (diam < diameter_tol) return {pts[0], vals[0], evals, true};

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / n;

            auto blend = [&](double coef) {
                std::vector<double> v(n);
                for (std::size_t k = 0; k < n; ++k)
                    v[k] = centroid[k] + coef * (centroid[k] - pts[n][k]);
                return clamp(v);
            };

            auto refl = blend(1.0);
            const double frefl = eval(refl);
            if (frefl > vals[0]) {
                auto exp_pt = blend(2.0);
                const double fexp = eval(exp_pt);
                if (fexp > frefl) {
                    pts[n] = exp_pt;
                    vals[n] = fexp;
                } else {
                    pts[n] = refl;
                    vals[n] = frefl;
                }
            } else if (frefl > vals[n - 1]) {
                pts[n] = refl;
                vals[n] = frefl;
            } else {
                auto contr = blend(frefl > vals[n] ? 0.5 : -0.5);
                const double fcontr = eval(contr);
                if (fcontr > std::max(frefl, vals[n])) {
                    pts[n] = contr;
                    vals[n] = fcontr;
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t k = 0; k < n; ++k)
                            pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
                        pts[i] = clamp(pts[i]);
                        vals[i] = eval(pts[i]);
                    }
                }
            }
        }
        order();
        return {pts[0], vals[0], evals, false};
    }
};

}  // namespace zetatail::optimize
