#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetatail/distribution.hpp"
#include "zetatail/fit.hpp"
#include "zetatail/regions.hpp"
#include "zetatail/sampling.hpp"
#include "zetatail/specfun.hpp"
#include "zetatail/versatility.hpp"

namespace py = pybind11;
using namespace zetatail;

namespace {

CountHistogram hist_from_map(const std::map<long, long>& counts) {
    CountHistogram hist;
    for (const auto& [x, f] : counts) hist.add(x, f);
    return hist;
}

Family family_from_name(const std::string& name) {
    if (name == "geometric0") return Family::Geometric0;
    if (name == "zig0" || name == "zero-inflated-geometric0")
        return Family::ZeroInflatedGeometric0;
    if (name == "negbin0" || name == "negative-binomial0") return Family::NegativeBinomial0;
    if (name == "zeta-tail0") return Family::ZetaTail0;
    if (name == "zeta0") return Family::Zeta0;
    if (name == "quadratic0") return Family::Quadratic0;
    throw domain_error("unknown family name: " + name);
}

py::dict fit_dict(const FitResult& fit, const GofReport& gof) {
    py::dict d;
    d["family"] = fit.spec.family_name();
    d["params"] = fit.spec.param_string();
    d["loglik"] = fit.loglik;
    d["aic"] = fit.aic;
    d["converged"] = fit.converged;
    d["chi2"] = gof.chi2;
    d["df"] = gof.df;
    d["p_value"] = gof.p_value;
    return d;
}

}  // namespace

PYBIND11_MODULE(_zetatail, m) {
    m.doc() = "zeta tail distribution toolkit";

    py::class_<DistributionSpec>(m, "DistributionSpec")
        .def_static("zeta_tail", &DistributionSpec::zeta_tail, py::arg("a"))
        .def_static("zeta_tail0", &DistributionSpec::zeta_tail0, py::arg("a"))
        .def_static("geometric0", &DistributionSpec::geometric0, py::arg("p"))
        .def_static("zero_inflated_geometric0", &DistributionSpec::zero_inflated_geometric0,
                    py::arg("p"), py::arg("pi0"))
        .def_static("negative_binomial0", &DistributionSpec::negative_binomial0, py::arg("r"),
                    py::arg("p"))
        .def_static("zeta0", &DistributionSpec::zeta0, py::arg("b"))
        .def_static("quadratic0", &DistributionSpec::quadratic0, py::arg("c"))
        .def_static("generalized_zeta_tail", &DistributionSpec::generalized_zeta_tail,
                    py::arg("r_count"), py::arg("a"))
        .def("family_name", &DistributionSpec::family_name)
        .def("param_string", &DistributionSpec::param_string)
        .def("param_count", &DistributionSpec::param_count)
        .def("__repr__", [](const DistributionSpec& s) {
            return "DistributionSpec(" + s.family_name() + ", " + s.param_string() + ")";
        });

    m.def("pmf", &pmf, py::arg("spec"), py::arg("x"));
    m.def("log_pmf", &log_pmf, py::arg("spec"), py::arg("x"));
    m.def("cdf", &cdf, py::arg("spec"), py::arg("x"));
    m.def("survival", &survival, py::arg("spec"), py::arg("x"));
    m.def("hazard", &hazard, py::arg("spec"), py::arg("x"));
    m.def("mean", &mean, py::arg("spec"));
    m.def("variance", &variance, py::arg("spec"));
    m.def("mode", &mode, py::arg("spec"));

    m.def("hurwitz_zeta",
          [](double s, double t) { return specfun::hurwitz_zeta(s, t); }, py::arg("s"),
          py::arg("t"));
    m.def("riemann_zeta", [](double s) { return specfun::riemann_zeta(s); }, py::arg("s"));
    m.def("digamma", &specfun::digamma, py::arg("z"));
    m.def("stirling2", [](int kappa, int nu) {
        const unsigned __int128 v = specfun::stirling2(kappa, nu);
        py::int_ hi(static_cast<std::uint64_t>(v >> 64));
        py::int_ lo(static_cast<std::uint64_t>(v));
        return hi.attr("__lshift__")(py::int_(64)).attr("__or__")(lo);
    }, py::arg("kappa"), py::arg("nu"));

    m.def(
        "sample",
        [](const DistributionSpec& spec, std::uint64_t seed, std::size_t n) {
            return sample_many(spec, seed, n);
        },
        py::arg("spec"), py::arg("seed"), py::arg("n"));

    m.def(
        "fit",
        [](const std::string& family, const std::map<long, long>& counts) {
            const CountHistogram hist = hist_from_map(counts);
            const FitResult fit = mle_fit(family_from_name(family), hist);
            const GofReport gof = chi_square_gof(fit.spec, hist);
            return fit_dict(fit, gof);
        },
        py::arg("family"), py::arg("counts"));

    m.def("compare_models", [](const std::map<long, long>& counts) {
        const ModelComparison cmp = compare_models(hist_from_map(counts));
        py::list rows;
        for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
            py::dict d = fit_dict(cmp.rows[i].first, cmp.rows[i].second);
            d["best_p"] = static_cast<int>(i) == cmp.best_p_index;
            d["best_aic"] = static_cast<int>(i) == cmp.best_aic_index;
            rows.append(d);
        }
        return rows;
    }, py::arg("counts"));

    m.def("regions", []() {
        py::list out;
        for (const RegionRecord& rec : regions()) {
            py::dict d;
            d["name"] = rec.name;
            d["annual_mean_rainfall_mm"] = rec.annual_mean_rainfall_mm;
            d["months"] = rec.months;
            py::dict counts;
            for (const auto& [x, f] : rec.hist.counts) counts[py::int_(x)] = f;
            d["counts"] = counts;
            out.append(d);
        }
        return out;
    });

    m.def("table4", []() {
        const Table4 t4 = table4();
        py::list rows;
        for (const auto& row : t4.rows) {
            py::dict d;
            d["family"] = row.family;
            d["parameterization"] = row.parameterization;
            d["v"] = row.v;
            d["fisher_integral"] = row.fisher_integral;
            d["node_count"] = row.node_count;
            rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["geometric_average"] = t4.geometric_average;
        return out;
    });
}
