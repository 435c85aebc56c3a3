"""Python bindings for the zeta tail distribution toolkit."""

try:
    from ._zetatail import *  # noqa: F401,F403  (installed layout)
    from ._zetatail import DistributionSpec
except ImportError:
    from _zetatail import *  # noqa: F401,F403  (build-tree layout)
    from _zetatail import DistributionSpec

__all__ = [
    "DistributionSpec",
    "pmf",
    "log_pmf",
    "cdf",
    "survival",
    "hazard",
    "mean",
    "variance",
    "mode",
    "hurwitz_zeta",
    "riemann_zeta",
    "digamma",
    "stirling2",
    "sample",
    "fit",
    "compare_models",
    "regions",
    "table4",
]
