"""Exact counts of periodic-orbit degeneracy classes on complete metric
graphs, the mean class degeneracy and its asymptotics, a brute-force
enumeration oracle, and the degenerate length spectrum."""

from .asymptotics import (
    AsymptoticPoint,
    approx_mean_degeneracy,
    asymptotic_pair_count,
    asymptotic_ratio_point,
    v_max_estimate,
)
from .classcount import (
    ClassCountTable,
    ConsistencyError,
    count_classes,
    log_of_E,
    ncv_from_log,
    ncv_recursive,
)
from .oracle import (
    ClassCode,
    SizeError,
    canonical_cyclic,
    class_code_of,
    count_orbits,
    enumerate_even_connected,
    enumerate_orbits,
    group_by_class,
)
from .series import BivariateSeries, binomial_ext, build_E, e_coeff, series_exp, series_log
from .spectrum import (
    BondLengthAssignment,
    SpectrumEntry,
    build_spectrum,
    default_lengths,
    length_of,
    spectrum_csv,
    spectrum_json_lines,
)
from .walks import (
    GraphSpec,
    OrbitCounts,
    UndefinedDegeneracyError,
    closed_walks,
    closed_walks_complete,
    cyclic_orbit_count,
    mean_degeneracy,
    naive_orbit_count,
    orbit_counts,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticPoint",
    "BivariateSeries",
    "BondLengthAssignment",
    "ClassCode",
    "ClassCountTable",
    "ConsistencyError",
    "GraphSpec",
    "OrbitCounts",
    "SizeError",
    "SpectrumEntry",
    "UndefinedDegeneracyError",
    "approx_mean_degeneracy",
    "asymptotic_pair_count",
    "asymptotic_ratio_point",
    "binomial_ext",
    "build_E",
    "build_spectrum",
    "canonical_cyclic",
    "class_code_of",
    "closed_walks",
    "closed_walks_complete",
    "count_classes",
    "count_orbits",
    "cyclic_orbit_count",
    "default_lengths",
    "e_coeff",
    "enumerate_even_connected",
    "enumerate_orbits",
    "group_by_class",
    "length_of",
    "log_of_E",
    "mean_degeneracy",
    "naive_orbit_count",
    "ncv_from_log",
    "ncv_recursive",
    "orbit_counts",
    "series_exp",
    "series_log",
    "spectrum_csv",
    "spectrum_json_lines",
    "v_max_estimate",
]
