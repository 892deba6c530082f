"""Energy-scaling model of nested cluster networks.

Submodules
----------
scaling      nested cluster generations, geometric energy sums, optimal base
cone         radiating-cone sections and the 4/3 transmit/absorb ratio
allometry    circulatory-system volumes and the 3/4 allometric exponent
netmetrics   graph path length, clustering and network entropy
chronometry  entropy dating and network-value growth
cli          command-line front end (``python -m energyscale``)
"""

from .allometry import (
    AllometryScenario,
    capillary_invariance_check,
    closed_form_exponent,
    fit_exponent,
    organism_volumes,
)
from .chronometry import (
    DatingScenario,
    ValueDelta,
    glottochronology_check,
    network_value_delta,
    rate_from_entropy,
    solve_age,
)
from .cone import (
    ConeGeometry,
    ConeSectionReport,
    entropy_ratio,
    fractal_dimension,
    heat_decomposition,
    section_report,
    stefan_entropy_density_rate,
)
from .errors import EnergyScaleError
from .netmetrics import (
    Graph,
    NetworkReport,
    clustering_coefficient,
    ingest_edge_list,
    mean_free_path_survival,
    network_entropy,
    network_report,
    path_length,
)
from .scaling import (
    GenerationRow,
    ScalingModel,
    generation_table,
    geometric_sum_G,
    mean_energy_per_source,
    nested_sum_check,
    oscillator_mean,
    solve_optimal_base,
)

__version__ = "0.1.0"
