"""Photon-pair emission and entanglement from a superluminal optical boundary."""

from .entanglement import (
    ThermalContext,
    critical_occupancy,
    entanglement_entropy,
    log_negativity,
    symplectic_eigenvalue,
)
from .errors import (
    ConfigError,
    DegenerateFrame,
    DegenerateGeometry,
    IoError,
    ResonantDivergence,
    RootBracketingFailure,
    SuperfrontError,
)
from .kinematics import (
    BoundaryConfig,
    KinematicAux,
    WaveMode,
    boosted_index,
    kinematic_aux,
    reflected_angle,
    scatter,
    transmitted_angle,
)
from .spectrum import (
    EmissionPoint,
    RegimeReport,
    angular_spectrum,
    classify_regime,
    divergent_clusters,
    resonance_angles,
    uniform_grid,
)
from .squeezing import (
    PairDistribution,
    ScatteringCoefficients,
    bogoliubov_coefficients,
    mean_pair_number,
    mean_pair_number_closed_form,
    pair_distribution,
    sample_pair_counts,
)

__version__ = "0.1.0"
