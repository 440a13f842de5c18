"""K-orbits of the AIII double flag variety and their Steinberg maps."""

from .ci import build_xi, check_commutativity, enumerate_ci_orbits, is_sigma_stable, sigma_on_orbit
from .combinat import Partition, SkewTableau, Tableau, TwoLineArray
from .nilpotent import SignedYoungDiagram, enumerate_syd, is_ci_diagram, sigma_on_syd
from .oracle import phi_oracle_aiii, phi_oracle_ci
from .orbits import OmegaPair, PartialPermutation, canonicalize, count_orbits, enumerate_orbit_reps
from .steinberg import gen_rs, phi_theta_comb

__version__ = "0.1.0"
