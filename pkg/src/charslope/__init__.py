"""Characterising-slope bounds for Dehn surgery on knots.

Submodules:

- ``slopes``: slope arithmetic
- ``homology``: Smith normal form and homology of filled links
- ``geodesics`` / ``volumes``: length and volume bounds
- ``census``: census records and the elimination pipeline
- ``surgery``: symbolic descriptions of torus-knot and cable surgeries
- ``characterisation``: thresholds for knot families and same-surgery pairs
"""

from .characterisation import (BoundReport, HyperbolicKnot, SatelliteByHyperbolicPattern,
                               TwistKnotInput, WhiteheadDoubleInput, brakes_pair,
                               characterising_bound, diagram_parameters, is_slope_certified)
from .geodesics import CONSTANTS, q_frak
from .homology import FgAbelianGroup, smith_normal_form
from .slopes import Slope, make_slope

__version__ = "0.1.0"
