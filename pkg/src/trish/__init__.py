"""Safeguarded stochastic-gradient optimization with checkable guarantees.

The update rule amplifies small stochastic gradients, normalizes
mid-range ones, and damps large ones, controlled by a pair
gamma1 > gamma2 > 0.  Alongside the optimizer live the objects its
analysis talks about: noise-regime constants, per-iteration descent
bounds, convergence guarantees with explicit constants, and a harness
that checks those guarantees against seeded simulations.
"""

from . import core, harness, ingest, oracles, problems, theory
from .core import *
from .harness import *
from .ingest import *
from .oracles import *
from .problems import *
from .theory import *

__version__ = "0.1.0"

__all__ = (
    list(core.__all__)
    + list(oracles.__all__)
    + list(problems.__all__)
    + list(theory.__all__)
    + list(ingest.__all__)
    + list(harness.__all__)
)
