"""jetfock: exact Fock-space realizations of extended diffeomorphism algebras.

An exact-arithmetic engine that realizes the extension of
diff(N) (+) diff(1) by observer-trajectory functionals on Fock modules
over tensor-valued p-jet trajectories, together with the corresponding
gauge-sector currents, and *measures* every extension coefficient
(c1..c8, a3, a6, the reparametrization central charge and the lowest
energy) by exact linear solves, confirming the closed-form predictions.
All arithmetic is in Q(i); every verification is an exact identity.
"""

from .scalars import GR, GaussianRational, Rat
from .glreps import (
    TensorRepSpec,
    covector_rep,
    scalar_rep,
    sym_rep_invariants,
    summed_sym_invariants,
    trace_invariants,
    vector_rep,
)
from .fields import (
    CircleVectorField,
    GaugeMap,
    LieAlgebraSpec,
    PolyVectorField,
    TrigPoly,
    gl2_algebra,
    sl2_algebra,
    u1_algebra,
    vf_commutator,
)

__version__ = "0.1.0"
