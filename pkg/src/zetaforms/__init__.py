"""Linear forms in zeta values, their arithmetic, and irrationality measures.

Modules:

* ``exactnum``: primes, lcm(1..N), p-adic orders, harmonic sums, zeta and digamma.
* ``bricks``: elementary rational bricks and their exact local expansions.
* ``forms``: linear forms in 1, zeta(3) and 1, zeta(2); the 7F6 and 6F5 identities.
* ``groups``: the permutation groups acting on c-matrices, orbits, Phi_n.
* ``measures``: step functions, saddle points, measure bounds, direction search.
* ``oddzeta``: well-poised forms in odd zeta values and their asymptotics.
* ``cli``: the ``zetaforms`` command.
"""

from .linearform import LinearForm
from .forms import ConditionError, ParamSet32, ParamSet33, linear_form_z2, linear_form_z3
from .directions import Direction32, Direction33
from .oddzeta import DirectionEta, WellPoisedParams, linear_form_odd

__version__ = "0.1.0"

__all__ = [
    "ConditionError",
    "Direction32",
    "Direction33",
    "DirectionEta",
    "LinearForm",
    "ParamSet32",
    "ParamSet33",
    "WellPoisedParams",
    "linear_form_odd",
    "linear_form_z2",
    "linear_form_z3",
]
