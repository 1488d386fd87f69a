"""sasakijoin - Einstein-Hilbert analysis on the w-cone of Sasaki joins.

**sasakijoin** is a python package for exact, computer-algebra style analysis
of the Einstein-Hilbert functional restricted to the two-dimensional w-cone of
Sasaki join manifolds M_{l1,l2,w}. Every decision it makes (root counts,
signs, admissibility, stability verdicts) is taken in exact rational
arithmetic; decimal values only appear in rendered reports.

Main features:
- Exact univariate polynomial and rational-function algebra with Sturm-based
  real-root isolation, counting and refinement.
- Closed forms for the total transverse scalar curvature, the volume, the
  Einstein-Hilbert functional H(b), its derivatives and the Sasaki-Futaki
  invariant on every ray of the w-cone.
- Classification of all critical rays of H, detection of constant scalar
  curvature rays and K-(semi)stability verdicts.
- The admissible extremal ODE on the orbifold quotient of a quasi-regular
  ray, with exact certification of extremal admissibility.
- A command-line front end producing deterministic text, JSON and CSV
  reports, parameter sweeps and a golden verification suite.
"""

from sasakijoin._version import __version__
