"""Executable certificates for a pseudo-Anosov fibration of a hyperbolic 5-manifold.

Subpackages and modules:

* :mod:`exact_algebra`: golden field, cyclotomic integers, Smith form.
* :mod:`lattice_torus`: the lattice in C^2, its torus and the A4 model.
* :mod:`cell_complexes`: tessellations, spine, presentations, homology.
* :mod:`hyperbolic_gluing`: cross-polytope facet pairings.
* :mod:`chord_geometry`: numeric chord lengths on S^3.
* :mod:`flat` and :mod:`cat1_search`: blue lines in R^3 and the string search.
* :mod:`report_cli`: the command line front end.
"""

__version__ = "0.1.0"
