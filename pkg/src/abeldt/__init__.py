"""Exact arithmetic for reduced DT invariants of abelian threefolds.

Modules: ``gamma`` (Chern vectors, SL2 action), ``semihomog`` (two-term
splittings), ``wallcross`` (jump across the single wall), ``qseries`` (the
rank-one generating series), ``fm_rank1`` (Fourier-Mukai orbits), ``spin``
(invariant forms on the even half-spin module), ``lattice`` (the ring Q[A])
and ``walls`` (wall loci on the (beta, alpha) slice).
"""

__version__ = "0.1.0"
