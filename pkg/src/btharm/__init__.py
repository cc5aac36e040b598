"""Exact combinatorics of lattice chains over F_q((pi)): the affine building
of GL_{n+1}, harmonic cochains, Steinberg-type quotients of flag function
spaces, and the GL_2(F_q[t]) arithmetic quotient."""

__version__ = "0.1.0"

from btharm.kernels import BACKEND as KERNEL_BACKEND  # noqa: F401
