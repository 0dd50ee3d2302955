"""Polynomial test functions f(z) = sum a_k z^k."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Polynomial"]


@dataclass(frozen=True)
class Polynomial:
    """Complex-coefficient polynomial held as coefficients a_0 .. a_d.

    The leading coefficient must be nonzero and the degree at least 1
    (constants do not fluctuate and are rejected at construction).
    """

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs) -> None:
        values = tuple(complex(c) for c in coeffs)
        if len(values) < 2:
            raise ValueError("polynomial degree must be at least 1")
        if values[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", values)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0.0 for c in self.coeffs)

    def conjugate(self) -> "Polynomial":
        """Polynomial with conjugated coefficients."""
        return Polynomial(tuple(c.conjugate() for c in self.coeffs))

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, np.asarray(self.coeffs))

    def coefficient_list(self) -> list:
        """Coefficients for serialization: floats when real, [re, im] pairs otherwise."""
        if self.is_real:
            return [c.real for c in self.coeffs]
        return [[c.real, c.imag] for c in self.coeffs]

    def label(self) -> str:
        """Compact human-readable form, e.g. ``z^2 + 4 z^5``."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            coef = f"{c.real:g}" if c.imag == 0.0 else f"({c.real:g}{c.imag:+g}i)"
            if k == 0:
                parts.append(coef)
            else:
                power = "z" if k == 1 else f"z^{k}"
                parts.append(power if coef == "1" else f"{coef} {power}")
        return " + ".join(parts) if parts else "0"
