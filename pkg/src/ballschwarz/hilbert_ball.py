"""Finite-dimensional complex-ball operator algebra.

Inner products are linear in the first slot: <u, v> = sum u_i conj(v_i).
A real-linear operator L between complex coordinate spaces splits
uniquely into a complex-linear part B and an antilinear part C,

    L(z) = B z + C conj(z),
    B e_j = (L(e_j) - i L(i e_j)) / 2,   C e_j = (L(e_j) + i L(i e_j)) / 2,

and carries two adjoints: the hermitian adjoint (conjugate transpose,
defined through the complex pairing) and the real adjoint L* defined by
Re<L* w, z> = Re<w, L z>.  In the (B, C) representation the real adjoint
is (B^H, C^T): the complex-linear part contributes its conjugate
transpose (so L* = L^H when C = 0), while matching the antilinear part
under the real pairing transposes C without conjugation.

The ball automorphism exchanging 0 and xi is

    phi_xi(z) = A (xi - z) / (1 - <z, xi>),
    A = s Id + xi <., xi> / (1 + s),   s = sqrt(1 - |xi|^2),

an involution mapping sphere to sphere, with complex-linear derivative

    Dphi_xi(z) = A [ -Id / (1 - <z, xi>) + (xi - z) <., xi> / (1 - <z, xi>)^2 ].

The adjoint identity Dphi_xi(z0)^H phi_xi(z0) = mu z0 with
mu = (1 - |xi|^2) / |1 - <z0, xi>|^2 is what transfers sharp boundary
constants through precomposition by phi_xi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import ContractError, DomainError

__all__ = [
    "inner",
    "MobiusParams",
    "mobius_A",
    "mobius_map",
    "mobius_derivative",
    "hermitian_adjoint",
    "RealLinearMap",
    "real_adjoint",
    "split_real_linear",
    "verify_dphi_adjoint_identity",
    "boundary_lambda",
]

_DEGENERATE_TOL = 1e-14
_UNIT_TOL = 1e-12


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """Complex inner product, linear in the first argument."""
    return complex(np.sum(np.asarray(u) * np.conj(np.asarray(v))))


@dataclass(frozen=True)
class MobiusParams:
    """Center parameter xi (|xi| < 1) of the ball automorphism phi_xi."""

    xi: np.ndarray

    def __post_init__(self):
        xi = np.asarray(self.xi, dtype=complex)
        if xi.ndim != 1 or xi.size < 1:
            raise DomainError("xi must be a nonempty complex vector")
        object.__setattr__(self, "xi", xi)
        if float(np.linalg.norm(xi)) >= 1.0:
            raise DomainError("Moebius parameter must satisfy |xi| < 1")

    @property
    def k(self) -> int:
        return self.xi.shape[0]

    @property
    def s(self) -> float:
        return math.sqrt(1.0 - float(np.linalg.norm(self.xi)) ** 2)


def mobius_A(p: MobiusParams) -> np.ndarray:
    """The hermitian factor A = s Id + xi <., xi> / (1 + s) of phi_xi."""
    k = p.k
    return p.s * np.eye(k, dtype=complex) + np.outer(p.xi, np.conj(p.xi)) / (1.0 + p.s)


def _denominator(p: MobiusParams, z: np.ndarray) -> complex:
    denom = 1.0 - inner(z, p.xi)
    if abs(denom) < _DEGENERATE_TOL:
        raise DomainError("degenerate Moebius denominator: <z, xi> too close to 1")
    return denom


def mobius_map(p: MobiusParams, z: np.ndarray) -> np.ndarray:
    """phi_xi(z) = A (xi - z) / (1 - <z, xi>)."""
    z = np.asarray(z, dtype=complex)
    denom = _denominator(p, z)
    return mobius_A(p) @ ((p.xi - z) / denom)


def mobius_derivative(p: MobiusParams, z: np.ndarray) -> np.ndarray:
    """Complex-linear Frechet derivative of phi_xi at z, as a k x k matrix."""
    z = np.asarray(z, dtype=complex)
    denom = _denominator(p, z)
    k = p.k
    core = -np.eye(k, dtype=complex) / denom + np.outer(p.xi - z, np.conj(p.xi)) / denom ** 2
    return mobius_A(p) @ core


def hermitian_adjoint(matrix: np.ndarray) -> np.ndarray:
    """Conjugate transpose: <M^H w, z> = <w, M z>."""
    return np.conj(np.asarray(matrix, dtype=complex)).T


@dataclass(frozen=True)
class RealLinearMap:
    """A real-linear map C^k -> C^m stored by its (complex-linear, antilinear) parts."""

    B: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        B = np.atleast_2d(np.asarray(self.B, dtype=complex))
        C = np.atleast_2d(np.asarray(self.C, dtype=complex))
        if B.shape != C.shape:
            raise DomainError(f"matrix parts must share a shape, got {B.shape} vs {C.shape}")
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)

    @property
    def shape(self) -> tuple[int, int]:
        return self.B.shape

    def __call__(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        return self.B @ z + self.C @ np.conj(z)

    def compose(self, other: "RealLinearMap") -> "RealLinearMap":
        """self after other: (self o other)(z)."""
        return RealLinearMap(
            B=self.B @ other.B + self.C @ np.conj(other.C),
            C=self.B @ other.C + self.C @ np.conj(other.B),
        )

    @staticmethod
    def from_matrix(matrix: np.ndarray) -> "RealLinearMap":
        """Wrap a complex-linear matrix (antilinear part zero)."""
        matrix = np.atleast_2d(np.asarray(matrix, dtype=complex))
        return RealLinearMap(B=matrix, C=np.zeros_like(matrix))


def real_adjoint(L: RealLinearMap) -> RealLinearMap:
    """The adjoint for the real pairing: Re<L* w, z> = Re<w, L z>."""
    return RealLinearMap(B=hermitian_adjoint(L.B), C=L.C.T)


def _probe_real_linearity(action: Callable[[np.ndarray], np.ndarray], k: int) -> None:
    rng = np.random.Generator(np.random.Philox(918273))
    scalars = [Fraction(3, 7), Fraction(-5, 3), Fraction(11, 4)]
    for frac in scalars:
        z = rng.standard_normal(k) + 1j * rng.standard_normal(k)
        w = rng.standard_normal(k) + 1j * rng.standard_normal(k)
        lhs = np.asarray(action(float(frac) * z + w), dtype=complex)
        rhs = float(frac) * np.asarray(action(z), dtype=complex) + np.asarray(action(w), dtype=complex)
        scale = max(1.0, float(np.linalg.norm(lhs)), float(np.linalg.norm(rhs)))
        if float(np.linalg.norm(lhs - rhs)) > 1e-8 * scale:
            raise ContractError(
                "action is not additive and real-homogeneous; cannot split"
            )


def split_real_linear(
    action: Callable[[np.ndarray], np.ndarray], k: int
) -> tuple[RealLinearMap, RealLinearMap]:
    """Split a real-linear action into (complex-linear, antilinear) parts.

    The action is probed on random rational combinations first; a map
    that fails real-linearity raises :class:`ContractError` instead of
    silently producing a meaningless split.
    """
    if k < 1:
        raise DomainError("dimension must be >= 1")
    _probe_real_linearity(action, k)
    m = np.asarray(action(_basis(k, 0)), dtype=complex).shape[0]
    B = np.zeros((m, k), dtype=complex)
    C = np.zeros((m, k), dtype=complex)
    for j in range(k):
        e = _basis(k, j)
        direct = np.asarray(action(e), dtype=complex)
        rotated = np.asarray(action(1j * e), dtype=complex)
        B[:, j] = 0.5 * (direct - 1j * rotated)
        C[:, j] = 0.5 * (direct + 1j * rotated)
    return RealLinearMap(B=B, C=np.zeros_like(B)), RealLinearMap(B=np.zeros_like(C), C=C)


def _basis(k: int, j: int) -> np.ndarray:
    e = np.zeros(k, dtype=complex)
    e[j] = 1.0
    return e


def verify_dphi_adjoint_identity(p: MobiusParams, z0: np.ndarray) -> float:
    """Residual of Dphi_xi(z0)^H phi_xi(z0) = mu z0, mu = (1-|xi|^2)/|1-<z0,xi>|^2.

    The identity is exact for unit z0 (and for xi = 0 everywhere): the
    algebra behind it replaces <z0, xi - z0> by <z0, xi> - 1, which needs
    |z0| = 1.  At strictly interior z0 with xi != 0 the residual is
    genuinely of order |xi| (1 - |z0|^2); this function reports it
    either way.
    """
    z0 = np.asarray(z0, dtype=complex)
    denom = _denominator(p, z0)
    image = mobius_map(p, z0)
    pulled = hermitian_adjoint(mobius_derivative(p, z0)) @ image
    mu = (1.0 - float(np.linalg.norm(p.xi)) ** 2) / abs(denom) ** 2
    return float(np.linalg.norm(pulled - mu * z0))


def boundary_lambda(
    Df: RealLinearMap, a: np.ndarray, b: np.ndarray
) -> tuple[float, float]:
    """Boundary eigenvalue extraction at a contact point.

    For unit vectors a (source normal) and b (target normal) returns

        lambda = Re<Df(a), b>,
        alignment_residual = || Df*(b) - lambda a ||,

    the residual vanishing exactly when the eigen-relation
    Df* b = lambda a holds.  Cauchy-Schwarz forces
    lambda <= |Df(a)|; a violation beyond 1e-12 indicates a broken
    operator and raises :class:`ContractError`.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if abs(float(np.linalg.norm(a)) - 1.0) > _UNIT_TOL:
        raise DomainError("contact direction a must be a unit vector")
    if abs(float(np.linalg.norm(b)) - 1.0) > _UNIT_TOL:
        raise DomainError("target direction b must be a unit vector")
    image = Df(a)
    lam = float(np.real(inner(image, b)))
    if lam > float(np.linalg.norm(image)) + 1e-12:
        raise ContractError("lambda exceeded |Df(a) a|, violating Cauchy-Schwarz")
    residual = float(np.linalg.norm(real_adjoint(Df)(b) - lam * a))
    return lam, residual
