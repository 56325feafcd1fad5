# Convfix Lab
# Fourier-Stieltjes functions with certified norms
# October 2026

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from config.vars import PSD_TOL
from src.errors import PreconditionError
from src.groups.cayley import GroupTable, LatticeGroup, is_lattice
from src.groups.characters import characters_of
from src.groups.subgroups import subgroup_closure, whole_group
from src.measures.measure import ComplexMeasure, convolution_power, tv_norm
from src.dual.fourier import spectral_coefficients

TWO_PI = 2 * math.pi
ANGLE_MERGE = 1e-12


@dataclass(frozen=True)
class AtomicToralMeasure:
    """
    sum_j c_j delta_{theta_j} on the circle; its transform n -> sum_j c_j e^{i n theta_j}
    is an element of B(Z) with norm sum_j |c_j|.
    """
    atoms: tuple[tuple[complex, float], ...]

    @property
    def norm(self) -> float:
        return float(sum(abs(c) for c, _ in self.atoms))

    def evaluate(self, n) -> complex | np.ndarray:
        n = np.asarray(n)
        total = sum(c * np.exp(1j * n * theta) for c, theta in self.atoms)
        return complex(total) if n.ndim == 0 else np.asarray(total, dtype=complex)

    def convolve(self, other: "AtomicToralMeasure") -> "AtomicToralMeasure":
        return toral_measure((a * b, s + t) for a, s in self.atoms for b, t in other.atoms)

    def to_json(self) -> dict:
        return {"atoms": [{"re": c.real, "im": c.imag, "theta": t} for c, t in self.atoms]}


def _wrap(theta: float) -> float:
    t = float(theta) % TWO_PI
    return 0.0 if TWO_PI - t < ANGLE_MERGE else t


def toral_measure(atoms) -> AtomicToralMeasure:
    """Normalise angles into [0, 2pi), merge equal angles and drop zero coefficients."""
    merged: list[list] = []
    for c, theta in sorted(((complex(c), _wrap(t)) for c, t in atoms), key=lambda a: a[1]):
        if merged and theta - merged[-1][1] < ANGLE_MERGE:
            merged[-1][0] += c
        else:
            merged.append([c, theta])
    return AtomicToralMeasure(tuple((c, t) for c, t in merged if c != 0))


@dataclass(frozen=True)
class PositiveDefinite:
    norm: float
    kind: str = "positive_definite"


@dataclass(frozen=True, eq=False)
class AbelianTV:
    spectrum: ComplexMeasure
    norm: float
    kind: str = "abelian_tv"


@dataclass(frozen=True)
class AtomicToral:
    norm: float
    kind: str = "atomic_toral"


@dataclass(frozen=True)
class Unverified:
    norm: float | None = None
    kind: str = "unverified"


@dataclass(frozen=True, eq=False)
class DualFunction:
    """
    A function on G read as an element of B(G).

    Finite carriers store values densely. On Z the function is the transform
    of an atomic toral measure and is evaluated on demand.
    """
    carrier: GroupTable | LatticeGroup
    values: np.ndarray | None
    certificate: PositiveDefinite | AbelianTV | AtomicToral | Unverified
    toral: AtomicToralMeasure | None = None
    spectrum: ComplexMeasure | None = None

    @property
    def norm(self) -> float | None:
        return self.certificate.norm

    @property
    def on_lattice(self) -> bool:
        return is_lattice(self.carrier)

    def __call__(self, g: int) -> complex:
        if self.on_lattice:
            return self.toral.evaluate(g)
        return complex(self.values[g])

    def window_values(self, window: int) -> np.ndarray:
        return self.toral.evaluate(np.arange(-window, window + 1))

    def to_json(self) -> dict:
        data = {"carrier": "Z" if self.on_lattice else (self.carrier.spec or self.carrier.name),
                "certificate": {"kind": self.certificate.kind, "norm": self.norm}}
        if self.on_lattice:
            data.update(self.toral.to_json())
        else:
            data["values"] = [{"g": g, "re": v.real, "im": v.imag} for g, v in enumerate(self.values)]
        return data


def gram_matrix(group: GroupTable, values: np.ndarray) -> np.ndarray:
    """[omega(s^-1 t)]_{s, t}."""
    idx = group.mul[group.inv[:, None], np.arange(group.order)[None, :]]
    return np.asarray(values, dtype=complex)[idx]


def is_positive_definite(group: GroupTable, values: np.ndarray, tol: float = PSD_TOL) -> bool:
    gram = gram_matrix(group, values)
    if np.abs(gram - gram.conj().T).max() > tol:
        return False
    return bool(scipy.linalg.eigvalsh(gram).min() >= -tol)


def make_dual(carrier, values) -> DualFunction:
    """
    Wrap values as a DualFunction and certify its B(G) norm.

    A positive-definite Gram matrix gives norm omega(e); abelian carriers also
    carry their spectral measure on the dual group, whose tv norm is the
    B(G) norm. On Z, values must be an AtomicToralMeasure.
    """
    if is_lattice(carrier):
        if not isinstance(values, AtomicToralMeasure):
            raise PreconditionError("dual functions on Z are given by atomic toral measures")
        return DualFunction(carrier, None, AtomicToral(values.norm), toral=values)

    vec = np.array(values, dtype=complex)
    if vec.shape != (carrier.order,):
        raise PreconditionError(f"expected {carrier.order} values for {carrier.name}, got {vec.shape}")
    spectrum = spectral_coefficients(carrier, vec) if carrier.abelian else None
    if is_positive_definite(carrier, vec):
        certificate = PositiveDefinite(float(vec[carrier.identity].real))
    elif spectrum is not None:
        certificate = AbelianTV(spectrum, tv_norm(spectrum))
    else:
        certificate = Unverified()
    return DualFunction(carrier, vec, certificate, spectrum=spectrum)


def pointwise_power(omega: DualFunction, k: int) -> DualFunction:
    """
    omega^k, the k-th convolution power in the dual picture.

    Positive-definite functions stay positive definite (Schur products) with
    norm omega(e)^k; spectral and toral measures are convolved k times.
    """
    if k < 1:
        raise PreconditionError(f"pointwise_power needs k >= 1, got {k}")
    if omega.on_lattice:
        result = omega.toral
        for _ in range(k - 1):
            result = result.convolve(omega.toral)
        return DualFunction(omega.carrier, None, AtomicToral(result.norm), toral=result)

    values = omega.values ** k
    spectrum = None if omega.spectrum is None else convolution_power(omega.spectrum, k)
    cert = omega.certificate
    if isinstance(cert, PositiveDefinite):
        certificate = PositiveDefinite(cert.norm ** k)
    elif isinstance(cert, AbelianTV):
        certificate = AbelianTV(spectrum, tv_norm(spectrum))
    else:
        certificate = Unverified()
    return DualFunction(omega.carrier, values, certificate, spectrum=spectrum)


def cyclic_character(group: GroupTable, k: int) -> DualFunction:
    """chi_k(m) = exp(2 pi i k m / n) on the cyclic group of order n."""
    if not group.spec.startswith("cyclic:"):
        raise PreconditionError(f"char:{k} needs a cyclic group, got {group.name}")
    m = np.arange(group.order)
    return make_dual(group, np.exp(2j * np.pi * k * m / group.order))


def random_dual(group: GroupTable, seed: int) -> DualFunction:
    """
    A contractive dual function with a planted level set.

    omega = conj(chi(s0)) chi (t 1_K + (1 - t) phi) scaled by r, where K is a
    cyclic subgroup, phi(s) = <lambda(s) xi, xi> for a unit vector xi on K,
    chi a character of G and s0 in G. Every factor has B-norm 1.
    """
    rng = np.random.default_rng(seed)
    order = group.order
    generator = int(rng.integers(order))
    subgroup = subgroup_closure(group, [generator])
    chars = characters_of(whole_group(group))
    chi = chars[int(rng.integers(len(chars)))].as_array()
    s0 = int(rng.choice(subgroup.elements)) if rng.random() < 0.7 else int(rng.integers(order))

    xi = np.zeros(order, dtype=complex)
    members = list(subgroup.elements)
    xi[members] = rng.normal(size=len(members)) + 1j * rng.normal(size=len(members))
    xi /= np.linalg.norm(xi)
    # phi(s) = sum_x xi(s^-1 x) conj(xi(x))
    phi = np.array([np.vdot(xi, xi[group.mul[group.inv[s]]]) for s in range(order)])
    indicator = np.zeros(order)
    indicator[members] = 1
    t = 1.0 if rng.random() < 0.5 else float(rng.uniform(0.3, 1.0))
    r = 1.0 if rng.random() < 0.8 else float(rng.uniform(0.5, 1.0))
    values = r * chi[s0].conjugate() * chi * (t * indicator + (1 - t) * phi)
    return make_dual(group, values)


def multiplicative_domain_residual(omega: DualFunction, tol: float = 1e-12) -> float | None:
    """
    max |omega(s t0) - omega(s) omega(t0)| over s and over every t0 with |omega(t0)| = 1.

    Only meaningful for positive-definite omega with omega(e) = 1; returns None
    otherwise or when no unimodular point exists.
    """
    if omega.on_lattice or not isinstance(omega.certificate, PositiveDefinite):
        return None
    if abs(omega.norm - 1) > tol:
        return None
    group = omega.carrier
    values = omega.values
    points = np.flatnonzero(np.abs(np.abs(values) - 1) <= tol)
    if points.size == 0:
        return None
    return float(max(np.abs(values[group.mul[:, t0]] - values * values[t0]).max() for t0 in points))
