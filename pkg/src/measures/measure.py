# Convfix Lab
# Complex measures on finite groups and on the integer lattice
# October 2026

import logging
from dataclasses import dataclass

import numpy as np

from config.vars import IDEM_TOL, SPARSE_CLEANUP, SUPPORT_CAP
from src.errors import CarrierMismatchError, PreconditionError, SupportCapExceeded
from src.groups.cayley import GroupTable, LatticeGroup, is_lattice
from src.groups.subgroups import Subgroup, subgroup_closure

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ComplexMeasure:
    """
    A complex measure on a finite group or on Z.

    On a finite group coeffs is a dense complex vector indexed by element.
    On Z it is a dict n -> complex with no zero entries.
    """
    carrier: GroupTable | LatticeGroup
    coeffs: np.ndarray | dict

    @property
    def on_lattice(self) -> bool:
        return is_lattice(self.carrier)

    def __getitem__(self, g: int) -> complex:
        if self.on_lattice:
            return self.coeffs.get(g, 0j)
        return complex(self.coeffs[g])

    def atoms(self) -> list[tuple[int, complex]]:
        """Nonzero (element, coefficient) pairs in element order."""
        if self.on_lattice:
            return sorted(self.coeffs.items())
        return [(int(g), complex(self.coeffs[g])) for g in np.flatnonzero(self.coeffs)]

    def _combine(self, other: "ComplexMeasure", sign: int) -> "ComplexMeasure":
        _check_same_carrier(self, other)
        if self.on_lattice:
            merged = dict(self.coeffs)
            for n, c in other.coeffs.items():
                merged[n] = merged.get(n, 0j) + sign * c
            return lattice_measure(self.carrier, merged)
        return ComplexMeasure(self.carrier, self.coeffs + sign * other.coeffs)

    def __add__(self, other: "ComplexMeasure") -> "ComplexMeasure":
        return self._combine(other, 1)

    def __sub__(self, other: "ComplexMeasure") -> "ComplexMeasure":
        return self._combine(other, -1)

    def __mul__(self, scalar: complex) -> "ComplexMeasure":
        if self.on_lattice:
            return lattice_measure(self.carrier, {n: c * scalar for n, c in self.coeffs.items()})
        return ComplexMeasure(self.carrier, self.coeffs * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "ComplexMeasure":
        return self * (1 / scalar)

    def __neg__(self) -> "ComplexMeasure":
        return self * -1

    def __repr__(self) -> str:
        name = self.carrier.name
        body = ", ".join(f"{g}:{_fmt(c)}" for g, c in self.atoms()[:8])
        more = "" if len(self.atoms()) <= 8 else ", ..."
        return f"ComplexMeasure({name}; {body}{more})"


def _fmt(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:.6g}"
    return f"{c.real:.6g}{c.imag:+.6g}j"


def _check_same_carrier(mu: ComplexMeasure, nu: ComplexMeasure) -> None:
    if mu.on_lattice and nu.on_lattice:
        return
    if mu.carrier is not nu.carrier:
        raise CarrierMismatchError(f"measures live on {mu.carrier.name} and {nu.carrier.name}")


def lattice_measure(carrier: LatticeGroup, coeffs: dict) -> ComplexMeasure:
    """Sparse measure on Z, exact zeros dropped."""
    return ComplexMeasure(carrier, {int(n): complex(c) for n, c in coeffs.items() if c != 0})


def dense_measure(group: GroupTable, coeffs) -> ComplexMeasure:
    vec = np.array(coeffs, dtype=complex)
    if vec.shape != (group.order,):
        raise PreconditionError(f"expected {group.order} coefficients for {group.name}, got {vec.shape}")
    return ComplexMeasure(group, vec)


def from_atoms(carrier, atoms: dict) -> ComplexMeasure:
    """Build a measure from {element: coefficient}."""
    if is_lattice(carrier):
        return lattice_measure(carrier, atoms)
    vec = np.zeros(carrier.order, dtype=complex)
    for g, c in atoms.items():
        if not 0 <= int(g) < carrier.order:
            raise PreconditionError(f"element {g} is not in {carrier.name}")
        vec[int(g)] += c
    return ComplexMeasure(carrier, vec)


def point_mass(carrier, g: int, weight: complex = 1) -> ComplexMeasure:
    return from_atoms(carrier, {g: weight})


def zero_measure(carrier) -> ComplexMeasure:
    return from_atoms(carrier, {})


def tv_norm(mu: ComplexMeasure) -> float:
    if mu.on_lattice:
        return float(sum(abs(c) for c in mu.coeffs.values()))
    return float(np.abs(mu.coeffs).sum())


def sup_distance(mu: ComplexMeasure, nu: ComplexMeasure) -> float:
    """max_g |mu(g) - nu(g)|."""
    diff = mu - nu
    if diff.on_lattice:
        return max((abs(c) for c in diff.coeffs.values()), default=0.0)
    return float(np.abs(diff.coeffs).max(initial=0.0))


def support(mu: ComplexMeasure) -> list[int]:
    return [g for g, _ in mu.atoms()]


def absolute_value(mu: ComplexMeasure) -> ComplexMeasure:
    """|mu|, the pointwise modulus."""
    if mu.on_lattice:
        return lattice_measure(mu.carrier, {n: abs(c) for n, c in mu.coeffs.items()})
    return ComplexMeasure(mu.carrier, np.abs(mu.coeffs).astype(complex))


def polar_phase(mu: ComplexMeasure) -> dict:
    """Unimodular phase mu(g)/|mu(g)| on the support of mu."""
    return {g: c / abs(c) for g, c in mu.atoms()}


def is_state(mu: ComplexMeasure, tol: float = 1e-12) -> bool:
    """Probability measure: nonnegative real coefficients with total mass 1."""
    values = np.array([c for _, c in mu.atoms()], dtype=complex)
    if values.size == 0:
        return False
    return bool(np.all(np.abs(values.imag) <= tol) and np.all(values.real >= -tol)
                and abs(values.real.sum() - 1) <= tol)


def _dense_lattice(mu: ComplexMeasure) -> tuple[int, np.ndarray]:
    if not mu.coeffs:
        return 0, np.zeros(0, dtype=complex)
    lo, hi = min(mu.coeffs), max(mu.coeffs)
    vec = np.zeros(hi - lo + 1, dtype=complex)
    for n, c in mu.coeffs.items():
        vec[n - lo] = c
    return lo, vec


def _sparse_lattice(carrier: LatticeGroup, offset: int, vec: np.ndarray,
                    support_cap: int = SUPPORT_CAP) -> ComplexMeasure:
    """Dense offset vector back to a sparse measure, dropping negligible atoms."""
    mod = np.abs(vec)
    keep = np.flatnonzero((mod > 0) & (mod >= SPARSE_CLEANUP * mod.sum()))
    if keep.size > support_cap:
        raise SupportCapExceeded(int(keep.size), support_cap)
    return ComplexMeasure(carrier, {int(offset + i): complex(vec[i]) for i in keep})


def _convolve_lattice(mu: ComplexMeasure, nu: ComplexMeasure, support_cap: int) -> ComplexMeasure:
    lo_a, a = _dense_lattice(mu)
    lo_b, b = _dense_lattice(nu)
    if a.size == 0 or b.size == 0:
        return zero_measure(mu.carrier)
    if a.size + b.size <= 4 * support_cap:
        return _sparse_lattice(mu.carrier, lo_a + lo_b, np.convolve(a, b), support_cap)
    # widely spread supports: multiply atom by atom
    out = {}
    for m, c in mu.coeffs.items():
        for n, d in nu.coeffs.items():
            out[m + n] = out.get(m + n, 0j) + c * d
    total = sum(abs(c) for c in out.values())
    kept = {n: c for n, c in out.items() if c != 0 and abs(c) >= SPARSE_CLEANUP * total}
    if len(kept) > support_cap:
        raise SupportCapExceeded(len(kept), support_cap)
    return ComplexMeasure(mu.carrier, kept)


def _convolve_finite(mu: np.ndarray, nu: np.ndarray, mul: np.ndarray) -> np.ndarray:
    # (mu * nu)(s t) collects mu(s) nu(t)
    outer = np.outer(mu, nu).reshape(-1)
    flat = mul.reshape(-1)
    order = mul.shape[0]
    real = np.bincount(flat, weights=outer.real, minlength=order)
    imag = np.bincount(flat, weights=outer.imag, minlength=order)
    return real + 1j * imag


def convolve(mu: ComplexMeasure, nu: ComplexMeasure, support_cap: int = SUPPORT_CAP) -> ComplexMeasure:
    """
    Convolution (mu * nu)(t) = sum_s mu(s) nu(s^-1 t).

    Args:
        mu (ComplexMeasure): left factor.
        nu (ComplexMeasure): right factor, same carrier.
        support_cap (int): maximum atoms of a lattice result.
    Returns:
        ComplexMeasure: mu * nu.
    Raises:
        CarrierMismatchError: if the carriers differ.
        SupportCapExceeded: if a lattice result grows past support_cap atoms.
    """
    _check_same_carrier(mu, nu)
    if mu.on_lattice:
        return _convolve_lattice(mu, nu, support_cap)
    return ComplexMeasure(mu.carrier, _convolve_finite(mu.coeffs, nu.coeffs, mu.carrier.mul))


def right_action_matrix(omega: ComplexMeasure) -> np.ndarray:
    """R with nu * omega = nu @ R, i.e. R[s, s u] += omega(u)."""
    group = omega.carrier
    order = group.order
    mat = np.zeros((order, order), dtype=complex)
    rows = np.repeat(np.arange(order), order)
    cols = group.mul.reshape(-1)
    np.add.at(mat, (rows, cols), np.tile(omega.coeffs, order))
    return mat


def convolution_power(omega: ComplexMeasure, n: int, support_cap: int = SUPPORT_CAP) -> ComplexMeasure:
    """omega^{*n} by repeated squaring (n >= 1)."""
    if n < 1:
        raise PreconditionError(f"convolution power needs n >= 1, got {n}")
    result = None
    base = omega
    while n:
        if n & 1:
            result = base if result is None else convolve(result, base, support_cap)
        n >>= 1
        if n:
            base = convolve(base, base, support_cap)
    return result


def cesaro(omega: ComplexMeasure, n: int, support_cap: int = SUPPORT_CAP) -> ComplexMeasure:
    """
    S_n(omega) = (1/n) sum_{k=1..n} omega^{*k}, each power built from the previous one.

    Raises:
        SupportCapExceeded: on Z when a power grows past support_cap atoms.
    """
    if n < 1:
        raise PreconditionError(f"cesaro needs n >= 1, got {n}")
    power = omega
    total = omega
    for _ in range(n - 1):
        power = convolve(power, omega, support_cap)
        total = total + power
    return total / n


def absorb_identity_residual(omega: ComplexMeasure, n: int) -> float:
    """
    tv distance between S_n * omega and S_n - omega/n + omega^{n+1}/n.

    The identity is exact, so the residual only measures rounding.
    """
    s_n = cesaro(omega, n)
    expected = s_n - omega / n + convolution_power(omega, n + 1) / n
    left = convolve(s_n, omega)
    right = convolve(omega, s_n)
    return max(tv_norm(left - expected), tv_norm(right - expected))


def is_idempotent(omega: ComplexMeasure, eps: float = IDEM_TOL) -> bool:
    return tv_norm(convolve(omega, omega) - omega) <= eps


def haar_on(subgroup: Subgroup) -> ComplexMeasure:
    """Normalised Haar measure m_H, uniform 1/|H| on H."""
    weight = 1 / subgroup.order
    return from_atoms(subgroup.parent, {h: weight for h in subgroup.elements})


def character_twist(character, subgroup: Subgroup) -> ComplexMeasure:
    """chi . m_H: chi(h)/|H| on H, zero elsewhere."""
    return from_atoms(subgroup.parent, {h: character(h) / subgroup.order for h in subgroup.elements})


@dataclass(frozen=True)
class Adaptedness:
    support: tuple[int, ...]
    s_group: Subgroup
    adapted: bool
    nondegenerate: bool


def adaptedness(omega: ComplexMeasure) -> Adaptedness:
    """
    Support bookkeeping for omega on a finite group.

    S_group is the subgroup generated by supp |omega|; on a finite group the
    generated semigroup is the same set, so both flags agree.
    """
    if omega.on_lattice:
        raise PreconditionError("adaptedness is defined for finite carriers")
    supp = tuple(support(omega))
    group = subgroup_closure(omega.carrier, supp)
    full = group.order == omega.carrier.order
    return Adaptedness(supp, group, full, full)


def measure_to_json(mu: ComplexMeasure) -> dict:
    carrier = "Z" if mu.on_lattice else (mu.carrier.spec or mu.carrier.name)
    key = "n" if mu.on_lattice else "g"
    return {"carrier": carrier,
            "atoms": [{key: g, "re": c.real, "im": c.imag} for g, c in mu.atoms()]}


def measure_from_json(data: dict, carrier) -> ComplexMeasure:
    """Inverse of measure_to_json; the carrier is resolved by the caller."""
    try:
        key = "n" if is_lattice(carrier) else "g"
        atoms = {}
        for atom in data["atoms"]:
            g = int(atom[key])
            atoms[g] = atoms.get(g, 0j) + complex(float(atom["re"]), float(atom.get("im", 0.0)))
    except (KeyError, TypeError, ValueError) as e:
        raise PreconditionError(f"malformed measure JSON: {e}") from e
    return from_atoms(carrier, atoms)


def parse_measure_literal(text: str, carrier) -> ComplexMeasure:
    """
    Parse an inline literal such as `0:0.5, 2:-0.5` or `-1:0.5, 1:0.5`.

    Coefficients go through complex(), so `1:0.5j` and `3:1+2j` work.
    """
    atoms = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        head, sep, tail = part.partition(":")
        if not sep:
            raise PreconditionError(f"measure atom {part!r} is not element:coefficient")
        try:
            g = int(head.strip())
            c = complex(tail.strip().replace(" ", "").replace("i", "j"))
        except ValueError as e:
            raise PreconditionError(f"measure atom {part!r}: {e}") from e
        atoms[g] = atoms.get(g, 0j) + c
    logger.debug(f"[measure] parsed {len(atoms)} atoms from literal")
    return from_atoms(carrier, atoms)
