# Convfix Lab
# Finite groups as Cayley tables, group specs and the integer lattice
# October 2026

import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from config.vars import MAX_CYCLIC_ORDER, MAX_DIHEDRAL_N, MAX_GROUP_ORDER, MAX_SYMMETRIC_N, WINDOW
from src.errors import GroupSpecError


@dataclass(frozen=True)
class GroupSpec:
    """Parsed form of a group spec such as `cyclic:4` or `product(cyclic:2,cyclic:3)`."""
    kind: str
    n: int = 0
    factors: tuple["GroupSpec", ...] = ()

    def __str__(self) -> str:
        if self.kind == "quaternion8":
            return "quaternion8"
        if self.kind == "product":
            return f"product({','.join(str(f) for f in self.factors)})"
        return f"{self.kind}:{self.n}"


@dataclass(frozen=True, eq=False)
class GroupTable:
    """
    A finite group stored as a Cayley table over element indices 0..order-1.

    mul[a, b] is the index of a*b, inv[a] the index of a^-1. Tables are
    read-only numpy arrays so a GroupTable can be shared between threads.
    """
    name: str
    mul: np.ndarray
    identity: int
    inv: np.ndarray
    abelian: bool
    labels: tuple[str, ...]
    spec: str = ""

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    def elements(self) -> range:
        return range(self.order)

    def label(self, g: int) -> str:
        return self.labels[g]

    def product(self, word) -> int:
        """Multiply a sequence of element indices left to right."""
        result = self.identity
        for g in word:
            result = int(self.mul[result, g])
        return result

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"


@dataclass(frozen=True)
class LatticeGroup:
    """Marker for the integer lattice Z; operations on it look only inside [-window, window]."""
    window: int = WINDOW
    name: str = field(default="Z")

    def __post_init__(self):
        if self.window < 1:
            raise GroupSpecError(f"lattice window must be >= 1, got {self.window}")

    @property
    def spec(self) -> str:
        return "Z"

    def window_range(self) -> range:
        return range(-self.window, self.window + 1)


_ATOM_RE = re.compile(r"^(cyclic|dihedral|symmetric):(-?\d+)$")


def parse_group_spec(text: str) -> GroupSpec:
    """
    Parse the group-spec text grammar.

    Args:
        text (str): `cyclic:n`, `dihedral:n`, `symmetric:n`, `quaternion8` or
            `product(specA,specB)` (nesting allowed).
    Returns:
        GroupSpec: the parsed spec; bounds are checked by build_group.
    """
    text = text.strip()
    if text == "quaternion8":
        return GroupSpec("quaternion8")
    match = _ATOM_RE.match(text)
    if match:
        return GroupSpec(match.group(1), int(match.group(2)))
    if text.startswith("product(") and text.endswith(")"):
        inner = text[len("product("):-1]
        depth = 0
        for pos, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                left, right = inner[:pos], inner[pos + 1:]
                return GroupSpec("product", factors=(parse_group_spec(left), parse_group_spec(right)))
    raise GroupSpecError(f"unrecognised group spec {text!r}")


def _validate_bounds(spec: GroupSpec) -> None:
    if spec.kind == "cyclic" and not 1 <= spec.n <= MAX_CYCLIC_ORDER:
        raise GroupSpecError(f"cyclic order must be in 1..{MAX_CYCLIC_ORDER}, got {spec.n}")
    if spec.kind == "dihedral" and not 2 <= spec.n <= MAX_DIHEDRAL_N:
        raise GroupSpecError(f"dihedral n must be in 2..{MAX_DIHEDRAL_N}, got {spec.n}")
    if spec.kind == "symmetric" and not 1 <= spec.n <= MAX_SYMMETRIC_N:
        raise GroupSpecError(f"symmetric n must be in 1..{MAX_SYMMETRIC_N}, got {spec.n}")


def _cyclic(n: int) -> tuple[np.ndarray, list[str]]:
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n, [str(i) for i in range(n)]


def _dihedral(n: int) -> tuple[np.ndarray, list[str]]:
    # r^k s^f  <->  k + n*f ; s r = r^-1 s
    order = 2 * n
    mul = np.empty((order, order), dtype=np.int64)
    for a in range(order):
        k1, f1 = a % n, a // n
        for b in range(order):
            k2, f2 = b % n, b // n
            k = (k1 + (-k2 if f1 else k2)) % n
            mul[a, b] = k + n * (f1 ^ f2)
    labels = [f"r^{k}" for k in range(n)] + [f"r^{k}s" for k in range(n)]
    return mul, labels


def _symmetric(n: int) -> tuple[np.ndarray, list[str]]:
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    mul = np.empty((len(perms), len(perms)), dtype=np.int64)
    for a, p in enumerate(perms):
        for b, q in enumerate(perms):
            mul[a, b] = index[tuple(p[q[i]] for i in range(n))]
    labels = ["[" + "".join(str(i) for i in p) + "]" for p in perms]
    return mul, labels


# Unit products of the quaternion group: (sign, unit) for units 1, i, j, k.
_QUATERNION_UNITS = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _quaternion8() -> tuple[np.ndarray, list[str]]:
    mul = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            sign, unit = _QUATERNION_UNITS[(a % 4, b % 4)]
            negative = (a >= 4) ^ (b >= 4) ^ (sign < 0)
            mul[a, b] = unit + 4 * negative
    return mul, ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]


def _direct_product(a: GroupTable, b: GroupTable) -> tuple[np.ndarray, list[str]]:
    m, n = a.order, b.order
    x = np.arange(m * n)
    ax, bx = x // n, x % n
    mul = a.mul[ax[:, None], ax[None, :]] * n + b.mul[bx[:, None], bx[None, :]]
    labels = [f"({a.labels[i]},{b.labels[j]})" for i in range(m) for j in range(n)]
    return mul, labels


def table_from_mul(name: str, mul: np.ndarray, labels: list[str], spec: str = "") -> GroupTable:
    """
    Validate a multiplication table and wrap it as a GroupTable.

    Args:
        name (str): display name.
        mul (np.ndarray): order x order table of element indices.
        labels (list[str]): one label per element.
        spec (str): the spec text the table was built from, if any.
    Returns:
        GroupTable: the validated group.
    """
    mul = np.array(mul, dtype=np.int64)
    order = mul.shape[0] if mul.ndim == 2 else 0
    if mul.shape != (order, order) or order < 1:
        raise GroupSpecError(f"{name}: multiplication table must be square")
    if order > MAX_GROUP_ORDER:
        raise GroupSpecError(f"{name}: order {order} exceeds {MAX_GROUP_ORDER}")
    if mul.min() < 0 or mul.max() >= order:
        raise GroupSpecError(f"{name}: table entries out of range")

    idx = np.arange(order)
    candidates = [e for e in range(order) if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx)]
    if not candidates:
        raise GroupSpecError(f"{name}: no two-sided identity")
    identity = candidates[0]

    compact = mul.astype(np.int16)
    if not np.array_equal(compact[compact, :], _right_assoc(compact)):
        raise GroupSpecError(f"{name}: multiplication is not associative")

    inv = np.argmax(mul == identity, axis=1)
    if not (np.all(mul[idx, inv] == identity) and np.all(mul[inv, idx] == identity)):
        raise GroupSpecError(f"{name}: some element has no two-sided inverse")

    mul.setflags(write=False)
    inv = inv.astype(np.int64)
    inv.setflags(write=False)
    abelian = bool(np.array_equal(mul, mul.T))
    return GroupTable(name=name, mul=mul, identity=identity, inv=inv,
                      abelian=abelian, labels=tuple(labels), spec=spec)


def _right_assoc(mul: np.ndarray) -> np.ndarray:
    # [a, b, c] -> a*(b*c), to compare with mul[mul, :][a, b, c] = (a*b)*c
    return mul[np.arange(mul.shape[0])[:, None, None], mul[None, :, :]]


def build_group(spec) -> GroupTable:
    """
    Build a validated Cayley table from a group spec.

    Args:
        spec (GroupSpec | str): parsed spec or spec text.
    Returns:
        GroupTable: the group with the deterministic element ordering of its kind.
    """
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    _validate_bounds(spec)

    if spec.kind == "cyclic":
        mul, labels = _cyclic(spec.n)
        name = f"Z{spec.n}"
    elif spec.kind == "dihedral":
        mul, labels = _dihedral(spec.n)
        name = f"D{spec.n}"
    elif spec.kind == "symmetric":
        mul, labels = _symmetric(spec.n)
        name = f"S{spec.n}"
    elif spec.kind == "quaternion8":
        mul, labels = _quaternion8()
        name = "Q8"
    elif spec.kind == "product":
        left, right = (build_group(f) for f in spec.factors)
        if left.order * right.order > MAX_GROUP_ORDER:
            raise GroupSpecError(f"product order {left.order * right.order} exceeds {MAX_GROUP_ORDER}")
        mul, labels = _direct_product(left, right)
        name = f"{left.name}x{right.name}"
    else:
        raise GroupSpecError(f"unknown group kind {spec.kind!r}")
    return table_from_mul(name, mul, labels, spec=str(spec))


def group_to_json(group: GroupTable) -> dict:
    """Serialise a group as {name, order, mul (row-major), identity}."""
    return {
        "name": group.name,
        "spec": group.spec,
        "order": group.order,
        "mul": group.mul.reshape(-1).tolist(),
        "identity": group.identity,
        "labels": list(group.labels),
    }


def group_from_json(data: dict) -> GroupTable:
    """Rebuild a group from group_to_json output; the table is re-validated."""
    try:
        order = int(data["order"])
        mul = np.asarray(data["mul"], dtype=np.int64).reshape(order, order)
    except (KeyError, ValueError, TypeError) as e:
        raise GroupSpecError(f"malformed group JSON: {e}") from e
    labels = data.get("labels") or [str(i) for i in range(order)]
    group = table_from_mul(data.get("name", "G"), mul, labels, spec=data.get("spec", ""))
    if group.identity != int(data.get("identity", group.identity)):
        raise GroupSpecError("identity in JSON does not match the table")
    return group


def is_lattice(carrier) -> bool:
    return isinstance(carrier, LatticeGroup)
