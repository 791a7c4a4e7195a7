"""Exact symplectic algebra of n-qubit Pauli strings with phase tracking.

A Pauli string is stored as a pair of bit masks (x, z) held in Python
integers, qubit j on bit j, together with an explicit qubit count ``n``.
The operator encoded by ``(x, z)`` is the tensor product over qubits of
``i^{x_j z_j} X^{x_j} Z^{z_j}``, i.e. bit patterns (0,0), (1,0), (0,1),
(1,1) stand for I, X, Z, Y.  All phase bookkeeping is done with integer
exponents of i modulo 4, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

AXES = ("X", "Y", "Z")

# single-qubit dense matrices, indexed by (x, z) bit pair
_SINGLE = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
}

_CHAR_TO_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_TO_CHAR = {v: k for k, v in _CHAR_TO_BITS.items()}

_PHASE_VALUES = (1, 1j, -1, -1j)
_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {"+": 0, "+i": 1, "-": 2, "-i": 3, "i": 1}

DEFAULT_DENSE_LIMIT = 12


class PauliDimensionError(ValueError):
    """Raised when two Pauli strings of different qubit counts are combined."""


@dataclass(frozen=True)
class PauliString:
    """An n-qubit Pauli string without phase, in symplectic (x, z) form."""

    n: int
    x: int
    z: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("qubit count must be nonnegative")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit masks exceed qubit count")

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def weight(self) -> int:
        """Number of qubits on which the string acts nontrivially."""
        return (self.x | self.z).bit_count()

    def support(self) -> frozenset[int]:
        bits = self.x | self.z
        return frozenset(j for j in range(self.n) if (bits >> j) & 1)

    def axis(self, j: int) -> str:
        """Single-site letter at qubit j, one of I, X, Y, Z."""
        return _BITS_TO_CHAR[((self.x >> j) & 1, (self.z >> j) & 1)]

    def commutes_with(self, other: "PauliString") -> bool:
        _check_dims(self, other)
        return anticommutation_bit(self, other) == 0

    def __str__(self) -> str:
        return "".join(self.axis(j) for j in range(self.n))

    def dense(self) -> np.ndarray:
        return PhasedPauli(0, self).dense()


@dataclass(frozen=True)
class PhasedPauli:
    """A Pauli string carrying an exact phase i^k, k held modulo 4."""

    phase_exp: int
    pauli: PauliString

    def __post_init__(self):
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def phase(self) -> complex:
        return _PHASE_VALUES[self.phase_exp]

    @property
    def n(self) -> int:
        return self.pauli.n

    def __str__(self) -> str:
        return _PHASE_PREFIX[self.phase_exp] + str(self.pauli)

    def dense(self, dense_limit: int = DEFAULT_DENSE_LIMIT) -> np.ndarray:
        return to_dense(self, dense_limit=dense_limit)


def _check_dims(p: PauliString, q: PauliString):
    if p.n != q.n:
        raise PauliDimensionError(f"qubit counts differ: {p.n} != {q.n}")


def identity(n: int) -> PauliString:
    return PauliString(n, 0, 0)


def single_site(n: int, j: int, axis: str) -> PauliString:
    """The Pauli `axis` acting on qubit j of an n-qubit register."""
    if not 0 <= j < n:
        raise ValueError(f"site {j} out of range for n={n}")
    xb, zb = _CHAR_TO_BITS[axis]
    return PauliString(n, xb << j, zb << j)


def from_axes(n: int, sites_axes: dict[int, str]) -> PauliString:
    x = z = 0
    for j, axis in sites_axes.items():
        xb, zb = _CHAR_TO_BITS[axis]
        x |= xb << j
        z |= zb << j
    return PauliString(n, x, z)


def multiply(p: PauliString, q: PauliString) -> PhasedPauli:
    """Exact product p*q as a phased Pauli string.

    The phase exponent is x.z + x'.z' - (x^x').(z^z') + 2*(z.x') mod 4,
    with dot products counted over the integers; this reproduces dense
    2x2 matrix multiplication exactly, phase included.
    """
    _check_dims(p, q)
    x3 = p.x ^ q.x
    z3 = p.z ^ q.z
    k = (
        (p.x & p.z).bit_count()
        + (q.x & q.z).bit_count()
        - (x3 & z3).bit_count()
        + 2 * (p.z & q.x).bit_count()
    )
    return PhasedPauli(k % 4, PauliString(p.n, x3, z3))


def anticommutation_bit(p: PauliString, q: PauliString) -> int:
    """1 if the strings anticommute, 0 if they commute."""
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) % 2


def commutator_half(p: PauliString, q: PauliString) -> PhasedPauli | None:
    """Half-commutator (1/2)[P_p, Q]; None when the strings commute."""
    _check_dims(p, q)
    if anticommutation_bit(p, q) == 0:
        return None
    # anticommuting strings: (1/2)[P,Q] = PQ
    return multiply(p, q)


def canonical(p: PhasedPauli) -> tuple[PauliString, int]:
    """Split a phased Pauli into its positive representative and phase exponent."""
    return p.pauli, p.phase_exp


def weight(p: PauliString) -> int:
    return p.weight()


def support(p: PauliString) -> frozenset[int]:
    return p.support()


@lru_cache(maxsize=4096)
def _dense_cached(n: int, x: int, z: int) -> np.ndarray:
    m = np.ones((1, 1), dtype=complex)
    for j in range(n):
        m = np.kron(m, _SINGLE[((x >> j) & 1, (z >> j) & 1)])
    m.setflags(write=False)
    return m


def to_dense(p: PhasedPauli | PauliString, dense_limit: int = DEFAULT_DENSE_LIMIT) -> np.ndarray:
    """Dense 2^n x 2^n complex matrix; qubit 0 is the leftmost kron factor."""
    if isinstance(p, PauliString):
        p = PhasedPauli(0, p)
    if p.n > dense_limit:
        raise ValueError(f"dense limit exceeded: n={p.n} > {dense_limit}")
    return p.phase * _dense_cached(p.n, p.pauli.x, p.pauli.z)


def parse(text: str, n: int | None = None) -> PhasedPauli:
    """Parse the text encoding: optional prefix in {+,-,+i,-i}, then I/X/Y/Z, qubit 0 leftmost."""
    s = text.strip()
    k = 0
    for prefix in ("+i", "-i", "+", "-", "i"):
        if s.startswith(prefix):
            k = _PREFIX_PHASE[prefix]
            s = s[len(prefix):]
            break
    if not s or any(c not in _CHAR_TO_BITS for c in s):
        raise ValueError(f"invalid Pauli text {text!r}")
    if n is not None and len(s) != n:
        raise ValueError(f"expected {n} sites, got {len(s)}")
    x = z = 0
    for j, c in enumerate(s):
        xb, zb = _CHAR_TO_BITS[c]
        x |= xb << j
        z |= zb << j
    return PhasedPauli(k, PauliString(len(s), x, z))


def encode(p: PhasedPauli | PauliString, explicit_plus: bool = False) -> str:
    """Inverse of :func:`parse`; bit-exact round trip."""
    if isinstance(p, PauliString):
        p = PhasedPauli(0, p)
    prefix = _PHASE_PREFIX[p.phase_exp]
    if p.phase_exp == 0 and not explicit_plus:
        prefix = ""
    return prefix + str(p.pauli)


def all_strings(n: int):
    """Iterate over all 4^n Pauli strings on n qubits (identity first)."""
    for code in range(4 ** n):
        x = z = 0
        c = code
        for j in range(n):
            xb, zb = _INDEX_BITS[c & 3]
            x |= xb << j
            z |= zb << j
            c >>= 2
        yield PauliString(n, x, z)


# index order I, X, Y, Z used for enumeration and transfer-matrix indexing
_INDEX_BITS = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
_BITS_INDEX = {v: k for k, v in _INDEX_BITS.items()}


def string_to_index(p: PauliString) -> int:
    """Position of p in the I,X,Y,Z little-endian enumeration of all_strings."""
    idx = 0
    for j in range(p.n - 1, -1, -1):
        idx = 4 * idx + _BITS_INDEX[((p.x >> j) & 1, (p.z >> j) & 1)]
    return idx


def index_to_string(n: int, idx: int) -> PauliString:
    x = z = 0
    for j in range(n):
        xb, zb = _INDEX_BITS[idx & 3]
        x |= xb << j
        z |= zb << j
        idx >>= 2
    return PauliString(n, x, z)
