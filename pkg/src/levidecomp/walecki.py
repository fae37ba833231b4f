"""Minimum path decompositions of K_m.

Even m: m/2 edge-disjoint Hamiltonian zigzag paths.  Odd m: each zigzag
path of K_{m-1} is closed into a cycle through vertex m and reopened at
the edge (i, i+1); the removed edges form one extra short path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DomainError
from .paths import Decomposition


def mod_m(x: int, m: int) -> int:
    """Residue of x mod m in 1..m (residue 0 is reported as m)."""
    r = x % m
    return m if r == 0 else r


def position_vertex(i: int, pos: int, m: int) -> int:
    """Vertex at 0-based position ``pos`` of the i-th zigzag path of K_m.

    With slot = pos + 1 (1-based), slot 2t holds i + t and slot 2t + 1
    holds i - t (both mod m, in 1..m).
    """
    if m % 2 or m < 2:
        raise DomainError(f"zigzag paths need even m >= 2, got {m}")
    if not 1 <= i <= m // 2 or not 0 <= pos <= m - 1:
        raise DomainError(f"need 1 <= i <= {m // 2} and 0 <= pos <= {m - 1}")
    slot = pos + 1
    t = slot // 2
    if slot % 2 == 0:
        return mod_m(i + t, m)
    return mod_m(i - t + m, m)


@dataclass(frozen=True)
class WaleckiDecomposition:
    m: int
    kind: str  # "Even" or "OddModified"
    label_paths: tuple[tuple[int, ...], ...]

    @property
    def decomposition(self) -> Decomposition:
        """Paths over K_m vertex ids (vertex v has id v - 1)."""
        return [tuple(v - 1 for v in p) for p in self.label_paths]

    @property
    def size(self) -> int:
        return len(self.label_paths)


def walecki_even(m: int) -> WaleckiDecomposition:
    if m % 2 or m < 2:
        raise DomainError(f"walecki_even needs even m >= 2, got {m}")
    paths = tuple(
        tuple(position_vertex(i, pos, m) for pos in range(m)) for i in range(1, m // 2 + 1)
    )
    return WaleckiDecomposition(m, "Even", paths)


def walecki_odd(m: int) -> WaleckiDecomposition:
    if m % 2 == 0 or m < 3:
        raise DomainError(f"walecki_odd needs odd m >= 3, got {m}")
    half = (m - 1) // 2
    base = walecki_even(m - 1).label_paths
    paths = []
    for i, p in enumerate(base, start=1):
        # p runs i, i+1, ..., i+half; closing through m and cutting (i, i+1)
        # leaves i+1, ..., i+half, m, i
        assert p[0] == i and p[1] == i + 1 and p[-1] == mod_m(i + half, m - 1)
        paths.append(p[1:] + (m, i))
    paths.append(tuple(range(1, half + 2)))
    return WaleckiDecomposition(m, "OddModified", tuple(paths))


def walecki(m: int) -> WaleckiDecomposition:
    if m < 2:
        raise DomainError(f"walecki needs m >= 2, got {m}")
    return walecki_even(m) if m % 2 == 0 else walecki_odd(m)
