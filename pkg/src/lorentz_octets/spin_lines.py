"""Spin lines (interlocking chains), spin multiplets and tensor-algebra dimensions."""

from __future__ import annotations

from dataclasses import dataclass

from lorentz_octets.rep_core import HalfInt, RepLabel


@dataclass(frozen=True)
class SpinLine:
    spin: HalfInt
    dual: bool
    entries: tuple[RepLabel, ...]


@dataclass(frozen=True)
class TensorStructure:
    k: int
    r: int

    @property
    def complex_dim(self) -> int:
        return 2 * (self.k + self.r)

    @property
    def spinspace_dim_log2(self) -> int:
        return self.k + self.r

    @property
    def spinspace_dim(self) -> int:
        return 2 ** self.spinspace_dim_log2


def line(spin: HalfInt | int, n: int, dual: bool = False) -> SpinLine:
    """First ``n`` labels (spin + i/2, i/2) of the spin line, swapped when ``dual``."""
    spin = HalfInt.of(spin)
    if n < 1:
        raise ValueError("n must be at least 1")
    if spin.twice < 0:
        raise ValueError("spin must be non-negative")
    entries = []
    for i in range(n):
        rep = RepLabel.from_twice(spin.twice + i, i)
        entries.append(rep.swapped() if dual else rep)
    return SpinLine(spin=spin, dual=dual, entries=tuple(entries))


def degree_sequence(sl: SpinLine) -> list[int]:
    return [rep.degree for rep in sl.entries]


def tensor_structure(rep: RepLabel) -> TensorStructure:
    return TensorStructure(k=rep.k, r=rep.r)


def interlocking_neighbors(rep: RepLabel) -> list[RepLabel]:
    out = []
    for dk in (-1, 1):
        for dr in (-1, 1):
            k, r = rep.k + dk, rep.r + dr
            if k >= 0 and r >= 0:
                out.append(RepLabel.from_twice(k, r))
    return sorted(out)


def spin_multiplet(s: HalfInt | int, shift: int = 0) -> list[RepLabel]:
    """Anti-diagonal from (s + shift/2, shift/2) to (shift/2, s + shift/2)."""
    s = HalfInt.of(s)
    if shift < 0:
        raise ValueError("shift must be non-negative")
    return [RepLabel.from_twice(s.twice + shift - j, shift + j) for j in range(s.twice + 1)]


def position_on_line(rep: RepLabel) -> tuple[HalfInt, bool, int]:
    """(spin, dual, index) locating ``rep`` on its spin line."""
    dual = rep.r > rep.k
    return rep.spin, dual, min(rep.k, rep.r)
