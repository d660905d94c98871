"""Weight-preserving bijections between the counting families.

Three forward/inverse pairs, all landing in the ``obar`` overpartitions
(plain parts > r with the parity of r+1):

* ``mex_forward`` / ``mex_inverse``: from partitions whose mex run has
  length >= r (the ``pmex`` family).  CLI ids ``t5`` / ``t5inv``.
* ``odd_forward`` / ``odd_inverse``: from partitions with no even part
  below an odd r (the ``pe`` family).  CLI ids ``odd`` / ``oddinv``.
* ``even_forward`` / ``even_inverse``: from two-colored odd partitions
  with an even r (the ``po2`` family).  CLI ids ``even`` / ``eveninv``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import ColoredPartition, Family, Overpartition, is_member
from .partitions import Partition, conjugate, glaisher_merge, glaisher_split, mex_sequence, oplus

__all__ = [
    "SigmaDecomposition",
    "even_forward",
    "even_inverse",
    "mex_forward",
    "mex_inverse",
    "odd_forward",
    "odd_inverse",
    "sigma_decompose",
]


@dataclass(frozen=True)
class SigmaDecomposition:
    """Split of a partition into a padding summand and a gap-free core.

    ``oplus(delta, sigma)`` reconstructs the original partition; every part
    of ``delta`` exceeds ``r`` and has the parity of ``r + 1``; ``sigma``
    has no gaps.
    """

    delta: Partition
    sigma: Partition
    r: int


def _require_r(r: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def _require_odd_r(r: int) -> None:
    _require_r(r)
    if r % 2 == 0:
        raise ValueError(f"r must be odd, got {r}")


def _require_even_r(r: int) -> None:
    _require_r(r)
    if r % 2 == 1:
        raise ValueError(f"r must be even, got {r}")


def _require_obar(op: Overpartition, r: int) -> None:
    if not is_member(Family("obar", r), op):
        raise ValueError(
            f"overpartition {op.text()!r}: plain parts must be > {r} "
            f"with the parity of {r + 1}"
        )


def sigma_decompose(kappa: Partition, r: int) -> SigmaDecomposition:
    """Split ``kappa`` (finite mex run of length >= r) as delta plus sigma.

    Let m be the mex and i the number of parts above m.  Seed a running
    value at m - 1 and sweep the i large parts from smallest to largest:
    keep the running value when the difference to the current part already
    has the parity of r + 1, otherwise bump it by one.  The differences
    form ``delta``; the running values together with the parts below m
    form the gap-free ``sigma``.
    """
    _require_r(r)
    run = mex_sequence(kappa)
    if run.is_infinite or run.length < r:
        raise ValueError(
            f"partition {kappa.text()!r} needs a finite mex run of length >= {r}"
        )
    m = run.start
    parts = kappa.parts
    count_above = sum(1 for x in parts if x > m)
    # a finite run means some part lies beyond it
    assert count_above >= 1
    want = (r + 1) % 2
    running = m - 1
    sig = [0] * count_above
    for idx in range(count_above - 1, -1, -1):
        if (parts[idx] - running) % 2 != want:
            running += 1
        sig[idx] = running
    delta = Partition(parts[idx] - sig[idx] for idx in range(count_above))
    tail = [x for x in parts if x <= m - 1]
    sigma = Partition(x for x in sig + tail if x > 0)
    return SigmaDecomposition(delta, sigma, r)


def mex_forward(kappa: Partition, r: int) -> Overpartition:
    """Map a ``pmex`` partition to its ``obar`` overpartition.

    An infinite mex run means ``kappa`` has no gaps, so its conjugate has
    distinct parts and is sent to a purely overlined overpartition.
    Otherwise the gap-free core of :func:`sigma_decompose` is conjugated
    into the overlined parts and the padding summand stays plain.
    """
    _require_r(r)
    run = mex_sequence(kappa)
    if not run.at_least(r):
        raise ValueError(f"partition {kappa.text()!r} has mex run shorter than {r}")
    if run.is_infinite:
        return Overpartition(conjugate(kappa).parts, ())
    dec = sigma_decompose(kappa, r)
    return Overpartition(conjugate(dec.sigma).parts, dec.delta.parts)


def mex_inverse(op: Overpartition, r: int) -> Partition:
    """Map an ``obar`` overpartition back: conjugate the overlined parts and
    add the plain parts part-wise."""
    _require_r(r)
    _require_obar(op, r)
    return oplus(conjugate(Partition(op.overlined)), Partition(op.plain))


def odd_forward(p: Partition, r: int) -> Overpartition:
    """Map a ``pe`` partition (odd r): merge the odd parts into distinct
    overlined ones, keep the even parts plain."""
    _require_odd_r(r)
    if not is_member(Family("pe", r), p):
        raise ValueError(f"partition {p.text()!r} has an even part below {r}")
    odds = Partition(x for x in p.parts if x % 2 == 1)
    evens = tuple(x for x in p.parts if x % 2 == 0)
    return Overpartition(glaisher_merge(odds).parts, evens)


def odd_inverse(op: Overpartition, r: int) -> Partition:
    """Inverse of :func:`odd_forward`: split the overlined parts into odd
    ones and take the union with the plain parts."""
    _require_odd_r(r)
    _require_obar(op, r)
    split = glaisher_split(Partition(op.overlined))
    return Partition(split.parts + op.plain)


def even_forward(colored: ColoredPartition, r: int) -> Overpartition:
    """Map a ``po2`` colored partition (even r): merge the first-color sizes
    into distinct overlined parts, keep the second-color sizes plain."""
    _require_even_r(r)
    if not is_member(Family("po2", r), colored):
        raise ValueError(
            f"colored partition {colored.text()!r} uses the second color at size <= {r}"
        )
    first = Partition(size for size, color in colored.parts if color == 1)
    second = tuple(size for size, color in colored.parts if color == 2)
    return Overpartition(glaisher_merge(first).parts, second)


def even_inverse(op: Overpartition, r: int) -> ColoredPartition:
    """Inverse of :func:`even_forward`: split the overlined parts into odd
    first-color sizes and give the plain parts the second color."""
    _require_even_r(r)
    _require_obar(op, r)
    first = glaisher_split(Partition(op.overlined))
    parts = tuple((s, 1) for s in first.parts) + tuple((s, 2) for s in op.plain)
    return ColoredPartition(parts, r)
