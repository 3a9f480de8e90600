"""Exact walk counts and weights: f, skew f, the t-hook walk count F, the
weight G, and enumeration of the layers above a core."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from .littlewood import decompose, is_t_core, offending_hook, recompose
from .partitions import Partition, enumerate_partitions, hook_lengths, syt_count_oracle


@lru_cache(maxsize=None)
def hook_product(lam: Partition) -> int:
    out = 1
    for h in hook_lengths(lam):
        out *= h
    return out


@lru_cache(maxsize=None)
def f_lambda(lam: Partition) -> int:
    """Number of standard Young tableaux via |lam|! / (product of hooks)."""
    q, r = divmod(factorial(lam.size), hook_product(lam))
    if r:
        raise RuntimeError(f"hook product does not divide {lam.size}! for {lam.to_text()}")
    return q


def f_skew(outer: Partition, inner: Partition) -> int:
    """Skew tableau count, by the memoized corner-removal recursion."""
    return syt_count_oracle(outer, inner)


def multinomial(counts: tuple[int, ...]) -> int:
    out = factorial(sum(counts))
    for c in counts:
        out //= factorial(c)
    return out


def geq_t(lam: Partition, mu: Partition, t: int) -> bool:
    """lam >=_t mu: lam reachable from mu by adding t-hooks, i.e. same
    t-core and componentwise quotient containment."""
    dl, dm = decompose(lam, t), decompose(mu, t)
    return dl.core == dm.core and all(a.contains(b) for a, b in zip(dl.quotients, dm.quotients))


@lru_cache(maxsize=None)
def F_skew(lam: Partition, mu: Partition, t: int) -> int:
    """Number of maximal t-hook addition chains from mu up to lam:
    multinomial over the quotient size gaps times the skew counts."""
    dl, dm = decompose(lam, t), decompose(mu, t)
    if dl.core != dm.core or not all(a.contains(b) for a, b in zip(dl.quotients, dm.quotients)):
        raise ValueError(f"{lam.to_text()} is not >=_{t} {mu.to_text()}")
    gaps = tuple(a.size - b.size for a, b in zip(dl.quotients, dm.quotients))
    out = multinomial(gaps)
    for a, b in zip(dl.quotients, dm.quotients):
        out *= f_skew(a, b)
    return out


def F_lambda(lam: Partition, t: int) -> int:
    """F of lam over its own t-core."""
    return F_skew(lam, decompose(lam, t).core, t)


@lru_cache(maxsize=None)
def G_lambda(lam: Partition, t: int) -> Fraction:
    """Reciprocal of the product of the hook lengths divisible by t.

    Equals 1 on t-cores and 1/(product of all hooks) at t = 1; ties to F by
    F = n! t^n G with n the total quotient size.
    """
    if t < 1:
        raise ValueError(f"modulus must be positive, got {t}")
    out = 1
    for h in hook_lengths(lam):
        if h % t == 0:
            out *= h
    return Fraction(1, out)


def enumerate_layer(mu: Partition, t: int, n: int) -> Iterator[Partition]:
    """All lam with t-core mu and |lam/mu| = n*t, each exactly once.

    Generated through quotient space: compositions of n (first component
    largest first), then tuples of partitions of each component in
    enumeration order, then recomposition.
    """
    if not is_t_core(mu, t):
        raise ValueError(f"{mu.to_text()} is not a {t}-core (hook {offending_hook(mu, t)})")
    yield from enumerate_layer_above(mu, t, n)


def enumerate_layer_above(mu: Partition, t: int, n: int) -> Iterator[Partition]:
    """All lam >=_t mu with |lam/mu| = n*t, for arbitrary mu."""
    if n < 0:
        raise ValueError(f"layer index must be non-negative, got {n}")
    dm = decompose(mu, t)
    for comp in _compositions(n, t):
        for quots in _super_tuples(dm.quotients, comp, 0):
            yield recompose(dm.core, quots, t)


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _super_tuples(
    inners: tuple[Partition, ...], comp: tuple[int, ...], i: int
) -> Iterator[tuple[Partition, ...]]:
    if i == len(inners):
        yield ()
        return
    for head in superpartitions(inners[i], comp[i]):
        for tail in _super_tuples(inners, comp, i + 1):
            yield (head,) + tail


@lru_cache(maxsize=None)
def superpartitions(inner: Partition, extra: int) -> tuple[Partition, ...]:
    """Partitions of |inner| + extra containing inner, in enumeration order."""
    return tuple(p for p in enumerate_partitions(inner.size + extra) if p.contains(inner))
