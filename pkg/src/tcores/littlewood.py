"""The core/quotient decomposition at a modulus t, and its offset bookkeeping.

A partition corresponds to its boundary word; removing a t-hook swaps some
(z_i, z_{i+t}) = (1, 0) into (0, 1).  Within each residue class i mod t
that is an adjacent swap, so the t-core is obtained by sorting every class
(all 0s before all 1s), and the i-th quotient is the partition encoded by
the class-i subsequence on its own terms.  The map

    lam  ->  (core; quotient_0, ..., quotient_{t-1})

is a bijection; `decompose` and `recompose` are the two directions.

For a t-core mu, b_i is the first index congruent to i mod t carrying a 1,
and d_i = (b_i - i)/t.  These offsets tie the quotient words back into the
global word: z_{lam^i, j} = z_{lam, j*t + b_i} whenever lam has core mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .boundary import BoundarySequence, partition_from_word
from .partitions import Partition, hook_lengths


def is_t_core(lam: Partition, t: int) -> bool:
    if t < 1:
        raise ValueError(f"modulus must be positive, got {t}")
    return all(h % t for h in hook_lengths(lam))


def offending_hook(lam: Partition, t: int) -> int | None:
    """Some hook length divisible by t, or None if lam is a t-core."""
    for h in hook_lengths(lam):
        if h % t == 0:
            return h
    return None


@lru_cache(maxsize=None)
def t_core(lam: Partition, t: int) -> Partition:
    """Remove t-hooks until none remain; the result is removal-order free."""
    if t < 1:
        raise ValueError(f"modulus must be positive, got {t}")
    seq = BoundarySequence.from_partition(lam)
    if not seq.bits:
        return Partition()
    bits = list(seq.bits)
    for i in range(t):
        idx = [p for p in range(seq.lo, seq.hi + 1) if p % t == i]
        for p, v in zip(idx, sorted(bits[p - seq.lo] for p in idx)):
            bits[p - seq.lo] = v
    return BoundarySequence(seq.lo, bits).to_partition()


@lru_cache(maxsize=None)
def t_quotients(lam: Partition, t: int) -> tuple[Partition, ...]:
    """The t quotients, each decoded from its residue subsequence."""
    if t < 1:
        raise ValueError(f"modulus must be positive, got {t}")
    seq = BoundarySequence.from_partition(lam)
    return tuple(partition_from_word(seq.residue_class_bits(t, i)[1]) for i in range(t))


class CoreOffsets(NamedTuple):
    t: int
    b: tuple[int, ...]
    d: tuple[int, ...]


@lru_cache(maxsize=None)
def core_offsets(mu: Partition, t: int) -> CoreOffsets:
    """b_i = min{j = i mod t : z_{mu,j} = 1} and d_i = (b_i - i)/t for a t-core mu."""
    if not is_t_core(mu, t):
        raise ValueError(f"{mu.to_text()} is not a {t}-core (hook {offending_hook(mu, t)})")
    seq = BoundarySequence.from_partition(mu)
    b = []
    for i in range(t):
        j_lo, bits = seq.residue_class_bits(t, i)
        b.append(t * (j_lo + bits.count(0)) + i)
    d = tuple((bi - i) // t for i, bi in enumerate(b))
    assert sum(d) == 0, "offset sum must vanish by the balance condition"
    return CoreOffsets(t, tuple(b), d)


@lru_cache(maxsize=None)
def recompose(core: Partition, quotients: tuple[Partition, ...], t: int) -> Partition:
    """Inverse of (t_core, t_quotients): interleave the quotient words back
    into the residue classes, shifted by the core's offsets d_i."""
    if len(quotients) != t:
        raise ValueError(f"need exactly {t} quotients, got {len(quotients)}")
    off = core_offsets(core, t)
    seqs = [BoundarySequence.from_partition(q) for q in quotients]
    lo = min(t * (s.lo + off.d[i]) + i for i, s in enumerate(seqs))
    hi = max(t * (s.hi + off.d[i]) + i for i, s in enumerate(seqs))
    bits = []
    for p in range(lo, hi + 1):
        i = p % t
        bits.append(seqs[i].value((p - i) // t - off.d[i]))
    return BoundarySequence(lo, bits).to_partition()


@dataclass(frozen=True)
class LittlewoodDecomposition:
    t: int
    core: Partition
    quotients: tuple[Partition, ...]
    offsets: CoreOffsets

    @classmethod
    def of(cls, core: Partition, quotients: Iterable[Partition], t: int) -> "LittlewoodDecomposition":
        quotients = tuple(quotients)
        return cls(t, core, quotients, core_offsets(core, t))

    def partition(self) -> Partition:
        return recompose(self.core, self.quotients, self.t)

    @property
    def quotient_sizes(self) -> tuple[int, ...]:
        return tuple(q.size for q in self.quotients)

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "core": self.core.to_text(),
            "quotients": [q.to_text() for q in self.quotients],
            "b": list(self.offsets.b),
            "d": list(self.offsets.d),
        }


def decompose(lam: Partition, t: int) -> LittlewoodDecomposition:
    return LittlewoodDecomposition.of(t_core(lam, t), t_quotients(lam, t), t)


def residue_hook_count(lam: Partition, t: int, k: int) -> int:
    """#{hooks of lam congruent to k mod t}."""
    if not 0 <= k < t:
        raise ValueError(f"residue {k} out of range for modulus {t}")
    return sum(1 for h in hook_lengths(lam) if h % t == k)


def bk_pairs(t: int, k: int) -> list[tuple[int, int]]:
    """The multiset B_k of residue pairs at circular distance k: pairs (i, j)
    with j - i = k, together with those with j - i = t - k; when k = t - k
    both copies are kept."""
    if not 1 <= k <= t - 1:
        raise ValueError(f"k must be in 1..{t - 1}, got {k}")
    return [(i, i + k) for i in range(t - k)] + [(i, i + t - k) for i in range(k)]


def gbinom2(x: int) -> int:
    """x(x-1)/2, the choose-2 polynomial extended to every integer."""
    return x * (x - 1) // 2


class IdentityCheck(NamedTuple):
    name: str
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def bk_identities(mu: Partition, t: int) -> list[IdentityCheck]:
    """Evaluate both sides of the B_k square identity, the three offset
    identities, and the three expressions for |mu|, for a t-core mu."""
    off = core_offsets(mu, t)
    b, d = off.b, off.d
    checks = []
    for k in range(1, t):
        pairs = bk_pairs(t, k)
        checks.append(IdentityCheck(
            f"Bk1[k={k}]",
            sum((j - i) ** 2 for i, j in pairs),
            t * k * (t - k),
        ))
        checks.append(IdentityCheck(
            f"Bk2[k={k}]",
            sum((2 * j - 2 * i) * (d[i] - d[j]) for i, j in pairs),
            t * sum(d[i] - d[j] for i, j in pairs),
        ))
    upper = [(i, j) for i in range(t) for j in range(i + 1, t)]
    checks.append(IdentityCheck(
        "Bk3",
        t * sum(x * x for x in d),
        sum((d[i] - d[j]) ** 2 for i, j in upper),
    ))
    checks.append(IdentityCheck(
        "Bk4",
        -2 * sum(i * d[i] for i in range(t)),
        sum(d[i] - d[j] for i, j in upper),
    ))
    checks.append(IdentityCheck(
        "size[pairs]",
        mu.size,
        sum(gbinom2(d[i] - d[j]) for i, j in upper),
    ))
    checks.append(IdentityCheck(
        "size[quadratic]",
        Fraction(mu.size),
        Fraction(t, 2) * sum(x * x for x in d) + sum(i * d[i] for i in range(t)),
    ))
    checks.append(IdentityCheck(
        "size[offsets]",
        Fraction(mu.size),
        Fraction(1, 2 * t * t) * sum((b[i] - b[j]) ** 2 - (i - j) ** 2 for i, j in upper),
    ))
    return checks
