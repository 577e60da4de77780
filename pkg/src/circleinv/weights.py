"""Validated circle weight vectors and their structural queries.

A weight vector is stored split into sorted negative and positive parts;
zero weights are counted separately and the common gcd is divided out (the
action factors through a faithful one with the same invariants).  A vector
is *stable* when both signs occur and *generic* when the negative weights
are pairwise distinct.
"""

from dataclasses import dataclass
from math import gcd

from .errors import Empty, Unstable


def _gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


@dataclass(frozen=True)
class WeightVector:
    negatives: tuple  # sorted ascending, all < 0
    positives: tuple  # sorted ascending, all > 0
    zero_count: int = 0
    faithful_scale: int = 1

    @property
    def k(self) -> int:
        return len(self.negatives)

    @property
    def m(self) -> int:
        return len(self.positives)

    @property
    def n(self) -> int:
        return len(self.negatives) + len(self.positives)

    @property
    def weights(self) -> tuple:
        """Nonzero weights in canonical order (negatives then positives)."""
        return self.negatives + self.positives

    @property
    def is_generic(self) -> bool:
        return len(set(self.negatives)) == len(self.negatives)

    @property
    def positive_side_generic(self) -> bool:
        return len(set(self.positives)) == len(self.positives)

    def negate(self) -> "WeightVector":
        return WeightVector(
            negatives=tuple(sorted(-w for w in self.positives)),
            positives=tuple(sorted(-w for w in self.negatives)),
            zero_count=self.zero_count,
            faithful_scale=self.faithful_scale,
        )

    def __str__(self):
        parts = [str(w) for w in self.weights] + ["0"] * self.zero_count
        return "(" + ",".join(parts) + ")"


def validate(raw) -> WeightVector:
    """Canonicalize a raw weight sequence.

    Zeros are stripped into ``zero_count``, the gcd of the rest is divided
    out (recorded in ``faithful_scale``) and both sign classes must be
    nonempty, otherwise the action has no stable orbits.
    """
    raw = tuple(raw)
    if not raw:
        raise Empty("no weights given")
    zeros = sum(1 for w in raw if w == 0)
    nonzero = [w for w in raw if w != 0]
    if not nonzero:
        raise Unstable("all weights are zero")
    negs = sorted(w for w in nonzero if w < 0)
    poss = sorted(w for w in nonzero if w > 0)
    if not negs or not poss:
        raise Unstable("weights must contain both signs")
    scale = _gcd_all(nonzero)
    if scale > 1:
        negs = [w // scale for w in negs]
        poss = [w // scale for w in poss]
    return WeightVector(
        negatives=tuple(negs),
        positives=tuple(poss),
        zero_count=zeros,
        faithful_scale=scale,
    )


def remove(v: WeightVector, indices) -> tuple:
    """Drop the weights at the given positions of ``v.weights``.

    Returns (remaining weights, gcd of the remaining weights).  The result is
    deliberately *not* re-normalized: reduced vectors may be unstable or
    unfaithful, and downstream formulas need the raw gcd (0 when nothing is
    left, |w| for a single leftover w).
    """
    indices = set(indices)
    all_weights = v.weights
    for i in indices:
        if not 0 <= i < len(all_weights):
            raise IndexError(f"weight index {i} out of range")
    remaining = tuple(w for i, w in enumerate(all_weights) if i not in indices)
    return remaining, _gcd_all(remaining)


def canonical_key(v: WeightVector) -> tuple:
    """Deduplication key identifying a vector with its negation."""
    forward = tuple(sorted(v.weights))
    backward = tuple(sorted(-w for w in v.weights))
    return (v.zero_count, min(forward, backward))
