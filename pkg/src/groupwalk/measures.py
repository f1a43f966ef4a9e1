"""Probability measures on group elements and their convolution algebra.

Weights are either all exact rationals or all floats, never mixed.  Exact
measures stay exact through convolution, powers, and total-variation
distances.
"""

from __future__ import annotations

from fractions import Fraction

from .groups import ConstructionError, closure, parse_element

FLOAT_SUM_TOL = 1e-12

__all__ = [
    "MeasureError",
    "GroupMeasure",
    "make_measure",
    "delta",
    "uniform",
    "convolve",
    "power",
    "tv_distance",
    "is_symmetric",
    "is_generating",
    "min_return",
    "measure_from_json",
    "measure_to_json",
]


class MeasureError(ValueError):
    """Raised for malformed measures or unsupported measure operations."""


class GroupMeasure:
    """Finitely supported probability measure on a group's element indices."""

    def __init__(self, group, weights, exact):
        self.group = group
        self.weights = dict(weights)
        self.exact = exact

    def support(self):
        return sorted(self.weights)

    def weight(self, g):
        zero = Fraction(0) if self.exact else 0.0
        return self.weights.get(g, zero)

    def as_float(self):
        """Floating copy of this measure (identity for float measures)."""
        return GroupMeasure(self.group, {g: float(w) for g, w in self.weights.items()}, False)

    def __eq__(self, other):
        return (
            isinstance(other, GroupMeasure)
            and self.group is other.group
            and self.weights == other.weights
        )

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"<GroupMeasure on {self.group.name} support={len(self.weights)} {kind}>"


def _classify_weight(w):
    if isinstance(w, bool):
        raise MeasureError(f"weight {w!r} is not a number")
    if isinstance(w, (int, Fraction)):
        return Fraction(w), True
    if isinstance(w, float):
        return w, False
    raise MeasureError(f"weight {w!r} must be a Fraction, int, or float")


def make_measure(group, entries):
    """Build a validated measure from (element, weight) pairs.

    All weights must be positive and of one scalar kind; exact weights must
    sum to exactly 1, float weights to 1 within 1e-12.  On ball truncations
    the support may only contain elements of word length <= 1.
    """
    entries = list(entries)
    if not entries:
        raise MeasureError("measure needs at least one entry")
    weights = {}
    kinds = set()
    for g, w in entries:
        if not (isinstance(g, int) and 0 <= g < group.order):
            raise MeasureError(f"support element {g!r} is not a valid index for {group.name}")
        if g in weights:
            raise MeasureError(f"duplicate support element {g}")
        value, exact = _classify_weight(w)
        kinds.add(exact)
        if value <= 0:
            raise MeasureError(f"weight for element {g} must be positive, got {w}")
        weights[g] = value
    if len(kinds) != 1:
        raise MeasureError("mixed rational and float weights are not allowed")
    exact = kinds.pop()
    total = sum(weights.values())
    if exact:
        if total != 1:
            raise MeasureError(f"exact weights must sum to 1, got {total}")
    elif abs(total - 1.0) > FLOAT_SUM_TOL:
        raise MeasureError(f"float weights must sum to 1 within {FLOAT_SUM_TOL}, got {total!r}")
    if group.is_truncated:
        for g in weights:
            if group.length(g) > 1:
                raise MeasureError(
                    f"support element {g} has word length {group.length(g)} > 1 on a ball truncation"
                )
    return GroupMeasure(group, weights, exact)


def delta(group, g):
    """Point mass at one element."""
    return make_measure(group, [(g, Fraction(1))])


def uniform(group, elements):
    """Uniform measure on a set of elements."""
    elements = sorted(set(elements))
    n = len(elements)
    return make_measure(group, [(g, Fraction(1, n)) for g in elements])


def _require_same_kind(mu, nu):
    if mu.group is not nu.group:
        raise MeasureError("measures live on different groups")
    if mu.exact != nu.exact:
        raise MeasureError("mixed rational and float measures are not allowed")


def convolve(mu, nu):
    """Convolution (mu * nu)(g) = sum_h mu(h) nu(h^-1 g).

    On ball truncations the product is computed only while every pairwise
    product of support elements stays inside the ball.
    """
    _require_same_kind(mu, nu)
    group = mu.group
    out = {}
    for h, wh in mu.weights.items():
        for x, wx in nu.weights.items():
            g = group.mul(h, x)
            if g is None:
                raise MeasureError(
                    "convolution leaves the ball: "
                    f"product of support elements {h} and {x} is undefined"
                )
            out[g] = out.get(g, Fraction(0) if mu.exact else 0.0) + wh * wx
    return GroupMeasure(group, out, mu.exact)


def power(mu, n):
    """n-fold convolution power, n >= 1."""
    if not isinstance(n, int) or n < 1:
        raise MeasureError(f"power needs an integer n >= 1, got {n}")
    out = mu
    for _ in range(n - 1):
        out = convolve(out, mu)
    return out


def tv_distance(mu, nu):
    """Total variation distance, half the L1 distance of the weight vectors."""
    _require_same_kind(mu, nu)
    keys = set(mu.weights) | set(nu.weights)
    total = sum(abs(mu.weight(g) - nu.weight(g)) for g in keys)
    return total / 2


def is_symmetric(mu, tol=1e-12):
    """Whether mu(g) equals mu(g^-1) for every g (exactly, or within tol)."""
    group = mu.group
    for g, w in mu.weights.items():
        w_inv = mu.weight(group.inv(g))
        if mu.exact:
            if w != w_inv:
                return False
        elif abs(w - w_inv) > tol:
            return False
    return True


def is_generating(mu):
    """Whether the support generates the whole finite group as a semigroup."""
    group = mu.group
    if group.is_truncated:
        raise MeasureError("is_generating is only defined for finite groups")
    return len(closure(group, mu.support())) == group.order


def min_return(mu, cap):
    """Least k <= cap with the identity in the support of the k-th power.

    Works on supports only, so no weight arithmetic is involved.  Returns
    None when the identity is not reached within cap steps.
    """
    if not isinstance(cap, int) or cap < 1:
        raise MeasureError(f"min_return needs an integer cap >= 1, got {cap}")
    group = mu.group
    if group.is_truncated:
        raise MeasureError("min_return is only defined for finite groups")
    supp = mu.support()
    current = set(supp)
    for k in range(1, cap + 1):
        if group.identity in current:
            return k
        current = {group.mul(g, s) for g in current for s in supp}
    return None


def measure_from_json(group, entries):
    """Parse the JSON measure encoding: a list of {"g": text, "w": weight}.

    Weights given as strings are exact rationals ("1/2", "3"); weights given
    as JSON numbers are floats (integers count as exact).
    """
    if not isinstance(entries, list):
        raise MeasureError("measure must be a JSON list of entries")
    pairs = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "g" not in entry or "w" not in entry:
            raise MeasureError(f"measure entry {i} must be an object with 'g' and 'w'")
        try:
            g = parse_element(group, str(entry["g"]))
        except ConstructionError as exc:
            raise MeasureError(f"measure entry {i}: {exc}") from exc
        w = entry["w"]
        if isinstance(w, str):
            try:
                w = Fraction(w)
            except (ValueError, ZeroDivisionError) as exc:
                raise MeasureError(f"measure entry {i}: bad rational weight {entry['w']!r}") from exc
        pairs.append((g, w))
    return make_measure(group, pairs)


def measure_to_json(mu):
    from .groups import format_element

    out = []
    for g in mu.support():
        w = mu.weights[g]
        out.append({"g": format_element(mu.group, g), "w": str(w) if mu.exact else w})
    return out
