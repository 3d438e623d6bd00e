"""The cyclic bar complex of a free graded-commutative Q-algebra.

A level-s chain is a Q-combination of (s+1)-fold tensors of monomials
a_0 (x) a_1 (x) ... (x) a_s; in the normalized complex the positions
1..s never hold the unit.  The differential is the alternating face sum

    b = sum_{i<s} (-1)^i d_i + (-1)^s d_s,

where d_i multiplies the adjacent factors a_i a_{i+1} and the last face
rotates the final factor to the front, picking up the Koszul sign
(-1)^{|a_s| (|a_0| + ... + |a_{s-1}|)} for moving a_s past everything else.
At level 2 this reads

    b(a0 (x) a1 (x) a2) = a0 a1 (x) a2 - a0 (x) a1 a2
                          + (-1)^{|a2|(|a0|+|a1|)} a2 a0 (x) a1.

Fixing a multidegree m (a per-generator total exponent vector) cuts out a
finite subcomplex: each bar position consumes at least one exponent, so
levels are bounded by |m|_1, and every tensor of multidegree m has the same
internal degree <m, degrees>.  Without Laurent generators a product of
non-units is a non-unit, so the normalized basis is closed under b.

Homology is compared against the polynomial/exterior prediction: for every
generator g a companion class in degree |g| + 1 with flipped parity (the
suspension of g), carrying the same multidegree weight as g.  The level-1
derivation map D(a0 (x) a1) = a0 d(a1) (zero on other levels) lands in
Kahler differentials and kills boundaries from level 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .dg_complexes import ChainWindow
from .exact_linear import RationalMatrix
from .graded_algebra import (
    Element,
    KahlerElement,
    Presentation,
    _check_mono,
    kahler_d,
    koszul_mul,
    mono_degree,
    mono_one,
    mono_str,
)


# ---------------------------------------------------------------------------
# Multidegrees.


def check_multidegree(pres: Presentation, m) -> tuple:
    m = tuple(m)
    if len(m) != pres.ngens:
        raise ValueError("multidegree length does not match generator count")
    for e in m:
        if not isinstance(e, int) or e < 0:
            raise ValueError("multidegree entries must be nonnegative integers")
    return m


def multidegree_from_dict(pres: Presentation, weights: dict) -> tuple:
    m = [0] * pres.ngens
    for name, e in weights.items():
        m[pres.index(name)] = e
    return check_multidegree(pres, m)


def multidegree_to_dict(pres: Presentation, m) -> dict:
    return {name: e for name, e in zip(pres.names, m) if e}


def internal_degree(pres: Presentation, m) -> int:
    """Common internal degree of every tensor of multidegree m."""
    return sum(e * d for e, d in zip(m, pres.degrees))


def multidegrees_up_to(pres: Presentation, weight: int):
    """All multidegrees with |m|_1 <= weight, ordered by (total, lex)."""
    if weight < 0:
        raise ValueError("weight bound must be nonnegative")
    out = [
        m
        for m in itertools.product(range(weight + 1), repeat=pres.ngens)
        if sum(m) <= weight
    ]
    out.sort(key=lambda m: (sum(m), m))
    return out


def _require_no_laurent(pres: Presentation):
    if any(pres.laurent):
        raise ValueError(
            "bar complexes need connective exponents: no laurent generators"
        )


# ---------------------------------------------------------------------------
# Chains.


def tensor_str(pres: Presentation, tensor) -> str:
    return " | ".join(mono_str(pres, m) for m in tensor)


class BarChain:
    """Q-linear combination of (level+1)-fold monomial tensors."""

    __slots__ = ("pres", "level", "terms")

    def __init__(self, pres: Presentation, level: int, terms=None):
        if level < 0:
            raise ValueError("level must be nonnegative")
        self.pres = pres
        self.level = level
        clean = {}
        for tensor, coeff in (terms or {}).items():
            if len(tensor) != level + 1:
                raise ValueError("tensor length must be level + 1")
            tensor = tuple(_check_mono(pres, m) for m in tensor)
            q = Fraction(coeff)
            if q:
                clean[tensor] = clean.get(tensor, Fraction(0)) + q
                if not clean[tensor]:
                    del clean[tensor]
        self.terms = clean

    @classmethod
    def zero(cls, pres: Presentation, level: int) -> "BarChain":
        return cls(pres, level, {})

    def is_zero(self) -> bool:
        return not self.terms

    def multidegree(self):
        """Common componentwise exponent total, or None if mixed or zero."""
        seen = {
            tuple(sum(m[i] for m in tensor) for i in range(self.pres.ngens))
            for tensor in self.terms
        }
        if len(seen) == 1:
            return seen.pop()
        return None

    def internal_degree(self):
        seen = {sum(mono_degree(self.pres, m) for m in tensor) for tensor in self.terms}
        if len(seen) == 1:
            return seen.pop()
        return None

    def normalized(self) -> "BarChain":
        """Project to the normalized complex: kill units in bar positions."""
        unit = mono_one(self.pres)
        kept = {
            tensor: coeff
            for tensor, coeff in self.terms.items()
            if all(m != unit for m in tensor[1:])
        }
        return BarChain(self.pres, self.level, kept)

    def _require_same(self, other):
        if self.pres != other.pres or self.level != other.level:
            raise ValueError("chains over different presentations or levels")

    def __add__(self, other):
        if not isinstance(other, BarChain):
            return NotImplemented
        self._require_same(other)
        terms = dict(self.terms)
        for t, c in other.terms.items():
            terms[t] = terms.get(t, Fraction(0)) + c
        return BarChain(self.pres, self.level, terms)

    def __neg__(self):
        return BarChain(self.pres, self.level, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BarChain):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            q = Fraction(scalar)
            return BarChain(self.pres, self.level,
                            {t: c * q for t, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, BarChain)
            and self.pres == other.pres
            and self.level == other.level
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.pres, self.level, frozenset(self.terms.items())))

    def to_json(self):
        return [
            {"coeff": str(self.terms[t]), "tensor": [mono_str(self.pres, m) for m in t]}
            for t in sorted(self.terms)
        ]

    def __repr__(self):
        if not self.terms:
            return f"BarChain(level={self.level}, 0)"
        parts = []
        for t in sorted(self.terms):
            parts.append(f"{self.terms[t]}*[{tensor_str(self.pres, t)}]")
        return f"BarChain(level={self.level}, " + " + ".join(parts) + ")"


def hochschild_diff(x: BarChain) -> BarChain:
    """Alternating face sum; the last face rotates with its Koszul sign."""
    s = x.level
    if s == 0:
        return BarChain.zero(x.pres, 0)
    out = {}

    def add(tensor, coeff):
        out[tensor] = out.get(tensor, Fraction(0)) + coeff

    for tensor, coeff in x.terms.items():
        parities = [mono_degree(x.pres, m) % 2 for m in tensor]
        for i in range(s):
            hit = koszul_mul(x.pres, tensor[i], tensor[i + 1])
            if hit is None:
                continue
            sign, merged = hit
            face = tensor[:i] + (merged,) + tensor[i + 2:]
            add(face, coeff * sign * (-1) ** i)
        hit = koszul_mul(x.pres, tensor[s], tensor[0])
        if hit is not None:
            sign, merged = hit
            rotate = (-1) ** (parities[s] * sum(parities[:s]))
            face = (merged,) + tensor[1:s]
            add(face, coeff * sign * rotate * (-1) ** s)
    return BarChain(x.pres, s - 1, out)


# ---------------------------------------------------------------------------
# Normalized bases per multidegree and homology.


def bar_basis(pres: Presentation, m) -> dict:
    """Normalized tensor basis per level for one multidegree.

    Returns {level: ordered tensor list} for levels 0..|m|_1.  Every tensor
    of multidegree m shares the internal degree <m, degrees>, so the pair
    (level, internal degree) is determined by the level alone here.
    """
    _require_no_laurent(pres)
    m = check_multidegree(pres, m)
    n = pres.ngens
    odd = [pres.is_odd(i) for i in range(n)]
    top = sum(m)
    out = {}
    for level in range(top + 1):
        tensors = []
        slots = level + 1

        def candidates(remaining, bar_position):
            ranges = [
                range(0, min(remaining[i], 1 if odd[i] else remaining[i]) + 1)
                for i in range(n)
            ]
            for e in itertools.product(*ranges):
                if bar_position and not any(e):
                    continue
                yield e

        stack = []

        def recurse(pos, remaining):
            if pos == slots - 1:
                # the last slot takes everything still unassigned
                e = remaining
                if any(odd[i] and e[i] > 1 for i in range(n)):
                    return
                if pos >= 1 and not any(e):
                    return
                tensors.append(tuple(stack) + (e,))
                return
            for e in candidates(remaining, pos >= 1):
                stack.append(e)
                recurse(pos + 1, tuple(r - x for r, x in zip(remaining, e)))
                stack.pop()

        recurse(0, m)
        tensors.sort()
        out[level] = tensors
    return out


def bar_window(pres: Presentation, m) -> ChainWindow:
    """The finite normalized complex of one multidegree, levels as degrees."""
    basis = bar_basis(pres, m)
    top = sum(check_multidegree(pres, m))
    windows = {-1: []}
    windows.update({s: basis[s] for s in range(top + 1)})
    windows[top + 1] = []
    diff = {}
    for s in range(0, top + 2):
        source = windows.get(s, [])
        target = windows.get(s - 1, [])
        index = {t: i for i, t in enumerate(target)}
        entries = {}
        for col, tensor in enumerate(source):
            image = hochschild_diff(BarChain(pres, s, {tensor: 1}))
            for out_tensor, coeff in image.terms.items():
                entries[(index[out_tensor], col)] = coeff
        diff[s] = RationalMatrix(len(target), len(source), entries)
    return ChainWindow(windows, diff)


def hh_dims(pres: Presentation, m) -> dict:
    """Hochschild homology dimensions by total degree for one multidegree."""
    m = check_multidegree(pres, m)
    top = sum(m)
    window = bar_window(pres, m)
    by_level = window.homology_dims((0, top))
    base = internal_degree(pres, m)
    return {base + s: dim for s, dim in sorted(by_level.items()) if dim}


def hkr_predicted_dims(pres: Presentation, m) -> dict:
    """Polynomial/exterior prediction for the same multidegree.

    Each generator g splits its weight m_g between g itself and a companion
    in degree |g| + 1 of flipped parity; exterior exponents stay at most 1
    on whichever side is odd.  Companion exponents add s to the total
    degree, one per suspension.
    """
    _require_no_laurent(pres)
    m = check_multidegree(pres, m)
    per_gen = []
    for i in range(pres.ngens):
        pairs = []
        for f in range(m[i] + 1):
            e = m[i] - f
            if pres.is_odd(i):
                if e > 1:
                    continue
            else:
                if f > 1:
                    continue
            pairs.append((e, f))
        per_gen.append(pairs)
    counts = {}
    for combo in itertools.product(*per_gen):
        degree = sum(
            e * d + f * (d + 1)
            for (e, f), d in zip(combo, pres.degrees)
        )
        counts[degree] = counts.get(degree, 0) + 1
    return {d: c for d, c in sorted(counts.items())}


@dataclass
class HkrReport:
    pres: Presentation
    rows: list = field(default_factory=list)
    all_equal: bool = True

    def add(self, m, computed, predicted):
        equal = computed == predicted
        self.rows.append(
            {
                "multidegree": multidegree_to_dict(self.pres, m),
                "computed": computed,
                "predicted": predicted,
                "equal": equal,
            }
        )
        self.all_equal = self.all_equal and equal

    def to_json(self) -> dict:
        return {
            "rows": [
                {
                    "multidegree": row["multidegree"],
                    "computed": {str(k): v for k, v in sorted(row["computed"].items())},
                    "predicted": {str(k): v for k, v in sorted(row["predicted"].items())},
                    "equal": row["equal"],
                }
                for row in self.rows
            ],
            "all_equal": self.all_equal,
        }


def hkr_check(pres: Presentation, multidegrees) -> HkrReport:
    """Compare computed homology with the prediction, multidegree by
    multidegree."""
    report = HkrReport(pres)
    for m in multidegrees:
        m = check_multidegree(pres, m)
        report.add(m, hh_dims(pres, m), hkr_predicted_dims(pres, m))
    return report


# ---------------------------------------------------------------------------
# The level-1 derivation map.


def D_map(x: BarChain) -> KahlerElement:
    """D(a0 (x) a1) = a0 d(a1) on level 1; zero on every other level."""
    out = KahlerElement.zero(x.pres)
    if x.level != 1:
        return out
    for (a0, a1), coeff in sorted(x.terms.items()):
        front = Element.monomial(x.pres, a0, coeff)
        out = out + front * kahler_d(Element.monomial(x.pres, a1))
    return out
