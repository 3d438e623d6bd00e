"""Free graded-commutative algebras over Q, presented by generators.

A presentation is an ordered list of homogeneous generators (name, integer
degree, laurent flag).  Odd-degree generators are exterior: they square to
zero and monomial exponents for them are structurally 0 or 1.  Even-degree
generators are polynomial, or Laurent (inverse adjoined) when flagged.

Monomials are plain exponent tuples aligned with the generator list; an
Element is a finite Q-linear combination of monomials.  Multiplication
carries the Koszul sign: moving one odd generator past another flips the
sign, so ab = (-1)^{|a||b|} ba for homogeneous a, b.

The module also provides the universal derivation into Kahler differentials
(d(ab) = a d(b) + (-1)^{|a||b|} b d(a), coefficients written on the left),
deterministic monomial bases per degree, localization at an even generator,
and a windowed semi-decision procedure for the right Ore condition on a
finite multiplication table.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_linear import RationalMatrix, in_span

_NAME_RE = re.compile(r"[A-Za-z_]\w*")


@dataclass(frozen=True)
class Presentation:
    """Ordered generator data for a free graded-commutative Q-algebra."""

    names: tuple
    degrees: tuple
    laurent: tuple

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def is_odd(self, i: int) -> bool:
        return self.degrees[i] % 2 != 0


@functools.lru_cache(maxsize=None)
def _odd_indices(pres: Presentation):
    return tuple(i for i in range(pres.ngens) if pres.is_odd(i))


def make_presentation(generators) -> Presentation:
    """Build and validate a Presentation.

    generators: iterable of (name, degree) or (name, degree, laurent).
    Laurent flags are rejected on odd generators: inverting an exterior
    class would force it to be a unit, and units square to nonzero.
    """
    names, degrees, laurent = [], [], []
    for gen in generators:
        if len(gen) == 2:
            name, degree = gen
            flag = False
        else:
            name, degree, flag = gen
        if not isinstance(name, str) or not _NAME_RE.fullmatch(name):
            raise ValueError(f"bad generator name {name!r}")
        if name in names:
            raise ValueError(f"duplicate generator name {name!r}")
        if not isinstance(degree, int):
            raise ValueError(f"generator {name!r} degree must be an integer")
        flag = bool(flag)
        if flag and degree % 2 != 0:
            raise ValueError(f"laurent flag on odd generator {name!r}")
        names.append(name)
        degrees.append(degree)
        laurent.append(flag)
    return Presentation(tuple(names), tuple(degrees), tuple(laurent))


def presentation_to_json(pres: Presentation) -> dict:
    return {
        "generators": [
            {"name": n, "degree": d, "laurent": l}
            for n, d, l in zip(pres.names, pres.degrees, pres.laurent)
        ]
    }


def presentation_from_json(data: dict) -> Presentation:
    return make_presentation(
        (g["name"], g["degree"], g.get("laurent", False)) for g in data["generators"]
    )


# ---------------------------------------------------------------------------
# Monomials: exponent tuples aligned with pres.names.


def mono_one(pres: Presentation):
    return (0,) * pres.ngens


def mono_degree(pres: Presentation, mono) -> int:
    return sum(e * d for e, d in zip(mono, pres.degrees))


def _check_mono(pres: Presentation, mono):
    if len(mono) != pres.ngens:
        raise ValueError("exponent tuple length does not match generator count")
    for i, e in enumerate(mono):
        if pres.is_odd(i) and e not in (0, 1):
            raise ValueError(
                f"exterior generator {pres.names[i]!r} exponent must be 0 or 1"
            )
        if e < 0 and not pres.laurent[i]:
            raise ValueError(
                f"negative exponent on non-laurent generator {pres.names[i]!r}"
            )
    return tuple(mono)


def koszul_mul(pres: Presentation, a, b):
    """Product of monomials a*b: (sign, exponent tuple), or None if it dies.

    The sign counts odd-odd crossings: generator i contributed by b moves
    left past every generator j > i contributed by a.  An exterior square
    (both factors containing the same odd generator) kills the product.
    """
    odd = _odd_indices(pres)
    for i in odd:
        if a[i] and b[i]:
            return None
    sign = 1
    for i in odd:
        if not b[i]:
            continue
        for j in odd:
            if j > i and a[j]:
                sign = -sign
    return sign, tuple(x + y for x, y in zip(a, b))


def mono_str(pres: Presentation, mono) -> str:
    parts = []
    for name, e in zip(pres.names, mono):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# Elements.


class Element:
    """Finite Q-linear combination of monomials over a fixed Presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms=None):
        self.pres = pres
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = _check_mono(pres, mono)
            q = Fraction(coeff)
            if q:
                clean[mono] = clean.get(mono, Fraction(0)) + q
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def zero(cls, pres: Presentation) -> "Element":
        return cls(pres, {})

    @classmethod
    def one(cls, pres: Presentation) -> "Element":
        return cls(pres, {mono_one(pres): Fraction(1)})

    @classmethod
    def monomial(cls, pres: Presentation, mono, coeff=1) -> "Element":
        return cls(pres, {tuple(mono): Fraction(coeff)})

    @classmethod
    def gen(cls, pres: Presentation, name: str) -> "Element":
        mono = [0] * pres.ngens
        mono[pres.index(name)] = 1
        return cls(pres, {tuple(mono): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Common degree of all terms; None for zero or inhomogeneous."""
        degs = {mono_degree(self.pres, m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({mono_degree(self.pres, m) for m in self.terms}) <= 1

    def _require_same(self, other):
        if self.pres != other.pres:
            raise ValueError("elements over different presentations")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Element(self.pres, terms)

    def __neg__(self):
        return Element(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            self._require_same(other)
            terms = {}
            for ma, ca in self.terms.items():
                for mb, cb in other.terms.items():
                    hit = koszul_mul(self.pres, ma, mb)
                    if hit is None:
                        continue
                    sign, mono = hit
                    terms[mono] = terms.get(mono, Fraction(0)) + sign * ca * cb
            return Element(self.pres, terms)
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Element(self.pres, {m: c * q for m, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Element.one(self.pres)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.pres == other.pres
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.pres, frozenset(self.terms.items())))

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"Element({poly_str(self)})"


def _coeff_mono_str(pres, mono, coeff) -> str:
    ms = mono_str(pres, mono)
    if ms == "1":
        return str(coeff)
    if coeff == 1:
        return ms
    if coeff == -1:
        return f"-{ms}"
    return f"{coeff} {ms}"


def poly_str(x: Element) -> str:
    """Deterministic human-readable form; leading term (highest lex) first."""
    if not x.terms:
        return "0"
    parts = []
    for mono in sorted(x.terms, reverse=True):
        term = _coeff_mono_str(x.pres, mono, x.terms[mono])
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)


_TERM_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<rat>\d+(?:/\d+)?)|(?P<fac>[A-Za-z_]\w*(?:\^-?\d+)?)|(?P<star>\*))"
)


def element_from_string(pres: Presentation, text: str) -> Element:
    """Parse "4 v1^3 eps - 1/2 v2" style input (also accepts '*' separators)."""
    pos = 0
    terms = {}
    sign = 1
    coeff = None
    mono = None

    def flush():
        nonlocal sign, coeff, mono
        if coeff is None and mono is None:
            return
        m = tuple(mono) if mono is not None else mono_one(pres)
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        _check_mono(pres, m)
        terms[m] = terms.get(m, Fraction(0)) + sign * c
        sign, coeff, mono = 1, None, None

    while pos < len(text):
        m = _TERM_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse element near {text[pos:]!r}")
        pos = m.end()
        if m.group("sign"):
            flush()
            sign = -1 if m.group("sign") == "-" else 1
        elif m.group("rat"):
            if coeff is not None or mono is not None:
                raise ValueError("coefficient must precede generators")
            coeff = Fraction(m.group("rat"))
        elif m.group("fac"):
            fac = m.group("fac")
            name, _, exp = fac.partition("^")
            e = int(exp) if exp else 1
            if mono is None:
                mono = [0] * pres.ngens
            try:
                mono[pres.index(name)] += e
            except KeyError:
                raise ValueError(f"unknown generator {name!r}") from None
        # '*' separators are skipped
    flush()
    return Element(pres, terms)


# ---------------------------------------------------------------------------
# Monomial bases per degree.


def _resolve_ranges(pres: Presentation, degree: int, caps):
    """Per-generator exponent ranges [lo, hi] for basis enumeration."""
    cap_map = {}
    if caps is None:
        pass
    elif isinstance(caps, int):
        if caps < 0:
            raise ValueError("exponent cap must be nonnegative")
        cap_map = {name: caps for name in pres.names}
    else:
        for name, c in dict(caps).items():
            pres.index(name)  # raises on unknown name
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"exponent cap for {name!r} must be a nonnegative integer")
            cap_map[name] = c

    # Auto-derived caps are only sound when every degree piece is finite:
    # no laurent generator without a cap, and the un-capped polynomial
    # generators all push degree strictly in one direction.
    uncapped = [
        i
        for i in range(pres.ngens)
        if not pres.is_odd(i) and pres.names[i] not in cap_map
    ]
    for i in uncapped:
        if pres.laurent[i]:
            raise ValueError(f"missing cap on laurent generator {pres.names[i]!r}")
        if pres.degrees[i] == 0:
            raise ValueError(f"cap required for degree-0 generator {pres.names[i]!r}")
    signs = {1 if pres.degrees[i] > 0 else -1 for i in uncapped}
    if len(signs) > 1:
        raise ValueError("caps required: generator degrees of mixed sign")

    slack = abs(degree)
    for i in range(pres.ngens):
        name = pres.names[i]
        if pres.is_odd(i) or name in cap_map:
            bound = 1 if pres.is_odd(i) else cap_map[name]
            if pres.is_odd(i) and name in cap_map:
                bound = min(1, cap_map[name])
            slack += bound * abs(pres.degrees[i])

    ranges = []
    for i in range(pres.ngens):
        name = pres.names[i]
        if pres.is_odd(i):
            hi = min(1, cap_map.get(name, 1))
            ranges.append((0, hi))
        elif pres.laurent[i]:
            c = cap_map[name]
            ranges.append((-c, c))
        elif name in cap_map:
            ranges.append((0, cap_map[name]))
        else:
            ranges.append((0, slack // abs(pres.degrees[i])))
    return ranges


def monomial_basis(pres: Presentation, degree: int, caps=None):
    """All monomials of the given degree, leading (highest lex) first.

    caps: None (auto-derived bounds where sound), an int applied to every
    generator, or a {name: cap} mapping.  Laurent generators always require
    an explicit cap: their degree pieces are infinite without one.
    """
    ranges = _resolve_ranges(pres, degree, caps)
    n = pres.ngens
    # Suffix bounds on the achievable remaining degree, for pruning.
    min_rem = [0] * (n + 1)
    max_rem = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        lo, hi = ranges[i]
        d = pres.degrees[i]
        contrib = (lo * d, hi * d)
        min_rem[i] = min_rem[i + 1] + min(contrib)
        max_rem[i] = max_rem[i + 1] + max(contrib)

    out = []
    stack = [0] * n

    def recurse(i, remaining):
        if i == n:
            if remaining == 0:
                out.append(tuple(stack))
            return
        lo, hi = ranges[i]
        d = pres.degrees[i]
        for e in range(lo, hi + 1):
            r2 = remaining - e * d
            if not (min_rem[i + 1] <= r2 <= max_rem[i + 1]):
                continue
            stack[i] = e
            recurse(i + 1, r2)
        stack[i] = 0

    recurse(0, degree)
    out.sort(reverse=True)
    return out


# ---------------------------------------------------------------------------
# Kahler differentials.


class KahlerElement:
    """Element of the module of Kahler differentials: sum c_g d(g).

    Coefficients are Elements written on the left of the formal symbols
    d(g); the symbol d(g) is given the degree of g, so left multiplication
    is the plain module action with no extra sign.
    """

    __slots__ = ("pres", "parts")

    def __init__(self, pres: Presentation, parts=None):
        self.pres = pres
        clean = {}
        for idx, coeff in (parts or {}).items():
            if not isinstance(coeff, Element):
                raise ValueError("Kahler coefficients must be Elements")
            if coeff.pres != pres:
                raise ValueError("coefficient over a different presentation")
            if not 0 <= idx < pres.ngens:
                raise ValueError("bad generator index")
            if not coeff.is_zero():
                clean[idx] = coeff
        self.parts = clean

    @classmethod
    def zero(cls, pres: Presentation) -> "KahlerElement":
        return cls(pres, {})

    @classmethod
    def d_symbol(cls, pres: Presentation, name: str) -> "KahlerElement":
        return cls(pres, {pres.index(name): Element.one(pres)})

    def is_zero(self) -> bool:
        return not self.parts

    def component(self, name: str) -> Element:
        return self.parts.get(self.pres.index(name), Element.zero(self.pres))

    def __add__(self, other):
        if not isinstance(other, KahlerElement) or self.pres != other.pres:
            return NotImplemented
        parts = dict(self.parts)
        for idx, coeff in other.parts.items():
            parts[idx] = parts.get(idx, Element.zero(self.pres)) + coeff
        return KahlerElement(self.pres, parts)

    def __neg__(self):
        return KahlerElement(self.pres, {i: -c for i, c in self.parts.items()})

    def __sub__(self, other):
        if not isinstance(other, KahlerElement) or self.pres != other.pres:
            return NotImplemented
        return self + (-other)

    def __rmul__(self, other):
        if isinstance(other, Element):
            return KahlerElement(
                self.pres, {i: other * c for i, c in self.parts.items()}
            )
        if isinstance(other, (int, Fraction)):
            return KahlerElement(
                self.pres, {i: c * Fraction(other) for i, c in self.parts.items()}
            )
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, KahlerElement)
            and self.pres == other.pres
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.pres, frozenset((i, c) for i, c in self.parts.items())))

    def display(self) -> str:
        """Symbols ordered by (degree, name), e.g. "v1^4 d(eps) + 4 v1^3 eps d(v1)"."""
        if not self.parts:
            return "0"
        order = sorted(
            self.parts, key=lambda i: (self.pres.degrees[i], self.pres.names[i])
        )
        chunks = []
        for i in order:
            coeff = self.parts[i]
            sym = f"d({self.pres.names[i]})"
            s = poly_str(coeff)
            if s == "1":
                chunks.append(sym)
            elif len(coeff.terms) == 1:
                chunks.append(f"{s} {sym}")
            else:
                chunks.append(f"({s}) {sym}")
        return " + ".join(chunks)

    def to_json(self) -> dict:
        return {
            self.pres.names[i]: poly_str(c)
            for i, c in sorted(self.parts.items())
        }

    def __repr__(self):
        return f"KahlerElement({self.display()})"


def _d_monomial(pres: Presentation, mono) -> KahlerElement:
    # Peel the first nonzero slot and recurse with the Leibniz rule
    # d(head rest) = head d(rest) + (-1)^{|head||rest|} rest d(head),
    # with d(g^e) = e g^{e-1} d(g) (valid for laurent exponents too).
    first = None
    for i, e in enumerate(mono):
        if e:
            first = i
            break
    if first is None:
        return KahlerElement.zero(pres)
    e = mono[first]
    rest = list(mono)
    rest[first] = 0
    rest = tuple(rest)
    head_mono = tuple(e if i == first else 0 for i in range(pres.ngens))

    head_elem = Element.monomial(pres, head_mono)
    out = head_elem * _d_monomial(pres, rest)

    head_deg = e * pres.degrees[first]
    rest_deg = mono_degree(pres, rest)
    sign = -1 if (head_deg % 2) and (rest_deg % 2) else 1
    lowered = tuple(e - 1 if i == first else 0 for i in range(pres.ngens))
    coeff = Element.monomial(pres, rest) * Element.monomial(pres, lowered, sign * e)
    out = out + KahlerElement(pres, {first: coeff})
    return out


def kahler_d(x: Element) -> KahlerElement:
    """Universal derivation A -> Omega, extended Q-linearly."""
    out = KahlerElement.zero(x.pres)
    for mono, coeff in sorted(x.terms.items()):
        out = out + coeff * _d_monomial(x.pres, mono)
    return out


# ---------------------------------------------------------------------------
# Localization.


def localize(pres: Presentation, name: str) -> Presentation:
    """Adjoin an inverse to an even generator (set its laurent flag)."""
    i = pres.index(name)
    if pres.is_odd(i):
        raise ValueError(f"cannot localize at odd generator {name!r}")
    laurent = list(pres.laurent)
    laurent[i] = True
    return Presentation(pres.names, pres.degrees, tuple(laurent))


# ---------------------------------------------------------------------------
# Right Ore condition, decided on a windowed multiplication table.


class MalformedTableError(ValueError):
    pass


@dataclass
class MulTable:
    """Finite multiplication table on a graded basis within a degree window.

    products[(x, y)] is a {label: Fraction} combination (the empty dict is
    an honest zero), or None when the true product leaves the window.  A
    missing pair is malformed: the table must say when a product escapes.
    complete_degrees records whether every in-window degree piece of the
    underlying ring is fully present; "violated" verdicts are only sound
    on complete tables.
    """

    labels: tuple
    degree: dict
    products: dict
    one: dict | None = None
    complete_degrees: bool = True
    name: str = "table"

    def validate(self):
        for x in self.labels:
            if x not in self.degree:
                raise MalformedTableError(f"no degree recorded for {x!r}")
            for y in self.labels:
                if (x, y) not in self.products:
                    raise MalformedTableError(
                        f"product ({x!r}, {y!r}) missing from table"
                    )
        for pair, combo in self.products.items():
            if combo is None:
                continue
            for label in combo:
                if label not in self.degree:
                    raise MalformedTableError(
                        f"product {pair!r} mentions unknown label {label!r}"
                    )

    def combo_mul(self, u: dict, v: dict):
        """Bilinear product of label combinations; None if any part escapes."""
        acc = {}
        for x, cx in u.items():
            for y, cy in v.items():
                hit = self.products[(x, y)]
                if hit is None:
                    return None
                for label, c in hit.items():
                    acc[label] = acc.get(label, Fraction(0)) + cx * cy * c
        return {label: c for label, c in acc.items() if c}


def combo_str(combo) -> str:
    if combo is None:
        return "<out of window>"
    if not combo:
        return "0"
    parts = []
    for label in sorted(combo):
        c = combo[label]
        if c == 1:
            term = label
        elif c == -1:
            term = f"-{label}"
        else:
            term = f"{c} {label}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)


def table_from_presentation(
    pres: Presentation, window, caps=None, name=None
) -> MulTable:
    """Multiplication table of all monomials whose degree lies in window."""
    lo, hi = window
    if lo > hi:
        raise ValueError("empty degree window")
    monos = []
    for t in range(lo, hi + 1):
        monos.extend(monomial_basis(pres, t, caps))
    labels = tuple(mono_str(pres, m) for m in monos)
    if len(set(labels)) != len(labels):
        raise ValueError("label collision in table construction")
    by_label = dict(zip(labels, monos))
    degree = {l: mono_degree(pres, m) for l, m in by_label.items()}
    label_of = {m: l for l, m in by_label.items()}
    products = {}
    complete = caps is None
    for lx, mx in by_label.items():
        for ly, my in by_label.items():
            hit = koszul_mul(pres, mx, my)
            if hit is None:
                products[(lx, ly)] = {}
                continue
            sign, mono = hit
            d = mono_degree(pres, mono)
            if not lo <= d <= hi:
                products[(lx, ly)] = None
            elif mono in label_of:
                products[(lx, ly)] = {label_of[mono]: Fraction(sign)}
            else:
                # the product degree is in window but user caps clipped the
                # basis: report an escape and remember the incompleteness
                products[(lx, ly)] = None
                complete = False
    one = None
    if lo <= 0 <= hi:
        unit = mono_str(pres, mono_one(pres))
        if unit in by_label:
            one = {unit: Fraction(1)}
    return MulTable(
        labels=labels,
        degree=degree,
        products=products,
        one=one,
        complete_degrees=complete,
        name=name or "presentation table",
    )


def matrix_units_table() -> MulTable:
    """The 2x2 rational matrix units e11, e12, e21, e22 (all in degree 0)."""
    labels = ("e11", "e12", "e21", "e22")
    products = {}
    for i, j in itertools.product((1, 2), repeat=2):
        for k, l in itertools.product((1, 2), repeat=2):
            x, y = f"e{i}{j}", f"e{k}{l}"
            products[(x, y)] = {f"e{i}{l}": Fraction(1)} if j == k else {}
    return MulTable(
        labels=labels,
        degree={l: 0 for l in labels},
        products=products,
        one={"e11": Fraction(1), "e22": Fraction(1)},
        complete_degrees=True,
        name="2x2 matrix units",
    )


@dataclass
class OreReport:
    verdict: str  # satisfied | violated | inconclusive | degenerate
    condition: int | None = None  # which Ore condition a violation hits
    witness: tuple | None = None  # (x, s) label/combo strings
    commutative: bool = False
    truncated: bool = False
    closure: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "commutative": self.commutative,
               "truncated": self.truncated, "s_closure": list(self.closure)}
        if self.witness is not None:
            out["condition"] = self.condition
            out["witness"] = {"x": self.witness[0], "s": self.witness[1]}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _canon(combo):
    return tuple(sorted(combo.items()))


def _combo_degree(table, combo):
    degs = {table.degree[l] for l in combo}
    if len(degs) > 1:
        raise ValueError(f"inhomogeneous element {combo_str(combo)!r}")
    return degs.pop() if degs else None


def ore_check(table: MulTable, s_elements, max_closure: int = 64) -> OreReport:
    """Windowed semi-decision for the right Ore condition.

    Condition (1): for all x in the ring and s in S there exist t in S and
    y with x t = s y.  Condition (2): s x = 0 implies x t = 0 for some t in
    S.  S is the multiplicative closure of the given homogeneous elements,
    truncated to the window.  Witness searches are complete only when the
    table is degreewise complete, so "violated" is reported only then; a
    ring whose reported products all commute satisfies both conditions with
    t = s, y = x, which yields "satisfied".  Everything else is honestly
    "inconclusive".  S reaching 0 makes the localization the zero ring,
    reported as "degenerate".
    """
    table.validate()
    gens = []
    for s in s_elements:
        if isinstance(s, str):
            if s not in table.degree:
                raise ValueError(f"unknown table label {s!r}")
            combo = {s: Fraction(1)}
        else:
            combo = {l: Fraction(c) for l, c in dict(s).items() if Fraction(c)}
            for l in combo:
                if l not in table.degree:
                    raise ValueError(f"unknown table label {l!r}")
        _combo_degree(table, combo)  # homogeneity check
        gens.append(combo)
    if not gens:
        raise ValueError("S needs at least one generator")

    notes = []
    truncated = False

    # Multiplicative closure of S within the window (right products by the
    # generators reach every word).
    closure = []
    seen = set()
    if table.one is not None:
        closure.append(dict(table.one))
        seen.add(_canon(table.one))
    queue = []
    for g in gens:
        key = _canon(g)
        if key not in seen:
            seen.add(key)
            closure.append(dict(g))
            queue.append(dict(g))
    degenerate = any(not c for c in closure if c is not None) or any(
        not g for g in gens
    )
    while queue and not degenerate:
        u = queue.pop(0)
        for g in gens:
            prod = table.combo_mul(u, g)
            if prod is None:
                truncated = True
                continue
            key = _canon(prod)
            if key in seen:
                continue
            if len(closure) >= max_closure:
                truncated = True
                notes.append("closure truncated at max_closure")
                queue = []
                break
            seen.add(key)
            closure.append(prod)
            queue.append(prod)
            if not prod:
                degenerate = True
                break
    closure_strs = [combo_str(c) for c in closure]
    if degenerate or any(not c for c in closure):
        return OreReport(
            verdict="degenerate",
            commutative=False,
            truncated=truncated,
            closure=closure_strs,
            notes=notes + ["S contains 0: the localization is the zero ring"],
        )

    # Literal commutativity of every reported product pair.
    commutative = True
    for x in table.labels:
        for y in table.labels:
            pxy, pyx = table.products[(x, y)], table.products[(y, x)]
            if pxy is None or pyx is None:
                continue
            if pxy != pyx:
                commutative = False
                break
        if not commutative:
            break

    label_index = {l: i for i, l in enumerate(table.labels)}

    def vec(combo):
        v = [Fraction(0)] * len(table.labels)
        for l, c in combo.items():
            v[label_index[l]] = c
        return v

    violated = None
    any_unverifiable = not table.complete_degrees

    for s in closure:
        # span of s * (window basis), for the right-hand side s y
        cols = []
        unverifiable_y = False
        for b in table.labels:
            prod = table.combo_mul(s, {b: Fraction(1)})
            if prod is None:
                unverifiable_y = True
                continue
            cols.append(vec(prod))
        span = RationalMatrix.from_columns(cols, rows=len(table.labels))
        for x in table.labels:
            found = False
            unverifiable_t = False
            for t in closure:
                xt = table.combo_mul({x: Fraction(1)}, t)
                if xt is None:
                    unverifiable_t = True
                    continue
                if in_span(span, vec(xt)).in_span:
                    found = True
                    break
            if found:
                continue
            if unverifiable_t or unverifiable_y or not table.complete_degrees:
                any_unverifiable = True
            else:
                violated = (1, (x, combo_str(s)))
                break
        if violated:
            break

    if not violated:
        # Condition (2): reported left-annihilation must have a right witness.
        for s in closure:
            for x in table.labels:
                sx = table.combo_mul(s, {x: Fraction(1)})
                if sx != {}:
                    continue
                found = False
                unverifiable_t = False
                for t in closure:
                    xt = table.combo_mul({x: Fraction(1)}, t)
                    if xt is None:
                        unverifiable_t = True
                    elif not xt:
                        found = True
                        break
                if found:
                    continue
                if unverifiable_t or not table.complete_degrees:
                    any_unverifiable = True
                else:
                    violated = (2, (x, combo_str(s)))
                    break
            if violated:
                break

    if violated:
        condition, witness = violated
        return OreReport(
            verdict="violated",
            condition=condition,
            witness=witness,
            commutative=commutative,
            truncated=truncated,
            closure=closure_strs,
            notes=notes,
        )
    if commutative:
        return OreReport(
            verdict="satisfied",
            commutative=True,
            truncated=truncated,
            closure=closure_strs,
            notes=notes + ["commutative ring: t = s, y = x witnesses both conditions"],
        )
    return OreReport(
        verdict="inconclusive",
        commutative=False,
        truncated=truncated or any_unverifiable,
        closure=closure_strs,
        notes=notes + ["window search found no violation and no structural proof"],
    )
