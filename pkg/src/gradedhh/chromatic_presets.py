"""Preset presentations for the rational homotopy rings at a prime p.

For a prime p and height n these build, as free graded-commutative
Q-algebras:

  bp_q(p, n)   Q[v_1, ..., v_n]            with |v_i| = 2 p^i - 2
  en_q(p, n)   Q[v_1, ..., v_n][v_n^{-1}]  (v_n inverted)
  a_q(p, n)    Q[v_1, ..., v_{n-1}] (x) Lambda(eps), |eps| = 1 - 2 p^n

a_q(p, n) is the homotopy of the endomorphism algebra of the v_n cone: the
height drops by one and an exterior class eps appears one degree above the
(-2 p^n + 2)-fold desuspension marker, i.e. in degree 1 - 2 p^n.

hh_a_predicted(p, n) is the expected Hochschild homology ring of a_q(p, n):
each polynomial v_i acquires an exterior companion sigma_i in degree
2 p^i - 1, and eps acquires a polynomial companion delta in degree
2 - 2 p^n (parities flip, degrees rise by one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded_algebra import Presentation, make_presentation


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ChromaticParams:
    p: int
    n: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")


def v_degree(p: int, i: int) -> int:
    return 2 * p**i - 2


def eps_degree(p: int, n: int) -> int:
    return 1 - 2 * p**n


def bp_q(params: ChromaticParams) -> Presentation:
    return make_presentation(
        (f"v{i}", v_degree(params.p, i)) for i in range(1, params.n + 1)
    )


def en_q(params: ChromaticParams) -> Presentation:
    if params.n < 1:
        raise ValueError("en_q needs n >= 1: there is no v_0 to invert")
    gens = [(f"v{i}", v_degree(params.p, i)) for i in range(1, params.n + 1)]
    gens[-1] = (gens[-1][0], gens[-1][1], True)
    return make_presentation(gens)


def a_q(params: ChromaticParams) -> Presentation:
    if params.n < 1:
        raise ValueError("a_q needs n >= 1: it models the cone on v_n")
    gens = [(f"v{i}", v_degree(params.p, i)) for i in range(1, params.n)]
    gens.append(("eps", eps_degree(params.p, params.n)))
    return make_presentation(gens)


def hh_a_predicted(params: ChromaticParams) -> Presentation:
    if params.n < 1:
        raise ValueError("hh_a_predicted needs n >= 1")
    p, n = params.p, params.n
    gens = [(f"v{i}", v_degree(p, i)) for i in range(1, n)]
    gens += [(f"sigma{i}", v_degree(p, i) + 1) for i in range(1, n)]
    gens.append(("delta", eps_degree(p, n) + 1))
    gens.append(("eps", eps_degree(p, n)))
    return make_presentation(gens)


_FAMILIES = {
    "bp": bp_q,
    "en": en_q,
    "a": a_q,
    "hh_a": hh_a_predicted,
}


def parse_preset(address: str) -> Presentation:
    """Resolve a "family:p:n" preset address, e.g. "bp:2:2" or "a:3:1"."""
    parts = address.split(":")
    if len(parts) != 3:
        raise ValueError(f"preset address must be family:p:n, got {address!r}")
    family, p_str, n_str = parts
    if family not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown preset family {family!r} (known: {known})")
    try:
        p, n = int(p_str), int(n_str)
    except ValueError:
        raise ValueError(f"preset address must be family:p:n, got {address!r}") from None
    return _FAMILIES[family](ChromaticParams(p, n))


def preset_families():
    return sorted(_FAMILIES)
