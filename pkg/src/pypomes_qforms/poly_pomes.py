"""
Sparse multivariate polynomials and rational functions over a Galois field.

A polynomial in computation is a *dict* mapping exponent tuples to nonzero field elements.
Stored values are frozen: tuples of *(exponents, coefficient)* pairs in graded-lexicographic
descending order, which makes equality and hashing canonical.

The arithmetic runs in sympy's sparse polynomial rings over the field's sympy domain.
"""
from functools import lru_cache
from typing import Final

from sympy import symbols
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from .gf_pomes import GaloisField

Exps = tuple[int, ...]
MPoly = dict[Exps, int]
FrozenPoly = tuple[tuple[Exps, int], ...]
# a rational function: (numerator, denominator), coprime, denominator monic
FrozenRat = tuple[FrozenPoly, FrozenPoly]

_EMPTY: Final[FrozenPoly] = ()


def grlex_key(e: Exps) -> tuple[int, Exps]:
    return sum(e), e


@lru_cache(maxsize=64)
def poly_ring(gf: GaloisField,
              nvars: int) -> PolyRing:
    """
    Obtain the sympy ring *gf[x0, ..., x(n-1)]*, with one variable when *nvars* is 0.
    """
    return PolyRing(symbols(f"x:{max(nvars, 1)}"), gf.domain, grlex)


def mp_lift(gf: GaloisField,
            a: MPoly | FrozenPoly,
            nvars: int) -> PolyElement:
    items = a.items() if isinstance(a, dict) else a
    return poly_ring(gf, nvars).from_dict({(e if nvars else (0,)): gf.to_sympy(c) for e, c in items})


def mp_drop(gf: GaloisField,
            f: PolyElement,
            nvars: int) -> MPoly:
    return {(m if nvars else ()): gf.from_sympy(c) for m, c in f.items()}


def mp_freeze(a: MPoly) -> FrozenPoly:
    return tuple(sorted(a.items(), key=lambda t: grlex_key(t[0]), reverse=True))


def mp_one(nvars: int) -> MPoly:
    return {(0,) * nvars: 1}


def mp_is_one(a: MPoly) -> bool:
    return len(a) == 1 and all(v == 0 for v in next(iter(a))) and next(iter(a.values())) == 1


def mp_is_const(a: MPoly) -> bool:
    return not a or (len(a) == 1 and all(v == 0 for v in next(iter(a))))


def mp_deg(a: MPoly) -> int:
    return max((sum(e) for e in a), default=-1)


def _nvars(*polys: MPoly) -> int:
    return next((len(e) for a in polys for e in a), 0)


def mp_add(gf: GaloisField,
           a: MPoly,
           b: MPoly) -> MPoly:
    n: int = _nvars(a, b)
    return mp_drop(gf, mp_lift(gf, a, n) + mp_lift(gf, b, n), n)


def mp_mul(gf: GaloisField,
           a: MPoly,
           b: MPoly) -> MPoly:
    n: int = _nvars(a, b)
    return mp_drop(gf, mp_lift(gf, a, n) * mp_lift(gf, b, n), n)


def mp_pow(gf: GaloisField,
           a: MPoly,
           n: int,
           nvars: int) -> MPoly:
    return mp_drop(gf, mp_lift(gf, a, nvars) ** n, nvars)


def mp_divexact(gf: GaloisField,
                a: MPoly,
                b: MPoly) -> MPoly:
    """
    Divide *a* by *b*, which must divide it exactly.

    :raises ValueError: if the division is not exact
    """
    n: int = _nvars(a, b)
    try:
        return mp_drop(gf, mp_lift(gf, a, n).exquo(mp_lift(gf, b, n)), n)
    except ExactQuotientFailed as e:
        raise ValueError("inexact multivariate division") from e


def mp_gcd(gf: GaloisField,
           a: MPoly,
           b: MPoly) -> MPoly:
    """
    Compute the monic greatest common divisor of *a* and *b*.
    """
    n: int = _nvars(a, b)
    if not a or not b:
        return mp_drop(gf, mp_lift(gf, a or b, n).monic(), n)
    if mp_is_const(a) or mp_is_const(b):
        return mp_one(n)
    return mp_drop(gf, mp_lift(gf, a, n).gcd(mp_lift(gf, b, n)).monic(), n)


def mp_frob_root(gf: GaloisField,
                 a: MPoly) -> MPoly | None:
    """
    Return the polynomial *b* with *b^p = a*, or *None* if there is none.
    """
    p: int = gf.p
    if any(x % p for e in a for x in e):
        return None
    return {tuple(x // p for x in e): gf.frob_inv(c) for e, c in a.items()}


def mp_to_str(gf: GaloisField,
              a: FrozenPoly | MPoly,
              names: tuple[str, ...]) -> str:
    items = a.items() if isinstance(a, dict) else a
    if isinstance(a, dict):
        items = sorted(items, key=lambda t: grlex_key(t[0]), reverse=True)
    terms: list[str] = []
    for e, c in items:
        mono: str = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
        cs: str = gf.to_str(c)
        if not mono:
            terms.append(cs)
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
    return " + ".join(terms) or "0"


# rational functions, frozen
def _rat_freeze(gf: GaloisField,
                num: PolyElement,
                den: PolyElement,
                nvars: int) -> FrozenRat:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return _EMPTY, mp_freeze(mp_one(nvars))
    _, num, den = num.cofactors(den)
    lc = den.LC
    return mp_freeze(mp_drop(gf, num.quo_ground(lc), nvars)), mp_freeze(mp_drop(gf, den.monic(), nvars))


def rat_normalize(gf: GaloisField,
                  num: MPoly,
                  den: MPoly,
                  nvars: int) -> FrozenRat:
    return _rat_freeze(gf, mp_lift(gf, num, nvars), mp_lift(gf, den, nvars), nvars)


def rat_add(gf: GaloisField,
            x: FrozenRat,
            y: FrozenRat,
            nvars: int) -> FrozenRat:
    a, b = mp_lift(gf, x[0], nvars), mp_lift(gf, x[1], nvars)
    if x[1] == y[1]:
        return _rat_freeze(gf, a + mp_lift(gf, y[0], nvars), b, nvars)
    c, d = mp_lift(gf, y[0], nvars), mp_lift(gf, y[1], nvars)
    return _rat_freeze(gf, a * d + c * b, b * d, nvars)


def rat_mul(gf: GaloisField,
            x: FrozenRat,
            y: FrozenRat,
            nvars: int) -> FrozenRat:
    if not x[0] or not y[0]:
        return _EMPTY, mp_freeze(mp_one(nvars))
    return _rat_freeze(gf,
                       mp_lift(gf, x[0], nvars) * mp_lift(gf, y[0], nvars),
                       mp_lift(gf, x[1], nvars) * mp_lift(gf, y[1], nvars),
                       nvars)


def rat_inv(gf: GaloisField,
            x: FrozenRat,
            nvars: int) -> FrozenRat:
    if not x[0]:
        raise ZeroDivisionError("inverse of zero")
    return _rat_freeze(gf, mp_lift(gf, x[1], nvars), mp_lift(gf, x[0], nvars), nvars)


def rat_neg(gf: GaloisField,
            x: FrozenRat) -> FrozenRat:
    if gf.p == 2:
        return x
    nvars: int = _nvars(dict(x[1]))
    return mp_freeze(mp_drop(gf, -mp_lift(gf, x[0], nvars), nvars)), x[1]
