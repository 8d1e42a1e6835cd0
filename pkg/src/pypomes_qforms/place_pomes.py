"""
Places of the rational function field *GF(2^k)(t)*: local pole orders, residues of differentials,
and the local symbols deciding which elements are norms from an Artin-Schreier extension.

A finite place is a monic irreducible polynomial of *GF(2^k)[t]*, the place at infinity is the
string *"infinity"*. Polynomials are sympy ring elements of *poly_ring(gf, 1)*.
"""
from math import gcd
from typing import Final

from sympy.polys.rings import PolyElement, PolyRing

from .field_pomes import FieldElement, FieldTower, mp_element
from .gf_pomes import GaloisField, gf_field, gfpoly_is_irreducible
from .poly_pomes import mp_drop, mp_lift

INFINITY: Final[str] = "infinity"

Place = PolyElement | str


def has_places(tower: FieldTower) -> bool:
    """
    Tell whether the places of *tower* are handled here: *tower* must be *GF(2^k)(t)*.
    """
    return tower is tower.base and tower.nvars == 1 and tower.p == 2


def rat_split(x: FieldElement) -> tuple[PolyElement, PolyElement]:
    """
    Split *x* into its numerator and its monic denominator.
    """
    gf: GaloisField = x.tower.gf
    return mp_lift(gf, x.raw[0], 1), mp_lift(gf, x.raw[1], 1)


def place_factors(gf: GaloisField,
                  f: PolyElement) -> list[PolyElement] | None:
    """
    Find the places dividing *f*, as its monic irreducible factors.

    Over *GF(2)* the polynomial is factored directly. Over *GF(2^k)* only polynomials with coefficients in
    the prime field are factored, and only when no factor splits further: a prime-field factor of degree *d*
    stays irreducible over *GF(2^k)* exactly when *gcd(d, k) = 1*.

    :param gf: the constant field
    :param f: the polynomial
    :return: the distinct places, or *None* when they cannot be found
    """
    if not f or f.is_ground:
        return []
    if gf.k == 1:
        return [g.monic() for g, _ in f.factor_list()[1]]

    f = f.monic()
    if any(gf.from_sympy(c) >= gf.p for c in f.values()):
        return None
    prime: GaloisField = gf_field(gf.p, 1)
    factors: list[tuple[PolyElement, int]] = mp_lift(prime, mp_drop(gf, f, 1), 1).factor_list()[1]
    if any(gcd(g.degree(), gf.k) != 1 for g, _ in factors):
        return None
    return [mp_lift(gf, mp_drop(prime, g.monic(), 1), 1) for g, _ in factors]


def is_place(gf: GaloisField,
             place: Place) -> bool:
    if isinstance(place, str):
        return True
    if not isinstance(place, PolyElement) or place.degree() < 1 or gf.from_sympy(place.LC) != 1:
        return False
    return gfpoly_is_irreducible(gf, [gf.from_sympy(c) for c in reversed(place.to_dense())])


def same_place(v: Place,
               w: Place) -> bool:
    if isinstance(v, str) or isinstance(w, str):
        return isinstance(v, str) and isinstance(w, str)
    return v == w


def place_label(level: FieldTower,
                place: Place) -> FieldElement | str:
    """
    The place as certificate data: *"infinity"*, or its polynomial as an element of *level*.
    """
    if isinstance(place, str):
        return INFINITY
    return mp_element(level, mp_drop(level.gf, place, 1))


def place_from_label(level: FieldTower,
                     label: FieldElement | str) -> Place | None:
    """
    Read back a place from certificate data, or *None* if *label* is not a place of *level*.
    """
    if isinstance(label, str):
        return INFINITY
    if not isinstance(label, FieldElement) or label.tower is not level or len(label.raw[1]) != 1:
        return None
    num, den = rat_split(label)
    if not den.is_one:
        return None
    return num if is_place(level.gf, num) else None


def multiplicity(f: PolyElement,
                 place: PolyElement) -> int:
    # initialize the return variable
    result: int = 0

    while f and not f % place:
        f = f.exquo(place)
        result += 1

    return result


def _sqrt_mod(gf: GaloisField,
              a: PolyElement,
              place: PolyElement) -> PolyElement:
    # a^(Q/2) modulo the place, Q the size of its residue field
    s: PolyElement = a % place
    for _ in range(gf.k * place.degree() - 1):
        s = s * s % place
    return s


def _inverse_mod(u: PolyElement,
                 m: PolyElement) -> PolyElement:
    s, _, h = u.gcdex(m)
    return s.quo_ground(h.LC)


def _residue_trace(gf: GaloisField,
                   num: PolyElement,
                   den: PolyElement,
                   place: Place) -> int:
    # absolute trace of the residue of (num/den)·dt at the place
    ring: PolyRing = num.ring
    coef: int = 0
    if isinstance(place, str):
        r: PolyElement = num % den
        if r and r.degree() == den.degree() - 1:
            coef = gf.div(gf.from_sympy(r.LC), gf.from_sympy(den.LC))
    else:
        e: int = multiplicity(den, place)
        if e == 0:
            return 0
        pe: PolyElement = place ** e
        cofactor: PolyElement = den.exquo(pe)
        principal: PolyElement = num * _inverse_mod(cofactor, pe) % pe
        top: PolyElement = principal // place ** (e - 1)
        coef = gf.from_sympy(dict(top).get((place.degree() - 1,), ring.domain.zero))
    return gf.trace(coef)


def local_symbol(f: FieldElement,
                 g: FieldElement,
                 place: Place) -> int:
    """
    Compute the local symbol of *(f, g)* at *place*: the absolute trace of the residue of *f·dg/g*.

    It vanishes exactly when *g* is a local norm from the extension given by *w² + w = f*.

    :param f: the Artin-Schreier parameter
    :param g: a nonzero element
    :param place: the place
    :return: 0 or 1
    """
    gf: GaloisField = f.tower.gf
    fn, fd = rat_split(f)
    gn, gd = rat_split(g)
    x: PolyElement = fn.ring.gens[0]
    num: PolyElement = fn * (gn.diff(x) * gd + gn * gd.diff(x))
    den: PolyElement = fd * gn * gd
    return _residue_trace(gf, num, den, place)


def symbol_places(f: FieldElement,
                  g: FieldElement) -> list[Place] | None:
    """
    List the places where the local symbol of *(f, g)* may not vanish: infinity, the poles of *f*,
    and the zeros and poles of *g*.

    :return: the places, or *None* when they cannot be found
    """
    _, fd = rat_split(f)
    gn, gd = rat_split(g)
    finite: list[PolyElement] | None = place_factors(f.tower.gf, fd * gn * gd)
    return None if finite is None else [INFINITY, *finite]


def norm_symbols(f: FieldElement,
                 g: FieldElement) -> list[tuple[Place, int]] | None:
    """
    Compute the local symbols of *(f, g)* wherever they may not vanish.

    The element *g* is a norm from the extension given by *w² + w = f* exactly when all of them vanish.

    :param f: the Artin-Schreier parameter
    :param g: a nonzero element
    :return: the pairs *(place, symbol)*, or *None* when the places cannot be found
    """
    places: list[Place] | None = symbol_places(f, g)
    return None if places is None else [(v, local_symbol(f, g, v)) for v in places]


def wp_pole(c: FieldElement) -> tuple[Place, int] | None:
    """
    Look for a place where *c* keeps a pole of odd order modulo *℘(K) = {w² + w}*.

    Poles of even order are lowered by subtracting *s² + s*, with *s* a square root of the leading
    coefficient, at infinity first, then at the finite poles. A pole of odd order that remains proves
    that *w² + w = c* has no solution.

    :param c: an element of *GF(2^k)(t)*
    :return: the place and the odd order, or *None* if no such place is found
    """
    gf: GaloisField = c.tower.gf
    num, den = rat_split(c)
    ring: PolyRing = num.ring

    while num and num.degree() > den.degree():
        e: int = num.degree() - den.degree()
        if e % 2:
            return INFINITY, e
        lead: int = gf.frob_inv(gf.div(gf.from_sympy(num.LC), gf.from_sympy(den.LC)))
        s: PolyElement = ring.from_dict({(e // 2,): gf.to_sympy(lead)})
        num = num + (s * s + s) * den

    places: list[PolyElement] | None = place_factors(gf, den)
    for place in places or []:
        while num:
            e = multiplicity(den, place)
            if e % 2:
                return place, e
            if e == 0:
                break
            pm: PolyElement = place ** (e // 2)
            lead_mod: PolyElement = num * _inverse_mod(den.exquo(pm * pm), place) % place
            s = _sqrt_mod(gf, lead_mod, place)
            num = num * pm * pm + (s * s + s * pm) * den
            if not num:
                return None
            den = den * pm * pm
            _, num, den = num.cofactors(den)
            num = num.quo_ground(den.LC)
            den = den.monic()
    return None
