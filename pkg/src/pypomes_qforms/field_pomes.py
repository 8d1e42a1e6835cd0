"""
Exact arithmetic in towers *F = GF(p^k)(t_1..t_n)[x_1]/(f_1)[x_2]/(f_2)...* of simple extensions.

Levels are stored nested: the bottom level holds normalized fractions of multivariate polynomials,
and every step holds coordinate tuples on the power basis *1, x, ..., x^(d-1)* over the level below.
A step level also tracks its p-basis, so that square (p-th power) coordinates are always available.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache
from logging import Logger
from typing import Any

from .config_pomes import QformsParam, qforms_get
from .error_pomes import (
    DegreeCapExceeded, DivisionByZero, IrreducibilityUnknown, NameInUse,
    NotSimpleStep, TowerMismatch, UnsupportedCharacteristic, UnsupportedInseparableStep
)
from .gf_pomes import GaloisField, gf_embedding, gf_field, gfpoly_is_irreducible
from .matrix_pomes import Matrix, mat_charpoly, mat_inverse, mat_solve, mat_vec
from .poly_pomes import (
    FrozenRat, MPoly, mp_divexact, mp_freeze, mp_gcd, mp_is_one, mp_mul,
    mp_one, mp_pow, mp_to_str, rat_add, rat_inv, rat_mul, rat_neg, rat_normalize
)

# the raw value of an element: a frozen fraction at the bottom level, nested tuples above it
Raw = Any


class StepKind(StrEnum):
    """
    Kinds of simple extension steps.
    """
    SEPARABLE = "separable"
    INSEPARABLE = "purely-inseparable"


class FieldTower:
    """
    The bottom level *GF(p^k)(t_1..t_n)* of a tower, and the interface shared by all levels.
    """

    def __init__(self,
                 p: int,
                 k: int,
                 names: tuple[str, ...]) -> None:
        self.gf: GaloisField = gf_field(p, k)
        self.p: int = p
        self.names: tuple[str, ...] = tuple(names)
        self.nvars: int = len(self.names)
        self.parent: FieldTower | None = None
        self.base: FieldTower = self
        self.degree: int = 1
        self.depth: int = 0
        self.var: str | None = None
        self.kind: StepKind | None = None
        self.key: str = f"GF({self.gf.q})" + (f"({','.join(self.names)})" if self.names else "")

        self._one_poly: tuple = (((0,) * self.nvars, 1),)
        self.raw_zero: Raw = ((), self._one_poly)
        self.raw_one: Raw = (self._one_poly, self._one_poly)
        self.pbasis_raw: tuple[Raw, ...] = tuple(
            (((tuple(1 if j == i else 0 for j in range(self.nvars)), 1),), self._one_poly)
            for i in range(self.nvars))
        self.pbasis_names: tuple[str, ...] = self.names

    def __repr__(self) -> str:
        return self.key

    # element factories
    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self.raw_zero)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self.raw_one)

    def element(self,
                raw: Raw) -> FieldElement:
        return FieldElement(self, raw)

    def from_int(self,
                 n: int) -> FieldElement:
        return FieldElement(self, self.raw_from_int(n))

    def coerce(self,
               x: FieldElement | int) -> FieldElement:
        """
        Lift *x*, an integer or an element of this level or of a level below, into this level.

        :raises TowerMismatch: if *x* belongs to an unrelated tower
        """
        if isinstance(x, int):
            return self.from_int(x)
        if x.tower is self:
            return x
        if self.has_level(x.tower):
            return FieldElement(self, self.raw_lift(x.raw, x.tower))
        raise TowerMismatch(x.tower.key, self.key)

    def gens(self) -> dict[str, FieldElement]:
        """
        Obtain the named generators of this level and of the levels below, lifted into this level.

        The generator of *GF(p^k)*, for *k > 1*, is named *z*.
        """
        result: dict[str, FieldElement] = {}
        base: FieldTower = self.base
        if base.gf.k > 1:
            z: Raw = (((((0,) * base.nvars), base.p),), base._one_poly)
            result["z"] = self.coerce(FieldElement(base, z))
        for name, raw in zip(base.names, base.pbasis_raw):
            result[name] = self.coerce(FieldElement(base, raw))
        for level in self.levels()[1:]:
            result[level.var] = self.coerce(FieldElement(level, level.gen_raw))
        return result

    def random_element(self,
                       rng: random.Random,
                       degree: int = 2,
                       den_degree: int = 0,
                       density: float = 0.5,
                       nonzero: bool = False) -> FieldElement:
        """
        Draw a pseudo-random element, deterministic for a given state of *rng*.

        :param rng: the random source
        :param degree: bound on the total degree of numerators at the bottom level
        :param den_degree: bound on the total degree of denominators at the bottom level
        :param density: probability of each monomial being present
        :param nonzero: whether to redraw until a nonzero element comes out
        :return: the element
        """
        while True:
            result: FieldElement = FieldElement(self, self.random_raw(rng=rng,
                                                                      degree=degree,
                                                                      den_degree=den_degree,
                                                                      density=density))
            if result or not nonzero:
                return result

    # level relations
    def levels(self) -> list[FieldTower]:
        result: list[FieldTower] = []
        level: FieldTower | None = self
        while level is not None:
            result.append(level)
            level = level.parent
        result.reverse()
        return result

    def has_level(self,
                  level: FieldTower) -> bool:
        cur: FieldTower | None = self
        while cur is not None:
            if cur is level:
                return True
            cur = cur.parent
        return False

    def degree_over(self,
                    level: FieldTower) -> int:
        """
        Return *[self : level]*.

        :raises TowerMismatch: if *level* is not a level of this tower
        """
        result: int = 1
        cur: FieldTower | None = self
        while cur is not level:
            if cur is None:
                raise TowerMismatch(level.key, self.key)
            result *= cur.degree
            cur = cur.parent
        return result

    def inseparable_degree_over(self,
                                level: FieldTower) -> int:
        result: int = 1
        cur: FieldTower | None = self
        while cur is not level:
            if cur is None:
                raise TowerMismatch(level.key, self.key)
            if cur.kind == StepKind.INSEPARABLE:
                result *= cur.degree
            cur = cur.parent
        return result

    def steps(self) -> list[TowerStep]:
        return [level for level in self.levels()[1:]]

    # coordinates over lower levels
    def coords_over(self,
                    x: FieldElement,
                    level: FieldTower) -> list[FieldElement]:
        """
        Expand *x* on the basis of this level over *level*.

        The basis element *x_s^i·b_r* of a step over its parent basis *b* sits at index *i·[parent:level] + r*.
        """
        raw: Raw = self.coerce(x).raw
        return [FieldElement(level, r) for r in self.raw_coords_over(raw, level)]

    def from_coords_over(self,
                         coords: list[FieldElement],
                         level: FieldTower) -> FieldElement:
        return FieldElement(self, self.raw_from_coords_over([level.coerce(c).raw for c in coords], level))

    def mult_matrix(self,
                    x: FieldElement,
                    level: FieldTower) -> Matrix:
        """
        Build the matrix of multiplication by *x* on this level, over *level*.

        The matrix is assembled in blocks: each entry of the matrix over the parent level
        is replaced by its own multiplication matrix over *level*.
        """
        raw: Raw = self.coerce(x).raw
        if not self.has_level(level):
            raise TowerMismatch(level.key, self.key)
        return [[FieldElement(level, r) for r in row] for row in self.raw_mult_matrix(raw, level)]

    def descend(self,
                x: FieldElement,
                level: FieldTower) -> FieldElement | None:
        """
        Return *x* as an element of the lower *level*, or *None* if it does not lie there.
        """
        raw: Raw | None = self.raw_descend(self.coerce(x).raw, level)
        return None if raw is None else FieldElement(level, raw)

    def pbasis(self) -> list[FieldElement]:
        return [FieldElement(self, b) for b in self.pbasis_raw]

    def pbasis_monomial(self,
                        index: int) -> FieldElement:
        """
        Return the p-basis monomial *b^e*, with the exponents *e* as the base-p digits of *index*.
        """
        result: FieldElement = self.one
        for b in self.pbasis_raw:
            e: int = index % self.p
            index //= self.p
            if e:
                result = result * FieldElement(self, b) ** e
        return result

    # raw arithmetic at the bottom level
    def raw_is_zero(self,
                    x: Raw) -> bool:
        return not x[0]

    def raw_add(self,
                x: Raw,
                y: Raw) -> Raw:
        if not x[0]:
            return y
        if not y[0]:
            return x
        return rat_add(self.gf, x, y, self.nvars)

    def raw_neg(self,
                x: Raw) -> Raw:
        return rat_neg(self.gf, x)

    def raw_sub(self,
                x: Raw,
                y: Raw) -> Raw:
        return self.raw_add(x, self.raw_neg(y))

    def raw_mul(self,
                x: Raw,
                y: Raw) -> Raw:
        return rat_mul(self.gf, x, y, self.nvars)

    def raw_inv(self,
                x: Raw) -> Raw:
        if not x[0]:
            raise DivisionByZero(self.key)
        return rat_inv(self.gf, x, self.nvars)

    def raw_pow(self,
                x: Raw,
                e: int) -> Raw:
        if e < 0:
            x = self.raw_inv(x)
            e = -e
        result: Raw = self.raw_one
        while e:
            if e & 1:
                result = self.raw_mul(result, x)
            e >>= 1
            if e:
                x = self.raw_mul(x, x)
        return result

    def raw_from_int(self,
                     n: int) -> Raw:
        c: int = n % self.p
        return ((((0,) * self.nvars, c),), self._one_poly) if c else self.raw_zero

    def raw_lift(self,
                 x: Raw,
                 level: FieldTower) -> Raw:
        if level is not self:
            raise TowerMismatch(level.key, self.key)
        return x

    def raw_descend(self,
                    x: Raw,
                    level: FieldTower) -> Raw | None:
        return x if level is self else None

    def raw_coords_over(self,
                        x: Raw,
                        level: FieldTower) -> list[Raw]:
        if level is not self:
            raise TowerMismatch(level.key, self.key)
        return [x]

    def raw_from_coords_over(self,
                             coords: list[Raw],
                             level: FieldTower) -> Raw:
        if level is not self:
            raise TowerMismatch(level.key, self.key)
        return coords[0]

    def raw_mult_matrix(self,
                        x: Raw,
                        level: FieldTower) -> list[list[Raw]]:
        return [[x]]

    def raw_square_coords(self,
                          x: Raw) -> list[Raw]:
        """
        Split *x = num/den* as *Σ_e c_e^p·t^e*, using *num/den = num·den^(p-1) / den^p*.
        """
        p: int = self.p
        gf: GaloisField = self.gf
        size: int = p ** self.nvars
        if not x[0]:
            return [self.raw_zero] * size
        den: MPoly = dict(x[1])
        big: MPoly = mp_mul(gf, dict(x[0]), mp_pow(gf, den, p - 1, self.nvars))
        parts: list[MPoly] = [{} for _ in range(size)]
        for e, c in big.items():
            idx: int = 0
            place: int = 1
            for v in e:
                idx += (v % p) * place
                place *= p
            parts[idx][tuple(v // p for v in e)] = gf.frob_inv(c)
        return [rat_normalize(gf, part, den, self.nvars) if part else self.raw_zero for part in parts]

    def raw_random(self,
                   rng: random.Random,
                   degree: int,
                   density: float) -> MPoly:
        result: MPoly = {}
        for e in itertools.product(range(degree + 1), repeat=self.nvars):
            if sum(e) <= degree and rng.random() < density:
                c: int = rng.randrange(self.gf.q)
                if c:
                    result[e] = c
        return result

    def random_raw(self,
                   rng: random.Random,
                   degree: int,
                   den_degree: int,
                   density: float) -> Raw:
        num: MPoly = self.raw_random(rng, degree, density)
        den: MPoly = self.raw_random(rng, den_degree, density) if den_degree > 0 else {}
        if not den:
            den = mp_one(self.nvars)
        return rat_normalize(self.gf, num, den, self.nvars)

    def raw_to_str(self,
                   x: Raw) -> str:
        num: str = mp_to_str(self.gf, x[0], self.names)
        if x[1] == self._one_poly:
            return num
        den: str = mp_to_str(self.gf, x[1], self.names)
        if " " in num:
            num = f"({num})"
        if " " in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def raw_to_dict(self,
                    x: Raw) -> dict[str, Any]:
        return {
            "num": [[list(e), c] for e, c in x[0]],
            "den": [[list(e), c] for e, c in x[1]]
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "key": self.key,
            "p": self.p,
            "q": self.gf.q,
            "names": list(self.names),
            "steps": [step.step_dict() for step in self.steps()]
        }


class TowerStep(FieldTower):
    """
    A simple extension *parent[x]/(f)* of a tower level, *f* monic and irreducible.
    """

    def __init__(self,
                 parent: FieldTower,
                 var: str,
                 modulus: tuple[Raw, ...],
                 kind: StepKind,
                 pbasis_slot: int | None = None) -> None:
        # not calling super().__init__: a step shares the bottom level's coefficient field
        self.gf = parent.gf
        self.p = parent.p
        self.names = parent.names
        self.nvars = parent.nvars
        self.parent = parent
        self.base = parent.base
        self.degree = len(modulus) - 1
        self.depth = parent.depth + 1
        self.var = var
        self.kind = kind
        self.modulus: tuple[Raw, ...] = modulus
        self.pbasis_slot: int | None = pbasis_slot
        self.trusted: bool = False
        self.certificate: dict[str, Any] = {}
        self.poly_text: str = _poly_to_str(parent, modulus, var)
        self.key = f"{parent.key}[{var}]/({self.poly_text})"

        d: int = self.degree
        self.raw_zero = (parent.raw_zero,) * d
        self.raw_one = (parent.raw_one,) + (parent.raw_zero,) * (d - 1)
        self.gen_raw: Raw = self.raw_times_gen(self.raw_one)
        lifted: list[Raw] = [self.raw_lift(b, parent) for b in parent.pbasis_raw]
        names: list[str] = list(parent.pbasis_names)
        if kind == StepKind.INSEPARABLE:
            lifted[pbasis_slot] = self.gen_raw
            names[pbasis_slot] = var
        self.pbasis_raw = tuple(lifted)
        self.pbasis_names = tuple(names)
        self._square_minv: Matrix | None = None

    def step_dict(self) -> dict[str, Any]:
        return {
            "var": self.var,
            "poly": self.poly_text,
            "degree": self.degree,
            "kind": str(self.kind),
            "trusted": self.trusted,
            "certificate": self.certificate
        }

    def raw_is_zero(self,
                    x: Raw) -> bool:
        return all(self.parent.raw_is_zero(c) for c in x)

    def raw_add(self,
                x: Raw,
                y: Raw) -> Raw:
        return tuple(self.parent.raw_add(a, b) for a, b in zip(x, y))

    def raw_neg(self,
                x: Raw) -> Raw:
        return tuple(self.parent.raw_neg(a) for a in x)

    def raw_mul(self,
                x: Raw,
                y: Raw) -> Raw:
        parent: FieldTower = self.parent
        d: int = self.degree
        prod: list[Raw] = [parent.raw_zero] * (2 * d - 1)
        for i, a in enumerate(x):
            if parent.raw_is_zero(a):
                continue
            for j, b in enumerate(y):
                if not parent.raw_is_zero(b):
                    prod[i + j] = parent.raw_add(prod[i + j], parent.raw_mul(a, b))
        return self.__reduce(prod)

    def raw_times_gen(self,
                      x: Raw) -> Raw:
        return self.__reduce([self.parent.raw_zero, *x])

    def __reduce(self,
                 prod: list[Raw]) -> Raw:
        # X^d = -(m_0 + m_1 X + ... + m_{d-1} X^{d-1})
        parent: FieldTower = self.parent
        d: int = self.degree
        for k in range(len(prod) - 1, d - 1, -1):
            c: Raw = prod[k]
            if parent.raw_is_zero(c):
                continue
            for i in range(d):
                m: Raw = self.modulus[i]
                if not parent.raw_is_zero(m):
                    prod[k - d + i] = parent.raw_sub(prod[k - d + i], parent.raw_mul(c, m))
        return tuple(prod[:d])

    def raw_inv(self,
                x: Raw) -> Raw:
        if self.raw_is_zero(x):
            raise DivisionByZero(self.key)
        parent: FieldTower = self.parent
        d: int = self.degree
        cols: list[Raw] = self.__gen_columns(x)
        a: Matrix = [[FieldElement(parent, cols[j][i]) for j in range(d)] for i in range(d)]
        sol: list[FieldElement] | None = mat_solve(parent, a, [parent.one] + [parent.zero] * (d - 1))
        if sol is None:
            # only a reducible (trusted) modulus gets here
            raise DivisionByZero(self.key)
        return tuple(s.raw for s in sol)

    def __gen_columns(self,
                      x: Raw) -> list[Raw]:
        # x, x·X, ..., x·X^(d-1)
        result: list[Raw] = [x]
        for _ in range(self.degree - 1):
            result.append(self.raw_times_gen(result[-1]))
        return result

    def raw_from_int(self,
                     n: int) -> Raw:
        return (self.parent.raw_from_int(n),) + (self.parent.raw_zero,) * (self.degree - 1)

    def raw_lift(self,
                 x: Raw,
                 level: FieldTower) -> Raw:
        if level is self:
            return x
        return (self.parent.raw_lift(x, level),) + (self.parent.raw_zero,) * (self.degree - 1)

    def raw_descend(self,
                    x: Raw,
                    level: FieldTower) -> Raw | None:
        if level is self:
            return x
        if any(not self.parent.raw_is_zero(c) for c in x[1:]):
            return None
        return self.parent.raw_descend(x[0], level)

    def raw_coords_over(self,
                        x: Raw,
                        level: FieldTower) -> list[Raw]:
        if level is self:
            return [x]
        result: list[Raw] = []
        for c in x:
            result.extend(self.parent.raw_coords_over(c, level))
        return result

    def raw_from_coords_over(self,
                             coords: list[Raw],
                             level: FieldTower) -> Raw:
        if level is self:
            return coords[0]
        nb: int = self.parent.degree_over(level)
        return tuple(self.parent.raw_from_coords_over(coords[i * nb:(i + 1) * nb], level)
                     for i in range(self.degree))

    def raw_mult_matrix(self,
                        x: Raw,
                        level: FieldTower) -> list[list[Raw]]:
        if level is self:
            return [[x]]
        parent: FieldTower = self.parent
        d: int = self.degree
        nb: int = parent.degree_over(level)
        cols: list[Raw] = self.__gen_columns(x)
        size: int = d * nb
        result: list[list[Raw]] = [[level.raw_zero] * size for _ in range(size)]
        for j in range(d):
            for i in range(d):
                entry: Raw = cols[j][i]
                if parent.raw_is_zero(entry):
                    continue
                block: list[list[Raw]] = parent.raw_mult_matrix(entry, level)
                for r in range(nb):
                    for s in range(nb):
                        result[i * nb + r][j * nb + s] = block[r][s]
        return result

    def raw_square_coords(self,
                          x: Raw) -> list[Raw]:
        parent: FieldTower = self.parent
        d: int = self.degree
        parts: list[list[Raw]]
        if self.kind == StepKind.SEPARABLE:
            # x = Σ_i y_i·X^(p·i), y_i in the parent level, then split each y_i
            y: list[FieldElement] = mat_vec(parent, self.__square_matrix(), [FieldElement(parent, c) for c in x])
            parts = [parent.raw_square_coords(yi.raw) for yi in y]
            return [tuple(parts[i][e] for i in range(d)) for e in range(len(parts[0]))]

        # X^p = b_j: the slot j of the p-basis moves from b_j to X
        p: int = self.p
        pj: int = p ** self.pbasis_slot
        parts = [parent.raw_square_coords(c) for c in x]
        result: list[Raw] = []
        for idx in range(len(parts[0])):
            i: int = (idx // pj) % p
            rest: int = idx - i * pj
            result.append(tuple(parts[i][rest + k * pj] for k in range(p)))
        return result

    def __square_matrix(self) -> Matrix:
        # inverse of the matrix whose columns are the coordinates of X^(p·i)
        if self._square_minv is None:
            parent: FieldTower = self.parent
            d: int = self.degree
            xp: Raw = self.raw_pow(self.gen_raw, self.p)
            col: Raw = self.raw_one
            cols: list[Raw] = []
            for _ in range(d):
                cols.append(col)
                col = self.raw_mul(col, xp)
            a: Matrix = [[FieldElement(parent, cols[j][i]) for j in range(d)] for i in range(d)]
            minv: Matrix | None = mat_inverse(parent, a)
            if minv is None:
                raise DivisionByZero(self.key)
            self._square_minv = minv
        return self._square_minv

    def random_raw(self,
                   rng: random.Random,
                   degree: int,
                   den_degree: int,
                   density: float) -> Raw:
        return tuple(self.parent.random_raw(rng, degree, den_degree, density) for _ in range(self.degree))

    def raw_to_str(self,
                   x: Raw) -> str:
        terms: list[str] = []
        for i in range(self.degree - 1, -1, -1):
            c: Raw = x[i]
            if self.parent.raw_is_zero(c):
                continue
            cs: str = self.parent.raw_to_str(c)
            if i == 0:
                terms.append(cs)
                continue
            mono: str = self.var if i == 1 else f"{self.var}^{i}"
            if cs == "1":
                terms.append(mono)
            elif " " in cs or "/" in cs:
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms) or "0"

    def raw_to_dict(self,
                    x: Raw) -> dict[str, Any]:
        return {"coords": [self.parent.raw_to_dict(c) for c in x]}


class FieldElement:
    """
    An element of a tower level, in canonical form.

    Arithmetic between an element and an element of a lower level of the same tower
    lifts the latter; integers are read modulo the characteristic.
    """
    __slots__ = ("tower", "raw")

    def __init__(self,
                 tower: FieldTower,
                 raw: Raw) -> None:
        self.tower: FieldTower = tower
        self.raw: Raw = raw

    def __pair(self,
               other: FieldElement | int) -> tuple[FieldTower, Raw, Raw]:
        t: FieldTower = self.tower
        if isinstance(other, int):
            return t, self.raw, t.raw_from_int(other)
        u: FieldTower = other.tower
        if u is t:
            return t, self.raw, other.raw
        if u.has_level(t):
            return u, u.raw_lift(self.raw, t), other.raw
        if t.has_level(u):
            return t, self.raw, t.raw_lift(other.raw, u)
        raise TowerMismatch(t.key, u.key)

    def __add__(self, other: FieldElement | int) -> FieldElement:
        if not isinstance(other, FieldElement | int):
            return NotImplemented
        t, x, y = self.__pair(other)
        return FieldElement(t, t.raw_add(x, y))

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        if not isinstance(other, FieldElement | int):
            return NotImplemented
        t, x, y = self.__pair(other)
        return FieldElement(t, t.raw_sub(x, y))

    def __rsub__(self, other: int) -> FieldElement:
        return (-self) + other

    def __neg__(self) -> FieldElement:
        return FieldElement(self.tower, self.tower.raw_neg(self.raw))

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        if not isinstance(other, FieldElement | int):
            return NotImplemented
        t, x, y = self.__pair(other)
        return FieldElement(t, t.raw_mul(x, y))

    __rmul__ = __mul__

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        if not isinstance(other, FieldElement | int):
            return NotImplemented
        t, x, y = self.__pair(other)
        return FieldElement(t, t.raw_mul(x, t.raw_inv(y)))

    def __rtruediv__(self, other: int) -> FieldElement:
        return self.inverse() * other

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.tower, self.tower.raw_pow(self.raw, e))

    def __bool__(self) -> bool:
        return not self.tower.raw_is_zero(self.raw)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement | int):
            return NotImplemented
        try:
            _, x, y = self.__pair(other)
        except TowerMismatch:
            return False
        return x == y

    def __hash__(self) -> int:
        # hash at the lowest level holding the element, so that lifted copies collide
        t: FieldTower = self.tower
        raw: Raw = self.raw
        while t.parent is not None:
            lower: Raw | None = t.raw_descend(raw, t.parent)
            if lower is None:
                break
            t, raw = t.parent, lower
        return hash((t.key, raw))

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        return self.tower.raw_to_str(self.raw)

    def equals(self,
               other: FieldElement) -> bool:
        """
        Compare with *other*, which must belong to the same tower.

        :raises TowerMismatch: if *other* belongs to an unrelated tower
        """
        _, x, y = self.__pair(other)
        return x == y

    def inverse(self) -> FieldElement:
        return FieldElement(self.tower, self.tower.raw_inv(self.raw))

    def lift(self,
             level: FieldTower) -> FieldElement:
        return level.coerce(self)

    def to_dict(self) -> dict[str, Any]:
        return self.tower.raw_to_dict(self.raw)


@dataclass(frozen=True)
class CharPolyData:
    """
    The characteristic polynomial *X^n + a_1·X^(n-1) + ... + a_n* of multiplication by an element.
    """
    coefficients: tuple[FieldElement, ...]
    norm: FieldElement
    min_poly: tuple[FieldElement, ...]
    degree: int

    @property
    def trace(self) -> FieldElement:
        return -self.coefficients[0]

    def to_dict(self) -> dict[str, Any]:
        return {
            "coefficients": [str(a) for a in self.coefficients],
            "norm": str(self.norm),
            "min_poly": [str(c) for c in self.min_poly],
            "degree": self.degree
        }


@lru_cache(maxsize=64)
def tower_base(p: int = 2,
               k: int = 1,
               names: tuple[str, ...] = ("t",)) -> FieldTower:
    """
    Obtain the (cached) bottom level *GF(p^k)(names)*.

    :param p: the characteristic
    :param k: the degree of the constant field over the prime field
    :param names: the names of the transcendentals, at most four
    :return: the field
    """
    if p not in (2, 3, 5, 7):
        raise UnsupportedCharacteristic(p, "tower_base")
    if len(set(names)) != len(names) or "z" in names:
        raise NameInUse(",".join(names), f"GF({p}^{k})")
    return FieldTower(p=p,
                      k=k,
                      names=tuple(names))


def tower_extend(parent: FieldTower,
                 var: str,
                 coeffs: list[FieldElement | int],
                 trusted: bool = False,
                 seed: int = None,
                 spec_tries: int = None,
                 spec_max_bits: int = None,
                 degree_cap: int = None,
                 logger: Logger = None) -> TowerStep:
    """
    Adjoin to *parent* a root *var* of the polynomial with coefficients *coeffs*, lowest degree first.

    The polynomial is made monic and classified by its formal derivative. A purely inseparable step
    must have the shape *X^p - b*, with *b* in the current p-basis; it is then irreducible. A separable step
    must be certified irreducible: the characteristic polynomial of the new generator (or of a
    primitive-element candidate) over the bottom level is tested by the Rabin test at a finite bottom level,
    and otherwise by specializing the transcendentals into finite fields.

    :param parent: the level to extend
    :param var: the name of the new generator
    :param coeffs: the coefficients, lowest degree first, leading one nonzero
    :param trusted: skip the irreducibility certificate
    :param seed: seed for the specialization points
    :param spec_tries: number of specializations to try
    :param spec_max_bits: specialization fields hold at most *2^spec_max_bits* elements
    :param degree_cap: maximum degree of the result over the bottom level
    :param logger: optional logger
    :return: the new level
    :raises IrreducibilityUnknown: the certificate failed and *trusted* was not set
    :raises UnsupportedInseparableStep: an inseparable polynomial of an unsupported shape
    :raises DegreeCapExceeded: the tower would be too large
    """
    if seed is None:
        seed = qforms_get(QformsParam.SEED)
    if spec_tries is None:
        spec_tries = qforms_get(QformsParam.SPEC_TRIES)
    if spec_max_bits is None:
        spec_max_bits = qforms_get(QformsParam.SPEC_MAX_BITS)
    if degree_cap is None:
        degree_cap = qforms_get(QformsParam.DEGREE_CAP)

    if var in parent.gens():
        raise NameInUse(var, parent.key)
    values: list[FieldElement] = [parent.coerce(c) for c in coeffs]
    while values and not values[-1]:
        values.pop()
    d: int = len(values) - 1
    if d < 1:
        raise DivisionByZero(f"{parent.key}[{var}]")
    total: int = parent.degree_over(parent.base) * d
    if total > degree_cap:
        raise DegreeCapExceeded(total, degree_cap)
    lead_inv: FieldElement = values[-1].inverse()
    modulus: tuple[Raw, ...] = tuple((c * lead_inv).raw for c in values)

    p: int = parent.p
    separable: bool = any(values[i] for i in range(1, d + 1) if i % p)
    # initialize the return variable
    result: TowerStep
    if not separable:
        b: Raw = parent.raw_neg(modulus[0])
        slot: int | None = None
        if d == p and all(parent.raw_is_zero(c) for c in modulus[1:p]):
            slot = next((j for j, pb in enumerate(parent.pbasis_raw) if pb == b), None)
        if slot is None:
            raise UnsupportedInseparableStep(_poly_to_str(parent, modulus, var),
                                             ",".join(parent.pbasis_names) or "()")
        result = TowerStep(parent=parent,
                           var=var,
                           modulus=modulus,
                           kind=StepKind.INSEPARABLE,
                           pbasis_slot=slot)
        result.certificate = {"method": "p-basis", "slot": slot}
    else:
        result = TowerStep(parent=parent,
                           var=var,
                           modulus=modulus,
                           kind=StepKind.SEPARABLE)
        if trusted:
            result.trusted = True
            result.certificate = {"method": "trusted"}
        elif d == 1:
            result.certificate = {"method": "linear"}
        else:
            cert: dict[str, Any] | None = _certify_step(step=result,
                                                        rng=random.Random(seed),
                                                        tries=spec_tries,
                                                        max_bits=spec_max_bits,
                                                        logger=logger)
            if cert is None:
                raise IrreducibilityUnknown(result.poly_text, spec_tries)
            result.certificate = cert
    if logger:
        logger.debug(msg=f"Built {result.key} ({result.kind}, {result.certificate.get('method')})")

    return result


def _certify_step(step: TowerStep,
                  rng: random.Random,
                  tries: int,
                  max_bits: int,
                  logger: Logger | None) -> dict[str, Any] | None:
    # a candidate generator whose characteristic polynomial over the bottom level is irreducible
    # generates a field of the full degree, which is then the whole ring
    base: FieldTower = step.base
    gen: FieldElement = FieldElement(step, step.gen_raw)
    candidates: list[tuple[str, FieldElement]] = [(step.var, gen)]
    scalars: list[tuple[str, FieldElement]] = [("1", step.one)] + \
        [(name, step.coerce(FieldElement(base, b))) for name, b in zip(base.names, base.pbasis_raw)]
    for level in reversed(step.levels()[1:-1]):
        other: FieldElement = step.coerce(FieldElement(level, level.gen_raw))
        for name, c in scalars:
            candidates.append((f"{step.var} + {name}*{level.var}", gen + c * other))

    for text, theta in candidates:
        coeffs: list[FieldElement] = mat_charpoly(base, step.mult_matrix(theta, base))
        raws: list[FrozenRat] = [c.raw for c in coeffs]
        cert: dict[str, Any] | None
        if base.nvars == 0:
            f: list[int] = [c[0][0][1] if c[0] else 0 for c in raws]
            cert = {"method": "factorization", "field": repr(base.gf)} if gfpoly_is_irreducible(base.gf, f) else None
        else:
            cert = _certify_by_specialization(base=base,
                                              coeffs=raws,
                                              rng=rng,
                                              tries=tries,
                                              max_bits=max_bits)
        if logger:
            logger.debug(msg=f"Irreducibility of {step.poly_text} via {text}: {'certified' if cert else 'failed'}")
        if cert:
            cert["generator"] = text
            return cert
    return None


def _certify_by_specialization(base: FieldTower,
                               coeffs: list[FrozenRat],
                               rng: random.Random,
                               tries: int,
                               max_bits: int) -> dict[str, Any] | None:
    # clear denominators, then map the transcendentals to random points of finite extensions
    gf: GaloisField = base.gf
    n: int = base.nvars
    lcm: MPoly = mp_one(n)
    for c in coeffs:
        den: MPoly = dict(c[1])
        if not mp_is_one(den):
            g: MPoly = mp_gcd(gf, lcm, den)
            lcm = mp_mul(gf, lcm, mp_divexact(gf, den, g))
    polys: list[MPoly] = [mp_mul(gf, dict(c[0]), mp_divexact(gf, lcm, dict(c[1]))) for c in coeffs]

    max_m: int = 1
    while gf.q ** (max_m + 1) <= 2 ** max_bits:
        max_m += 1
    for _ in range(tries):
        m: int = rng.randint(1, max_m)
        big: GaloisField = gf_field(gf.p, gf.k * m)
        emb: tuple[int, ...] = gf_embedding(gf, big)
        point: list[int] = [rng.randrange(big.q) for _ in range(n)]
        if not _mp_eval(big, emb, lcm, point):
            continue
        f: list[int] = [_mp_eval(big, emb, poly, point) for poly in polys]
        if gfpoly_is_irreducible(big, f):
            return {
                "method": "specialization",
                "field": repr(big),
                "point": [big.to_str(v) for v in point]
            }
    return None


def _mp_eval(big: GaloisField,
             emb: tuple[int, ...],
             poly: MPoly,
             point: list[int]) -> int:
    result: int = 0
    for e, c in poly.items():
        term: int = emb[c]
        for v, x in zip(point, e):
            if x:
                term = big.mul(term, big.pow(v, x))
        result = big.add(result, term)
    return result


def _poly_to_str(parent: FieldTower,
                 modulus: tuple[Raw, ...],
                 var: str) -> str:
    terms: list[str] = []
    for i in range(len(modulus) - 1, -1, -1):
        c: Raw = modulus[i]
        if parent.raw_is_zero(c):
            continue
        cs: str = parent.raw_to_str(c)
        if i == 0:
            terms.append(cs)
            continue
        mono: str = var if i == 1 else f"{var}^{i}"
        if cs == "1":
            terms.append(mono)
        elif " " in cs or "/" in cs:
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms)


def element_arith(op: str,
                  x: FieldElement,
                  y: FieldElement = None) -> FieldElement | bool:
    """
    Apply the arithmetic operation *op* (*add*, *mul*, *invert* or *equals*) to *x* and *y*.

    :raises DivisionByZero: inverting zero
    :raises TowerMismatch: the operands belong to unrelated towers
    """
    match op:
        case "add":
            return x + y
        case "mul":
            return x * y
        case "invert":
            return x.inverse()
        case "equals":
            return x.equals(y)
    raise ValueError(f"unknown operation {op}")


def char_poly(alpha: FieldElement,
              over: FieldTower = None) -> CharPolyData:
    """
    Compute the characteristic polynomial of multiplication by *alpha* on its level, over the level *over*.

    The minimal polynomial comes from the first linear dependency among the powers of *alpha*.
    The norm is *(-1)^n·a_n*, which is *a_n* in characteristic 2.

    :param alpha: the element
    :param over: a level below that of *alpha* (defaults to the parent level)
    :return: the characteristic polynomial data
    :raises TowerMismatch: if *over* is not a level of the tower of *alpha*
    """
    k: FieldTower = alpha.tower
    f: FieldTower = over or k.parent or k
    n: int = k.degree_over(f)
    cp: list[FieldElement] = mat_charpoly(f, k.mult_matrix(alpha, f))
    coeffs: tuple[FieldElement, ...] = tuple(cp[n - i] for i in range(1, n + 1))
    nrm: FieldElement = coeffs[-1] if n % 2 == 0 else -coeffs[-1]

    # first dependency among the powers of alpha
    powers: list[list[FieldElement]] = [k.coords_over(k.one, f)]
    cur: FieldElement = k.one
    min_poly: tuple[FieldElement, ...] = tuple(cp)
    for i in range(1, n + 1):
        cur = cur * alpha
        v: list[FieldElement] = k.coords_over(cur, f)
        a: Matrix = [[powers[j][r] for j in range(i)] for r in range(n)]
        sol: list[FieldElement] | None = mat_solve(f, a, v)
        if sol is not None:
            min_poly = tuple([-s for s in sol] + [f.one])
            break
        powers.append(v)

    return CharPolyData(coefficients=coeffs,
                        norm=nrm,
                        min_poly=min_poly,
                        degree=n)


def norm(x: FieldElement,
         over: FieldTower) -> FieldElement:
    return char_poly(x, over).norm


def norm_stepwise(x: FieldElement,
                  over: FieldTower) -> FieldElement:
    """
    Compute *N_{L/F}(x)* as the composition of the norms of the single steps from *L* down to *F*.
    """
    result: FieldElement = x
    level: FieldTower = x.tower
    while level is not over:
        if level.parent is None:
            raise TowerMismatch(over.key, x.tower.key)
        result = char_poly(level.coerce(result), level.parent).norm
        level = level.parent
    return result


def functional_s(alpha: FieldElement,
                 k: FieldTower = None) -> FieldElement:
    """
    Apply the functional *s: K → F* with *s(1) = 1* and *s(x^i) = 0* for *0 < i < n*, *K = F(x)* simple.

    :param alpha: the element of *K*
    :param k: the simple step *K* (defaults to the level of *alpha*)
    :return: the coordinate of *x^0* of *alpha*, an element of the parent level
    :raises NotSimpleStep: if *K* is the bottom level
    """
    k = k or alpha.tower
    if k.parent is None:
        raise NotSimpleStep(k.key, k.key)
    return FieldElement(k.parent, k.coerce(alpha).raw[0])


def pth_root(x: FieldElement) -> FieldElement | None:
    """
    Return the unique *y* with *y^p = x*, or *None* if *x* is not a p-th power in its level.
    """
    coords: list[Raw] = x.tower.raw_square_coords(x.raw)
    if any(not x.tower.raw_is_zero(c) for c in coords[1:]):
        return None
    return FieldElement(x.tower, coords[0])


def sqrt(x: FieldElement) -> FieldElement | None:
    """
    Return *y* with *y² = x*, or *None* if *x* is not a square, in characteristic 2.

    :raises UnsupportedCharacteristic: in odd characteristic
    """
    if x.tower.p != 2:
        raise UnsupportedCharacteristic(x.tower.p, "sqrt")
    return pth_root(x)


def poly_eval(coeffs: list[FieldElement],
              x: FieldElement) -> FieldElement:
    result: FieldElement = x.tower.zero
    for c in reversed(coeffs):
        result = result * x + c
    return result


def mp_element(level: FieldTower,
               poly: MPoly) -> FieldElement:
    """
    Build the element of the bottom level *level* given by the polynomial *poly*.
    """
    return FieldElement(level, (mp_freeze(poly), level._one_poly) if poly else level.raw_zero)
