"""
Brute-force oracles, used to cross-validate the exact decision procedures on small instances.

All enumerations run in a fixed order, so that the first witness found is reproducible.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache
from logging import Logger
from typing import Any

from .config_pomes import QformsParam, qforms_get
from .decision_pomes import finite_elements, is_finite
from .error_pomes import BoundExceeded, DimensionMismatch, UnsupportedCharacteristic
from .field_pomes import FieldElement, FieldTower, mp_element
from .form_pomes import BilinearForm, PForm, QuadraticForm
from .gf_pomes import gf2_clmul
from .matrix_pomes import Matrix, Vector, mat_congruence, mat_det, mat_identity

# a matrix as a hashable key
MatrixKey = tuple[tuple[FieldElement, ...], ...]


class OracleKind(StrEnum):
    """
    Kinds of brute-force oracles.
    """
    CONGRUENCE = "finite-field-congruence"
    ISOTROPY = "bounded-degree-isotropy"
    WP = "bounded-height-wp"


def _all_elements(tower: FieldTower) -> list[FieldElement]:
    if not is_finite(tower):
        raise BoundExceeded(f"|{tower.key}|", "finite")
    return [tower.zero] + list(finite_elements(tower))


def _key(m: Matrix) -> MatrixKey:
    return tuple(tuple(row) for row in m)


def _symmetric(tower: FieldTower,
               n: int,
               upper: tuple[FieldElement, ...]) -> Matrix:
    result: Matrix = [[tower.zero] * n for _ in range(n)]
    pos: int = 0
    for i in range(n):
        for j in range(i, n):
            result[i][j] = result[j][i] = upper[pos]
            pos += 1
    return result


def oracle_gl_matrices(tower: FieldTower,
                       n: int,
                       cap: int = None) -> Iterator[Matrix]:
    """
    Enumerate the invertible *n×n* matrices over the finite field *tower*.

    :param tower: a finite field
    :param n: the size of the matrices
    :param cap: the largest number of candidate matrices allowed (defaults to the configuration)
    :return: an iterator on the matrices of *GL_n*, in lexicographic order of their entries
    :raises BoundExceeded: if the *q^(n²)* candidates exceed *cap*
    """
    if cap is None:
        cap = qforms_get(QformsParam.ORACLE_CAP)
    elements: list[FieldElement] = _all_elements(tower)
    size: int = len(elements) ** (n * n)
    if size > cap:
        raise BoundExceeded(size, cap)
    for entries in itertools.product(elements, repeat=n * n):
        m: Matrix = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if mat_det(tower, m):
            yield m


def _gl_generators(tower: FieldTower,
                   n: int) -> list[Matrix]:
    # transvections I + c·E_ij and scalings diag(1, .., μ, .., 1) generate GL_n
    result: list[Matrix] = []
    units: list[FieldElement] = list(finite_elements(tower))
    for i, j in itertools.product(range(n), repeat=2):
        for c in units:
            if i == j and c == tower.one:
                continue
            t: Matrix = mat_identity(tower, n)
            t[i][j] = c if i == j else t[i][j] + c
            result.append(t)
    return result


@lru_cache(maxsize=16)
def _classes(tower: FieldTower,
             n: int,
             cap: int) -> dict[MatrixKey, int]:
    elements: list[FieldElement] = _all_elements(tower)
    count: int = len(elements) ** (n * (n + 1) // 2)
    if count > cap:
        raise BoundExceeded(count, cap)
    gens: list[Matrix] = _gl_generators(tower, n)
    result: dict[MatrixKey, int] = {}
    next_id: int = 0
    for upper in itertools.product(elements, repeat=n * (n + 1) // 2):
        m: Matrix = _symmetric(tower, n, upper)
        if _key(m) in result:
            continue
        result[_key(m)] = next_id
        queue: list[Matrix] = [m]
        while queue:
            a: Matrix = queue.pop()
            for t in gens:
                b: Matrix = mat_congruence(tower, t, a)
                kb: MatrixKey = _key(b)
                if kb not in result:
                    result[kb] = next_id
                    queue.append(b)
        next_id += 1
    return result


def oracle_congruence_classes(tower: FieldTower,
                              n: int,
                              cap: int = None) -> dict[MatrixKey, int]:
    """
    Partition the symmetric *n×n* matrices over the finite field *tower* into congruence classes.

    Each orbit is the closure of one matrix under the elementary generators of *GL_n*.

    :param tower: a finite field
    :param n: the size of the matrices
    :param cap: the largest number of symmetric matrices allowed (defaults to the configuration)
    :return: the class number of every symmetric matrix, numbered in order of first appearance
    :raises BoundExceeded: if the symmetric matrices exceed *cap*
    """
    if cap is None:
        cap = qforms_get(QformsParam.ORACLE_CAP)
    return _classes(tower, n, cap)


def _bits_of(poly: tuple) -> int:
    return sum(1 << e[0] for e, c in poly if c)


def _from_bits(tower: FieldTower,
               bits: int) -> FieldElement:
    return mp_element(tower, {(i,): 1 for i in range(bits.bit_length()) if bits >> i & 1})


@dataclass(frozen=True)
class BruteForceOracle:
    """
    An exhaustive search of a given kind, within *bound*.

    The bound is the matrix size for congruence, the coefficient degree for isotropy,
    and the height of *A/B* for the equation *w² + w = c*.
    """
    kind: OracleKind
    bound: int
    cap: int

    def congruent(self,
                  alpha: BilinearForm,
                  beta: BilinearForm) -> bool:
        """
        Decide by orbit enumeration whether the Gram matrices of *alpha* and *beta* are congruent.

        :raises DimensionMismatch: if the forms have different dimensions
        :raises BoundExceeded: if the dimension exceeds the bound, or the enumeration exceeds the cap
        """
        if alpha.dim != beta.dim:
            raise DimensionMismatch(alpha.dim, beta.dim)
        if alpha.dim > self.bound:
            raise BoundExceeded(alpha.dim, self.bound)
        classes: dict[MatrixKey, int] = _classes(alpha.tower, alpha.dim, self.cap)
        return classes[_key(alpha.matrix())] == classes[_key(beta.matrix())]

    def congruence_matrix(self,
                          alpha: BilinearForm,
                          beta: BilinearForm) -> Matrix | None:
        """
        Find the first *T* in *GL_n* with *T^t·A·T = B*, by explicit enumeration.
        """
        if alpha.dim != beta.dim:
            raise DimensionMismatch(alpha.dim, beta.dim)
        target: MatrixKey = _key(beta.matrix())
        a: Matrix = alpha.matrix()
        return next((t for t in oracle_gl_matrices(alpha.tower, alpha.dim, self.cap)
                     if _key(mat_congruence(alpha.tower, t, a)) == target), None)

    def isotropic_vector(self,
                         form: BilinearForm | QuadraticForm | PForm) -> Vector | None:
        """
        Search the nonzero polynomial vectors of coefficient degree at most the bound for a zero of *form*.

        :raises BoundExceeded: if the vectors to try exceed the cap
        """
        tower: FieldTower = form.tower
        if tower.parent is not None:
            raise BoundExceeded(tower.key, tower.base.key)
        monos: list[tuple[int, ...]] = [e for e in itertools.product(range(self.bound + 1), repeat=tower.nvars)
                                        if sum(e) <= self.bound]
        q: int = tower.gf.q
        size: int = q ** (len(monos) * form.dim)
        if size > self.cap:
            raise BoundExceeded(size, self.cap)
        coords: list[FieldElement] = [mp_element(tower, {e: c for e, c in zip(monos, cs) if c})
                                      for cs in itertools.product(range(q), repeat=len(monos))]
        for v in itertools.product(coords, repeat=form.dim):
            if any(v) and not form.evaluate(list(v)):
                return list(v)
        return None

    def wp_root(self,
                c: FieldElement) -> FieldElement | None:
        """
        Search *w = A/B* with *w² + w = c* over *GF(2)(t)*, *A* and *B* of degree at most the bound.

        With *c = N/D*, the equation reads *(A² + A·B)·D = N·B²* in *GF(2)[t]*.

        :raises UnsupportedCharacteristic: if *c* does not lie in *GF(2)(t)*
        :raises BoundExceeded: if the pairs to try exceed the cap
        """
        tower: FieldTower = c.tower
        if tower.parent is not None or tower.gf.q != 2 or tower.nvars != 1:
            raise UnsupportedCharacteristic(tower.gf.q, f"the wp oracle over {tower.key}")
        span: int = 1 << (self.bound + 1)
        if span * span > self.cap:
            raise BoundExceeded(span * span, self.cap)
        num: int = _bits_of(c.raw[0])
        den: int = _bits_of(c.raw[1])
        for b in range(1, span):
            rhs: int = gf2_clmul(num, gf2_clmul(b, b))
            for a in range(span):
                if gf2_clmul(gf2_clmul(a, a) ^ gf2_clmul(a, b), den) == rhs:
                    return _from_bits(tower, a) / _from_bits(tower, b)
        return None

    def query(self,
              *args: Any) -> Any:
        match self.kind:
            case OracleKind.CONGRUENCE:
                return self.congruent(*args)
            case OracleKind.ISOTROPY:
                return self.isotropic_vector(*args)
        return self.wp_root(*args)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "bound": self.bound,
            "cap": self.cap
        }


def oracle_bruteforce(kind: OracleKind | str,
                      bound: int,
                      cap: int = None,
                      logger: Logger = None) -> BruteForceOracle:
    """
    Obtain a brute-force oracle of the given *kind*.

    :param kind: the kind of search
    :param bound: the search bound (matrix size, coefficient degree or height)
    :param cap: the largest enumeration allowed (defaults to the configuration)
    :param logger: optional logger
    :return: the oracle
    """
    if cap is None:
        cap = qforms_get(QformsParam.ORACLE_CAP)
    result: BruteForceOracle = BruteForceOracle(kind=OracleKind(kind),
                                                bound=bound,
                                                cap=cap)
    if logger:
        logger.debug(msg=f"Oracle {result.kind} with bound {bound}, cap {cap}")

    return result
