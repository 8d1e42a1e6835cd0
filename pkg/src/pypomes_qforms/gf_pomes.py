from functools import cached_property, lru_cache
from math import gcd
from typing import Any, Final

from sympy import GF, Poly, factorint, symbols
from sympy.polys.agca.extensions import FiniteExtension
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_neg, gf_pow_mod, gf_rem
from sympy.polys.matrices import DomainMatrix

# univariate polynomials over a Galois field are lists of ints, lowest degree first
GfPoly = list[int]

_PRIMES: Final[tuple[int, ...]] = (2, 3, 5, 7, 11, 13)
_X, _Z = symbols("x z")


class GaloisExtension(FiniteExtension):
    """
    *GF(p)[z]/(m)* for an irreducible *m*, as a sympy field domain.
    """

    # the modulus is irreducible: every nonzero element is invertible
    def quo(self, f, g):
        return f / g

    def exquo(self, f, g):
        return f / g

    def gcd(self, f, g):
        return self.one if f or g else self.zero

    def lcm(self, f, g):
        return f * g / self.gcd(f, g)


class GaloisField:
    """
    The finite field GF(p^k), with elements encoded as ints whose base-p digits are the
    coefficients of a polynomial in the generator *z*.

    The modulus is the first primitive polynomial in enumeration order, so that *z* generates
    the multiplicative group and multiplication runs through log/exp tables.
    """

    def __init__(self,
                 p: int,
                 k: int) -> None:
        if p not in _PRIMES:
            raise ValueError(f"unsupported characteristic {p}")
        self.p: int = p
        self.k: int = k
        self.q: int = p ** k
        self.modulus: list[int] = []
        self.exp: list[int] = []
        self.log: list[int] = [0] * self.q
        self.__find_modulus()

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaloisField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    # digits handling
    def digits(self,
               a: int) -> list[int]:
        result: list[int] = []
        for _ in range(self.k):
            result.append(a % self.p)
            a //= self.p
        return result

    def from_digits(self,
                    digits: list[int]) -> int:
        result: int = 0
        for d in reversed(digits):
            result = result * self.p + int(d) % self.p
        return result

    def dense(self,
              a: int) -> list[int]:
        """
        Return *a* as a dense *GF(p)[z]* polynomial, highest degree first.
        """
        digits: list[int] = self.digits(a)
        while digits and digits[-1] == 0:
            digits.pop()
        return digits[::-1]

    def add(self,
            a: int,
            b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.from_digits(gf_add(self.dense(a), self.dense(b), self.p, ZZ)[::-1])

    def neg(self,
            a: int) -> int:
        if self.p == 2:
            return a
        return self.from_digits(gf_neg(self.dense(a), self.p, ZZ)[::-1])

    def sub(self,
            a: int,
            b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self,
            a: int,
            b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self,
            a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def div(self,
            a: int,
            b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self,
            a: int,
            e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero in " + repr(self))
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def frob_inv(self,
                 a: int) -> int:
        """
        Return the unique *b* with *b^p = a*.
        """
        return self.pow(a, self.q // self.p)

    def trace(self,
              a: int) -> int:
        """
        Return the absolute trace of *a*, an element of the prime field.
        """
        result: int = 0
        for _ in range(self.k):
            result = self.add(result, a)
            a = self.pow(a, self.p)
        return result

    def from_int(self,
                 n: int) -> int:
        return n % self.p

    def to_str(self,
               a: int,
               name: str = "z") -> str:
        if a < self.p:
            return str(a)
        terms: list[str] = []
        for i, d in reversed(list(enumerate(self.digits(a)))):
            if d:
                mono: str = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
                if not mono:
                    terms.append(str(d))
                else:
                    terms.append(mono if d == 1 else f"{d}*{mono}")
        return " + ".join(terms)

    # sympy interplay
    @cached_property
    def domain(self) -> Any:
        """
        The sympy domain of this field: *GF(p)*, or *GF(p)[z]/(modulus)* when *k > 1*.
        """
        if self.k == 1:
            return GF(self.p, symmetric=False)
        return GaloisExtension(Poly(self.modulus[::-1], _Z, modulus=self.p))

    @cached_property
    def _to_domain(self) -> list[Any]:
        dom: Any = self.domain
        if self.k == 1:
            return [dom(a) for a in range(self.q)]
        return [sum((dom.basis[i] * d for i, d in enumerate(self.digits(a)) if d), dom.zero)
                for a in range(self.q)]

    def to_sympy(self,
                 a: int) -> Any:
        return self._to_domain[a]

    def from_sympy(self,
                   c: Any) -> int:
        if self.k == 1:
            return int(c) % self.p
        return self.from_digits(c.rep.to_list()[::-1])

    def __find_modulus(self) -> None:
        # the first monic irreducible whose root has order q - 1
        orders: list[int] = [(self.q - 1) // r for r in factorint(self.q - 1)]
        for c in range(1, self.q):
            tail: list[int] = self.digits(c)
            if tail[0] == 0:
                continue
            f: list[int] = [1, *tail[::-1]]
            if not gf_irreducible_p(f, self.p, ZZ) or \
                    any(gf_pow_mod([1, 0], e, f, self.p, ZZ) == [1] for e in orders):
                continue
            self.modulus = [*tail, 1]
            exp: list[int] = []
            power: list[int] = [1]
            for _ in range(self.q - 1):
                exp.append(self.from_digits(power[::-1]))
                power = gf_rem(gf_mul(power, [1, 0], self.p, ZZ), f, self.p, ZZ)
            self.exp = exp + exp
            for i, e in enumerate(exp):
                self.log[e] = i
            return
        raise ValueError(f"no primitive modulus for GF({self.q})")


@lru_cache(maxsize=64)
def gf_field(p: int,
             k: int = 1) -> GaloisField:
    """
    Obtain the (cached) Galois field with *p^k* elements.

    :param p: the characteristic
    :param k: the degree over the prime field
    :return: the field
    """
    return GaloisField(p=p,
                       k=k)


@lru_cache(maxsize=256)
def gf_embedding(small: GaloisField,
                 big: GaloisField) -> tuple[int, ...]:
    """
    Build the embedding of *small* into *big*, as the table of images of the elements of *small*.

    The image of the generator of *small* is the first root of its modulus found in *big*.

    :param small: the subfield
    :param big: the containing field (its degree a multiple of the degree of *small*)
    :return: the images, indexed by the elements of *small*
    """
    if small.k == 1:
        return tuple(range(small.q))
    root: int | None = None
    for r in range(1, big.q):
        acc: int = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            root = r
            break
    if root is None:
        raise ValueError(f"{small!r} does not embed in {big!r}")
    result: list[int] = []
    for a in range(small.q):
        img: int = 0
        for i, d in enumerate(small.digits(a)):
            if d:
                img = big.add(img, big.mul(d, big.pow(root, i)))
        result.append(img)
    return tuple(result)


def gfpoly_is_irreducible(gf: GaloisField,
                          f: GfPoly) -> bool:
    """
    Decide the irreducibility of *f* over *gf*.

    Over a prime field this is sympy's test. Over *GF(p^k)* the norm of *f* down to *GF(p)*
    is factored: *f* is irreducible exactly when the norm is a power *g^e* of a single
    irreducible *g*, with *e·gcd(deg g, k) = k*.

    :param gf: the coefficient field
    :param f: the polynomial, lowest degree first
    :return: *True* if *f* is irreducible
    """
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    if len(f) < 2:
        return False
    if gf.k == 1:
        return Poly(f[::-1], _X, modulus=gf.p).is_irreducible

    lifted: Poly = Poly.from_dict({(j, i): d for i, c in enumerate(f)
                                   for j, d in enumerate(gf.digits(c)) if d},
                                  _Z, _X, modulus=gf.p)
    modulus: Poly = Poly.from_dict({(j, 0): d for j, d in enumerate(gf.modulus) if d},
                                   _Z, _X, modulus=gf.p)
    factors: list[tuple[Poly, int]] = lifted.resultant(modulus).factor_list()[1]
    return len(factors) == 1 and factors[0][1] * gcd(factors[0][0].degree(), gf.k) == gf.k


def gf2_clmul(a: int,
              b: int) -> int:
    """
    Multiply two GF(2)[t] polynomials given as bit masks (bit *i* is the coefficient of *t^i*).
    """
    product: list[int] = gf_mul([int(c) for c in f"{a:b}"] if a else [],
                                [int(c) for c in f"{b:b}"] if b else [], 2, ZZ)
    return int("".join(str(int(c)) for c in product) or "0", 2)


def gf2_solve(rows: list[int],
              rhs: list[int],
              ncols: int) -> tuple[list[int] | None, list[int] | None]:
    """
    Solve the GF(2) linear system *M·x = b*, rows of *M* given as bit masks over *ncols* unknowns.

    When the system is inconsistent, a certificate *y* with *y·M = 0* and *y·b = 1* is returned,
    as the list of indices of the rows to add up.

    :param rows: the rows of the matrix, as bit masks
    :param rhs: the right-hand side bits
    :param ncols: the number of unknowns
    :return: the solution bits and *None*, or *None* and the certificate row indices
    """
    if not rows:
        return [0] * ncols, None
    gf2: Any = GF(2, symmetric=False)
    matrix: list[list[int]] = [[row >> col & 1 for col in range(ncols)] for row in rows]
    reduced, pivots = DomainMatrix.from_list([[*r, b & 1] for r, b in zip(matrix, rhs)], gf2).rref()

    if ncols in pivots:
        # some vector of the left kernel of M is not orthogonal to b
        kernel: list[list[Any]] = DomainMatrix.from_list(matrix, gf2).transpose().nullspace().to_list() \
            if ncols else [[gf2.one if i == j else gf2.zero for j in range(len(rows))] for i in range(len(rows))]
        for y in kernel:
            picked: list[int] = [i for i, v in enumerate(y) if int(v) % 2]
            if sum(rhs[i] for i in picked) % 2:
                return None, picked

    solution: list[int] = [0] * ncols
    dense: list[list[Any]] = reduced.to_list()
    for r, col in enumerate(pivots):
        solution[col] = int(dense[r][ncols]) % 2
    return solution, None
