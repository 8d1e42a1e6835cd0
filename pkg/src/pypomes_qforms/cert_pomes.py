"""
Verdicts, certificates, and the independent certificate checker.

A decision carries a verdict and, for *yes* and *no*, a typed certificate holding everything needed
to re-validate it: the checker below recomputes from the certificate data alone, never from the
intermediate state of the decision procedure that produced it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import StrEnum
from logging import Logger
from typing import Any

from .obj_pomes import obj_to_dict


class Verdict(StrEnum):
    """
    Outcomes of a decision.
    """
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class CertKind(StrEnum):
    """
    Kinds of certificates.
    """
    ISOMETRY = "isometry-matrix"
    COEFFICIENTS = "coefficient-witness"
    VECTOR = "vector-witness"
    REPRESENTATION = "representation"
    RANK = "rank-obstruction"
    INVARIANT = "invariant-obstruction"
    WP_WITNESS = "wp-witness"
    WP_OBSTRUCTION = "wp-obstruction"
    NORM_SYMBOLS = "norm-symbols"
    MILNOR = "milnor-bundle"
    WITT = "witt-decomposition"
    SIMILARITY = "similarity"
    EXHAUSTIVE = "exhaustive"
    BOUND = "search-bound"


@dataclass(frozen=True)
class Certificate:
    kind: CertKind
    data: dict[str, Any] = field(default_factory=dict,
                                 hash=False)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": str(self.kind)} | obj_to_dict(obj=self.data)


@dataclass(frozen=True)
class DecisionOutcome:
    """
    A verdict plus the certificate backing it (for *unknown*, the exhausted bound).
    """
    verdict: Verdict
    certificate: Certificate | None = None

    @classmethod
    def yes(cls,
            kind: CertKind,
            **data: Any) -> DecisionOutcome:
        return cls(verdict=Verdict.YES,
                   certificate=Certificate(kind=kind,
                                           data=data))

    @classmethod
    def no(cls,
           kind: CertKind,
           **data: Any) -> DecisionOutcome:
        return cls(verdict=Verdict.NO,
                   certificate=Certificate(kind=kind,
                                           data=data))

    @classmethod
    def unknown(cls,
                **data: Any) -> DecisionOutcome:
        return cls(verdict=Verdict.UNKNOWN,
                   certificate=Certificate(kind=CertKind.BOUND,
                                           data=data))

    @property
    def is_yes(self) -> bool:
        return self.verdict == Verdict.YES

    @property
    def is_no(self) -> bool:
        return self.verdict == Verdict.NO

    @property
    def is_unknown(self) -> bool:
        return self.verdict == Verdict.UNKNOWN

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {"verdict": str(self.verdict)}
        if self.certificate:
            result["certificate"] = self.certificate.to_dict()
        return result


def cert_check(outcome: DecisionOutcome,
               errors: list[str] = None,
               logger: Logger = None) -> bool:
    """
    Re-validate the certificate of *outcome* from its data alone.

    An *unknown* outcome is valid when it carries the exhausted bound.

    :param outcome: the outcome to check
    :param errors: incidental error messages
    :param logger: optional logger
    :return: *True* if the certificate supports the verdict
    """
    # initialize the return variable
    result: bool = False

    cert: Certificate | None = outcome.certificate
    if outcome.is_unknown:
        result = cert is not None and cert.kind == CertKind.BOUND
    elif cert is not None:
        try:
            result = _CHECKERS[cert.kind](outcome.verdict, cert.data)
        except Exception as e:  # noqa: # noinspection PyBroadException
            from .obj_pomes import exc_format
            import sys
            msg: str = exc_format(exc=e,
                                  exc_info=sys.exc_info())
            if logger:
                logger.error(msg=msg)
            if isinstance(errors, list):
                errors.append(msg)
            result = False
    if not result and logger:
        logger.debug(msg=f"Certificate rejected: {outcome.verdict} / {cert.kind if cert else None}")

    return result


def _check_isometry(verdict: Verdict,
                    data: dict[str, Any]) -> bool:
    from .matrix_pomes import mat_det
    left = data["left"]
    right = data["right"]
    t = data["matrix"]
    if verdict != Verdict.YES or len(t) != left.dim or left.dim != right.dim:
        return False
    return bool(mat_det(left.tower, t)) and left.compose(t) == right


def _check_coefficients(verdict: Verdict,
                        data: dict[str, Any]) -> bool:
    x = data["target"]
    p: int = x.tower.p
    acc = x.tower.zero
    for s, g in zip(data["coefficients"], data["generators"], strict=True):
        acc = acc + s ** p * g
    return verdict == Verdict.YES and acc == x


def _check_rank(verdict: Verdict,
                data: dict[str, Any]) -> bool:
    from .frobenius_pomes import subspace_from_generators
    gens: list = list(data["generators"])
    x = data["element"]
    random.Random(len(gens)).shuffle(gens)
    before: int = subspace_from_generators(gens, tower=x.tower).dim
    after: int = subspace_from_generators([*gens, x], tower=x.tower).dim
    return verdict == Verdict.NO and after > before


def _check_vector(verdict: Verdict,
                  data: dict[str, Any]) -> bool:
    form = data["form"]
    v: list = data["vector"]
    return verdict == Verdict.YES and any(bool(x) for x in v) and form.evaluate(v) == data["value"]


def _check_representation(verdict: Verdict,
                          data: dict[str, Any]) -> bool:
    return _check_vector(verdict, data) and bool(data["value"])


def _check_wp_witness(verdict: Verdict,
                      data: dict[str, Any]) -> bool:
    w = data["w"]
    return verdict == Verdict.YES and w * w + w == data["c"]


def _check_wp_obstruction(verdict: Verdict,
                          data: dict[str, Any]) -> bool:
    from .decision_pomes import wp_linear_system
    from .field_pomes import sqrt
    c = data["c"]
    if verdict != Verdict.NO:
        return False
    match data["reason"]:
        case "trace":
            tower = c.tower
            return tower.nvars == 0 and tower is tower.base and \
                tower.gf.trace(c.raw[0][0][1] if c.raw[0] else 0) != 0
        case "denominator":
            tower = c.tower
            den = tower.element((c.raw[1], c.raw[1][:0] or tower.raw_one[1]))
            return tower is tower.base and sqrt(den) is None
        case "pole":
            from .place_pomes import has_places, place_from_label, same_place, wp_pole
            tower = c.tower
            if not has_places(tower):
                return False
            pole = wp_pole(c)
            place = place_from_label(tower, data["place"])
            return pole is not None and pole[1] % 2 == 1 and pole[1] == data["order"] and \
                place is not None and same_place(place, pole[0])
        case "odd-degree":
            nested: DecisionOutcome = data["outcome"]
            lower = nested.certificate.data["c"]
            tower = c.tower
            return nested.is_no and lower.tower is not tower and tower.has_level(lower.tower) and \
                tower.degree_over(lower.tower) % 2 == 1 and tower.coerce(lower) == c and cert_check(nested)
        case "linear":
            system = wp_linear_system(c)
            if system is None:
                return False
            rows, rhs = system
            mask: int = 0
            bit: int = 0
            for i in data["rows"]:
                mask ^= rows[i]
                bit ^= rhs[i]
            return mask == 0 and bit == 1
    return False


def _check_invariant(verdict: Verdict,
                     data: dict[str, Any]) -> bool:
    from . import decision_pomes as dp
    from .frobenius_pomes import subspace_from_generators, subspace_transporter
    if verdict != Verdict.NO:
        return False
    left = data.get("left")
    right = data.get("right")
    match data["invariant"]:
        case "dimension":
            return left.dim != right.dim
        case "radical-dimension":
            return len(left.radical()) != len(right.radical())
        case "zero-dimension":
            return dp.quad_normalize(left).zero != dp.quad_normalize(right).zero
        case "ts-dimension":
            return subspace_from_generators(left.diagonal(), tower=left.tower).dim != \
                subspace_from_generators(right.diagonal(), tower=right.tower).dim
        case "ts-part":
            nested: DecisionOutcome = data["outcome"]
            ln = dp.quad_normalize(left)
            rn = dp.quad_normalize(right)
            nd: dict[str, Any] = nested.certificate.data
            if nested.certificate.kind == CertKind.RANK:
                gens: list = list(nd["generators"])
                if sorted(map(str, gens)) not in (sorted(map(str, ln.ts)), sorted(map(str, rn.ts))):
                    return False
            return nested.is_no and cert_check(nested)
        case "binary-anisotropic":
            nested = data["outcome"]
            ln = dp.quad_normalize(left)
            if ln.hyperbolic or ln.zero or ln.ts or len(ln.blocks) != 1:
                return False
            a, b = ln.blocks[0]
            return nested.is_no and nested.certificate.data["c"] == a * b and cert_check(nested)
        case "arf":
            nested = data["outcome"]
            c = dp.arf_invariant(left).representative + dp.arf_invariant(right).representative
            return nested.is_no and nested.certificate.data["c"] == c and cert_check(nested)
        case "transporter":
            dl = subspace_from_generators(left.diagonal(), tower=left.tower)
            dr = subspace_from_generators(right.diagonal(), tower=right.tower)
            return dl.dim != dr.dim or subspace_transporter(dr, dl).dim == 0
        case "isotropy":
            outcomes: list[DecisionOutcome] = data["outcomes"]
            return len(outcomes) == 2 and all(cert_check(o) for o in outcomes) and \
                {o.verdict for o in outcomes} == {Verdict.YES, Verdict.NO}
        case "canonical":
            return dp.quad_canonical_invariants(left) != dp.quad_canonical_invariants(right)
        case "representation":
            from .place_pomes import local_symbol, place_from_label
            ln = dp.quad_normalize(left)
            rn = dp.quad_normalize(right)
            place = place_from_label(left.tower, data["place"])
            if place is None or dp.block_norm_symbols(ln, rn) is None:
                return False
            a, b = ln.blocks[0]
            c, _ = rn.blocks[0]
            return local_symbol(a * b, a * c, place) != 0
    return False


def _check_norm_symbols(verdict: Verdict,
                        data: dict[str, Any]) -> bool:
    from . import decision_pomes as dp
    from .place_pomes import local_symbol, symbol_places
    left = data["left"]
    right = data["right"]
    arf: DecisionOutcome = data["arf"]
    ln = dp.quad_normalize(left)
    rn = dp.quad_normalize(right)
    if verdict != Verdict.YES or left.dim != right.dim or dp.block_norm_symbols(ln, rn) is None:
        return False
    a, b = ln.blocks[0]
    c, d = rn.blocks[0]
    if not (arf.is_yes and arf.certificate.data["c"] == a * b + c * d and cert_check(arf)):
        return False
    # equal Arf invariants, and [a, b] represents c: the blocks are isometric
    return all(local_symbol(a * b, a * c, v) == 0 for v in symbol_places(a * b, a * c))


def _check_witt(verdict: Verdict,
                data: dict[str, Any]) -> bool:
    dec = data["decomposition"]
    if not dec.verify():
        return False
    if dec.is_bilinear:
        return (dec.anisotropic_dim == 0) == (verdict == Verdict.YES)
    # a quadratic decomposition proves anisotropy when it is a bare totally singular part
    return verdict == Verdict.NO and not (dec.hyperbolic or dec.zero or dec.blocks)


def _check_milnor(verdict: Verdict,
                  data: dict[str, Any]) -> bool:
    from .matrix_pomes import mat_direct_sum
    left = data["left"]
    right = data["right"]
    lw = data["left_witt"]
    rw = data["right_witt"]
    sw = data["sum_witt"]
    ts: DecisionOutcome = data["ts"]
    if not (lw.verify() and rw.verify() and sw.verify() and cert_check(ts)):
        return False
    if lw.form.gram != left.ns_part().gram or rw.form.gram != right.ns_part().gram:
        return False
    expected = mat_direct_sum(left.tower, lw.anisotropic, rw.anisotropic)
    if [list(r) for r in sw.form.gram] != [list(r) for r in expected]:
        return False
    ts_left = ts.certificate.data.get("left")
    ts_right = ts.certificate.data.get("right")
    if ts_left is not None and (ts_left.diagonal() != left.diagonal() or ts_right.diagonal() != right.diagonal()):
        return False
    agree: bool = sw.anisotropic_dim == 0 and ts.is_yes and \
        len(left.radical()) == len(right.radical())
    return agree == (verdict == Verdict.YES) and (agree or sw.anisotropic_dim > 0 or ts.is_no)


def _check_similarity(verdict: Verdict,
                      data: dict[str, Any]) -> bool:
    nested: DecisionOutcome = data["outcome"]
    c = data["factor"]
    left = data["left"]
    right = data["right"]
    if not c or not cert_check(nested) or nested.verdict != verdict:
        return False
    nd: dict[str, Any] = nested.certificate.data
    if "left" in nd and "right" in nd:
        return nd["left"] == left and nd["right"] == right.scale(c)
    return True


def _check_exhaustive(verdict: Verdict,
                      data: dict[str, Any]) -> bool:
    from .decision_pomes import finite_elements, is_finite
    left = data["left"]
    right = data["right"]
    tower = left.tower
    if verdict != Verdict.NO or not is_finite(tower):
        return False
    factors: list = [c for c, _ in data["outcomes"]]
    if len(factors) != len(set(factors)) or set(factors) != set(finite_elements(tower)):
        return False
    for c, nested in data["outcomes"]:
        nd: dict[str, Any] = nested.certificate.data
        if not nested.is_no or not cert_check(nested):
            return False
        if "left" in nd and "right" in nd and (nd["left"] != left or nd["right"] != right.scale(c)):
            return False
    return True


_CHECKERS: dict[CertKind, Any] = {
    CertKind.ISOMETRY: _check_isometry,
    CertKind.COEFFICIENTS: _check_coefficients,
    CertKind.VECTOR: _check_vector,
    CertKind.REPRESENTATION: _check_representation,
    CertKind.RANK: _check_rank,
    CertKind.INVARIANT: _check_invariant,
    CertKind.WP_WITNESS: _check_wp_witness,
    CertKind.WP_OBSTRUCTION: _check_wp_obstruction,
    CertKind.NORM_SYMBOLS: _check_norm_symbols,
    CertKind.MILNOR: _check_milnor,
    CertKind.WITT: _check_witt,
    CertKind.SIMILARITY: _check_similarity,
    CertKind.EXHAUSTIVE: _check_exhaustive
}
