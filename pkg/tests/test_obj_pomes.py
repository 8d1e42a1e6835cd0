import sys

from pypomes_qforms import FieldElement, FieldTower, Verdict, exc_format, obj_to_dict


def test_obj_to_dict(f_t: FieldTower, t: FieldElement) -> None:
    data = obj_to_dict(obj={"x": t + 1, "field": f_t, "verdict": Verdict.YES, "vals": (t, 1)})
    assert data == {"x": "t + 1", "field": "GF(2)(t)", "verdict": "yes", "vals": ["t", 1]}
    assert obj_to_dict(obj=t, canonical=True) == t.to_dict()


def test_exc_format() -> None:
    try:
        raise ValueError("no root")
    except ValueError as e:
        msg: str = exc_format(exc=e,
                              exc_info=sys.exc_info())
    assert msg.startswith("test_obj_pomes.py, ")
    assert msg.endswith("builtins.ValueError - no root")
