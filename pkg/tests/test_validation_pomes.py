import pytest

from pypomes_qforms import (
    DimensionMismatch, QformsError,
    validate_format_error, validate_int, validate_keys, validate_range, validate_str
)
from pypomes_qforms.validation_pomes import MsgLang


def test_format_error() -> None:
    assert validate_format_error(309, 2, 4) == "QF309: Dimension mismatch: '2' and '4'"
    assert validate_format_error(309, 2, 4, msg_prefix=None) == "Dimension mismatch: '2' and '4'"
    assert validate_format_error(309, 2, 4, msg_lang=MsgLang.PT) == "QF309: Dimensões incompatíveis: '2' e '4'"
    # arguments holding blanks are not quoted
    assert validate_format_error(102, "bad thing") == "QF102: Unexpected error: bad thing"
    assert validate_format_error(311, "@factor") == "QF311: Similarity factor must be nonzero @factor"


def test_error_classes() -> None:
    with pytest.raises(QformsError) as exc:
        raise DimensionMismatch(2, 3)
    assert str(exc.value) == "QF309: Dimension mismatch: '2' and '3'"
    assert exc.value.args_msg == (2, 3)


def test_validate_int() -> None:
    errors: list[str] = []
    assert validate_int(source={"seeds": "5"}, attr="seeds", min_val=1, errors=errors) == 5
    assert validate_int(source={}, attr="seeds", default=3) == 3
    assert validate_int(source={}, attr="seeds") is None
    assert validate_int(source={"seeds": "five"}, attr="seeds", errors=errors) is None
    assert validate_int(source={"seeds": 0}, attr="seeds", min_val=1, errors=errors) is None
    assert validate_int(source={"p": "4"}, attr="p", min_val=2, max_val=3, errors=errors) is None
    assert errors == [
        "QF152: Invalid value 'five': must be type 'int' @seeds",
        "QF144: Invalid value '0': must be greater than '0' @seeds",
        "QF151: Invalid value '4': must be in the range '[2, 3]' @p"
    ]


def test_validate_str() -> None:
    errors: list[str] = []
    assert validate_str(source={"mode": "ts"}, attr="mode", values=["ts", "bilinear"]) == "ts"
    assert validate_str(source={}, attr="mode", default="ts") == "ts"
    assert validate_str(source={"mode": "odd"}, attr="mode", values=["ts"], errors=errors) is None
    assert validate_str(source={"mode": 1}, attr="mode", errors=errors) is None
    assert errors == [
        "QF149: Invalid value 'odd': must be 'ts' @mode",
        "QF152: Invalid value '1': must be type 'str' @mode"
    ]


def test_validate_range() -> None:
    errors: list[str] = []
    assert validate_range(source={"degrees": "2..5"}, attr="degrees", min_val=2) == [2, 3, 4, 5]
    assert validate_range(source={"degrees": "3"}, attr="degrees") == [3]
    assert validate_range(source={}, attr="degrees") is None
    assert validate_range(source={"degrees": "1..3"}, attr="degrees", min_val=2, errors=errors) is None
    assert validate_range(source={"degrees": "5..2"}, attr="degrees", errors=errors) is None
    assert errors == [
        "QF153: Invalid range '1..3': must be a..b, with '2' <= a <= b @degrees",
        "QF153: Invalid range '5..2': must be a..b, with '0' <= a <= b @degrees"
    ]


def test_validate_keys() -> None:
    errors: list[str] = []
    assert validate_keys(source={"seeds": "2"}, keys=["seeds", "mode"])
    assert not validate_keys(source={"colour": "red", "seeds": "2"}, keys=["seeds"], errors=errors)
    assert errors == ["QF154: Unknown option '--colour': must be one of '['--seeds']'"]
