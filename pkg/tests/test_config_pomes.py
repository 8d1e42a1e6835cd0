import pytest

from pypomes_qforms import QformsParam, qforms_get, qforms_setup
from pypomes_qforms.env_pomes import env_get_enum, env_get_int, env_get_str
from pypomes_qforms.validation_pomes import MsgLang


@pytest.fixture
def restore_config():
    saved: dict = {p: qforms_get(p) for p in QformsParam}
    yield
    qforms_setup(**{str(p): v for p, v in saved.items()})


@pytest.mark.usefixtures("restore_config")
def test_qforms_setup() -> None:
    budget: int = qforms_get(QformsParam.SEARCH_BUDGET)
    qforms_setup(seed=42,
                 log_level="info")
    assert qforms_get(QformsParam.SEED) == 42
    assert qforms_get(QformsParam.LOG_LEVEL) == "INFO"
    # parameters not given keep their values
    assert qforms_get(QformsParam.SEARCH_BUDGET) == budget


def test_defaults() -> None:
    assert qforms_get(QformsParam.CHARACTERISTIC) in (2, 3, 5, 7)
    assert qforms_get(QformsParam.DEGREE_CAP) > 0


def test_env_get(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QF_TEST_INT", "7")
    monkeypatch.setenv("QF_TEST_BAD", "seven")
    monkeypatch.setenv("QF_TEST_STR", "Info")
    monkeypatch.setenv("QF_TEST_ENUM", "pt")
    assert env_get_int(key="QF_TEST_INT") == 7
    assert env_get_int(key="QF_TEST_INT", values=[2, 3], def_value=2) == 2
    assert env_get_int(key="QF_TEST_BAD", def_value=1) == 1
    assert env_get_int(key="QF_TEST_INT", min_value=8, def_value=8) == 8
    assert env_get_int(key="QF_TEST_MISSING") is None
    assert env_get_str(key="QF_TEST_STR", values=["INFO"], ignore_case=True) == "Info"
    assert env_get_str(key="QF_TEST_STR", values=["INFO"]) is None
    assert env_get_enum(key="QF_TEST_ENUM", enum_class=MsgLang) == MsgLang.PT
    assert env_get_enum(key="QF_TEST_MISSING", enum_class=MsgLang, def_value=MsgLang.EN) == MsgLang.EN
