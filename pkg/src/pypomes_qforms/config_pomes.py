from enum import StrEnum, auto
from typing import Any

from .env_pomes import APP_PREFIX, env_get_int, env_get_str


class QformsParam(StrEnum):
    """
    Parameters for the algebra engine and the theorem suites.
    """
    DEGREE_CAP = auto()
    SPEC_TRIES = auto()
    SPEC_MAX_BITS = auto()
    SEARCH_BUDGET = auto()
    SEED = auto()
    SEEDS = auto()
    CHARACTERISTIC = auto()
    ORACLE_CAP = auto()
    GEN_ATTEMPTS = auto()
    LOG_LEVEL = auto()


_QFORMS_CONFIG: dict[QformsParam, Any] = {
    QformsParam.DEGREE_CAP: env_get_int(key=f"{APP_PREFIX}_QFORMS_DEGREE_CAP",
                                        min_value=1,
                                        def_value=16),
    QformsParam.SPEC_TRIES: env_get_int(key=f"{APP_PREFIX}_QFORMS_SPEC_TRIES",
                                        min_value=1,
                                        def_value=8),
    QformsParam.SPEC_MAX_BITS: env_get_int(key=f"{APP_PREFIX}_QFORMS_SPEC_MAX_BITS",
                                           min_value=1,
                                           def_value=12),
    QformsParam.SEARCH_BUDGET: env_get_int(key=f"{APP_PREFIX}_QFORMS_SEARCH_BUDGET",
                                           min_value=0,
                                           def_value=2),
    QformsParam.SEED: env_get_int(key=f"{APP_PREFIX}_QFORMS_SEED",
                                  min_value=0,
                                  def_value=0),
    QformsParam.SEEDS: env_get_int(key=f"{APP_PREFIX}_QFORMS_SEEDS",
                                   min_value=1,
                                   def_value=200),
    QformsParam.CHARACTERISTIC: env_get_int(key=f"{APP_PREFIX}_QFORMS_CHARACTERISTIC",
                                            values=[2, 3, 5, 7],
                                            def_value=2),
    QformsParam.ORACLE_CAP: env_get_int(key=f"{APP_PREFIX}_QFORMS_ORACLE_CAP",
                                        min_value=1,
                                        def_value=200000),
    QformsParam.GEN_ATTEMPTS: env_get_int(key=f"{APP_PREFIX}_QFORMS_GEN_ATTEMPTS",
                                          min_value=1,
                                          def_value=24),
    QformsParam.LOG_LEVEL: env_get_str(key=f"{APP_PREFIX}_QFORMS_LOG_LEVEL",
                                       values=["DEBUG", "INFO", "WARNING", "ERROR"],
                                       ignore_case=True,
                                       def_value="WARNING")
}


def qforms_setup(degree_cap: int = None,
                 spec_tries: int = None,
                 spec_max_bits: int = None,
                 search_budget: int = None,
                 seed: int = None,
                 seeds: int = None,
                 characteristic: int = None,
                 oracle_cap: int = None,
                 gen_attempts: int = None,
                 log_level: str = None) -> None:
    """
    Configure the algebra engine.

    Invoking this function overrides the configuration parameters obtained from environment variables.
    Parameters not specified retain their current values.

    :param degree_cap: maximum total degree of a tower over its rational base
    :param spec_tries: number of specializations tried by the irreducibility certificate
    :param spec_max_bits: specialization fields hold at most *2^spec_max_bits* elements
    :param search_budget: coefficient-degree bound for representation and isometry searches
    :param seed: default seed for generators and suites
    :param seeds: default number of seeds per suite
    :param characteristic: characteristic for suites whose mode allows it
    :param oracle_cap: largest enumeration an oracle may undertake
    :param gen_attempts: candidate polynomials tried before giving up on an instance
    :param log_level: logging level for the command-line front end
    """
    global _QFORMS_CONFIG
    overrides: dict[QformsParam, Any] = {
        QformsParam.DEGREE_CAP: degree_cap,
        QformsParam.SPEC_TRIES: spec_tries,
        QformsParam.SPEC_MAX_BITS: spec_max_bits,
        QformsParam.SEARCH_BUDGET: search_budget,
        QformsParam.SEED: seed,
        QformsParam.SEEDS: seeds,
        QformsParam.CHARACTERISTIC: characteristic,
        QformsParam.ORACLE_CAP: oracle_cap,
        QformsParam.GEN_ATTEMPTS: gen_attempts,
        QformsParam.LOG_LEVEL: log_level.upper() if log_level else None
    }
    _QFORMS_CONFIG = _QFORMS_CONFIG | {k: v for k, v in overrides.items() if v is not None}


def qforms_get(param: QformsParam) -> Any:
    """
    Retrieve the current value of the configuration parameter *param*.

    :param param: the configuration parameter
    :return: its current value
    """
    return _QFORMS_CONFIG.get(param)
