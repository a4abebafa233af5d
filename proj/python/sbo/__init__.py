from ._core import (
    NotAdmissibleError,
    ParseError,
    ZeroMError,
    classify,
    compare_kkp,
    emit,
    solve,
    verify_point,
)

__all__ = [
    "classify",
    "solve",
    "emit",
    "compare_kkp",
    "verify_point",
    "ZeroMError",
    "NotAdmissibleError",
    "ParseError",
]
