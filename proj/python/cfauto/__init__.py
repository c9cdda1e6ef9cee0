"""Python front end to the cfauto C++ library."""

from ._core import (
    CfautoError,
    automaton,
    check_examples,
    derive,
    search,
    sequence,
    specialize,
    verify,
)

__all__ = [
    "CfautoError",
    "automaton",
    "check_examples",
    "derive",
    "search",
    "sequence",
    "specialize",
    "verify",
]
