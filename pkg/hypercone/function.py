"""An enum stating the main functions of hypercone."""

from ._compat import StrEnum


class Function(StrEnum):
    """The function to perform on hypercone."""

    EIG = "eig"
    PROJECT = "project"
    SOLVE = "solve"
    BENCH = "bench"
