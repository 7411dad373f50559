"""Sorted recurrent sandpile configurations on complete split graphs."""

from ._sandlab import (
    Configuration,
    DomainError,
    ParseError,
    PreconditionError,
    SandlabError,
    Shape,
    area,
    bounce,
    class_members,
    count_itc,
    height,
    is_recurrent,
    is_schroder,
    itc_sequences,
    level,
    mirror,
    phi,
    phi_inv,
    polynomial,
    polynomial_latex,
    polyomino,
    render_polyomino_svg,
    schroder_words,
    sorted_recurrent,
    sorted_recurrent_count,
    stabilize,
    topple_cti,
    topple_itc,
    wtopple,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
