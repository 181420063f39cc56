"""Finite orthomodular lattice toolkit (Python bindings)."""

import json as _json

from ._core import (
    BudgetExceeded,
    DefinitionMismatch,
    FormatError,
    Inconclusive,
    Lattice,
    LatticeError,
    NotBoolean,
    OmlError,
    blocks,
    boolean_algebra,
    build_lattice,
    center,
    check_coloring,
    check_triple,
    classical_consequences,
    diamond,
    global_valuation,
    is_boolean,
    load,
    mks_check,
    mo,
    modal_axioms,
    parse_lattice_document,
    paste_greechie,
    possibility_space,
    product,
    to_cnf,
    to_dot,
    to_lattice_document,
)
from ._core import analyze_json as _analyze_json


def analyze(path, *, center=False, blocks=False, diamond=False, ks=False, mks=False, cons=None,
            budget=10_000_000):
    """Run the analyze pipeline; returns (report dict, exit code)."""
    text, code = _analyze_json(str(path), center, blocks, diamond, ks, mks, cons, budget)
    return _json.loads(text), code


__all__ = [name for name in dir() if not name.startswith("_")]
