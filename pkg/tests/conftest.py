import csv
import functools
import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from naqm.algebra import DIM, AlgebraElement, BasisUnit, Subalgebra, scalar, subalgebra_units, unit
from naqm.brackets import associator, commutator, na_bracket
from naqm.expr import Add, Basis, Bracket3, Call, Mul, Neg, ScalarLit, Sub

FIXTURES = Path(__file__).parent / "fixtures"

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def fixture_table():
    """Independently keyed table: {(row_token, col_token): cell_token}."""
    with open(FIXTURES / "sedenion_table.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    header = rows[0][1:]
    return {(r[0], c): cell for r in rows[1:] for c, cell in zip(header, r[1:])}


def elements(units=None, lo=-4, hi=4, complex_coeffs=True):
    """Hypothesis strategy: exact small-integer (Gaussian) elements on ``units``."""
    idx = sorted(int(u) for u in (units or BasisUnit))
    ints = st.integers(lo, hi)
    coeff = st.builds(complex, ints, ints) if complex_coeffs else ints.map(complex)

    def build(vals):
        c = [0j] * DIM
        for k, v in zip(idx, vals):
            c[k] = v
        return AlgebraElement(c)

    return st.lists(coeff, min_size=len(idx), max_size=len(idx)).map(build)


def span(sub: Subalgebra, **kw):
    return elements(subalgebra_units(sub), **kw)


def _random_ast(rng: random.Random, depth: int):
    """Return (tree, value, text) built in lockstep from library calls."""
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.6:
            u = rng.choice(list(BasisUnit)[1:])
            return Basis(u), unit(u), u.token
        if r < 0.8:
            v = rng.randint(0, 5)
            return ScalarLit(complex(v)), scalar(v), str(v)
        return ScalarLit(1j), scalar(1j), "I"
    op = rng.choice(["neg", "add", "sub", "mul", "br", "comm", "assoc"])
    arity = {"neg": 1, "add": 2, "sub": 2, "mul": 2, "comm": 2, "br": 3, "assoc": 3}[op]
    kids = [_random_ast(rng, depth - 1) for _ in range(arity)]
    trees = [k[0] for k in kids]
    vals = [k[1] for k in kids]
    texts = [f"({k[2]})" for k in kids]
    if op == "neg":
        return Neg(trees[0]), -vals[0], f"-{texts[0]}"
    if op in ("add", "sub", "mul"):
        node = {"add": Add, "sub": Sub, "mul": Mul}[op](*trees)
        val = {"add": vals[0] + vals[1], "sub": vals[0] - vals[1], "mul": vals[0] * vals[1]}[op]
        sym = {"add": "+", "sub": "-", "mul": "*"}[op]
        return node, val, f"{texts[0]} {sym} {texts[1]}"
    if op == "br":
        return Bracket3(*trees), na_bracket(*vals), f"[{', '.join(texts)}]"
    fn = commutator if op == "comm" else associator
    return Call(op, tuple(trees)), fn(*vals), f"{op}({', '.join(texts)})"


@functools.lru_cache(maxsize=None)
def random_asts(count: int, max_depth: int, seed: int) -> tuple:
    rng = random.Random(seed)
    return tuple(_random_ast(rng, rng.randint(0, max_depth)) for _ in range(count))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
