"""Shared hypothesis strategies for formula generation."""

import hypothesis.strategies as st

from boolops.formula import App, Connective, Const, Not, Var

NAMES = ("a", "b", "c", "x", "y", "z_0")

BINARY_OPS = (
    Connective.IMPLIES,
    Connective.CONVERSE_IMPLIES,
    Connective.NON_IMPLIES,
    Connective.CONVERSE_NON_IMPLIES,
    Connective.EQUIV,
)
FLAT_OPS = (Connective.AND, Connective.OR, Connective.XOR)
DUAL_OPS = (Connective.NAND, Connective.NOR)


def formulas(max_leaves=12, *, kary_duals=False):
    """Random formula trees.

    With ``kary_duals`` NAND/NOR also appear with 3-4 operands, which the
    concrete grammar cannot denote (chains parse left-nested); leave it
    off to generate only parser-image structures.
    """
    leaves = st.one_of(
        st.builds(Var, st.sampled_from(NAMES)),
        st.builds(Const, st.sampled_from((0, 1))),
    )
    dual_max = 4 if kary_duals else 2

    def extend(children):
        return st.one_of(
            st.builds(Not, children),
            st.builds(
                lambda op, a, b: App(op, (a, b)),
                st.sampled_from(BINARY_OPS),
                children,
                children,
            ),
            st.builds(
                lambda op, xs: App(op, tuple(xs)),
                st.sampled_from(FLAT_OPS),
                st.lists(children, min_size=2, max_size=4),
            ),
            st.builds(
                lambda op, xs: App(op, tuple(xs)),
                st.sampled_from(DUAL_OPS),
                st.lists(children, min_size=2, max_size=dual_max),
            ),
            st.builds(
                lambda a, b, c: App(Connective.MAJ, (a, b, c)),
                children,
                children,
                children,
            ),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)
