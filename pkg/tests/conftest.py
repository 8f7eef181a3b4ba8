import hypothesis.strategies as st

from epist2int.syntax import FALSUM, Atom, Box, Conj, Disj, Impl

_leaves = st.sampled_from([Atom("p"), Atom("q"), Atom("r"), FALSUM])


def ip_formulas(max_leaves: int = 8):
    return st.recursive(
        _leaves,
        lambda sub: st.one_of(
            st.builds(Conj, sub, sub),
            st.builds(Disj, sub, sub),
            st.builds(Impl, sub, sub),
        ),
        max_leaves=max_leaves,
    )


def ep_formulas(max_leaves: int = 8):
    return st.recursive(
        _leaves,
        lambda sub: st.one_of(
            st.builds(Conj, sub, sub),
            st.builds(Disj, sub, sub),
            st.builds(Impl, sub, sub),
            st.builds(Box, sub),
        ),
        max_leaves=max_leaves,
    )
