"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from knotlab.seifert import CongruenceCertificate, SeifertMatrix


def genus_one(bound: int = 3):
    """Genus-one Seifert matrices with entries in [-bound, bound]."""

    def build(a11, a21, a22, up):
        return SeifertMatrix(((a11, a21 + up), (a21, a22)))

    entry = st.integers(-bound, bound)
    return st.builds(
        build,
        entry,
        st.integers(-bound + 1, bound - 1),
        entry,
        st.sampled_from((1, -1)),
    )


def unimodular(size: int = 2, ops: int = 5):
    """Products of elementary matrices: row swaps, negations, additions."""

    elementary = st.one_of(
        st.tuples(st.just("swap"), st.integers(0, size - 1), st.integers(0, size - 1)),
        st.tuples(st.just("neg"), st.integers(0, size - 1), st.just(0)),
        st.tuples(
            st.just("add"),
            st.integers(0, size - 1),
            st.tuples(st.integers(0, size - 1), st.integers(-2, 2)),
        ),
    )

    def build(moves):
        t = [[int(i == j) for j in range(size)] for i in range(size)]
        for move in moves:
            kind = move[0]
            if kind == "swap":
                _, i, j = move
                if i != j:
                    t[i], t[j] = t[j], t[i]
            elif kind == "neg":
                _, i, _z = move
                t[i] = [-x for x in t[i]]
            else:
                _, i, (j, c) = move
                if i != j:
                    t[i] = [x + c * y for x, y in zip(t[i], t[j])]
        return CongruenceCertificate(tuple(tuple(r) for r in t))

    return st.lists(elementary, max_size=ops).map(build)
