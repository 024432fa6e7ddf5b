from fractions import Fraction

from hypothesis import strategies as st

from polylogid.exactmath import Polynomial

small_fracs = st.builds(
    Fraction, st.integers(-20, 20), st.integers(1, 6)
)


@st.composite
def polynomials(draw, max_degree=5, nonzero_constant=False):
    cs = draw(st.lists(small_fracs, min_size=1, max_size=max_degree + 1))
    if nonzero_constant and cs[0] == 0:
        cs[0] = Fraction(1)
    return Polynomial(cs)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
