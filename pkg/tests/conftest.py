from fractions import Fraction

from hypothesis import settings, strategies as st

from hyperjack.partitions import Partition, partitions_up_to

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

rationals = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=9),
)
nonzero_rationals = rationals.filter(bool)


def partition_strategy(max_weight, max_length=None):
    return st.sampled_from([Partition(lam) for lam in partitions_up_to(max_weight, max_length)])


@st.composite
def raw_partitions(draw, max_weight=20):
    """Random partition built from a random multiset of parts (not from the enumerator)."""
    total = draw(st.integers(min_value=0, max_value=max_weight))
    parts = []
    while total:
        x = draw(st.integers(min_value=1, max_value=total))
        parts.append(x)
        total -= x
    return Partition(sorted(parts, reverse=True))


# lines collected by test_acceptance, shown at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
