"""Small oracles and strategies shared by the tests."""

from hypothesis import strategies as st

from hallsym.hallcore import HallElement
from hallsym.partition import Partition, partitions_of
from hallsym.qrat import QPoly, QRat


def euler_partition_count(n):
    """p(n) by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def I(*parts):
    return HallElement.basis_element("I", parts)


def partitions_upto(d):
    return [lam for k in range(d + 1) for lam in partitions_of(k)]


def partition_strategy(max_size=6, min_size=0):
    return st.integers(min_size, max_size).flatmap(lambda n: st.sampled_from(partitions_of(n)))


small_ints = st.integers(-5, 5)

qpolys = st.dictionaries(st.integers(-3, 4), st.integers(-6, 6), max_size=4).map(QPoly)

qrats = st.tuples(qpolys, qpolys.filter(bool)).map(lambda nd: QRat(*nd))


def element_strategy(basis=None, max_degree=6):
    bases = st.sampled_from(["I", "X", "e", "P", "Q", "p"]) if basis is None else st.just(basis)
    return st.tuples(
        bases,
        st.dictionaries(partition_strategy(max_degree), qrats, max_size=4),
    ).map(lambda bt: HallElement(bt[0], bt[1]))
