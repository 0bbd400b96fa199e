import itertools

import pytest

import polycrystal as pc


def capped_ball(positions, total_cap):
    """All nonnegative assignments to the given positions with entry sum <= cap."""
    positions = list(positions)

    def rec(idx, remaining):
        if idx == len(positions):
            yield {}
            return
        for v in range(remaining + 1):
            for rest in rec(idx + 1, remaining - v):
                if v:
                    rest = dict(rest)
                    rest[positions[idx]] = v
                yield rest

    yield from rec(0, total_cap)


def dominant_weights(cartan, bound):
    """All dominant weights with coefficient sum <= bound."""
    out = []
    for total in range(bound + 1):
        for split in itertools.product(range(total + 1), repeat=cartan.rank - 1):
            coeffs = list(split)
            rest = total - sum(coeffs)
            if rest < 0:
                continue
            coeffs.append(rest)
            out.append(pc.Weight(cartan, tuple(coeffs)))
    return sorted(set(out), key=lambda w: (sum(w.coeffs), w.coeffs))


@pytest.fixture
def a2():
    c = pc.rank2(1, 1)
    return c, pc.standard_iota(c)


@pytest.fixture
def skewed_a3():
    """Type A_3 with the period whose first entries read 1,2,3,2,1,2."""
    c = pc.type_a(3)
    return c, pc.IotaSequence.from_display(c, "2,3,2,1")
