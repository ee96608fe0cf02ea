from fractions import Fraction

import pytest

from bkcohom.rootsys import ParabolicData, build_root_system

CASES = [("A2", ()), ("B2", ()), ("A3", ()), ("A3", (2,)), ("A3", (1, 3)), ("G2", ())]
SMALL = [("A2", ()), ("B2", ()), ("A3", (2,)), ("A3", (1, 3))]


def parabolic(type_: str, I=()) -> ParabolicData:
    return ParabolicData.make(build_root_system(type_), tuple(I))


def case_id(c) -> str:
    return f"{c[0]}-I{''.join(map(str, c[1])) or '0'}"


@pytest.fixture(params=CASES, ids=case_id)
def case(request) -> ParabolicData:
    return parabolic(*request.param)


@pytest.fixture(params=SMALL, ids=case_id)
def small_case(request) -> ParabolicData:
    return parabolic(*request.param)


def F(*xs):
    return tuple(Fraction(x) for x in xs)
