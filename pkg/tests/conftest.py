import pytest
from fractions import Fraction

from equideg.burnside import table_of_marks
from equideg.groups import generate_group, subgroup_classes, subgroup_from_indices
from equideg.linalg import RationalMatrix
from equideg.perm import Permutation
from equideg.reps import OrthogonalRep


@pytest.fixture(scope="session")
def s3():
    return generate_group([Permutation([1, 0, 2]), Permutation([1, 2, 0])])


@pytest.fixture(scope="session")
def c2():
    return generate_group([Permutation([1, 0])])


@pytest.fixture(scope="session")
def s3_table(s3):
    return subgroup_classes(s3)


@pytest.fixture(scope="session")
def c2_table(c2):
    return subgroup_classes(c2)


@pytest.fixture(scope="session")
def s3_marks(s3_table):
    return table_of_marks(s3_table)


@pytest.fixture(scope="session")
def c2_marks(c2_table):
    return table_of_marks(c2_table)


@pytest.fixture(scope="session")
def sign_rep(c2):
    return OrthogonalRep(
        c2, 1, (RationalMatrix([[1]]), RationalMatrix([[-1]]))
    )


@pytest.fixture(scope="session")
def swap_rep(c2):
    eye = RationalMatrix.identity(2)
    swap = RationalMatrix([[0, 1], [1, 0]])
    return OrthogonalRep(c2, 2, (eye, swap))


@pytest.fixture(scope="session")
def corpus_tables():
    """Marks tables for the whole corpus, built once."""
    from equideg.corpus import corpus_groups

    out = {}
    for name, G in corpus_groups():
        out[name] = table_of_marks(subgroup_classes(G))
    return out
