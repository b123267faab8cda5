import pytest

from bqalg.consistency3 import Bq3
from bqalg.field import GF, QQ
from bqalg.fileformat import FileFormatError, format_presentation, parse_presentation, read_presentation


def test_full_form():
    P = parse_presentation("""
        n = 3; field = "fp:7"
        q = [2, 4, 2]      # comment
        A = [[0,0,1],[0,1,0],[1,0,0]]
        B = [0, 1/2, 0]
    """)
    assert P.K == GF(7)
    assert P.q == (GF(7)(2), GF(7)(4), GF(7)(2))
    assert P.b[1] == GF(7)(4)


def test_aliases_match_make():
    P = parse_presentation("q1 = 2\nalpha = 1\nlambda = -3\nb3 = 1/2")
    assert Bq3.from_presentation(P) == Bq3.make(QQ, q1=2, alpha=1, lam=-3, b3=QQ("1/2"))


def test_field_override():
    P = parse_presentation('field = "Q"\nq1 = 3', field=GF(5))
    assert P.K == GF(5)


def test_two_generators():
    P = parse_presentation("n = 2; q = [3]; A = [[1, 2]]; B = [7]")
    assert P.n == 2 and P.a == ((QQ(1), QQ(2)),)


@pytest.mark.parametrize("text, line, col", [
    ("q1 = 2\nq2 = 3 3", 2, 8),
    ("q1 = 0", 1, 6),
    ("foo = 1", 1, 1),
    ("q1 = 1\nq1 = 2", 2, 1),
    ("q = [1, 1, 1]\nq2 = 5", 2, 1),
    ("n = 2\nalpha = 1", 2, 1),
    ("A = [[0,0],[0,0,0],[0,0,0]]", 1, 6),
    ("q1 = @", 1, 6),
    ("field = \"fp:6\"", 1, 9),
    ("q1 = x", 1, 6),
])
def test_errors_carry_position(text, line, col):
    with pytest.raises(FileFormatError) as e:
        parse_presentation(text)
    assert (e.value.line, e.value.col) == (line, col)


def test_round_trip(rng):
    from bqalg.sampling import random_bq3

    for K in (QQ, GF(11)):
        for _ in range(10):
            P = random_bq3(K, rng).to_presentation()
            assert parse_presentation(format_presentation(P)) == P


def test_corpus_loads(corpus):
    for path in sorted(corpus.glob("*.bqa")):
        if path.name == "bad_syntax.bqa":
            with pytest.raises(FileFormatError):
                read_presentation(path)
        else:
            read_presentation(path)
