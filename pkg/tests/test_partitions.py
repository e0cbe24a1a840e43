import pytest

from plethtomo.partitions import (
    add,
    canonical,
    compositions_of,
    format_partition,
    height,
    is_partition,
    parse_partition,
    partitions_of,
    size,
    subtract,
    transpose,
    width,
)


def brute_transpose(lam):
    """Transpose by flipping the explicit box set of the Young diagram."""
    boxes = {(i, j) for i, row in enumerate(lam) for j in range(row)}
    flipped = {(j, i) for (i, j) in boxes}
    rows = {}
    for i, _ in flipped:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


TRANSPOSE_EXAMPLES = [
    ((3, 1), (2, 1, 1)),
    ((), ()),
    ((5, 5, 2), (3, 3, 2, 2, 2)),
    ((1,), (1,)),
    ((4,), (1, 1, 1, 1)),
]


@pytest.mark.parametrize("lam,expected", TRANSPOSE_EXAMPLES)
def test_transpose_examples(lam, expected):
    assert transpose(lam) == expected
    assert transpose(lam) == brute_transpose(lam)


def test_transpose_involution_exhaustive():
    for n in range(31):
        for lam in partitions_of(n):
            assert transpose(transpose(lam)) == lam
            assert size(transpose(lam)) == size(lam)


def test_height_width_duality():
    for n in range(15):
        for lam in partitions_of(n):
            assert height(lam) == width(transpose(lam))
            assert width(lam) == height(transpose(lam))


def test_transpose_rejects_non_partition():
    with pytest.raises(ValueError):
        transpose((1, 2))


def test_is_partition():
    assert is_partition((2, 2, 1))
    assert not is_partition((1, 2))
    assert is_partition((0,))
    assert is_partition(())


def test_size():
    assert size((3, 1)) == 4
    assert size(()) == 0
    assert size((4, 2, 2, 1)) == 9


def test_canonicalization_idempotent():
    for raw in [(3, 1, 0, 0), (0,), (), (2, 0, 1, 0)]:
        once = canonical(raw)
        assert canonical(once) == once
        assert not once or once[-1] != 0


def test_canonical_rejects_negative():
    with pytest.raises(ValueError):
        canonical((1, -1))


def test_arbitrary_precision_entries():
    big = 10**30
    assert size((big, big)) == 2 * big
    assert canonical((big, 0)) == (big,)
    assert add((big,), (big,)) == (2 * big,)


def test_add_subtract():
    assert add((2, 1), (0, 1, 3)) == (2, 2, 3)
    assert subtract((2, 2, 3), (0, 1, 3)) == (2, 1)
    assert subtract((1,), (2,)) is None


def test_parse_format_roundtrip():
    for lam in [(3, 1), (), (10, 10, 1)]:
        assert parse_partition(format_partition(lam)) == lam
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition("[]") == ()
    with pytest.raises(ValueError):
        parse_partition("3,1")
    with pytest.raises(ValueError):
        parse_partition("[a]")


def test_partitions_of_counts():
    # partition numbers p(0..9)
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    for n, want in enumerate(expected):
        assert len(list(partitions_of(n))) == want
    assert all(is_partition(p) for p in partitions_of(8))


def test_compositions_of():
    assert len(list(compositions_of(3, 2))) == 4
    assert set(compositions_of(2, 2)) == {(2, 0), (1, 1), (0, 2)}
