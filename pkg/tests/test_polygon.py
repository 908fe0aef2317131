import pytest

from quadsquares.errors import DegeneratePolygon
from quadsquares.polygon import scale_of, segments_intersect, shoelace, validate_simple


def test_shoelace_sign():
    sq = [0, 1, 1 + 1j, 1j]
    assert shoelace(sq) == pytest.approx(1.0)
    assert shoelace(sq[::-1]) == pytest.approx(-1.0)


def test_scale_is_max_pairwise_distance():
    assert scale_of([0, 3, 3 + 4j]) == pytest.approx(5.0)


@pytest.mark.parametrize("a,b,c,d,hit", [
    (0, 2, 1 - 1j, 1 + 1j, True),
    (0, 1, 2, 3, False),
    (0, 2, 1, 3, True),        # collinear overlap
    (0, 1, 1, 1 + 1j, True),   # shared endpoint
    (0, 1, 0.5 + 1e-3j, 0.5 + 1j, False),
])
def test_segments_intersect(a, b, c, d, hit):
    assert segments_intersect(a, b, c, d) is hit


def test_validate_simple_rejects_bowtie():
    with pytest.raises(DegeneratePolygon):
        validate_simple([0, 1 + 1j, 1, 1j])
    validate_simple([0, 1, 1 + 1j, 1j])
