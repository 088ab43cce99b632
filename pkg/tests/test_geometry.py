import pytest

from annular_splines import AnnularPartition, Annulus, Segment


def test_partition_validation():
    with pytest.raises(ValueError):
        AnnularPartition((1.0,))
    with pytest.raises(ValueError):
        AnnularPartition((0.0, 1.0))
    with pytest.raises(ValueError):
        AnnularPartition((1.0, 1.0))
    with pytest.raises(ValueError):
        AnnularPartition((2.0, 1.0))


def test_partition_properties():
    part = AnnularPartition((1.0, 1.5, 2.0))
    assert part.n_nodes == 3
    assert part.n_segments == 2
    assert part.inner == 1.0
    assert part.outer == 2.0
    assert part.h_max == 0.5
    assert part.segment(1) == Segment(1.5, 2.0)
    assert len(part.segments()) == 2


def test_bisect_halves_h_max_exactly():
    part = AnnularPartition((1.0, 1.5, 2.0))
    fine = part.bisect()
    assert fine.radii == (1.0, 1.25, 1.5, 1.75, 2.0)
    assert fine.h_max == 0.5 * part.h_max
    # original nodes survive refinement
    assert set(part.radii) <= set(fine.radii)
    assert part.refine(0) is part
    assert part.refine(2).n_segments == 8


def test_annulus_validation_and_ratio():
    with pytest.raises(ValueError):
        Annulus(2.0, 1.0, 3)
    with pytest.raises(ValueError):
        Annulus(0.0, 1.0, 3)
    with pytest.raises(ValueError):
        Annulus(1.0, 2.0, 1)
    ann = Annulus(1.0, 4.0, 5)
    assert ann.ratio == 0.25
    assert ann.width == 3.0
    assert ann.segment == Segment(1.0, 4.0)


def test_partition_annulus_roundtrip():
    part = AnnularPartition((0.5, 1.0, 2.0))
    ann = part.annulus(2)
    assert (ann.inner, ann.outer, ann.dim) == (0.5, 2.0, 2)
