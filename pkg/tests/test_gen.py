from fractions import Fraction

import numpy as np
import pytest

from lyndonarrays import gen
from lyndonarrays.errors import InvalidInput
from lyndonarrays.gen import Family, FamilySpec


def test_splitmix_reference_outputs():
    assert gen.splitmix64(0, 3).tolist() == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix_offset_continues_stream():
    whole = gen.splitmix64(42, 10)
    assert np.array_equal(gen.splitmix64(42, 4, start=6), whole[6:])


def test_random_is_deterministic_and_in_alphabet():
    spec = FamilySpec(Family.RANDOM, 500, sigma=4, seed=9)
    a, b = gen.generate(spec), gen.generate(spec)
    assert a == b and len(a) == 500
    assert set(a) <= set(b"abcd")
    assert gen.generate(FamilySpec(Family.RANDOM, 500, sigma=4, seed=10)) != a


def test_structured_words():
    assert gen.fibonacci_word(13) == b"abaababaabaab"
    assert gen.thue_morse_word(8) == b"abbabaab"
    assert gen.run_rich_word(9) == b"abaabaaab"


@pytest.mark.parametrize("beta", [Fraction(1, 4), Fraction(2, 5), Fraction(1, 2)])
def test_border_heavy_has_border(beta):
    n = 1000
    w = gen.generate(FamilySpec(Family.BORDER_HEAVY, n, seed=3, border_fraction=beta))
    nb = int(beta * n)
    assert len(w) == n and w[:nb] == w[n - nb:]


def test_spec_validation():
    with pytest.raises(InvalidInput):
        FamilySpec(Family.RANDOM, 0)
    with pytest.raises(InvalidInput):
        FamilySpec(Family.RANDOM, 10, sigma=1)
    with pytest.raises(InvalidInput):
        FamilySpec(Family.BORDER_HEAVY, 10)
    with pytest.raises(InvalidInput):
        FamilySpec(Family.BORDER_HEAVY, 10, border_fraction=0.6)
    assert FamilySpec(Family.BORDER_HEAVY, 10, border_fraction=0.25).border_fraction == Fraction(1, 4)


def test_descriptor_round_trip(tmp_path):
    spec = FamilySpec(Family.BORDER_HEAVY, 64, sigma=3, seed=5, border_fraction=Fraction(2, 5))
    data, desc = gen.write_family(spec, tmp_path / "w.bin")
    assert desc.name == "w.bin.desc"
    assert gen.read_descriptor(desc) == spec
    assert data.read_bytes() == gen.generate(spec)


def test_malformed_descriptor(tmp_path):
    p = tmp_path / "bad.desc"
    p.write_text("n=3\n")
    with pytest.raises(InvalidInput):
        gen.read_descriptor(p)
