import pytest

from greenring import ParseError, Poly, make_ring
from greenring.parser import MAX_EXPONENT, parse, parse_element, parse_poly


def test_precedence():
    assert parse_poly("-Z^2") == -(Poly.Z() ** 2)
    assert parse_poly("2*Z^2 - Y") == Poly.Z() ** 2 * 2 - Poly.Y()
    assert parse_poly("(1 + Y)^2") == parse_poly("1 + 2*Y + Y^2")
    assert parse_poly("Z - Y - 1") == Poly.Z() - Poly.Y() - 1


def test_juxtaposition():
    assert parse_poly("2Y Z") == parse_poly("2*Y*Z")
    assert parse_poly("(Y + 1)(Y - 1)") == parse_poly("Y^2 - 1")


def test_case_and_dickson_names():
    assert parse_poly("y*z") == parse_poly("Y*Z")
    assert parse_poly("F_4") == parse_poly("Z^3 - 2*Y*Z")


def test_division_by_constant():
    assert str(parse_poly("Y/2 + Z/(1+1)")) == "1/2*Z + 1/2*Y"


@pytest.mark.parametrize("src, offset", [
    ("", 0), ("Y +", 3), ("Y $ Z", 2), ("(Y", 2), ("Y)", 1), ("Y^Z", 2), ("Y / Z", 4),
    ("1/0", 1), ("F_0", 0),
])
def test_errors_carry_offsets(src, offset):
    with pytest.raises(ParseError) as exc:
        parse_poly(src)
    assert exc.value.offset == offset
    assert f"offset {offset}" in str(exc.value)


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as exc:
        parse_poly("Y + é")
    assert exc.value.offset == 4
    with pytest.raises(ParseError) as exc:
        parse_poly("é")
    assert exc.value.offset == 0


def test_exponent_cap():
    with pytest.raises(ParseError):
        parse(f"Y^{MAX_EXPONENT + 1}")
    parse(f"Y^{MAX_EXPONENT}")


def test_x_variables_need_context():
    with pytest.raises(ParseError):
        parse_poly("X1")
    assert parse_poly("X2", 2) == Poly.X(2, 2)
    with pytest.raises(ParseError):
        parse_poly("X3", 2)


def test_parse_element_rings():
    assert str(parse_element("X1^2", make_ring("radford", 2, 2))) == "Y*Z + Z"
    assert str(parse_element("F_2^2", make_ring("stable", 4))) == "F_3 + y*F_1"
    assert str(parse_element("Y^3 + X1", make_ring("grothendieck", 3, 2))) == "X1 + 1"


def test_parse_element_rejections():
    with pytest.raises(ParseError):
        parse_element("X1", make_ring("stable", 4))
    with pytest.raises(ParseError):
        parse_element("Z", make_ring("grothendieck", 3, 2))
    with pytest.raises(ParseError):
        parse_element("F_2", make_ring("grothendieck", 3, 2))
    assert parse_element("F_1", make_ring("grothendieck", 3, 2)) == make_ring("grothendieck", 3, 2).one()
    with pytest.raises(ParseError):
        parse_element("X3", make_ring("radford", 3, 3))


def test_element_division():
    spec = make_ring("radford", 3, 3)
    assert parse_element("X1^2 / 3", spec) == parse_element("X2", spec)
    with pytest.raises(ParseError):
        parse_element("X1 / 2", spec)
    with pytest.raises(ParseError):
        parse_element("1/2", spec)


def test_element_round_trip(spec, rng):
    from conftest import random_element

    for _ in range(20):
        e = random_element(spec, rng)
        assert parse_element(str(e), spec) == e


def test_examples_in_context():
    assert str(parse_element("Z^2 - Y", make_ring("radford", 2, 2))) == "Y*Z + Z - Y"
    assert parse_element("1", make_ring("stable", 3)) == make_ring("stable", 3).one()
    spec = make_ring("stable", 4)
    assert parse_element("y^2*F_3", spec) == spec.basis_element(spec.labels.index("y^2*F_3"))


@pytest.mark.parametrize("kind", ["radford", "grothendieck", "stable"])
def test_round_trip_500_per_kind(kind):
    import random

    rng = random.Random(kind)
    specs = [make_ring(kind, n, m) for n in range(2, 7) for m in range(1, 5)]
    for t in range(500):
        spec = specs[t % len(specs)]
        e = spec.from_vector([rng.randint(-5, 5) if rng.random() < 0.4 else 0 for _ in range(spec.rank)])
        assert parse_element(str(e), spec) == e
