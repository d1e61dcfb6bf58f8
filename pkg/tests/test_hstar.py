import pytest
from hypothesis import given
from hypothesis import strategies as st

from trilength.hstar import (
    Corner,
    CornerRef,
    EncodingError,
    F,
    L,
    QREncoding,
    R,
    creator,
    format_address,
    is_proper,
    parse_address,
    proper_encoding,
    qr_decode,
    qr_encode,
    ty,
    ty_sequence,
)
from trilength.oracle import enumerate_addresses

addresses = st.lists(st.sampled_from([F, L, R]), max_size=30).map(tuple)


def test_figure_encodings():
    assert qr_encode((L, F, L, L)) == QREncoding((0, 1, 0, 0), (0, 0, 0), 3)
    assert qr_encode((L, F, F)) == QREncoding((0, 2), (0,), 1)
    assert str(qr_encode((L, F, L, L))) == "q=(0,1,0,0) rho=(0,0,0) m=3"


def test_root_and_forward_only():
    assert qr_encode(()) == QREncoding((0,), (), 0)
    assert qr_encode((F, F, F)) == QREncoding((3,), (), 0)
    assert qr_decode(QREncoding((2, 0, 1), (1, 0), 2)) == (F, F, R, L, F)


def test_one_based_accessors():
    e = QREncoding((4, 5), (1,), 1)
    assert e.q_at(0) == 0 and e.q_at(1) == 4 and e.q_at(2) == 5
    assert e.rho_at(1) == 1 and e.rho_at(2) == 0


@pytest.mark.parametrize(
    "q,rho,m",
    [((0,), (0,), 1), ((0, 0), (), 1), ((-1,), (), 0), ((0, 0), (2,), 1), ((), (), -1)],
)
def test_malformed_encodings(q, rho, m):
    with pytest.raises(EncodingError):
        QREncoding(q, rho, m)


def test_address_text():
    assert parse_address("L,F,l, r") == (L, F, L, R)
    assert parse_address("-") == parse_address("") == ()
    assert format_address((L, F)) == "L,F"
    with pytest.raises(EncodingError):
        parse_address("L,X")


@given(addresses)
def test_round_trip(a):
    assert qr_decode(qr_encode(a)) == a
    assert parse_address(format_address(a)) == a


def test_round_trip_exhaustive_depth_nine():
    for a in enumerate_addresses(9):
        assert qr_decode(qr_encode(a)) == a


@given(addresses)
def test_ty_matches_recurrence(a):
    assert ty(a) == ty_sequence(qr_encode(a))[-1]


def test_ty_examples():
    assert ty(()) == 0
    assert ty((L,)) == 0
    assert ty((R,)) == 1
    assert ty((F, L)) == 1
    assert ty((F, R)) == 0
    assert ty((F, F, L)) == 0


def test_proper_predicate():
    assert is_proper(QREncoding((0, 0), (0,), 1))
    assert is_proper(QREncoding((2, 1, 0), (0, 1), 2))
    assert not is_proper(QREncoding((2, 0, 0), (0, 1), 2))
    assert not is_proper(QREncoding((0, 1), (0,), 1))
    assert not is_proper(QREncoding((3,), (), 0))


def test_creator_gluing():
    # child v0, v1 sit on the parent edge they are glued to
    assert creator(CornerRef((L,), Corner.V0)) == CornerRef((), Corner.V0)
    assert creator(CornerRef((L,), Corner.V1)) == CornerRef((), Corner.V2)
    assert creator(CornerRef((F,), Corner.V0)) == CornerRef((), Corner.V2)
    assert creator(CornerRef((F,), Corner.V1)) == CornerRef((), Corner.V3)
    assert creator(CornerRef((R,), Corner.V0)) == CornerRef((), Corner.V1)
    assert creator(CornerRef((R,), Corner.V1)) == CornerRef((), Corner.V3)
    assert creator(CornerRef((F, L), Corner.V3)) == CornerRef((F, L), Corner.V3)


def test_proper_encodings_are_unique_per_vertex():
    seen = {}
    for a in enumerate_addresses(5):
        for k in Corner:
            c = CornerRef(a, k)
            e = proper_encoding(c)
            assert is_proper(e)
            home = creator(c)
            assert seen.setdefault(e, home) == home
    # depth 5: 3^6 + 1 distinct vertices
    assert len(seen) == 3**6 + 1
