import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from critcurves import (
    ParameterError,
    chain_new,
    critical_point,
    decompose,
    decomposition_document,
    net,
    render_decomposition,
    render_net,
    render_pencils,
    render_triples,
    segments_csv,
)
from critcurves.render import _Frame, segment_rows


def test_net_smallest():
    assert [(c.i, c.j) for c in net(0).chains] == [(0, -1), (0, 0)]


def test_net_order_two():
    assert [(c.i, c.j) for c in net(2).chains] == [
        (-2, -2), (-2, -1), (-1, -1),
        (0, -1), (0, 0),
        (1, 0), (2, 0), (2, 1),
    ]


def test_net_rejects_negative_order():
    with pytest.raises(ParameterError):
        net(-1)


@given(st.integers(min_value=0, max_value=100))
def test_net_cardinality(n):
    chains = net(n).chains
    assert len(chains) == n * (n + 1) + 2
    assert sorted(chains, key=lambda c: (c.i, c.j)) == list(chains)


def test_segments_csv_golden_chain():
    text = segments_csv([chain_new(7, 5)])
    assert text.splitlines() == [
        "i,j,theta_lo,theta_hi,rho_lo,rho_hi,word",
        "7,5,5/7,3/4,0/1,1/4,abbbbbb",
        "7,5,3/4,4/5,1/4,3/5,abbaabb",
        "7,5,4/5,5/6,3/5,5/6,abaaaab",
        "7,5,5/6,6/7,5/6,1/1,aaaaaaa",
    ]


def test_segment_rows_horizontal_chain():
    rows = segment_rows(chain_new(0, -1))
    assert rows == [("0", "-1", "0/1", "1/1", "1/1", "1/1", "")]


def test_decomposition_document_structure():
    doc = decomposition_document(decompose(chain_new(-1, -1)))
    assert doc == [
        {"type": "farey", "theta": "0/1", "word": "a", "critical_word": ""},
        {"type": "curve", "interval": ["0/1", "1/1"], "word": "b"},
        {"type": "farey", "theta": "1/1", "word": "b", "critical_word": ""},
    ]
    assert json.loads(json.dumps(doc)) == doc


def test_decomposition_document_alternates():
    doc = decomposition_document(decompose(chain_new(7, 5)))
    assert [item["type"] for item in doc] == ["farey", "curve"] * 4 + ["farey"]
    doc = decomposition_document(decompose(chain_new(0, 0)))
    assert [item["type"] for item in doc] == ["curve"]


def test_frame_rejects_tiny_scale():
    with pytest.raises(ParameterError):
        _Frame((F(0), F(1)), (F(0), F(1)), 8)


def test_renders_are_deterministic_svg():
    zeta = critical_point(F(3, 5), F(2, 5))
    pages = [
        render_net(net(3)),
        render_decomposition(decompose(chain_new(7, 5))),
        render_pencils(zeta, depth=2),
        render_triples(zeta),
        render_triples(zeta, normalized=True),
    ]
    again = [
        render_net(net(3)),
        render_decomposition(decompose(chain_new(7, 5))),
        render_pencils(zeta, depth=2),
        render_triples(zeta),
        render_triples(zeta, normalized=True),
    ]
    assert pages == again
    for page in pages:
        assert page.startswith("<svg ")
        assert page.rstrip().endswith("</svg>")


def test_render_groups_present():
    zeta = critical_point(F(3, 5), F(2, 5))
    dec_svg = render_decomposition(decompose(chain_new(7, 5)))
    assert 'id="curves"' in dec_svg and 'id="farey-points"' in dec_svg
    pencil_svg = render_pencils(zeta, depth=2)
    for sigma in ("I", "II", "III", "IV"):
        assert f'id="pencil-{sigma}"' in pencil_svg
    triple_svg = render_triples(zeta)
    assert 'id="triple-points"' in triple_svg
    assert "chi1" in triple_svg and "chi2" in triple_svg


def test_render_pencils_row_point():
    svg = render_pencils(critical_point(F(2, 5), F(0)), depth=2)
    assert 'id="pencil-I"' in svg and 'id="pencil-II"' in svg
    assert 'id="pencil-III"' not in svg
