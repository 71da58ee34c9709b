import pytest

from tetgroups import (CATALOG, CoxeterSymbol, Word, catalog, catalog_by_id,
                       full_presentation, kleinian_presentation, parse_symbol,
                       presentation_for)

T10 = CoxeterSymbol(3, 3, 6, 2, 2, 2)


def test_symbol_validation():
    with pytest.raises(ValueError):
        CoxeterSymbol(1, 3, 3, 2, 2, 2)
    with pytest.raises(ValueError):
        CoxeterSymbol(3, 3, 3, 2, 2, 2.0)
    s = CoxeterSymbol(3, 3, 6, 2, 2, 2)
    assert s.as_tuple() == (3, 3, 6, 2, 2, 2)
    assert s.as_text() == "3,3,6,2,2,2"
    assert str(s) == "[3,3,6,2,2,2]"


def test_parse_symbol_forms():
    assert parse_symbol("3,3,6,2,2,2") == T10
    assert parse_symbol("[3,3,6,2,2,2]") == T10
    assert parse_symbol(" 3 , 3 , 6 , 2 , 2 , 2 ") == T10
    with pytest.raises(ValueError):
        parse_symbol("3,3,6,2,2")
    with pytest.raises(ValueError):
        parse_symbol("3,3,6,2,2,x")


def test_full_presentation_shape(t10_full):
    assert t10_full.kind == "full"
    assert t10_full.generator_names == ("P", "Q", "R", "S")
    assert len(t10_full.relators) == 10
    assert t10_full.involutions == frozenset({0, 1, 2, 3})
    rendered = [t10_full.render(r) for r in t10_full.relators]
    assert rendered == ["P^2", "Q^2", "R^2", "S^2", "PQPQPQ", "QRQRQR",
                        "RSRSRSRSRSRS", "PRPR", "PSPS", "QSQS"]


def test_full_relator_powers_factor_back(t10_full):
    powers = [(t10_full.render(base), k) for base, k in t10_full.relator_powers]
    assert powers == [("P", 2), ("Q", 2), ("R", 2), ("S", 2),
                      ("PQ", 3), ("QR", 3), ("RS", 6),
                      ("PR", 2), ("PS", 2), ("QS", 2)]
    assert [t10_full.render(b) for b in t10_full.pair_bases] == [
        "PQ", "QR", "RS", "PR", "PS", "QS"]


def test_kleinian_presentation_shape(t10_kleinian):
    assert t10_kleinian.kind == "kleinian"
    assert t10_kleinian.generator_names == ("a", "b", "c")
    powers = [(t10_kleinian.render(base), k)
              for base, k in t10_kleinian.relator_powers]
    assert powers == [("a", 3), ("b", 3), ("c", 6),
                      ("ab", 2), ("abc", 2), ("bc", 2)]
    assert t10_kleinian.involutions == frozenset()


def test_kleinian_involutions_from_order_two_entries():
    # with r = 2 the generator c itself squares to the identity
    pres = kleinian_presentation(CoxeterSymbol(3, 5, 2, 3, 2, 2))
    assert pres.involutions == frozenset({2})


def test_reduce_uses_involutions(t10_full, t10_kleinian):
    w = Word.gen(2, -1) * Word.gen(1)
    assert t10_full.render(t10_full.reduce(w)) == "RQ"
    assert t10_kleinian.render(t10_kleinian.reduce(w)) == "c^-1b"


def test_parse_render_round_trip(t10_full):
    for text in ["SRS", "QP", "PQPQPQ", ""]:
        assert t10_full.render(t10_full.parse(text)) == text


def test_element_orders(t10_full):
    orders = {t10_full.render(base): k
              for base, k in t10_full.element_orders.items()}
    assert orders["RS"] == 6 and orders["P"] == 2


def test_presentation_for_dispatch():
    assert presentation_for(T10, "full").kind == "full"
    assert presentation_for(T10, "kleinian").kind == "kleinian"
    with pytest.raises(ValueError):
        presentation_for(T10, "rotation")


def test_catalog_shape():
    entries = catalog()
    assert entries is CATALOG
    assert len(entries) == 40
    ids = [e.id for e in entries]
    assert len(set(ids)) == 40
    by_geometry = {}
    for e in entries:
        by_geometry.setdefault(e.geometry, []).append(e)
    assert len(by_geometry["spherical"]) == 5
    assert len(by_geometry["euclidean"]) == 3
    assert len(by_geometry["hyperbolic-compact"]) == 9
    assert len(by_geometry["hyperbolic-noncompact"]) == 23
    for e in entries:
        compact = e.geometry != "hyperbolic-noncompact"
        assert (e.ideal_vertices == 0) == compact
        assert 0 <= e.ideal_vertices <= 4


def test_catalog_by_id():
    assert catalog_by_id("t10").symbol == T10
    with pytest.raises(ValueError):
        catalog_by_id("t99")
