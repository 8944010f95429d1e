import os
import subprocess

import pytest

import symbreak as sb


def test_family_values():
    assert sb.distinguishing_number(sb.cycle(5))["value"] == 3
    assert sb.distinguishing_number(sb.path(4))["value"] == 2
    assert sb.distinguishing_index(sb.complete(4))["value"] == 3


def test_graph_round_trip():
    g = sb.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4 and g.size == 3
    assert g.graph6() == "Ch"
    assert sb.Graph.from_graph6("Ch") == g
    assert g.edges == [(0, 1), (1, 2), (2, 3)]


def test_products_and_groups():
    assert sb.conormal(sb.complete(2), sb.complete(2)) == sb.complete(4)
    assert sb.cartesian(sb.path(2), sb.path(3)).size == 7
    assert sb.group_order(sb.conormal(sb.path(4), sb.cycle(5))) == 20
    assert len(sb.automorphisms(sb.cycle(4))) == 8
    assert sb.is_rigid(sb.Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (1, 4)]))


def test_errors():
    with pytest.raises(sb.UndefinedQuantity):
        sb.distinguishing_index(sb.complete(2))
    with pytest.raises(sb.ParseError):
        sb.Graph.from_graph6("C~~")
    with pytest.raises(sb.InvalidArgument):
        sb.cycle(2)
    with pytest.raises(sb.BudgetExceeded):
        sb.distinguishing_number(sb.cycle(8), node_limit=2, retries=1)
    assert issubclass(sb.UndefinedQuantity, sb.Error)


def test_check_reports():
    report = sb.check("index-theorems", sb.path(3), sb.complete(2))
    assert report["verdict"] == "holds"
    assert report["computed"]["D'(G*H)"]["value"] == 2
    assert [c[0] for c in sb.claims()][0] == "family-values"


def test_labelings():
    assert sb.is_distinguishing(sb.path(3), [1, 1, 2])
    assert not sb.is_distinguishing(sb.cycle(4), [1, 1, 1, 1])
    assert sb.is_traceable(sb.path(7))
    assert not sb.is_traceable(sb.complete_bipartite(1, 3))


@pytest.mark.skipif("SYMBREAK_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees_with_module():
    out = subprocess.run(
        [os.environ["SYMBREAK_CLI"], "compute", "D", "Dhc", "--output", "records"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert '"value":3' in out
