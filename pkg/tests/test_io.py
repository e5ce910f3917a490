import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ohmatrix import (
    InstanceFormatError,
    LabeledIntegerMatrix,
    adjacency_matrix,
    is_k_uniform,
    is_simple,
    parse_instance,
    parse_matrix,
    parse_switching,
    random_bidirected_instance,
    random_instance,
    random_switching,
    serialize_instance,
    serialize_matrix,
    serialize_switching,
    underlying_is_simple,
    from_hypergraph,
    validate,
)

from helpers import instances, two_vertex_edge

MINIMAL_DOC = """
{
  "format_version": 1,
  "vertices": ["v1", "v2"],
  "edges": ["e1"],
  "incidences": [
    {"v": "v1", "e": "e1", "k": 1, "sign": 1},
    {"v": "v2", "e": "e1", "k": 1, "sign": 1}
  ]
}
"""


class TestParseInstance:
    def test_minimal_document(self):
        assert parse_instance(MINIMAL_DOC) == two_vertex_edge()

    def test_json_syntax_error_carries_position(self):
        with pytest.raises(InstanceFormatError, match=r"line \d+, column \d+"):
            parse_instance("{ not json")

    def test_zero_sign_rejected_with_field_path(self):
        doc = json.loads(MINIMAL_DOC)
        doc["incidences"][1]["sign"] = 0
        with pytest.raises(InstanceFormatError, match=r"incidences\[1\].sign"):
            parse_instance(json.dumps(doc))

    def test_multiplicity_gap_rejected(self):
        doc = {
            "format_version": 1,
            "vertices": ["v1"],
            "edges": ["e1"],
            "incidences": [{"v": "v1", "e": "e1", "k": 2, "sign": 1}],
        }
        with pytest.raises(InstanceFormatError, match="mult_index"):
            parse_instance(json.dumps(doc))

    def test_duplicate_triple_rejected(self):
        doc = json.loads(MINIMAL_DOC)
        doc["incidences"].append(doc["incidences"][0])
        with pytest.raises(InstanceFormatError, match="appears 2"):
            parse_instance(json.dumps(doc))

    def test_unknown_label_rejected(self):
        doc = json.loads(MINIMAL_DOC)
        doc["incidences"][0]["v"] = "ghost"
        with pytest.raises(InstanceFormatError, match="undeclared vertex 'ghost'"):
            parse_instance(json.dumps(doc))

    def test_missing_and_unknown_fields(self):
        with pytest.raises(InstanceFormatError, match="missing required fields"):
            parse_instance("{}")
        doc = json.loads(MINIMAL_DOC)
        doc["color"] = "red"
        with pytest.raises(InstanceFormatError, match="unknown fields: color"):
            parse_instance(json.dumps(doc))

    def test_unsupported_version(self):
        doc = json.loads(MINIMAL_DOC)
        doc["format_version"] = 9
        with pytest.raises(InstanceFormatError, match="format_version 9"):
            parse_instance(json.dumps(doc))

    def test_lenient_mode_returns_invalid_instance(self):
        doc = json.loads(MINIMAL_DOC)
        doc["incidences"][0]["v"] = "ghost"
        g = parse_instance(json.dumps(doc), require_valid=False)
        assert validate(g)


class TestSerializeInstance:
    def test_canonical_incidence_order(self):
        g = random_instance(5, 4, 3, 2, simple=True)
        shuffled = type(g)(g.vertices, g.edges, tuple(reversed(g.incidences)))
        assert serialize_instance(shuffled) == serialize_instance(g)

    def test_canonical_text_round_trips_byte_for_byte(self):
        text = serialize_instance(two_vertex_edge())
        assert serialize_instance(parse_instance(text)) == text

    @given(instances())
    def test_object_round_trip(self, g):
        assert parse_instance(serialize_instance(g)) == g


class TestMatrixSerialization:
    def test_csv_golden(self):
        text = serialize_matrix(adjacency_matrix(two_vertex_edge()))
        assert text == ",v1,v2\nv1,0,-1\nv2,-1,0\n"

    def test_empty_matrix_is_header_only(self):
        assert serialize_matrix(LabeledIntegerMatrix((), ("c1",), ())) == ",c1\n"
        assert parse_matrix(",c1\n") == LabeledIntegerMatrix((), ("c1",), ())

    def test_csv_quotes_awkward_labels(self):
        m = LabeledIntegerMatrix(('ro"w',), ("co,l",), ((3,),))
        assert parse_matrix(serialize_matrix(m)) == m

    def test_csv_rejects_unusable_labels(self):
        with pytest.raises(ValueError, match="labels"):
            serialize_matrix(LabeledIntegerMatrix(("",), (), ((),)))

    def test_csv_parse_errors(self):
        with pytest.raises(InstanceFormatError, match="corner"):
            parse_matrix("x,v1\nv1,1\n")
        with pytest.raises(InstanceFormatError, match="not an integer"):
            parse_matrix(",v1\nv1,abc\n")
        with pytest.raises(InstanceFormatError, match="cells"):
            parse_matrix(",v1\nv1,1,2\n")

    def test_json_round_trip(self):
        m = adjacency_matrix(two_vertex_edge())
        assert parse_matrix(serialize_matrix(m, "json"), "json") == m

    def test_json_schema_errors(self):
        with pytest.raises(InstanceFormatError, match="rows, cols, entries"):
            parse_matrix("{}", "json")

    @given(instances(), st.sampled_from(["csv", "json"]))
    @settings(max_examples=25)
    def test_round_trip_of_built_matrices(self, g, fmt):
        m = adjacency_matrix(g)
        assert parse_matrix(serialize_matrix(m, fmt), fmt) == m

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="format"):
            serialize_matrix(LabeledIntegerMatrix((), (), ()), "xml")


class TestSwitchingSerialization:
    def test_round_trip(self):
        theta = random_switching(3, ("v1", "v2", "v3"))
        assert parse_switching(serialize_switching(theta)) == theta

    def test_rejects_bad_values(self):
        with pytest.raises(InstanceFormatError, match="'v1'"):
            parse_switching('{"v1": 0}')
        with pytest.raises(InstanceFormatError, match="'v1'"):
            parse_switching('{"v1": true}')
        with pytest.raises(InstanceFormatError, match="object"):
            parse_switching("[1]")


class TestRandomInstance:
    def test_deterministic(self):
        a = random_instance(11, 5, 4, 3, simple=False, non_simple_rate=0.5)
        b = random_instance(11, 5, 4, 3, simple=False, non_simple_rate=0.5)
        assert a == b and serialize_instance(a) == serialize_instance(b)

    def test_simple_flag(self):
        for seed in range(10):
            assert is_simple(random_instance(seed, 5, 5, 3, simple=True))

    def test_edgeless(self):
        g = random_instance(0, 3, 0, 1)
        assert g.edges == () and len(g.vertices) == 3

    def test_generated_instances_validate(self):
        for seed in range(10):
            g = random_instance(seed, 6, 5, 4, simple=False, non_simple_rate=0.6)
            assert validate(g) == []

    def test_non_simple_rate_produces_repeats(self):
        hits = sum(
            not is_simple(random_instance(seed, 3, 4, 3, simple=False, non_simple_rate=0.9))
            for seed in range(20)
        )
        assert hits > 10

    def test_uniform_sizes_via_min_edge_size(self):
        g = random_instance(2, 6, 4, 3, simple=True, min_edge_size=3)
        assert is_k_uniform(g, 3)

    def test_infeasible_parameters(self):
        with pytest.raises(ValueError, match="simple"):
            random_instance(0, 2, 1, 3, simple=True)
        with pytest.raises(ValueError, match="zero vertices"):
            random_instance(0, 0, 1, 1)
        with pytest.raises(ValueError, match="min_edge_size"):
            random_instance(0, 3, 1, 2, min_edge_size=3)
        with pytest.raises(ValueError, match="non_simple_rate"):
            random_instance(0, 3, 1, 2, non_simple_rate=1.5)
        with pytest.raises(ValueError, match="nonnegative"):
            random_instance(0, -1, 0, 1)


class TestRandomBidirectedInstance:
    def test_shape(self):
        g = random_bidirected_instance(4, 6, 7)
        assert is_simple(g) and is_k_uniform(g, 2)
        assert underlying_is_simple(from_hypergraph(g))

    def test_deterministic(self):
        assert random_bidirected_instance(9, 5, 4) == random_bidirected_instance(9, 5, 4)

    def test_rejects_too_many_edges(self):
        with pytest.raises(ValueError, match="at most 3"):
            random_bidirected_instance(0, 3, 4)
