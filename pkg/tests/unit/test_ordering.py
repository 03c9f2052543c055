"""
Unit tests for knitting small AR quivers, the path order and slice checks.
"""

import pytest


@pytest.fixture(scope="module")
def gamma_c(a5_abc):
    """Γ_C of the worked example: the 13 interval modules avoiding [1,4]."""
    from clusterforge.ar.knitting import knit

    return knit(a5_abc)


def _by_dim(quiver, dims):
    matches = [v.index for v in quiver.vertices if v.dim_vector == tuple(dims)]
    assert len(matches) == 1
    return matches[0]


class TestKnitting:
    """Small AR quivers."""

    def test_a2(self, a2):
        """P_2 -> P_1 -> S_1 with τ S_1 = P_2."""
        from clusterforge.ar.knitting import knit

        gamma = knit(a2)
        assert gamma.complete
        assert len(gamma) == 3
        s1, p1, p2 = (_by_dim(gamma, d) for d in ((1, 0), (1, 1), (0, 1)))
        assert gamma.tau == {s1: p2}
        assert gamma.arrows == {(p2, p1): 1, (p1, s1): 1}
        assert gamma.vertices[p1].proj_injective

    def test_example(self, gamma_c):
        """13 indecomposables and every mesh is additive."""
        assert len(gamma_c) == 13
        assert gamma_c.check_meshes() == []
        assert gamma_c.is_directed()
        assert len(gamma_c.tau_orbits()) == 5

    def test_cap(self, a2):
        """Two vertices allowed: the error carries the partial quiver."""
        from clusterforge.ar.knitting import knit
        from clusterforge.core.errors import CapExceededError

        with pytest.raises(CapExceededError) as exc_info:
            knit(a2, cap=2)
        assert "cap exceeded" in str(exc_info.value)
        assert len(exc_info.value.partial) == 2
        assert not exc_info.value.partial.complete

    def test_find(self, gamma_c, a5_abc):
        """Every projective is found again by isomorphism."""
        from clusterforge.modules.projectives import projective

        for v in a5_abc.vertices:
            i = gamma_c.find(projective(a5_abc, v))
            assert i is not None
            assert gamma_c.vertices[i].projective

    def test_vertex_labels(self, gamma_c):
        """Short dimension vectors are printed without separators."""
        i = _by_dim(gamma_c, (0, 1, 1, 1, 1))
        assert gamma_c.vertices[i].label() == "01111"


class TestReachability:
    """M ≤ N along paths of the AR quiver."""

    def test_incomplete_quiver(self, a2):
        """An unfinished quiver cannot be ordered."""
        from clusterforge.ar.knitting import TranslationQuiver
        from clusterforge.ar.ordering import Reachability
        from clusterforge.core.errors import QuiverIncompleteError

        with pytest.raises(QuiverIncompleteError):
            Reachability(TranslationQuiver(a2))

    def test_leq(self, gamma_c):
        """S_5 = P_5 precedes S_1 = I_1 and not conversely."""
        from clusterforge.ar.ordering import Reachability

        order = Reachability(gamma_c)
        s5, s1 = _by_dim(gamma_c, (0, 0, 0, 0, 1)), _by_dim(gamma_c, (1, 0, 0, 0, 0))
        assert order.directed
        assert order.leq(s5, s1)
        assert not order.leq(s1, s5)
        assert order.leq(s1, s1)
        assert s5 in order.predecessors(s1)

    def test_set_order(self, gamma_c):
        """{P_5} ≤ {I_1} holds, and < fails on equal sets."""
        from clusterforge.ar.ordering import Reachability

        order = Reachability(gamma_c)
        s5, s1 = _by_dim(gamma_c, (0, 0, 0, 0, 1)), _by_dim(gamma_c, (1, 0, 0, 0, 0))
        assert order.set_leq([s5], [s1]).holds
        verdict = order.set_less([s1], [s1])
        assert not verdict.holds
        assert verdict.witness == "disjoint"
        failed = order.set_leq([s1], [s5])
        assert not failed.holds
        assert failed.to_json()["witness"] is not None

    def test_between_readings(self, gamma_c):
        """Everything but I_1 lies between the source P_5 and the sink I_1."""
        from clusterforge.ar.ordering import Reachability, Reading

        order = Reachability(gamma_c)
        s5, s1 = _by_dim(gamma_c, (0, 0, 0, 0, 1)), _by_dim(gamma_c, (1, 0, 0, 0, 0))
        singleton = order.between([s5], [s1], Reading.SINGLETON)
        assert len(singleton) == 12
        assert s5 in singleton and s1 not in singleton
        assert order.between([s5], [s1], Reading.EXCLUSION) == singleton

    def test_exclusion_keeps_lower_set(self, a3_strict):
        """S_1 ≤ P_2 both stay in the exclusion reading between {S_1, P_2} and {S_3}."""
        from clusterforge.ar.knitting import knit
        from clusterforge.ar.ordering import Reachability, Reading

        gamma = knit(a3_strict)
        order = Reachability(gamma)
        s1, p2, s2, p3, s3 = (_by_dim(gamma, d) for d in
                              ((1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1)))
        assert order.leq(s1, p2)
        expected = sorted([s1, p2, s2, p3])
        assert order.between([s1, p2], [s3], Reading.EXCLUSION) == expected
        assert order.between([s1, p2], [s3], Reading.SINGLETON) == expected


class TestSlices:
    """Complete slice verdicts."""

    SLICE = [(0, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 1, 1, 1, 0), (0, 1, 1, 1, 1), (1, 1, 1, 0, 0)]

    def test_valid(self, gamma_c):
        """S_2, [2,3], I_4, P_2 and P_1 form a slice."""
        from clusterforge.ar.ordering import validate_slice

        verdict = validate_slice(gamma_c, [_by_dim(gamma_c, d) for d in self.SLICE])
        assert verdict.valid
        assert verdict.to_json() == {"valid": True, "violation": None, "witness": []}

    def test_not_sincere(self, gamma_c):
        """Dropping P_1 loses vertex 1."""
        from clusterforge.ar.ordering import validate_slice

        verdict = validate_slice(gamma_c, [_by_dim(gamma_c, d) for d in self.SLICE[:-1]])
        assert (verdict.valid, verdict.violation) == (False, "not sincere")

    def test_not_convex(self, gamma_c):
        """P_2 and [2,3] without I_4 in between."""
        from clusterforge.ar.ordering import validate_slice

        dims = [self.SLICE[0], self.SLICE[1], self.SLICE[3], self.SLICE[4]]
        verdict = validate_slice(gamma_c, [_by_dim(gamma_c, d) for d in dims])
        assert (verdict.valid, verdict.violation) == (False, "not convex")

    def test_two_in_one_orbit(self, a2):
        """S_2, P_1, S_1 is convex but repeats the orbit of S_1."""
        from clusterforge.ar.knitting import knit
        from clusterforge.ar.ordering import validate_slice

        gamma = knit(a2)
        verdict = validate_slice(gamma, [_by_dim(gamma, d) for d in ((0, 1), (1, 1), (1, 0))])
        assert (verdict.valid, verdict.violation) == (False, "two vertices in one τ-orbit")

    def test_empty(self, gamma_c):
        """The empty set is not sincere."""
        from clusterforge.ar.ordering import validate_slice

        assert validate_slice(gamma_c, []).violation == "not sincere"
