"""
Integration tests for the covering layer: push-down, orbit quotients,
the C̄-to-C̃ functors, fundamental domains and the Gorenstein checks.

The A3 example (3 -> 2 -> 1 with αβ = 0) keeps most of these fast: its
windows are linear quivers with radical square zero, so every AR quiver is
a line and every count below can be read off by hand. The worked example
runs under the ``slow`` marker.
"""

import pytest


@pytest.fixture(scope="module")
def a3_window(a3_pipeline):
    """Levels -1..2 of the cluster repetitive algebra: A12 with radical square zero."""
    return a3_pipeline.cluster_window(-1, 2)


@pytest.fixture(scope="module")
def a3_cover(a3_pipeline, a3_window):
    from clusterforge.covering.push_down import CoveringMap

    return CoveringMap(a3_window, a3_pipeline.tilde)


@pytest.fixture(scope="module")
def a3_gamma_window(a3_window):
    from clusterforge.ar.knitting import knit

    return knit(a3_window.algebra)


@pytest.fixture(scope="module")
def a3_gamma_bar(a3_pipeline):
    from clusterforge.ar.knitting import knit

    return knit(a3_pipeline.duplicated.algebra)


class TestCoveringMap:
    """Construction checks."""

    def test_repetitive_window_refused(self, a3_pipeline):
        """Only cluster repetitive windows cover C̃."""
        from clusterforge.core.errors import InputError
        from clusterforge.covering.push_down import CoveringMap

        with pytest.raises(InputError):
            CoveringMap(a3_pipeline.repetitive_window(0, 1), a3_pipeline.tilde)

    def test_fibers(self, a3_cover, a3_window):
        """The fiber of a vertex is one copy per level."""
        assert a3_cover.fiber("2") == [a3_window.vertex("2", i) for i in (-1, 0, 1, 2)]
        assert a3_cover.vertex_image(a3_window.vertex("3", 1)) == "3"


class TestPushDown:
    """G_λ on modules and sequences."""

    def test_projective(self, a3_pipeline, a3_window, a3_cover):
        """P_(ℓ,i) goes to P_ℓ."""
        from clusterforge.covering.push_down import push_down
        from clusterforge.modules.decomposition import is_isomorphic
        from clusterforge.modules.projectives import projective

        tilde = a3_pipeline.tilde.algebra
        for ell, level in (("2", 0), ("1", 1), ("3", 0)):
            pushed = push_down(a3_cover, projective(a3_window.algebra, a3_window.vertex(ell, level)))
            assert is_isomorphic(pushed, projective(tilde, ell))

    def test_simple(self, a3_pipeline, a3_window, a3_cover):
        """S_(ℓ,i) goes to S_ℓ."""
        from clusterforge.covering.push_down import push_down
        from clusterforge.modules.representation import simple

        pushed = push_down(a3_cover, simple(a3_window.algebra, a3_window.vertex("1", 2)))
        assert pushed.dims == {"1": 1, "2": 0, "3": 0}

    def test_fiber_dimensions(self, a3_window, a3_cover, a3_gamma_window):
        """dim G_λM(ℓ) is the sum of dim M over the fiber of ℓ."""
        from clusterforge.covering.push_down import push_down

        for v in a3_gamma_window.vertices:
            pushed = push_down(a3_cover, v.module)
            for ell in a3_window.base.vertices:
                assert pushed.dims[ell] == sum(v.module.dims[x] for x in a3_cover.fiber(ell))

    def test_shift_invariance(self, a3_window, a3_cover):
        """G_λ(M^φ) ≅ G_λ(M)."""
        from clusterforge.constructions.windows import shift_twist
        from clusterforge.covering.push_down import push_down
        from clusterforge.modules.decomposition import is_isomorphic
        from clusterforge.modules.projectives import projective

        m = projective(a3_window.algebra, a3_window.vertex("1", 0))
        assert is_isomorphic(push_down(a3_cover, shift_twist(a3_window, m, 1)), push_down(a3_cover, m))

    def test_every_indecomposable_lands(self, a3_pipeline, a3_cover, a3_gamma_window):
        """Every indecomposable of the window pushes down to an indecomposable of C̃."""
        from clusterforge.covering.push_down import push_down

        gamma_tilde = a3_pipeline.gamma_tilde
        assert len(gamma_tilde) == 6
        for v in a3_gamma_window.vertices:
            assert gamma_tilde.find(push_down(a3_cover, v.module)) is not None

    def test_almost_split_sequence(self, a3_window, a3_cover):
        """0 -> S_(1,0) -> P_(2,0) -> S_(2,0) -> 0 stays almost split."""
        from clusterforge.ar.translate import almost_split_sequence
        from clusterforge.covering.push_down import push_down_sequence
        from clusterforge.modules.representation import simple

        seq = almost_split_sequence(simple(a3_window.algebra, a3_window.vertex("2", 0)))
        pushed = push_down_sequence(a3_cover, seq)
        assert pushed.almost_split, pushed.reason
        assert pushed.to_json()["middle"] == [1, 1, 0]

    def test_foreign_module(self, a3_cover, a3_strict):
        """Modules over another algebra are refused."""
        from clusterforge.core.errors import InputError
        from clusterforge.covering.push_down import push_down
        from clusterforge.modules.representation import simple

        with pytest.raises(InputError):
            push_down(a3_cover, simple(a3_strict, "1"))


class TestQuotient:
    """Orbit quotients of a window AR quiver."""

    def test_a3(self, a3_pipeline, a3_window, a3_gamma_window):
        """Six orbits, nothing missing, τ-isomorphic to Γ(mod C̃)."""
        from clusterforge.covering.quotient import compare, quotient_ar_quiver

        result = quotient_ar_quiver(a3_gamma_window, a3_window, margin=1)
        assert len(result.representatives) == 6
        assert result.missing == []
        assert compare(result.quiver, a3_pipeline.gamma_tilde) is not None

    def test_too_narrow(self, a3_pipeline):
        """Two levels leave no interior strip with margin 1."""
        from clusterforge.ar.knitting import TranslationQuiver
        from clusterforge.core.errors import WindowTooNarrowError
        from clusterforge.covering.quotient import quotient_ar_quiver

        window = a3_pipeline.cluster_window(0, 1)
        with pytest.raises(WindowTooNarrowError) as exc_info:
            quotient_ar_quiver(TranslationQuiver(window.algebra, complete=True), window, margin=1)
        assert "window too narrow" in str(exc_info.value)

    def test_incomplete(self, a3_window):
        """A partial quiver cannot be folded."""
        from clusterforge.ar.knitting import TranslationQuiver
        from clusterforge.core.errors import QuiverIncompleteError
        from clusterforge.covering.quotient import quotient_ar_quiver

        with pytest.raises(QuiverIncompleteError):
            quotient_ar_quiver(TranslationQuiver(a3_window.algebra), a3_window)

    def test_compare_rejects_different_sizes(self, a2, a5):
        """Quivers of different sizes are never isomorphic."""
        from clusterforge.ar.knitting import knit
        from clusterforge.covering.quotient import compare

        assert compare(knit(a2), knit(a5)) is None

    def test_compare_self(self, a5):
        """A quiver is τ-isomorphic to itself."""
        from clusterforge.ar.knitting import knit
        from clusterforge.covering.quotient import compare

        gamma = knit(a5)
        assert compare(gamma, gamma) is not None

    def test_core_of_a_strip(self, a5):
        """Cutting the injectives off Γ(mod A5) leaves a core one diagonal smaller that still embeds."""
        from clusterforge.ar.knitting import TranslationQuiver, knit
        from clusterforge.covering.quotient import core_vertices, embeds_as_core

        gamma = knit(a5)
        keep = [v.index for v in gamma.vertices if not v.injective]
        core = core_vertices(gamma, keep)
        assert len(keep) == 10
        assert len(core) == 6
        inverse = gamma.tau_inverse
        for i in set(keep) - set(core):
            neighbours = set(gamma.arrows_into(i)) | set(gamma.arrows_out(i)) | {gamma.tau.get(i), inverse.get(i)}
            assert any(j is not None and gamma.vertices[j].injective for j in neighbours)
        mapping = embeds_as_core(gamma, gamma, keep, keep)
        assert mapping is not None
        assert set(core) <= set(mapping) <= set(keep)
        assert embeds_as_core(gamma, TranslationQuiver(gamma.algebra, complete=True), keep) is None

    @pytest.mark.slow
    def test_example(self, a5_abc_pipeline):
        """Window [-1, 2] of the worked example folds onto the 20 vertices of Γ(mod C̃)."""
        from clusterforge.ar.knitting import knit
        from clusterforge.covering.quotient import compare, quotient_ar_quiver

        window = a5_abc_pipeline.cluster_window(-1, 2)
        result = quotient_ar_quiver(knit(window.algebra), window)
        assert len(result.representatives) == 20
        assert compare(result.quiver, a5_abc_pipeline.gamma_tilde) is not None


class TestDuplicatedFunctors:
    """Triples (U, V, μ), restriction ζ and the explicit functor ξ."""

    def test_explicit_functor_is_push_down(self, a3_pipeline, a3_gamma_bar):
        """ξ(M) ≅ G_λ(M) ≅ ζ(M) on every indecomposable C̄-module."""
        from clusterforge.covering.duplicated import triple_from_module, xi_explicit, zeta_restrict
        from clusterforge.covering.push_down import CoveringMap, push_down
        from clusterforge.modules.decomposition import is_isomorphic

        dup, tilde = a3_pipeline.duplicated, a3_pipeline.tilde
        g = CoveringMap(dup.window, tilde)
        assert len(a3_gamma_bar) == 11
        for v in a3_gamma_bar.vertices:
            pushed = push_down(g, v.module)
            assert is_isomorphic(xi_explicit(tilde, triple_from_module(dup, v.module)), pushed)
            assert is_isomorphic(zeta_restrict(dup, tilde, v.module), pushed)

    def test_embed_then_push_down(self, a3_pipeline, a3_window, a3_cover, a3_gamma_bar):
        """Extending by zero into a wider window does not change the push-down."""
        from clusterforge.covering.duplicated import embed, triple_from_module, xi_explicit
        from clusterforge.covering.push_down import push_down
        from clusterforge.modules.decomposition import is_isomorphic

        dup, tilde = a3_pipeline.duplicated, a3_pipeline.tilde
        for v in a3_gamma_bar.vertices:
            wide = embed(dup, v.module, a3_window)
            assert is_isomorphic(push_down(a3_cover, wide), xi_explicit(tilde, triple_from_module(dup, v.module)))

    def test_empty_u(self, a3_pipeline, a3_strict):
        """U = 0 gives V with E acting by zero."""
        from clusterforge.algebra.linalg import Matrix
        from clusterforge.covering.duplicated import Triple, xi_explicit
        from clusterforge.modules.projectives import projective
        from clusterforge.modules.representation import zero_module

        v = projective(a3_strict, "2")
        m = xi_explicit(a3_pipeline.tilde, Triple(zero_module(a3_strict), v, {0: Matrix.zeros(a3_strict.field, 0, 0)}))
        assert m.dims == v.dims

    def test_zero_mu_splits(self, a3_pipeline, a3_strict):
        """μ = 0 gives U ⊕ V."""
        from clusterforge.algebra.linalg import Matrix
        from clusterforge.covering.duplicated import Triple, xi_explicit
        from clusterforge.modules.decomposition import decompose
        from clusterforge.modules.representation import simple

        u, v = simple(a3_strict, "1"), simple(a3_strict, "3")
        m = xi_explicit(a3_pipeline.tilde, Triple(u, v, {0: Matrix.zeros(a3_strict.field, 1, 1)}))
        assert len(decompose(m)) == 2

    def test_nonzero_mu_glues(self, a3_pipeline, a3_strict):
        """μ ≠ 0 on S_1 ⊗ δ -> S_3 gives the projective P_1 of C̃."""
        from clusterforge.algebra.linalg import Matrix
        from clusterforge.covering.duplicated import Triple, xi_explicit
        from clusterforge.modules.decomposition import is_isomorphic
        from clusterforge.modules.projectives import projective
        from clusterforge.modules.representation import simple

        field = a3_strict.field
        triple = Triple(simple(a3_strict, "1"), simple(a3_strict, "3"), {0: Matrix.from_values(field, [[1]])})
        tilde = a3_pipeline.tilde
        assert is_isomorphic(xi_explicit(tilde, triple), projective(tilde.algebra, "1"))

    def test_unbalanced_shape(self, a3_pipeline, a3_strict):
        """μ must have the shape U(a) x V(b)."""
        from clusterforge.algebra.linalg import Matrix
        from clusterforge.core.errors import UnbalancedTripleError
        from clusterforge.covering.duplicated import Triple, check_balanced
        from clusterforge.modules.representation import simple

        triple = Triple(simple(a3_strict, "1"), simple(a3_strict, "3"), {0: Matrix.zeros(a3_strict.field, 2, 1)})
        with pytest.raises(UnbalancedTripleError) as exc_info:
            check_balanced(a3_pipeline.tilde, triple)
        assert "μ not C-balanced" in str(exc_info.value)

    def test_morphisms(self, a3_pipeline, a3_strict):
        """(g, h) with h∘μ = μ'∘g maps to g ⊕ h; anything else is refused."""
        from clusterforge.algebra.linalg import Matrix
        from clusterforge.core.errors import NotAModuleMapError
        from clusterforge.covering.duplicated import Triple, xi_on_morphism
        from clusterforge.modules.representation import ModuleMap, simple

        field = a3_strict.field
        u, v = simple(a3_strict, "1"), simple(a3_strict, "3")
        one = Matrix.from_values(field, [[1]])
        glued = Triple(u, v, {0: one})
        split = Triple(u, v, {0: Matrix.zeros(field, 1, 1)})
        identity_u = ModuleMap.identity(u)
        identity_v = ModuleMap.identity(v)
        f = xi_on_morphism(a3_pipeline.tilde, glued, glued, identity_u, identity_v)
        assert f.source.dims == {"1": 1, "2": 0, "3": 1}
        with pytest.raises(NotAModuleMapError):
            xi_on_morphism(a3_pipeline.tilde, glued, split, identity_u, identity_v)


class TestFundamentalDomain:
    """Ω between the two copies of a slice."""

    def _slice(self, gamma_c, algebra):
        from clusterforge.modules.projectives import projective
        from clusterforge.modules.representation import simple

        return [gamma_c.find(m) for m in (projective(algebra, "2"), simple(algebra, "2"), projective(algebra, "3"))]

    def test_a3(self, a3_pipeline, a3_strict, a3_gamma_bar):
        """P_2, S_2, P_3 is a slice; Ω has six modules and all axioms hold."""
        from clusterforge.ar.knitting import knit
        from clusterforge.ar.ordering import Reading
        from clusterforge.covering.domain import fundamental_domain, slice_copies
        from clusterforge.covering.push_down import CoveringMap

        gamma_c = knit(a3_strict)
        dup = a3_pipeline.duplicated
        copies = slice_copies(dup, gamma_c, a3_gamma_bar, self._slice(gamma_c, a3_strict))
        g = CoveringMap(dup.window, a3_pipeline.tilde)
        domain = fundamental_domain(g, a3_gamma_bar, a3_pipeline.gamma_tilde, copies[0], copies[1])
        assert domain.reading is Reading.SINGLETON
        assert len(domain.vertices) == 6
        assert domain.verdicts == {"bijective": True, "irreducible": True, "almost_split": True}
        assert domain.holds
        assert domain.to_json()["size"] == 6

    def test_faithful(self, a3_pipeline, a3_strict, a3_gamma_bar):
        """Hom dimensions agree after push-down when a wider window is supplied."""
        from clusterforge.ar.knitting import knit
        from clusterforge.covering.domain import fundamental_domain, slice_copies
        from clusterforge.covering.push_down import CoveringMap

        gamma_c = knit(a3_strict)
        dup = a3_pipeline.duplicated
        copies = slice_copies(dup, gamma_c, a3_gamma_bar, self._slice(gamma_c, a3_strict))
        g = CoveringMap(dup.window, a3_pipeline.tilde)
        domain = fundamental_domain(g, a3_gamma_bar, a3_pipeline.gamma_tilde, copies[0], copies[1],
                                    wide=a3_pipeline.cluster_window(-1, 2))
        assert domain.verdicts["faithful"]

    def test_invalid_slice(self, a3_pipeline, a3_strict, a3_gamma_bar):
        """Two simples from one τ-orbit are refused."""
        from clusterforge.ar.knitting import knit
        from clusterforge.core.errors import InputError
        from clusterforge.covering.domain import slice_copies
        from clusterforge.modules.representation import simple

        gamma_c = knit(a3_strict)
        bad = [gamma_c.find(simple(a3_strict, v)) for v in ("1", "2", "3")]
        with pytest.raises(InputError) as exc_info:
            slice_copies(a3_pipeline.duplicated, gamma_c, a3_gamma_bar, bad)
        assert "invalid slice" in str(exc_info.value)

    def test_wrong_window(self, a3_pipeline, a3_cover, a3_gamma_bar):
        """The domain is taken in the [0, 1] window only."""
        from clusterforge.core.errors import InputError
        from clusterforge.covering.domain import fundamental_domain

        with pytest.raises(InputError):
            fundamental_domain(a3_cover, a3_gamma_bar, a3_pipeline.gamma_tilde, [], [])

    @pytest.mark.slow
    def test_example(self, a5_abc_pipeline, a5_abc, fixtures_dir):
        """The shipped slice cuts out 20 modules mapping bijectively onto ind C̃, Σ₀ included."""
        from clusterforge.ar.knitting import knit
        from clusterforge.covering.domain import fundamental_domain, slice_copies
        from clusterforge.covering.push_down import CoveringMap
        from clusterforge.utils.serialization import load_slice

        gamma_c = knit(a5_abc)
        sigma = load_slice(fixtures_dir / "a5_abc_slice.json", gamma_c)
        dup = a5_abc_pipeline.duplicated
        gamma_bar = knit(dup.algebra)
        copies = slice_copies(dup, gamma_c, gamma_bar, sigma)
        g = CoveringMap(dup.window, a5_abc_pipeline.tilde)
        domain = fundamental_domain(g, gamma_bar, a5_abc_pipeline.gamma_tilde, copies[0], copies[1])
        assert len(domain.vertices) == 20
        assert domain.holds, domain.witnesses
        assert domain.verdicts == {"bijective": True, "irreducible": True, "almost_split": True}
        assert set(copies[0]) <= set(domain.vertices)
        assert not set(copies[1]) & set(domain.vertices)


class TestGorenstein:
    """1-Gorenstein verdicts and global dimensions."""

    def test_self_injective_tilde(self, a3_pipeline):
        """C̃ of the A3 example is the radical-square-zero 3-cycle: self-injective, gl.dim infinite."""
        from clusterforge.covering.gorenstein import gldim_report, gorenstein_check, in_gorenstein_dichotomy

        tilde = a3_pipeline.tilde.algebra
        assert gorenstein_check(tilde).holds
        d = gldim_report(tilde)
        assert d.at_least
        assert in_gorenstein_dichotomy(d)

    def test_duplicated_bound_is_sharp(self, a3_pipeline):
        """C̄ of the A3 example has gl.dim exactly 5."""
        from clusterforge.covering.gorenstein import gldim_report

        d = gldim_report(a3_pipeline.duplicated.algebra)
        assert (d.value, d.at_least) == (5, False)

    def test_hereditary(self, a5):
        """A5 is hereditary: 1-Gorenstein with gl.dim 1."""
        from clusterforge.covering.gorenstein import gldim_report, gorenstein_check

        assert gorenstein_check(a5).holds
        assert gldim_report(a5).value == 1

    def test_base_not_gorenstein(self, a5_abc):
        """pd I_2 = 2: [1,2] is resolved by P_1 and then P_3 -> S_3."""
        from clusterforge.covering.gorenstein import gorenstein_check

        verdict = gorenstein_check(a5_abc)
        assert not verdict.holds
        assert verdict.to_json()["holds"] is False

    def test_vertex_subset(self, a5_abc):
        """Restricting to vertex 1 leaves only I_1 and P_1 to check."""
        from clusterforge.covering.gorenstein import gorenstein_check

        verdict = gorenstein_check(a5_abc, vertices=["1"])
        assert list(verdict.projective_dimensions) == ["1"]

    @pytest.mark.slow
    def test_example_tilde(self, a5_abc_pipeline):
        """C̃ of the worked example is 1-Gorenstein and gl.dim is 1 or infinite."""
        from clusterforge.covering.gorenstein import gldim_report, gorenstein_check, in_gorenstein_dichotomy

        tilde = a5_abc_pipeline.tilde.algebra
        assert gorenstein_check(tilde).holds
        assert in_gorenstein_dichotomy(gldim_report(tilde))
