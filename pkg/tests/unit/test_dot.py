"""
Unit tests for the Graphviz views.
"""


class TestQuiverToDot:
    """Bound quivers as DOT."""

    def test_arrows_and_relations(self, a5_abc):
        """Arrows carry their names; relations sit in a comment."""
        from clusterforge.utils.dot import quiver_to_dot

        text = quiver_to_dot(a5_abc)
        assert text.startswith('digraph "a5_abc" {')
        assert '"1" -> "2" [label="α"];' in text
        assert "/* relations" in text
        assert text.endswith("}\n")

    def test_quoting(self, a2):
        """Quotes in names are escaped."""
        from clusterforge.utils.dot import quiver_to_dot

        assert 'digraph "say \\"hi\\"" {' in quiver_to_dot(a2, 'say "hi"')

    def test_deterministic(self, a5_abc):
        """Two renderings are identical."""
        from clusterforge.utils.dot import quiver_to_dot

        assert quiver_to_dot(a5_abc) == quiver_to_dot(a5_abc)


class TestTranslationQuiverToDot:
    """AR quivers as DOT."""

    def test_markers_and_tau(self, a2):
        """Marked vertices change shape and τ is dashed."""
        from clusterforge.ar.knitting import knit
        from clusterforge.utils.dot import translation_quiver_to_dot

        gamma = knit(a2)
        gamma.vertices[0].markers.add("diamond")
        text = translation_quiver_to_dot(gamma, "Gamma")
        assert text.startswith('digraph "Gamma" {')
        assert "shape=diamond" in text
        assert "style=dashed" in text
        assert "partial" not in text

    def test_partial_quiver(self, a2):
        """An incomplete quiver is flagged."""
        from clusterforge.ar.knitting import TranslationQuiver
        from clusterforge.utils.dot import translation_quiver_to_dot

        assert "partial: cap exceeded" in translation_quiver_to_dot(TranslationQuiver(a2))
