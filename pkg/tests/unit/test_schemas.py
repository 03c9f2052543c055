"""
Unit tests for the pydantic models of input files and command arguments.
"""

import pytest
from pydantic import ValidationError


def _quiver(**overrides):
    data = {
        "vertices": ["1", "2"],
        "arrows": [{"name": "a", "from": "1", "to": "2"}],
        "relations": [],
    }
    data.update(overrides)
    return data


class TestQuiverFileModel:
    """Quiver files."""

    def test_valid(self):
        """Aliases from/to fill source/target; integer vertices become strings."""
        from clusterforge.schemas.files import QuiverFileModel

        model = QuiverFileModel.model_validate(_quiver(vertices=[1, 2]))
        assert model.vertices == ["1", "2"]
        assert model.arrows[0].source == "1"
        assert model.field.char == 0

    def test_composite_characteristic(self):
        """char 6 is refused."""
        from clusterforge.schemas.files import QuiverFileModel

        with pytest.raises(ValidationError) as exc_info:
            QuiverFileModel.model_validate(_quiver(field={"char": 6}))
        assert "prime" in str(exc_info.value)

    def test_unknown_vertex(self):
        """Arrows name declared vertices only."""
        from clusterforge.schemas.files import QuiverFileModel

        with pytest.raises(ValidationError) as exc_info:
            QuiverFileModel.model_validate(_quiver(arrows=[{"name": "a", "from": "1", "to": "9"}]))
        assert "unknown vertex" in str(exc_info.value)

    def test_duplicate_vertices(self):
        """Vertex ids are unique."""
        from clusterforge.schemas.files import QuiverFileModel

        with pytest.raises(ValidationError):
            QuiverFileModel.model_validate(_quiver(vertices=["1", "1"]))

    def test_bad_coefficient(self):
        """Coefficients are rationals, never booleans or words."""
        from clusterforge.schemas.files import QuiverFileModel

        for coeff in (True, "half"):
            rel = [{"terms": [{"coeff": coeff, "path": ["a"]}]}]
            with pytest.raises(ValidationError):
                QuiverFileModel.model_validate(_quiver(relations=rel))

    def test_empty_relation(self):
        """A relation needs at least one term."""
        from clusterforge.schemas.files import QuiverFileModel

        with pytest.raises(ValidationError):
            QuiverFileModel.model_validate(_quiver(relations=[{"terms": []}]))


class TestModuleAndSliceModels:
    """Module and slice files."""

    def test_negative_dimension(self):
        """Dimensions are non-negative."""
        from clusterforge.schemas.files import ModuleFileModel

        with pytest.raises(ValidationError):
            ModuleFileModel.model_validate({"dim_vector": {"1": -1}})

    def test_ragged_matrix(self):
        """Matrices are rectangular."""
        from clusterforge.schemas.files import ModuleFileModel

        with pytest.raises(ValidationError) as exc_info:
            ModuleFileModel.model_validate({"dim_vector": {"1": 2, "2": 2}, "maps": {"a": [[1, 0], [1]]}})
        assert "rectangular" in str(exc_info.value)

    def test_boolean_entries(self):
        """A JSON true is not read as the integer 1."""
        from clusterforge.schemas.files import ModuleFileModel

        with pytest.raises(ValidationError):
            ModuleFileModel.model_validate({"dim_vector": {"1": 1, "2": 1}, "maps": {"a": [[True]]}})
        model = ModuleFileModel.model_validate({"dim_vector": {"1": 1, "2": 1}, "maps": {"a": [[1]], "b": [["1/2"]]}})
        assert model.maps == {"a": [[1]], "b": [["1/2"]]}

    def test_empty_slice(self):
        """A slice file names something."""
        from clusterforge.schemas.files import SliceFileModel

        with pytest.raises(ValidationError):
            SliceFileModel.model_validate({})
        assert SliceFileModel.model_validate({"vertices": [0, 3]}).vertices == [0, 3]


class TestCommandInputs:
    """CLI argument models."""

    def test_field_override(self):
        """--field accepts 0 and primes only."""
        from clusterforge.schemas.inputs import CommandInput

        assert CommandInput(path="q.json", field=7).field == 7
        with pytest.raises(ValidationError):
            CommandInput(path="q.json", field=9)

    def test_levels_from_list(self):
        """argparse lists become ordered pairs."""
        from clusterforge.schemas.inputs import LevelsInput

        assert LevelsInput(path="q.json", levels=[-1, 2]).levels == (-1, 2)
        with pytest.raises(ValidationError):
            LevelsInput(path="q.json", levels=[2, -1])

    def test_check_kind(self):
        """The check kind is an enum value."""
        from clusterforge.schemas.inputs import CheckInput, CheckKind, Construction

        params = CheckInput(path="q.json", kind="gldim", construct="bar")
        assert params.kind is CheckKind.GLDIM
        assert params.construction is Construction.DUPLICATED
        assert CheckInput(path="q.json", kind="gldim", construction="tilde").construction is Construction.TRIVIAL_EXTENSION
        assert "construct" not in CheckInput.model_fields
        with pytest.raises(ValidationError):
            CheckInput(path="q.json", kind="finite-type")

    def test_reproduce_defaults(self):
        """The default run uses levels [-1,3], strip [0,2] and comparison window [-1,2]."""
        from clusterforge.schemas.inputs import ReproduceInput

        params = ReproduceInput()
        assert params.levels == (-1, 3)
        assert params.strip == (0, 2)
        assert params.compare_levels == (-1, 2)

    def test_reproduce_strip_inside_window(self):
        """The strip must lie inside the window."""
        from clusterforge.schemas.inputs import ReproduceInput

        with pytest.raises(ValidationError) as exc_info:
            ReproduceInput(levels=[0, 2], strip=[1, 3])
        assert "not inside" in str(exc_info.value)
