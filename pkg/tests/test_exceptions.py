from pytest import mark

from disk_rigidity.exceptions import (
    BoundaryPoleError, DiskRigidityError, IdentityMobiusError, InputClassError, NotAGeneratorError,
    ParseError, PoleError, PreconditionError, StepUnderflowError, IntegrationError,
    UndeterminedClassificationError,
)


@mark.parametrize("child parent".split(),
                  ((BoundaryPoleError, PoleError),
                   (NotAGeneratorError, InputClassError),
                   (IdentityMobiusError, PreconditionError),
                   (StepUnderflowError, IntegrationError),
                   (ParseError, DiskRigidityError)))
def test_hierarchy(child, parent):
    assert issubclass(child, parent)
    assert issubclass(child, DiskRigidityError)


def test_parse_error_points_at_position():
    error = ParseError("Expected a term", "z+*1", 2)
    lines = str(error).splitlines()
    assert lines[0] == "Expected a term (at position 2)"
    assert lines[1] == "  z+*1"
    assert lines[2] == "    ^"


def test_parse_error_without_position():
    assert str(ParseError("Empty")) == "Empty"


def test_input_class_error_carries_witness():
    error = InputClassError("not a self-map", 0.5j)
    assert error.witness == 0.5j
    assert "witness z =" in str(error)
    assert "witness" not in str(InputClassError("plain"))


def test_undetermined_classification_lists_diagnostics():
    error = UndeterminedClassificationError("stuck", {"iterations": 7, "last_iterate": 0.5})
    text = str(error)
    assert "iterations: 7" in text
    assert text.index("iterations") < text.index("last_iterate")
    assert UndeterminedClassificationError("bare").diagnostics == {}
