from splurge_equivariant import exceptions


def test_exceptions_inheritance_and_attributes():
    base = exceptions.SplurgeEquivariantError("oops", details={"error": "more"})
    assert isinstance(base, Exception)
    assert base.message == "oops"
    assert base.details == {"error": "more"}

    fe = exceptions.SplurgeEquivariantFileNotFoundError("file", details={"type": "file"})
    assert isinstance(fe, exceptions.SplurgeEquivariantFileError)
    assert isinstance(fe, exceptions.SplurgeEquivariantError)

    sub = exceptions.SplurgeEquivariantInvalidSubgroupError("not closed")
    assert isinstance(sub, exceptions.SplurgeEquivariantStructureError)

    trunc = exceptions.SplurgeEquivariantTruncationMismatchError("2 vs 3")
    assert isinstance(trunc, exceptions.SplurgeEquivariantValueError)

    carrier = exceptions.SplurgeEquivariantUnsupportedCarrierError("int")
    assert isinstance(carrier, exceptions.SplurgeEquivariantTypeError)


def test_budget_and_segal_errors_share_the_base():
    for cls in (
        exceptions.SplurgeEquivariantSearchBudgetExceededError,
        exceptions.SplurgeEquivariantSegalFailureError,
        exceptions.SplurgeEquivariantParsingError,
        exceptions.SplurgeEquivariantConfigurationError,
    ):
        assert issubclass(cls, exceptions.SplurgeEquivariantError)
