"""Exception types shared across the package."""


class InternalInconsistency(RuntimeError):
    """Two independent computations of the same invariant disagree."""


class DegenerateForm(ValueError):
    def __init__(self, radical_dim: int):
        super().__init__(f"form is degenerate (radical dimension {radical_dim})")
        self.radical_dim = radical_dim


class NotHermitian(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class OddDimension(ValueError):
    pass


class RealEigenvalue(ValueError):
    pass


class BadVanishingCycle(ValueError):
    pass


class NonUnitConditioning(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class NotUnitary(ValueError):
    pass


class NotUnitaryGenerator(NotUnitary):
    pass


class BadSignature(ValueError):
    pass


class ScopeError(ValueError):
    pass
