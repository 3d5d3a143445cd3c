"""Exception hierarchy for field arithmetic, codes and decoders."""


class RankCodeError(Exception):
    """Base class for errors raised by the rank-metric coding engine."""


class InverseOfZeroError(RankCodeError, ZeroDivisionError):
    def __init__(self, basis: str = "poly"):
        super().__init__(f"inverse of zero in the {basis} basis")
        self.basis = basis


class ZeroDivisorError(RankCodeError, ZeroDivisionError):
    def __init__(self):
        super().__init__("left division by the zero linearized polynomial")


class DependentPointsError(RankCodeError, ValueError):
    def __init__(self, index: int):
        super().__init__(f"point {index} lies in the GF(2)-span of the preceding points")
        self.index = index


class BasisMismatchError(RankCodeError, ValueError):
    def __init__(self, left: str, right: str):
        super().__init__(f"cannot combine a {left}-basis polynomial with a {right}-basis polynomial")


class DecodeFailure(RankCodeError):
    """The received word is not within decoding radius, or decoding broke down."""


class BasisSearchExhausted(RankCodeError):
    def __init__(self, budget: int, max_type: int, max_complexity: int):
        super().__init__(
            f"no self-dual normal basis with C_M <= {max_complexity} found: Gauss period types up to "
            f"{max_type} and a candidate budget of {budget} random elements exhausted"
        )
        self.budget = budget
        self.max_type = max_type
        self.max_complexity = max_complexity


class CtxFileError(RankCodeError):
    """Malformed, corrupted or incompatible normal basis context file."""


class InternalConsistencyError(RankCodeError):
    """A structural identity that must hold for valid inputs was violated."""
