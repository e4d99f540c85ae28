"""Error hierarchy shared by the engine and the command line.

Every error carries the process exit code the CLI maps it to: 2 for bad
input, 3 for a failed mathematical guard, 1 for anything internal.
"""


class OrbiDRError(Exception):
    """Base class for every error raised on purpose by this package."""

    exit_code = 1


class InputError(OrbiDRError):
    exit_code = 2


class MathGuardError(OrbiDRError):
    exit_code = 3


class ProblemFileError(InputError):
    """The problem file is missing, is not JSON, or fails schema validation."""


class NotAdmissible(InputError):
    """A lift a_i does not satisfy frac(a_i) = age of its sector."""


class Unstable(InputError):
    """2g - 2 + n <= 0."""


class DegreeOutOfRange(InputError):
    """Requested degree outside 0..3g-3+n."""


class UnbalancedContacts(InputError):
    """Contact orders at zero and infinity do not sum to the same value."""


class DimensionMismatch(InputError):
    """Class degree plus insertions does not match the moduli dimension."""


class InsufficientSamples(InputError):
    """Fewer r-samples than the degree bound plus the surplus."""


class OrbifoldEvaluationDisabled(InputError):
    """Integration against m > 1 classes was requested without enabling it."""


class NotPolynomial(MathGuardError):
    """Sampled values disagree with the interpolating polynomial."""


class NotDivisible(MathGuardError):
    """A numerator was not divisible by psi_+ + psi_-."""


class NonIntegralOffset(OrbiDRError):
    """A vertex offset -sum(ages) came out non-integral."""


class AmbientMismatch(OrbiDRError):
    """Tautological classes on different (g, n, m) were combined."""


class NonNilpotentInput(OrbiDRError):
    """exp_truncated was given a generator with a degree-0 part."""
